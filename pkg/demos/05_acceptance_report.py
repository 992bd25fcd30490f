"""
Tables and curves from the acceptance sweep
===========================================

Reads results/acceptance (fill it with `python tests/acceptance_plan.py`)
and writes the max-of-average-return table and smoothed learning curves.
"""

from pathlib import Path

from posuite.report import build_plot, build_table

root = Path(__file__).resolve().parents[1] / "results"
runs = root / "acceptance"
if not any(runs.glob("*/summary.json")):
    raise SystemExit("no finished runs yet: python tests/acceptance_plan.py")

text, csv_text = build_table([runs])
print(text)
(root / "table.md").write_text(text)
(root / "table.csv").write_text(csv_text)

for (env, mode), (svg, curve_csv) in build_plot([runs], sigma=20.0).items():
    stem = root / f"curve_{env}_{mode}"
    stem.with_suffix(".svg").write_text(svg)
    stem.with_suffix(".csv").write_text(curve_csv)
    print("wrote", stem.with_suffix(".svg"))
