"""
TD3 against MTD3(5) without velocities
======================================

Two short pendulum runs on the remove-velocity observation, same seed.
A few minutes of CPU; the full 100k-step comparison lives in
tests/acceptance_plan.py.
"""

import sys
import tempfile
from pathlib import Path

from posuite.harness import RunConfig, load_run, max_avg_return, run_training
from posuite.report import build_table

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 20_000
out = Path(tempfile.mkdtemp(prefix="posuite_demo_"))
agent = {"hidden_sizes": [64, 64]}

runs = []
for algo, n in [("td3", 1), ("mtd3", 5)]:
    cfg = RunConfig(env="pendulum", pomdp="rv", algo=algo, n=n, total_steps=steps,
                    eval_every=2000, seed=0, out_dir=str(out / f"{algo}{n}"), agent=agent)
    runs.append(run_training(cfg))
    _, records, _ = load_run(runs[-1])
    print(cfg.label, "eval means:", [round(r.mean) for r in records])
    print("  max avg return", round(max_avg_return(records), 1))

text, _ = build_table(runs)
print(text)
print("run directories under", out)
