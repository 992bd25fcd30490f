"""
What the agent sees
===================

One pendulum trajectory viewed through each observation transform.
Rewards and the true state never change; only the observation does.
"""

import numpy as np

from posuite.envs import make_env
from posuite.wrappers import PomdpWrapper, WrapperConfig

np.set_printoptions(precision=3, suppress=True)
actions = np.random.default_rng(0).uniform(-1, 1, size=(6, 1))

for mode in ["mdp", "rv", "flk", "rn", "rsm"]:
    env = PomdpWrapper(make_env("pendulum"), WrapperConfig(mode, seed=1))
    obs = env.reset(seed=3)
    print(f"--- {mode}: obs dim {env.obs_dim}")
    total = 0.0
    for a in actions:
        res = env.step(a)
        total += res.reward
        print(res.observation, " true:", res.info["true_observation"])
    # same reward sum for every mode
    print("return over 6 steps", round(total, 6))

# flicker drops the whole vector with p=0.2, sensor-missing drops single entries with p=0.1
env = PomdpWrapper(make_env("pendulum"), WrapperConfig("flk", seed=2))
env.reset(seed=0)
blank = 0
for _ in range(200):
    blank += not np.any(env.step([0.0]).observation)
print("flickered frames in one episode:", blank, "of 200")
