"""
n-step windows and the lambda-return
====================================

Windows drawn from the replay buffer stop at episode ends: a terminal
cuts the bootstrap, a time-limit truncation keeps it.  The PPO side mixes
all n-step returns with weights (1-lam) lam^(n-1).
"""

import numpy as np

from posuite.ppo import lambda_return, nstep_targets
from posuite.replay import ReplayBuffer, nstep_return

# two short episodes: the first ends in a terminal, the second is truncated
buf = ReplayBuffer(obs_dim=1, act_dim=1, capacity=100)
for t in range(4):
    buf.store([t], [0.0], 1.0, [t + 1], terminal=(t == 3))
for t in range(4, 7):
    buf.store([t], [0.0], 1.0, [t + 1], terminal=False, truncated=(t == 6))

batch = buf.gather(np.arange(7), n=3)
print("start  length  terminal  next_obs")
for s in batch.samples():
    print(f"{int(s.obs[0]):5d}  {s.length:6d}  {str(s.terminal):8s}  {int(s.next_obs[0])}")

# with a constant bootstrap of 5 the targets show where bootstrapping happened
print(batch.returns(gamma=0.9, bootstrap_values=np.full(7, 5.0)).round(3))
print("by hand:", nstep_return([1, 1, 1], 0.9, 5.0, terminal=False))

# lambda sweeps between one-step TD (lam=0) and the full return (lam=1)
rng = np.random.default_rng(0)
r, v = rng.normal(size=8), rng.normal(size=8)
for lam in [0.0, 0.5, 0.95, 1.0]:
    print(f"lam={lam:4.2f}", lambda_return(r, v, 0.99, lam, last_value=0.0).round(3))
print("n=1     ", nstep_targets(r, v, 0.99, 1).round(3))
print("n=8     ", nstep_targets(r, v, 0.99, 8).round(3))
