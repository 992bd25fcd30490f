"""
Gradients by hand-rolled reverse mode
=====================================

A tiny MLP, a loss, and a check of its gradient against central
finite differences.  Then Adam fits the net to a noisy sine.
"""

import numpy as np

from posuite import autodiff as ad
from posuite.nn import Adam, Mlp

rng = np.random.default_rng(0)

# a 1 -> 32 -> 32 -> 1 tanh net
net = Mlp([1, 32, 32, 1], "tanh", rng=rng)
x = rng.uniform(-3, 3, size=(128, 1))
y = np.sin(x) + 0.1 * rng.normal(size=x.shape)


def loss_fn():
    return ad.square(net(x) - ad.Tensor(y)).mean()


# analytic gradient of one weight entry
grads = ad.grad(loss_fn(), net.params)
w = net.params[2].data  # second layer weights
h = 1e-6
old = w[3, 5]
w[3, 5] = old + h
up = float(loss_fn().data)
w[3, 5] = old - h
down = float(loss_fn().data)
w[3, 5] = old
print("autodiff  ", grads[2][3, 5])
print("finite diff", (up - down) / (2 * h))

# fit with Adam
opt = Adam(net.params, lr=3e-3)
for step in range(2001):
    loss = loss_fn()
    opt.step(ad.grad(loss, net.params))
    if step % 500 == 0:
        print(f"step {step:5d}  mse {float(loss.data):.4f}")

# the noise floor is 0.01, so the fit should get close to it
grid = np.linspace(-3, 3, 7)[:, None]
print(np.c_[grid, net.predict(grid), np.sin(grid)].round(3))
