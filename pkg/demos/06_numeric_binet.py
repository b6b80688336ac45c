# %% [markdown]
# # Floating-point Binet forms
#
# Roots of z^r - x1 z^(r-1) - ... - xr give closed forms for F_n. We compare
# them against exact rational evaluation.

# %%
import numpy as np

from rfibonacci import fib_recursive
from rfibonacci.numericbinet import (
    binet_eval,
    binet_sweep,
    char_roots,
    generic_binet_eval,
    homogeneous_sum_eval,
    vandermonde,
    vandermonde_inverse_sigma,
)

point = [1.0, 1.0, 1.0]
roots = char_roots(3, point)
print("roots:", np.round(roots.values, 10))
for n in range(2, 10):
    print(n, binet_eval(3, n, point, roots), homogeneous_sum_eval(3, n, roots, point=point),
          fib_recursive(3, n).evaluate([1, 1, 1]))

# %%
sigma = vandermonde_inverse_sigma(roots)
print(np.abs(vandermonde(roots) @ sigma - np.eye(3)).max())

# %% [markdown]
# Lucas numbers from seeds (2, 1).

# %%
print([round(generic_binet_eval(2, n, [1, 1], [2, 1]), 9) for n in range(10)])

# %%
stats = binet_sweep(seed=7)
print(stats.as_dict())
