# %% [markdown]
# # Generating functions
#
# 1 / (1 - x1 z - ... - xr z^r) has the r-Fibonacci polynomials as
# coefficients. g/(1-g) with g = c1 z + c2 z^2 + ... collects
# F^{[n]}_{2n-1}(c1, ..., cn).

# %%
from fractions import Fraction
from math import factorial

from rfibonacci import fib_genfun_coefficients, fibonacci_num, fubini, infinite_variate_coefficients, pell

for k, c in enumerate(fib_genfun_coefficients(3, 4)):
    print(f"z^{k}:", c)

# %% [markdown]
# Feeding Fibonacci numbers into g/(1-g) produces Pell numbers, coefficient by
# coefficient.

# %%
fibs = [fibonacci_num(k) for k in range(1, 11)]
print(infinite_variate_coefficients(fibs, 10)[1:])
print([pell(n) for n in range(1, 11)])

# %% [markdown]
# Feeding 1/k! produces a_n / n!, the Fubini numbers scaled down.

# %%
inv = [Fraction(1, factorial(k)) for k in range(1, 9)]
print([int(c * factorial(n)) for n, c in enumerate(infinite_variate_coefficients(inv, 8))][1:])
print([fubini(n) for n in range(1, 9)])
