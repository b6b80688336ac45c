# %% [markdown]
# # Bell polynomials, Stirling and Fubini numbers

# %%
from math import factorial

from rfibonacci import (
    bell_complete_ordinary,
    bell_partial_exponential,
    exp_bell_fib_identity_check,
    fib_recursive,
    fubini,
    fubini_restricted,
    fubini_restricted_bruteforce,
    preference_polynomial,
    stirling2,
)

print(bell_complete_ordinary(4))
print(bell_complete_ordinary(4) == fib_recursive(4, 7))

# %% [markdown]
# Exponential Bell polynomials at all-ones give Stirling numbers.

# %%
n = 6
print([int(bell_partial_exponential(n, k).evaluate([1] * n)) for k in range(1, n + 1)])
print([stirling2(n, k) for k in range(1, n + 1)])
print(all(exp_bell_fib_identity_check(n, r) for r in range(1, 5)))

# %% [markdown]
# Preference orderings: the coefficient of x^a counts ordered set partitions
# with a_i blocks of size i. Summing restricted counts gives a_n^r.

# %%
print(preference_polynomial(4, 3))
for r in range(1, 5):
    print(f"a_6^{r} =", fubini_restricted(6, r), "enumerated:", fubini_restricted_bruteforce(6, r))
print(sum(factorial(k) * stirling2(8, k) for k in range(1, 9)), fubini(8))
