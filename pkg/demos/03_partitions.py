# %% [markdown]
# # Monomials are partitions
#
# Each monomial x1^a1 ... xr^ar of F_n^[r] corresponds to the partition
# (1^a1, ..., r^ar) of n - r + 1, and its coefficient counts the orderings of
# those parts.

# %%
from rfibonacci import fib_recursive, multinomial, omega, partitions_bounded

f = fib_recursive(3, 8)
print(f)
for p in omega(f):
    print(p, "->", f.coefficient(p.multiplicities), "=", multinomial(p.multiplicities))

# %%
print(omega(f) == partitions_bounded(6, 3))

# %% [markdown]
# Substituting x_i -> x_i^i makes every term the same degree.

# %%
g = f.substitute_power_scaling()
print(g)
print("homogeneous of degree", g.is_homogeneous())
