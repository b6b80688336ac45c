# %% [markdown]
# # Cassini-type determinants
#
# The r x r window of consecutive polynomials has determinant
# (-1)^(n(r+1)) * x_r^(n-2r+2), checked here in exact arithmetic.

# %%
from rfibonacci import cassini_check, cassini_matrix, poly_determinant

m = cassini_matrix(3, 6)
print(m)
print("det =", poly_determinant(m))

# %%
for r in (2, 3, 4, 5):
    results = [cassini_check(r, n)[0] for n in range(2 * r - 2, 2 * r + 5)]
    print(f"r={r}:", results)

# %% [markdown]
# With r = 2 and x2 = 1 this is the classical f_{n-1}^2 - f_n f_{n-2} = (-1)^n.

# %%
for n in range(3, 9):
    print(n, poly_determinant(cassini_matrix(2, n)).specialize({2: 1}))
