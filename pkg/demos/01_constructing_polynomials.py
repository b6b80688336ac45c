# %% [markdown]
# # Building r-Fibonacci polynomials
#
# Three constructions of the same polynomial: the recursion, powers of the
# companion matrix, and a sum over partitions weighted by multinomials.

# %%
from rfibonacci import fib_matrix, fib_multinomial, fib_recursive, fib_generic, variable, one

for n in range(2, 8):
    print(f"F_{n}^[3] =", fib_recursive(3, n))

# %% [markdown]
# The three methods agree term for term.

# %%
p = fib_recursive(4, 12)
print(p == fib_matrix(4, 12) == fib_multinomial(4, 12), "-", len(p), "terms")

# %% [markdown]
# Evaluating at all-ones recovers Fibonacci, Tribonacci and Tetranacci numbers.

# %%
for r in (2, 3, 4):
    print(r, [int(fib_recursive(r, n).evaluate([1] * r)) for n in range(r - 1, r + 11)])

# %% [markdown]
# Arbitrary polynomial seeds, here (2 - x1, 1).

# %%
x1 = variable(2, 1)
seeds = [2 - x1, one(2)]
for n in range(5):
    print(n, fib_generic(2, n, seeds))
