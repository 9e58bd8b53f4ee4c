# %% [markdown]
# # Generating functions over partitions
#
# `genfun_coefficients(e, N)` lists `sum_{lam |- n} (n!/H_lam)^e` for
# n = 0..N. With e = 0 this counts partitions. With e = 1 it sums the
# degrees of the irreducible characters of S_n, and e = 2 gives n!.

# %%
import math

from surfhom import genfun_coefficients
from surfhom.partitions import partition_numbers

print("e=0:", genfun_coefficients(0, 15))
print("p(n):", partition_numbers(15))
print("e=1:", genfun_coefficients(1, 10))
print("e=2:", genfun_coefficients(2, 8), [math.factorial(n) for n in range(9)])

# %% [markdown]
# Negative exponents produce rational coefficients.

# %%
print("e=-1:", [str(c) for c in genfun_coefficients(-1, 6)])
