# %% [markdown]
# # Groups and their character tables
#
# Groups are permutation groups given by generators. Conjugacy classes are
# ordered identity first, then by size. Character values are exact elements
# of a cyclotomic field, printed in powers of `zK = exp(2*pi*i/K)`.

# %%
from surfhom import builtin_group, character_table, parse_group_spec

A4 = builtin_group("alt", 4)
T = character_table(A4)
print(f"|A4| = {A4.order}, exponent {A4.exponent}")
print(T)

# %% [markdown]
# Each row carries a Frobenius-Schur indicator: +1 for characters of real
# representations, -1 for quaternionic ones, 0 when the character takes
# non-real values. The quaternion group has one -1.

# %%
Q8 = character_table(builtin_group("q8"))
print("Q8 degrees   ", Q8.degrees)
print("Q8 indicators", Q8.fs_indicators)

# %% [markdown]
# Any group can be entered as a list of permutations in 1-based cycle notation.

# %%
G = parse_group_spec("perms:(1 2 3 4);(1 3)")
print("order", G.order, "class sizes", G.classes.sizes)
print("degrees", character_table(G).degrees)
