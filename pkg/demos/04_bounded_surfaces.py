# %% [markdown]
# # Surfaces with boundary and general one-relator counts
#
# Each boundary circle is sent into a prescribed conjugacy class. The count
# is the number of solutions of `w(a) c_1 ... c_n = 1` with `c_i` in class
# `C_i`.

# %%
import itertools

from surfhom import (NONORIENTABLE, ORIENTABLE, builtin_group, character_table, count_general,
                     count_surface, oracle_count_with_boundary, parse_word)

S3 = builtin_group("sym", 3)
T = character_table(S3)
names = {S3.classes.cycle_type(i): i for i in range(len(S3.classes))}
cyc3 = names[(3,)]
print("one crosscap, boundary in the 3-cycles:", count_surface(T, NONORIENTABLE, 1, [cyc3]).value)

# %% [markdown]
# Summing over every choice of boundary classes recovers the size of the
# free group's homomorphism set: the surface deformation retracts onto a
# wedge of circles.

# %%
for kind, genus, rank in [(ORIENTABLE, 1, 2), (NONORIENTABLE, 2, 2)]:
    for n in (1, 2):
        total = sum(count_surface(T, kind, genus, b).value for b in itertools.product(range(3), repeat=n))
        print(f"{kind:13s} genus {genus}, {n} boundary: total {total} = 6^{rank + n - 1} = {6 ** (rank + n - 1)}")

# %% [markdown]
# The same engine handles any word. Shaped words use closed-form
# coefficients; other words fall back to enumeration for the coefficients.

# %%
for text, rank in [("x1^3", 1), ("[x1,x2,x3]", 3), ("[x1,x2]^2", 2)]:
    w = parse_word(text, rank)
    for boundary in ([], [cyc3]):
        formula = count_general(w, T, boundary).value
        brute = oracle_count_with_boundary(w, S3, boundary)
        print(f"{text:12s} boundary {boundary}: {formula} (brute force {brute})")
