# %% [markdown]
# # Counting functions of words
#
# For a word w in the free group of rank r, `f_w(x)` counts the tuples
# `a` in G^r with `w(a) = x`. It is a class function, so it expands in
# irreducible characters. For structured words the coefficients have closed
# forms; for any other word they come from brute force.

# %%
from surfhom import (builtin_group, character_table, closed_form_coefficients,
                     coefficients_from_class_function, oracle_class_function, parse_word, recognize_shape)
from surfhom.words import Generic

S3 = builtin_group("sym", 3)
T = character_table(S3)
for text, rank in [("[x1,x2]", 2), ("x1^2 x2^2", 2), ("[x1,x2,x3]", 3), ("x1^3", 1), ("x1 x2 x1^-1 x2", 2)]:
    w = parse_word(text, rank)
    shape = recognize_shape(w)
    brute = coefficients_from_class_function(oracle_class_function(w, S3), T)
    print(f"{text:18s} {shape!r}")
    print("   from brute force:", [str(a) for a in brute])
    if not isinstance(shape, Generic):
        print("   closed form:     ", [str(a) for a in closed_form_coefficients(shape, T)])

# %% [markdown]
# Whenever the rank is at least 2, the number of solutions of `w = 1` is a
# multiple of |G|.

# %%
w = parse_word("x1^2 x2^3", 2)
for name, n in [("sym", 4), ("alt", 4), ("dih", 5)]:
    G = builtin_group(name, n)
    solutions = oracle_class_function(w, G).values[0]
    print(f"{name}:{n}  |G| = {G.order:3d}  solutions = {solutions}  ratio = {solutions / G.order}")
