# %% [markdown]
# # Homomorphisms from closed surface groups
#
# For the orientable surface of genus g the count is
# `|G|^(2g-1) * sum_chi chi(1)^(2-2g)`. The nonorientable surface with k
# crosscaps also weights each character by its indicator. Both are checked
# against brute-force enumeration.

# %%
from surfhom import (NONORIENTABLE, ORIENTABLE, builtin_group, character_table, count_surface,
                     oracle_count_with_boundary)
from surfhom.words import commutators_word, squares_word

for name, n in [("sym", 3), ("dih", 4), ("q8", None)]:
    T = character_table(builtin_group(name, n))
    for kind, genera, word in [(ORIENTABLE, (0, 1, 2), commutators_word), (NONORIENTABLE, (1, 2, 3), squares_word)]:
        for genus in genera:
            formula = count_surface(T, kind, genus).value
            brute = oracle_count_with_boundary(word(genus), T.group, [])
            print(f"{name}:{n}  {kind:13s} genus {genus}: formula {formula:7d}  brute force {brute:7d}")

# %% [markdown]
# The per-character terms are kept, so a disagreement could be traced to a
# single character. For Q8 and one crosscap the quaternionic character
# subtracts.

# %%
result = count_surface(character_table(builtin_group("q8")), NONORIENTABLE, 1)
print(result.value, [str(t) for t in result.terms])
