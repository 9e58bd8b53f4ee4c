# %% [markdown]
# # Word statistics on symmetric groups as symmetric functions
#
# Averaging `p_(cycle type of w(u))` over all tuples `u` in S_n^r gives a
# degree-n symmetric function. It equals the Schur expansion
# `sum_lam a_lam s_lam`, where `a_lam` are the character coefficients of the
# word's counting function. Vectors are stored in the power-sum basis.

# %%
from surfhom import parse_word, schur_in_p, word_power_sum_average
from surfhom.symfunc import SQUARES, hook_schur_side, specialized_identity_check, word_schur_side

print("s_(2,1) =", schur_in_p((2, 1)))
w = parse_word("[x1,x2]", 2)
for n in range(1, 5):
    average = word_power_sum_average(w, n)
    print(f"n={n}: average == Schur side: {average == word_schur_side(w, n)}")
    print("      ", average)

# %% [markdown]
# For products of squares the coefficients are powers of hook products.

# %%
print(word_power_sum_average(parse_word("x1^2 x2^2", 2), 4) == hook_schur_side(SQUARES, 2, 4))

# %% [markdown]
# Setting q variables to 1 turns the identity into a statement about the
# average of `q^(number of cycles)`, with contents on the other side.

# %%
for q in (1, 2, 3):
    left, right = specialized_identity_check(SQUARES, 2, 4, q)
    print(f"q={q}: {left} = {right}")
