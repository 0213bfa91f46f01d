# %% [markdown]
# # Characters
# Weight multiplicities of the Schur modules against hook Schur functions,
# and the type Q restriction against their x = y specialization.

# %%
from superschur.chars import hall_littlewood, hook_schur, q_character, schur_character

lam = (2, 1)
print("module:    ", schur_character(lam, 1, 1))
print("hook Schur:", hook_schur(lam, 1, 1))

# %%
print("type Q:      ", q_character(lam, 1))
print("hs(x; x):    ", hall_littlewood(lam, 1))

# %% Truncation: killing x2 in the bigger character gives the smaller one.
big = schur_character(lam, 2, 1)
print(big.truncate(1, 1) == schur_character(lam, 1, 1))
