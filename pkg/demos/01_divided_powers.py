# %% [markdown]
# # Divided powers over a superspace
# Basis elements are sorted words; odd letters may not repeat.  The product
# constant is a product of binomials over repeated even letters, and we check
# it against multiplication inside the tensor algebra.

# %%
from superschur.hopf import delta_embed, div_comult, div_mult, div_mult_via_tensor, divided_basis
from superschur.supercore import SuperBasis

V = SuperBasis.standard(2, 2)  # letters 1, 2 even; 3, 4 odd
print(div_mult((1,), (1, 1), V))      # X1 * X1^(2) = 3 X1^(3)
print(div_mult((3,), (3,), V))        # odd squares vanish
print(div_mult((4,), (3,), V))        # odd letters anticommute

# %% The embedding into the tensor power is a signed sum of rearrangements.
print(delta_embed((1, 3, 4), V))

# %% Coproduct components.
print(div_comult((1, 1, 3), 1, 2, V))

# %% Every product up to degree 4, checked against the shuffle product.
words = [w for d in range(5) for w in divided_basis(d, V)]
pairs = [(a, b) for a in words for b in words if len(a) + len(b) <= 4]
agree = sum(1 for a, b in pairs if (div_mult(a, b, V), {}) == div_mult_via_tensor(a, b, V))
print(f"{agree} of {len(pairs)} products agree with the tensor-algebra oracle")
