# %% [markdown]
# # Costandard tableaux as a basis
# For a skew shape s and the space k^{m|n}, the map theta_hat from the
# twisted divided powers over s' to the symmetric powers over s has rank
# equal to the number of costandard tableaux of s'.  The kernel is exactly
# the image of the diamond map.

# %%
from superschur.exactalg import GF, QQ
from superschur.schurfun import ShapeSpace, build_theta_hat, schur_basis, straighten
from superschur.shapes import enumerate_tableaux, parse_shape
from superschur.supercore import SuperBasis

V = SuperBasis.standard(2, 1)
shape = parse_shape("2,1")
th = build_theta_hat(shape, V)
print("domain size", len(th.domain), "rank", th.rank())
print("costandard tableaux of the conjugate:",
      sum(1 for _ in enumerate_tableaux(shape.conjugate(), V, "costandard")))

# %% The same numbers, organised by weight, over three fields.
res = ShapeSpace(shape.conjugate(), V).check((QQ, GF(3), GF(5)))
print(res["row_costandard"], res["costandard"], res["fields"], res["ok"])

# %% One basis vector and its image.
basis = schur_basis(shape, V)
rows, image = next(iter(basis.vectors.items()))
print(rows, "->", image)

# %% Straightening a row-costandard tableau that is not costandard.
sh = parse_shape("2,2")
t = [(2, 3), (1, 3)]  # first column descends
print(straighten(t, sh, V))

# %% Soundness over one shape: every straightening stays in its class.
checked, failures = ShapeSpace(sh, V).straightening_check()
print(checked, "tableaux straightened,", len(failures), "failures")
