# %% [markdown]
# # The Schur superalgebra and highest weight vectors
# A basis element of S(m|n,d) is a sorted tuple of column pairs (i_k, j_k).

# %%
from superschur.schuralg import (
    QAlgebra, SchurAlgebra, SchurModule, commutant_dimension, lie_generators, n_invariants,
)
from superschur.shapes import SkewShape

A = SchurAlgebra(1, 1, 2)
print(A, "has dimension", A.dim())
a, b = ((1, 2), (2, 2)), ((2, 1), (2, 2))
print(a, "*", b, "=", A.mult(a, b))
print("identity:", A.identity())

# %% The module over the conjugate of (2,1), over k^{2|1}.
mod = SchurModule(SkewShape((2, 1), ()), 2, 1)
print("dimension", len(mod))
inv = n_invariants(mod)
print("raising invariants:", inv, "canonical index:", mod.highest_vector_index())

# %% Reading the raising family as "i before j lexicographically" gives nothing.
lit = [x for x in mod.alg.basis() if mod.alg.is_lex_smaller(x)]
print("invariants of the lexicographic family:", n_invariants(mod, lit))

# %% Endomorphisms commuting with the Lie generators are scalars.
print("commutant dimension:", commutant_dimension(mod, list(lie_generators(mod.alg).values())))

# %% The type Q algebra inside S(n|n,d).
Q = QAlgebra(2, 2)
print("dim Q(2,2) =", len(Q.basis()))
print(Q.embed(((1, 1, 2),)))
