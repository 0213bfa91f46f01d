from itertools import permutations, product
from math import comb

import pytest

from superschur.exactalg import Echelon, GF, QQ
from superschur.schuralg import (
    QAlgebra, SchurAlgebra, SchurModule, act_divided, act_divided_residual, act_symmetric,
    act_tensor, commutant_dimension, cyclic_contains_highest, lie_generators, n_invariants,
    q_basis, q_embed, q_weight_idempotent, s_basis, s_mult,
)
from superschur.schurfun import row_costandard_rows, rows_weight, theta_hat_column
from superschur.shapes import Partition, SkewShape, enumerate_tableaux, partitions, skew_shapes

SMALL = [(1, 1, 2), (2, 1, 2), (1, 1, 3), (0, 1, 2), (1, 0, 3)]


def clean(v):
    return {k: c for k, c in v.items() if c}


def module_of(lam, m, n, field=QQ):
    return SchurModule(SkewShape(Partition(lam).conjugate(), ()), m, n, field)


def expected_dim(m, n, d):
    even, odd = m * m + n * n, 2 * m * n
    return sum(comb(even + d - k - 1, d - k) * comb(odd, k) for k in range(d + 1)) if even \
        else comb(odd, d)


@pytest.mark.parametrize("m,n,d", [(m, n, d) for m in range(3) for n in range(3) for d in range(1, 4)
                                   if m + n])
def test_dimension_counts_strict_multisets(m, n, d):
    assert len(s_basis(m, n, d)) == expected_dim(m, n, d)


def test_basis_examples():
    assert len(s_basis(2, 1, 1)) == 9
    assert all(len(s_basis(1, 0, d)) == 1 for d in range(1, 5))
    assert s_basis(0, 1, 2) == [((1, 1), (1, 1))]


def test_degree_one_action():
    for a, b in product(range(1, 4), repeat=2):
        for l in range(1, 4):
            want = {(a,): 1} if b == l else {}
            assert act_tensor(((a, b),), (l,), 2, 1) == want


@pytest.mark.parametrize("mnd", SMALL)
@pytest.mark.parametrize("twisted", [False, True])
def test_module_law(mnd, twisted):
    alg = SchurAlgebra(*mnd)
    B = alg.basis()
    for a in B:
        for b in B:
            ab = alg.mult(a, b)
            for w in alg.tensor_words():
                lhs = alg.act_vector(ab, {w: 1}, twisted)
                rhs = alg.act_vector({a: 1}, alg.act_word(b, w, twisted), twisted)
                assert lhs == rhs, (a, b, w)


def test_associative_with_unit():
    alg = SchurAlgebra(1, 1, 2)
    B = alg.basis()
    one = alg.identity()
    for a in B:
        assert alg.mult_elems(one, {a: 1}) == {a: 1} == alg.mult_elems({a: 1}, one)
        for b in B:
            for c in B:
                assert alg.mult_elems(alg.mult(a, b), {c: 1}) == alg.mult_elems({a: 1}, alg.mult(b, c))


@pytest.mark.parametrize("mnd", [(1, 1, 2), (2, 1, 2), (1, 2, 2), (1, 1, 3)])
def test_faithful_on_tensor_space(mnd):
    alg = SchurAlgebra(*mnd)
    words = {w: k for k, w in enumerate(alg.tensor_words())}
    ech = Echelon(QQ)
    for a in alg.basis():
        op = alg.operator({a: 1})
        ech.add({words[w] * len(words) + words[v]: c for w, col in op.items() for v, c in col.items()})
    assert ech.rank == alg.dim()


def test_weight_idempotents():
    alg = SchurAlgebra(2, 1, 2)
    idem = {mu: alg.weight_idempotent(mu) for mu in alg.weights()}
    for mu, e in idem.items():
        for nu, f in idem.items():
            assert alg.mult(e, f) == ({e: 1} if mu == nu else {})
        for w in alg.tensor_words():
            assert alg.act_word(e, w) == ({w: 1} if alg.weight_of(w) == mu else {})
        for b in alg.basis():
            i, _ = alg.words(b)
            assert s_mult(e, b, 2, 1, 2) == ({b: 1} if alg.weight_of(i) == mu else {})


def test_literal_character_reading_breaks_the_module_law():
    # The sign chr(i, j; k) evaluated on canonical column order instead of the
    # actual arrangement: (a b) w != a (b w) somewhere in S(1|1,2).
    from superschur.schuralg import _arrangements
    from superschur.supercore import charge
    alg = SchurAlgebra(1, 1, 2)

    def literal(a, w):
        out = {}
        for arr in _arrangements(a, 1, w):
            k = tuple(c[0] for c in arr)
            eps = tuple(alg.pair_parity(c) for c in a)
            out[k] = out.get(k, 0) + alg.orbit_sign(a, arr) * charge(eps, alg.space.word_parity(k))
        return clean(out)

    def lit_vec(x, v):
        out = {}
        for a, ca in x.items():
            for w, cw in v.items():
                for k, c in literal(a, w).items():
                    out[k] = out.get(k, 0) + ca * cw * c
        return clean(out)

    B = alg.basis()
    failures = sum(1 for a in B for b in B for w in alg.tensor_words()
                   if lit_vec(alg.mult(a, b), {w: 1}) != lit_vec({a: 1}, lit_vec({b: 1}, {w: 1})))
    assert failures > 0


def test_divided_action_commutes_with_the_embedding():
    for shape in skew_shapes(3, 1):
        dom = shape.conjugate()
        for m, n in [(1, 1), (2, 1), (1, 2)]:
            alg = SchurAlgebra(m, n, shape.size)
            for a in alg.basis():
                for t in row_costandard_rows(dom, alg.space):
                    assert act_divided_residual(alg, a, t, dom.row_lengths) == {}


def test_divided_weight_idempotent():
    shape = SkewShape((2, 1), ())
    alg = SchurAlgebra(2, 1, 3)
    for mu in alg.weights():
        e = alg.weight_idempotent(mu)
        for t in row_costandard_rows(shape, alg.space):
            want = {t: 1} if rows_weight(t, 3) == mu else {}
            assert act_divided(alg, e, t, shape.row_lengths) == want


def test_theta_hat_is_natural_up_to_a_parity_sign():
    for shape in skew_shapes(3, 1):
        d = shape.size
        dom = shape.conjugate()
        for m, n in [(1, 1), (2, 1), (0, 2)]:
            alg = SchurAlgebra(m, n, d)
            for a in alg.basis():
                par = sum(alg.pair_parity(c) for c in a) & 1
                sign = -1 if par and (d + 1) % 2 else 1
                for t in row_costandard_rows(dom, alg.space):
                    lhs = {}
                    for s, c in act_divided(alg, a, t, dom.row_lengths).items():
                        for k, x in theta_hat_column(s, shape, alg.space).items():
                            lhs[k] = lhs.get(k, 0) + c * x
                    rhs = {}
                    for k, x in theta_hat_column(t, shape, alg.space).items():
                        for k2, y in act_symmetric(alg, a, k, shape.row_lengths).items():
                            rhs[k2] = rhs.get(k2, 0) + sign * x * y
                    assert clean(lhs) == clean(rhs)


def test_module_matrices():
    mod = module_of((2, 1), 2, 1)
    alg = mod.alg
    n = len(mod)
    assert mod.matrix(alg.identity()) == {k: {k: 1} for k in range(n)}
    total = {}
    for mu in alg.weights():
        P = mod.matrix(alg.weight_idempotent(mu))
        for k, col in P.items():
            for r, x in col.items():
                total[(r, k)] = total.get((r, k), 0) + x
                assert r == k and x == 1 and mod.weight_of(k) == mu
    assert clean(total) == {(k, k): 1 for k in range(n)}
    assert sum(len(v) for v in mod.by_weight.values()) == n


def test_highest_vector_is_killed_by_raising_elements():
    for lam, m, n in [((2,), 2, 1), ((2, 1), 2, 2), ((3,), 3, 0), ((1, 1), 1, 2)]:
        mod = module_of(lam, m, n)
        hw = mod.highest_vector_index()
        for a in mod.alg.basis():
            if mod.alg.is_raising(a):
                assert mod.apply(a, mod.vectors[hw]) == {}


def test_natural_module_invariants():
    for m, n in [(1, 1), (2, 1), (1, 2), (3, 2)]:
        mod = module_of((1,), m, n)
        inv = n_invariants(mod)
        assert len(inv) == 1 and list(inv[0]) == [mod.labels.index(((1,),))]


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_invariants_are_the_canonical_line(field):
    for d in range(1, 4):
        for lam in partitions(d):
            for m in range(lam[0], 3):
                for n in range(3):
                    mod = module_of(lam, m, n, field)
                    inv = n_invariants(mod)
                    assert len(inv) == 1 and set(inv[0]) == {mod.highest_vector_index()}


def test_literal_lexicographic_family_leaves_no_invariants():
    mod = module_of((2,), 2, 0)
    alg = mod.alg
    literal = [a for a in alg.basis() if alg.is_lex_smaller(a)]
    assert n_invariants(mod, literal) == []
    culprit = ((1, 2), (2, 1))
    assert culprit in literal and not alg.is_raising(culprit)
    assert mod.apply(culprit, mod.vectors[mod.highest_vector_index()]) != {}


def test_every_cyclic_submodule_reaches_the_canonical_vector():
    for lam, m, n in [((2,), 2, 1), ((2, 1), 2, 1), ((1, 1), 1, 1), ((3,), 3, 1)]:
        mod = module_of(lam, m, n)
        assert all(cyclic_contains_highest(mod, k) for k in range(len(mod)))


def test_endomorphisms_are_scalars():
    for lam, m, n in [((2,), 2, 1), ((2, 1), 2, 2), ((1, 1, 1), 1, 2), ((3,), 1, 1)]:
        mod = module_of(lam, m, n)
        assert commutant_dimension(mod, list(lie_generators(mod.alg).values())) == 1
        assert commutant_dimension(mod, mod.alg.basis()) == 1


def test_costandard_words_dominate_under_row_column_moves():
    # r has the rows of s (as multisets) and the columns of t; then w(s) >= w(t)
    from superschur.supercore import SuperBasis
    for d in range(1, 5):
        for lam in partitions(d):
            shape = SkewShape(lam, ())
            for m, n in [(1, 1), (2, 1), (1, 2), (3, 0), (0, 3)]:
                ts = list(enumerate_tableaux(shape, SuperBasis.standard(m, n), "costandard"))
                by_rows = {}
                for s in ts:
                    by_rows.setdefault(tuple(tuple(sorted(r)) for r in s.rows), []).append(s)
                for t in ts:
                    cols = t.columns()
                    for cp in product(*[set(permutations(c)) for c in cols]):
                        rows = tuple(tuple(sorted(cp[j][i] for j in range(len(cp)) if i < len(cp[j])))
                                     for i in range(len(lam)))
                        for s in by_rows.get(rows, []):
                            assert s.word() >= t.word()


@pytest.mark.parametrize("n,d,dim", [(1, 1, 2), (2, 1, 8), (2, 2, 32), (2, 3, 88)])
def test_q_dimensions(n, d, dim):
    assert len(q_basis(n, d)) == dim


@pytest.mark.parametrize("n,d", [(1, 2), (2, 2), (1, 3)])
def test_q_embedding_is_injective_and_closed(n, d):
    qa = QAlgebra(n, d)
    B = qa.basis()
    images = [qa.embed(q) for q in B]
    keys = {k: i for i, k in enumerate(sorted({k for v in images for k in v}))}
    ech = Echelon(QQ)
    assert all(ech.add({keys[k]: c for k, c in v.items()}) for v in images)
    for a in B:
        for b in B:
            qa.mult({a: 1}, {b: 1})  # raises if the product leaves the image


def test_q_weight_idempotents():
    for n, d in [(1, 2), (2, 2), (2, 3)]:
        qa = QAlgebra(n, d)
        big = SchurAlgebra(n, n, d)
        total = {}
        for nu in qa.weights():
            e = q_weight_idempotent(nu, n)
            assert e == {big.weight_idempotent(mu): 1 for mu in big.weights()
                         if tuple(mu[k] + mu[n + k] for k in range(n)) == tuple(nu)}
            for k, v in e.items():
                total[k] = total.get(k, 0) + v
            for nu2 in qa.weights():
                x, y = {qa.weight_idempotent(nu): 1}, {qa.weight_idempotent(nu2): 1}
                assert qa.mult(x, y) == (x if nu == nu2 else {})
        assert total == big.identity()
        assert q_embed(qa.weight_idempotent(qa.weights()[0]), n) == \
            q_weight_idempotent(qa.weights()[0], n)
