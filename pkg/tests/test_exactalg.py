from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superschur.exactalg import (
    GF, QQ, Echelon, FieldError, Mod, SparseMat, bareiss_rank, in_span,
    kernel_basis, naive_rank, parse_field, rank,
)


def rank_mod_p(matrix, p):
    a = [[v % p for v in r] for r in matrix]
    r = 0
    for c in range(len(a[0]) if a else 0):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [v * inv % p for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def as_sparse(matrix, field):
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    return SparseMat(rows, range(len(matrix[0])), field)


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_over_q_agrees_with_textbook_elimination(m):
    want = naive_rank(m)
    assert rank(as_sparse(m, QQ)) == want
    assert bareiss_rank(m) == want


@settings(max_examples=200, deadline=None)
@given(matrices, st.sampled_from([3, 5, 7]))
def test_rank_over_gf_p(m, p):
    assert rank(as_sparse(m, GF(p))) == rank_mod_p(m, p)


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([0, 3, 5]))
def test_kernel_vectors_are_killed_and_count_is_nullity(m, p):
    field = QQ if p == 0 else GF(p)
    mat = as_sparse(m, field)
    ker = kernel_basis(mat)
    assert len(ker) == len(m[0]) - rank(mat)
    for v in ker:
        assert mat.apply(v) == {}
    # independence of the kernel basis
    ech = Echelon(field)
    assert all(ech.add(v) for v in ker)


def test_rank_depends_on_characteristic():
    m = [[1, 1], [1, -2]]
    assert rank(as_sparse(m, QQ)) == 2
    assert rank(as_sparse(m, GF(3))) == 1
    assert rank(as_sparse(m, GF(5))) == 2


def test_fractions_are_accepted_over_q_and_mapped_mod_p():
    m = [[Fraction(1, 2), 1], [1, 2]]
    assert rank(as_sparse(m, QQ)) == 1
    assert rank(as_sparse(m, GF(5))) == 1
    with pytest.raises(FieldError):
        GF(3).convert(Fraction(1, 3))


def test_in_span():
    basis = [{"a": 1, "b": 1}, {"b": 1, "c": 2}]
    assert in_span({"a": 2, "b": 3, "c": 2}, basis)
    assert not in_span({"a": 1}, basis)
    assert in_span({"a": Mod(1, 3), "c": Mod(1, 3)}, [{"a": Mod(1, 3), "b": Mod(1, 3)},
                                                       {"b": Mod(2, 3), "c": Mod(1, 3)}])


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        Mod(1, 3) + Mod(1, 5)
    with pytest.raises(FieldError):
        SparseMat([{0: Mod(1, 3), 1: Mod(1, 5)}], range(2))
    with pytest.raises(FieldError):
        QQ.convert(Mod(1, 3))


def test_mod_arithmetic():
    x = Mod(2, 5)
    assert x * x.inverse() == 1
    assert x / 3 == Mod(4, 5)
    assert -x == 3
    assert Mod(Fraction(1, 2), 5) == 3
    with pytest.raises(ZeroDivisionError):
        Mod(0, 5).inverse()


@pytest.mark.parametrize("text, want", [("q", QQ), ("p=3", GF(3)), ("P=5", GF(5))])
def test_parse_field(text, want):
    assert parse_field(text) == want


@pytest.mark.parametrize("text", ["p=2", "p=9", "p=x", "r"])
def test_parse_field_rejects(text):
    with pytest.raises(FieldError):
        parse_field(text)


def test_undeclared_column_rejected():
    with pytest.raises(ValueError):
        SparseMat([{"z": 1}], ["a"], QQ)


def test_transpose_keeps_rank():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    mat = as_sparse(m, QQ)
    assert rank(mat.transpose()) == rank(mat) == 2
