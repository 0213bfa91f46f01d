"""Formal characters as polynomials in x_1..x_m; y_1..y_n.

Characters are computed from weight-space dimensions of the modules built
in ``schurfun`` and ``schuralg``; the symmetric-function side (Schur, hook
Schur, and their x = y specialization) is generated from tableaux.
"""

import json

from .exactalg import QQ
from .schurfun import schur_basis
from .shapes import Partition, SkewShape, enumerate_tableaux
from .supercore import SuperBasis

__all__ = [
    "MultiPoly", "character", "schur_poly", "skew_schur_poly", "hook_schur",
    "hall_littlewood", "schur_character", "q_character", "verify_char_typeI",
    "verify_char_typeII", "truncation_check", "standard_tableau_sum",
]


class MultiPoly:
    """Integer polynomial in m even variables x and n odd-labelled variables y."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        self.m, self.n = m, n
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != m + n:
                raise ValueError("exponent length does not match the variables")
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
                if not self.terms[e]:
                    del self.terms[e]

    @classmethod
    def one(cls, m, n):
        return cls(m, n, {(0,) * (m + n): 1})

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and (self.m, self.n, self.terms) == (other.m, other.n, other.terms)

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.m, self.n, out)

    def __mul__(self, other):
        self._compatible(other)
        out = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                k = tuple(a + b for a, b in zip(e, f))
                out[k] = out.get(k, 0) + c * d
        return MultiPoly(self.m, self.n, out)

    def _compatible(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("polynomials in different variable sets")

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {sum(e) for e in self.terms}

    def embed(self, m, n, y_offset=0):
        """The same polynomial in a larger ring: x's first, y's shifted by ``y_offset``."""
        out = {}
        for e, c in self.terms.items():
            x = e[:self.m] + (0,) * (m - self.m)
            y = (0,) * y_offset + e[self.m:] + (0,) * (n - self.n - y_offset)
            out[x + y] = c
        return MultiPoly(m, n, out)

    def truncate(self, m, n):
        """Set x_{m+1}.., y_{n+1}.. to zero."""
        out = {}
        for e, c in self.terms.items():
            x, y = e[:self.m], e[self.m:]
            if any(x[m:]) or any(y[n:]):
                continue
            out[x[:m] + y[:n]] = c
        return MultiPoly(m, n, out)

    def collapse(self):
        """Substitute y_k := x_k (requires m == n); the result lives in x only."""
        if self.m != self.n:
            raise ValueError("collapse needs as many y's as x's")
        out = {}
        for e, c in self.terms.items():
            k = tuple(a + b for a, b in zip(e[:self.m], e[self.m:]))
            out[k] = out.get(k, 0) + c
        return MultiPoly(self.m, 0, out)

    def permute(self, xperm=None, yperm=None):
        xperm = xperm or tuple(range(self.m))
        yperm = yperm or tuple(range(self.n))
        out = {}
        for e, c in self.terms.items():
            x = tuple(e[xperm[k]] for k in range(self.m))
            y = tuple(e[self.m + yperm[k]] for k in range(self.n))
            out[x + y] = c
        return MultiPoly(self.m, self.n, out)

    def _monomial(self, e):
        parts = []
        for k, a in enumerate(e):
            if not a:
                continue
            v = f"x{k + 1}" if k < self.m else f"y{k - self.m + 1}"
            parts.append(v if a == 1 else f"{v}^{a}")
        return "*".join(parts) or "1"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(-a for a in t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {self._monomial(e)}" for e, c in self.sorted_terms())

    __repr__ = __str__

    def to_json(self):
        return json.dumps({"m": self.m, "n": self.n,
                           "terms": [[list(e), c] for e, c in self.sorted_terms()]})


def character(weight_dims, m, n):
    """sum over weights mu of dim(V_mu) z^mu."""
    return MultiPoly(m, n, weight_dims)


def _tableau_sum(shape, basis, predicate, m, n, y_only=False):
    out = {}
    for t in enumerate_tableaux(shape, basis, predicate):
        w = [0] * basis.size
        for row in t.rows:
            for a in row:
                w[a - 1] += 1
        e = (0,) * m + tuple(w) if y_only else tuple(w)
        out[e] = out.get(e, 0) + 1
    return MultiPoly(m, n, out)


def _as_shape(shape):
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(Partition(shape), ())


def schur_poly(shape, m):
    """s_{lam/mu}(x_1..x_m) from standard tableaux over m even letters."""
    return _tableau_sum(_as_shape(shape), SuperBasis.standard(m, 0), "standard", m, 0)


def skew_schur_poly(shape, n, odd_variant=False):
    """s_{lam/mu}(y_1..y_n); with ``odd_variant`` the tableaux of ``shape`` over n odd
    letters are used, which gives s of the conjugate shape."""
    shape = _as_shape(shape)
    if odd_variant:
        return _tableau_sum(shape, SuperBasis.standard(0, n), "standard", 0, n, y_only=True)
    p = _tableau_sum(shape, SuperBasis.standard(n, 0), "standard", n, 0)
    return MultiPoly(0, n, p.terms)


def _sub_partitions(lam):
    lam = Partition(lam)
    out = []

    def rec(i, acc):
        if i > len(lam):
            out.append(Partition(acc))
            return
        hi = lam.part(i) if not acc else min(lam.part(i), acc[-1])
        for x in range(hi + 1):
            rec(i + 1, acc + [x])

    rec(1, [])
    return sorted(set(out))


def hook_schur(lam, m, n):
    """hs_lam(x;y) = sum over mu inside lam of s_mu(x) s_{lam'/mu'}(y)."""
    lam = Partition(lam)
    total = MultiPoly(m, n)
    for mu in _sub_partitions(lam):
        sx = schur_poly(SkewShape(mu, ()), m).embed(m, n) if mu.size else MultiPoly.one(m, n)
        rest = SkewShape(lam, mu)
        sy = skew_schur_poly(rest, n, odd_variant=True).embed(m, n) if rest.size else MultiPoly.one(m, n)
        total = total + sx * sy
    return total


def hall_littlewood(lam, n):
    """The x = y specialization hs_lam(x;x)."""
    return hook_schur(lam, n, n).collapse()


def standard_tableau_sum(lam, m, n):
    """sum over standard tableaux of shape lam over k^{m|n} of z^{wt}."""
    return _tableau_sum(_as_shape(lam), SuperBasis.standard(m, n), "standard", m, n)


def schur_character(shape, m, n, field=QQ):
    """Character of the image of theta_hat(shape) over k^{m|n}, from its tableau basis."""
    shape = _as_shape(shape)
    if shape.size == 0:
        return MultiPoly.one(m, n)
    basis = schur_basis(shape, SuperBasis.standard(m, n), check=True, field=field)
    return character(basis.weight_dims(), m, n)


def q_character(lam, n, field=QQ):
    """Character of the restriction to Q(n,d) of the Schur module over k^{n|n}.

    Each weight space is the image of the Q weight idempotent pushed into
    S(n|n,d), measured as the rank of its action matrix on the module.
    """
    from .exactalg import SparseMat, rank
    from .schuralg import QAlgebra, SchurModule

    shape = _as_shape(lam)
    if shape.size == 0:
        return MultiPoly.one(n, 0)
    module = SchurModule(shape, n, n, field)
    qa = QAlgebra(n, shape.size)
    out = {}
    for nu in qa.weights():
        elem = qa.embed(qa.weight_idempotent(nu))
        cols = {}
        for lab, c in elem.items():
            for k, col in module.matrix(lab).items():
                acc = cols.setdefault(k, {})
                for r, x in col.items():
                    acc[r] = acc.get(r, 0) + c * x
        rows = [v for v in cols.values() if any(v.values())]
        dim = rank(SparseMat(rows, range(len(module)), field)) if rows else 0
        if dim:
            out[tuple(nu)] = dim
    return MultiPoly(n, 0, out)


def verify_char_typeI(lam, m, n):
    """Character of the Schur module equals the hook Schur function and the standard-tableau sum."""
    ch = schur_character(lam, m, n)
    return ch == hook_schur(lam, m, n) and ch == standard_tableau_sum(lam, m, n)


def verify_char_typeII(lam, n):
    """Q-weight character equals hs_lam(x;x), and equals the collapsed type I character."""
    ch = q_character(lam, n)
    return ch == hall_littlewood(lam, n) and ch == schur_character(lam, n, n).collapse()


def truncation_check(lam, m_big, n_big, m, n):
    if m_big < m or n_big < n:
        raise ValueError("truncation needs m_big >= m and n_big >= n")
    return schur_character(lam, m_big, n_big).truncate(m, n) == schur_character(lam, m, n)
