"""The Schur superalgebras S(m|n,d) and Q(n,d) and their actions.

A basis element E^{(i,j)} of S(m|n,d) is stored canonically as the sorted
tuple of its column pairs (i_k, j_k).  A pair is odd when exactly one of its
letters is odd; strictness means odd pairs do not repeat.  In other words a
basis element is a standardized restricted word over the letters E_{a,b} of
End(k^{m|n}), which is how the embedding of Q(n,d) is computed.

Actions on tensor words use the Koszul rule: (f_1 x ... x f_d)(z_1 x ... x z_d)
picks up (-1)^{|f_q||z_p|} for every p < q.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .exactalg import QQ, Echelon, kernel_basis, SparseMat
from .hopf import delta_embed, div_mult
from .schurfun import _blocks_project, rows_of, rows_weight, theta_hat_column, costandard_rows
from .supercore import SuperBasis, koszul_between

__all__ = [
    "SchurAlgebra", "QAlgebra", "s_basis", "s_mult", "act_tensor", "act_divided",
    "act_symmetric", "act_schur", "n_invariants", "q_basis", "q_embed",
    "q_weight_idempotent", "SchurModule",
]


def _add(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _arrangements(cols, slot=None, target=None):
    """Distinct orderings of the multiset ``cols``; with ``slot`` given, only those whose
    component ``slot`` reads ``target`` position by position."""
    counts = {}
    for c in cols:
        counts[c] = counts.get(c, 0) + 1
    keys = sorted(counts)
    d = len(cols)
    cur = []

    def rec(p):
        if p == d:
            yield tuple(cur)
            return
        for c in keys:
            if counts[c] and (slot is None or c[slot] == target[p]):
                counts[c] -= 1
                cur.append(c)
                yield from rec(p + 1)
                cur.pop()
                counts[c] += 1

    yield from rec(0)


class SchurAlgebra:
    """S(m|n,d) = Gamma^d End(k^{m|n}) with basis E^{(i,j)} over canonical strict pairs."""

    def __init__(self, m, n, d):
        if min(m, n, d) < 0:
            raise ValueError("m, n, d must be nonnegative")
        self.m, self.n, self.d = m, n, d
        self.space = SuperBasis.standard(m, n)
        self.size = m + n
        letters = range(1, self.size + 1)
        self.pairs = [(a, b) for a in letters for b in letters]
        # End(M) as a superspace whose letters are the pairs, in lex order
        self.end_basis = SuperBasis([self.pair_parity(p) for p in self.pairs])
        self._pair_index = {p: k for k, p in enumerate(self.pairs, 1)}
        self._basis = None

    def __repr__(self):
        return f"S({self.m}|{self.n},{self.d})"

    def pair_parity(self, pair):
        return self.space.parity(pair[0]) ^ self.space.parity(pair[1])

    def _odd(self, pair):
        return self.pair_parity(pair) == 1

    # -- basis ------------------------------------------------------------
    def basis(self):
        if self._basis is None:
            out = []
            for cols in combinations_with_replacement(self.pairs, self.d):
                odd = [c for c in cols if self._odd(c)]
                if len(odd) == len(set(odd)):
                    out.append(tuple(cols))
            self._basis = out
        return self._basis

    def dim(self):
        return len(self.basis())

    def canonical(self, i, j):
        """Canonical label of E^{(i,j)}, or None when the pair is not strict."""
        cols = tuple(sorted(zip(i, j)))
        odd = [c for c in cols if self._odd(c)]
        if len(odd) != len(set(odd)):
            return None
        return cols

    @staticmethod
    def words(label):
        return tuple(c[0] for c in label), tuple(c[1] for c in label)

    def weight_of(self, word):
        w = [0] * self.size
        for a in word:
            w[a - 1] += 1
        return tuple(w)

    def weights(self):
        out = []

        def rec(k, left, acc):
            if k == self.size - 1:
                out.append(tuple(acc + [left]))
                return
            for x in range(left, -1, -1):
                rec(k + 1, left - x, acc + [x])

        if self.size == 0:
            return [()] if self.d == 0 else []
        rec(0, self.d, [])
        return out

    def weight_idempotent(self, mu):
        word = tuple(a for a in range(1, self.size + 1) for _ in range(mu[a - 1]))
        return tuple((a, a) for a in word)

    def identity(self):
        return {self.weight_idempotent(mu): 1 for mu in self.weights()}

    def orbit_sign(self, label, arrangement):
        """sgn(i,j; s,t): Koszul sign of moving the columns from canonical to given order."""
        return koszul_between(label, arrangement, self._odd)

    # -- multiplication ----------------------------------------------------
    def mult(self, a, b):
        return dict(_mult_cached(self.m, self.n, self.d, a, b))

    def mult_elems(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for s, c in self.mult(a, b).items():
                    _add(out, s, ca * cb * c)
        return out

    # -- actions -----------------------------------------------------------
    def act_word(self, a, word, twisted=False):
        """E^{(a)} Z^word (or Z_Pi^word when twisted) as {word: coefficient}."""
        return dict(_act_cached(self.m, self.n, self.d, a, tuple(word), bool(twisted)))

    def act_vector(self, x, vec, twisted=False):
        out = {}
        for a, ca in x.items():
            for w, cw in vec.items():
                for k, c in self.act_word(a, w, twisted).items():
                    _add(out, k, ca * cw * c)
        return out

    def tensor_words(self):
        r = self.size
        out = [()]
        for _ in range(self.d):
            out = [w + (a,) for w in out for a in range(1, r + 1)]
        return out

    def operator(self, x, twisted=False):
        """The matrix of x on the tensor power, as {input word: {output word: coef}}."""
        return {w: self.act_vector(x, {w: 1}, twisted) for w in self.tensor_words()}

    def is_raising(self, label):
        """Every column has i_k <= j_k and at least one is strict."""
        return all(a <= b for a, b in label) and any(a < b for a, b in label)

    def is_lex_smaller(self, label):
        """The literal reading: i precedes j lexicographically in the canonical pair."""
        i, j = self.words(label)
        return i < j


def _kz_action(cols, inword_par, basis):
    """Koszul sign of applying columns (as operators) to a word of the given parities."""
    total = 0
    seen = 0
    for p, c in enumerate(cols):
        if basis.parity(c[0]) ^ basis.parity(c[1]):
            total += seen
        seen += inword_par[p]
    return -1 if total & 1 else 1


@lru_cache(maxsize=1 << 15)
def _act_cached(m, n, d, label, word, twisted):
    alg = _algebra(m, n, d)
    space = alg.space
    inpar = (space.flipped() if twisted else space).word_parity(word)
    out = {}
    for arr in _arrangements(label, 1, word):
        sign = alg.orbit_sign(label, arr) * _kz_action(arr, inpar, space)
        _add(out, tuple(c[0] for c in arr), sign)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _algebra(m, n, d):
    return SchurAlgebra(m, n, d)


@lru_cache(maxsize=1 << 16)
def _mult_cached(m, n, d, a, b):
    """Structure constants: sum over h of sgn(a; s,h) sgn(b; h,t) chr(h,t; s,h)."""
    alg = _algebra(m, n, d)
    odd = alg._odd
    out = {}
    for arr_a in _arrangements(a):
        h = tuple(c[1] for c in arr_a)
        sa = alg.orbit_sign(a, arr_a)
        for arr_b in _arrangements(b, 0, h):
            st = tuple((x[0], y[1]) for x, y in zip(arr_a, arr_b))
            if st != tuple(sorted(st)):
                continue
            # Koszul sign of (f_1 x ..)(g_1 x ..): (-1)^{|g_p||f_q|} for p < q
            total = 0
            seen = 0
            for x, y in zip(arr_a, arr_b):
                if odd(x):
                    total += seen
                seen += odd(y)
            c = sa * alg.orbit_sign(b, arr_b) * (-1 if total & 1 else 1)
            _add(out, st, c)
    res = {}
    for st, c in out.items():
        lab = alg.canonical(*alg.words(st))
        if lab is None:
            raise AssertionError(f"non-strict term {st} with coefficient {c}")
        res[lab] = c
    return tuple(res.items())


def s_basis(m, n, d):
    return list(_algebra(m, n, d).basis())


def s_mult(a, b, m, n, d):
    return _algebra(m, n, d).mult(a, b)


def act_tensor(a, word, m, n, twisted=False):
    return _algebra(m, n, len(word)).act_word(a, word, twisted)


# -- modules built from tableaux -----------------------------------------------

def _row_embedding(rows, basis):
    """Delta of a product of divided powers over rows: {concatenated word: sign}."""
    out = {(): 1}
    for r in rows:
        emb = delta_embed(r, basis)
        out = {w + v: c * s for w, c in out.items() for v, s in emb.items()}
    return out


def act_divided(alg, a, rows, lengths):
    """E^{(a)} on Z_Pi^{(t)} in Gamma_Pi over rows of the given lengths, t given by ``rows``.

    Computed by embedding into the twisted tensor power, acting, and reading
    off the coefficients of the sorted-row words (each appears with
    coefficient one in the embedding of its own basis element).
    """
    pib = alg.space.flipped()
    out = {}
    for w, c in _row_embedding(rows, pib).items():
        for k, x in alg.act_word(a, w, twisted=True).items():
            blocks = rows_of(k, lengths)
            if all(tuple(sorted(b)) == b for b in blocks):
                _add(out, blocks, c * x)
    return out


def act_divided_residual(alg, a, rows, lengths):
    """Tensor vector act(Delta t) - Delta(act t); empty when the square commutes."""
    pib = alg.space.flipped()
    lhs = alg.act_vector({a: 1}, _row_embedding(rows, pib), twisted=True)
    for s, c in act_divided(alg, a, rows, lengths).items():
        for w, x in _row_embedding(s, pib).items():
            _add(lhs, w, -c * x)
    return lhs


def act_symmetric(alg, a, label, lengths):
    """E^{(a)} on the basis element of S over rows of the given lengths (untwisted)."""
    out = {}
    for k, x in alg.act_word(a, label).items():
        proj = _blocks_project(k, lengths, alg.space)
        if proj is not None:
            _add(out, proj[0], x * proj[1])
    return out


class SpanSolver:
    """Coordinates with respect to a list of linearly independent sparse vectors.

    Rows [v_t | e_t] are kept in echelon form; reducing [vec | 0 | 1]
    leaves [0 | -k c | k] for a scale k, so the marker column gives c
    exactly over either field.
    """

    def __init__(self, vectors, field=QQ):
        self.field = field
        keys = sorted({lab for v in vectors for lab in v}, key=repr)
        self.pos = {lab: p for p, lab in enumerate(keys)}
        self.off = len(keys)
        self.count = len(vectors)
        self.ech = Echelon(field)
        for t, v in enumerate(vectors):
            row = {self.pos[lab]: x for lab, x in v.items()}
            row[self.off + t] = 1
            self.ech.add(row)

    def solve(self, vec):
        """{index: coefficient} with vec = sum c_t v_t, or None when vec is outside the span."""
        if any(lab not in self.pos for lab in vec):
            return None
        marker = self.off + self.count
        row = {self.pos[lab]: x for lab, x in vec.items()}
        row[marker] = 1
        rem = self.ech.reduce(row)
        if any(k < self.off for k in rem):
            return None
        k = rem[marker]
        return {c - self.off: _divide(self.field, -x, k) for c, x in rem.items() if c != marker}


class SchurModule:
    """The image of theta_hat for ``shape`` over k^{m|n} with its S(m|n,d)-action.

    Vectors live in S over ``shape``; the basis comes from the costandard
    tableaux of the conjugate shape.  Coordinates are computed per weight.
    """

    def __init__(self, shape, m, n, field=QQ):
        self.shape = shape
        self.alg = _algebra(m, n, shape.size)
        self.field = field
        space = self.alg.space
        self.labels = costandard_rows(shape.conjugate(), space)
        self.vectors = [theta_hat_column(r, shape, space) for r in self.labels]
        self.lengths = shape.row_lengths
        self.by_weight = {}
        for k, r in enumerate(self.labels):
            self.by_weight.setdefault(rows_weight(r, space.size), []).append(k)
        self._solvers = {}

    def __len__(self):
        return len(self.labels)

    def weight_of(self, k):
        return rows_weight(self.labels[k], self.alg.size)

    def apply(self, a, vec):
        """E^{(a)} applied to a vector in S coordinates."""
        out = {}
        for lab, c in vec.items():
            for k, x in act_symmetric(self.alg, a, lab, self.lengths).items():
                _add(out, k, c * x)
        return out

    def _solver(self, wt):
        s = self._solvers.get(wt)
        if s is None:
            idx = self.by_weight.get(wt, [])
            s = self._solvers[wt] = (idx, SpanSolver([self.vectors[k] for k in idx], self.field))
        return s

    def coordinates(self, vec):
        """Coordinates of ``vec`` in the basis; raises when it is outside the span."""
        wts = {}
        for lab, x in vec.items():
            wts.setdefault(rows_weight((lab,), self.alg.size), {})[lab] = x
        out = {}
        for wt, part in wts.items():
            idx, solver = self._solver(wt)
            coords = solver.solve(part)
            if coords is None:
                raise AssertionError("image not invariant")
            for t, x in coords.items():
                out[idx[t]] = x
        return out

    def matrix(self, a):
        """Action of E^{(a)} as {column index: {row index: coefficient}}.

        ``a`` is a basis label or an algebra element {label: coefficient}.
        """
        if isinstance(a, dict):
            out = {}
            for k, v in enumerate(self.vectors):
                acc = {}
                for lab, c in a.items():
                    for key, x in self.apply(lab, v).items():
                        _add(acc, key, c * x)
                out[k] = self.coordinates(acc)
            return out
        return {k: self.coordinates(self.apply(a, v)) for k, v in enumerate(self.vectors)}

    def highest_vector_index(self):
        """Index of the canonical costandard tableau: row i of shape' filled by its columns."""
        space = self.alg.space
        m = space.m
        rows = []
        for i, L in enumerate(self.shape.conjugate().row_lengths, 1):
            rows.append(tuple(j if j <= m else m + i for j in range(1, L + 1)))
        rows = tuple(rows)
        return self.labels.index(rows) if rows in self.labels else None


def _divide(field, a, b):
    if field.characteristic == 0:
        return field.convert(Fraction(a) / Fraction(b))
    p = field.p
    return a * pow(b, -1, p) % p


def act_schur(module, a):
    return module.matrix(a)


def _raising_by_source(alg):
    """Raising basis elements grouped by wt(j) (the weight they act on)."""
    groups = {}
    for lab in alg.basis():
        if alg.is_raising(lab):
            _, j = alg.words(lab)
            groups.setdefault(alg.weight_of(j), []).append(lab)
    return groups


def n_invariants(module, raising=None):
    """Basis (as coordinate dicts) of the vectors killed by every raising basis element.

    ``raising`` selects the family of basis labels forming N; it defaults
    to the columnwise-raising elements.  The kernel is computed weight by
    weight since N maps weight spaces to weight spaces.
    """
    alg = module.alg
    if raising is None:
        groups = _raising_by_source(alg)
    else:
        groups = {}
        for lab in raising:
            groups.setdefault(alg.weight_of(alg.words(lab)[1]), []).append(lab)
    out = []
    for wt, idx in module.by_weight.items():
        labs = groups.get(wt, [])
        rows = []
        for lab in labs:
            cols = {t: module.coordinates(module.apply(lab, module.vectors[k])) for t, k in enumerate(idx)}
            targets = sorted({r for c in cols.values() for r in c})
            for r in targets:
                rows.append({t: c[r] for t, c in cols.items() if r in c})
        mat = SparseMat(rows, range(len(idx)), module.field)
        for v in kernel_basis(mat):
            out.append({idx[t]: x for t, x in v.items()})
    return out


def cyclic_contains_highest(module, start, raising=None, limit=None):
    """Whether the N-submodule generated by basis vector ``start`` contains the canonical vector."""
    alg = module.alg
    labels = list(raising) if raising is not None else [b for b in alg.basis() if alg.is_raising(b)]
    hw = module.highest_vector_index()
    ech = Echelon(module.field)
    frontier = [{start: 1}]
    ech.add({start: 1})
    while frontier:
        nxt = []
        for v in frontier:
            wts = {module.weight_of(k) for k in v}
            for lab in labels:
                if alg.weight_of(alg.words(lab)[1]) not in wts:
                    continue
                vec = {}
                for k, c in v.items():
                    for lab2, x in module.apply(lab, module.vectors[k]).items():
                        _add(vec, lab2, c * x)
                w = module.coordinates(vec)
                if w and ech.add(w):
                    nxt.append(w)
        frontier = nxt
    return ech.contains({hw: 1})


def commutant_dimension(module, generators):
    """Dimension of the weight-preserving matrices commuting with the given actions.

    ``generators`` are basis labels or algebra elements.

    Every such matrix commutes with the weight idempotents, so unknowns are
    only the blocks X_mu on each weight space.
    """
    unknowns = {}
    for wt, idx in module.by_weight.items():
        for r in idx:
            for c in idx:
                unknowns[(r, c)] = len(unknowns)
    eqs = []
    n = len(module)
    for lab in generators:
        A = module.matrix(lab)  # column -> {row: coef}
        # (X A - A X)[r, c] = sum_k X[r,k] A[k,c] - sum_k A[r,k] X[k,c]
        rows_of_A = {}
        for c, col in A.items():
            for r, x in col.items():
                rows_of_A.setdefault(r, {})[c] = x
        for c in range(n):
            for r in range(n):
                eq = {}
                for k, x in A.get(c, {}).items():
                    key = (r, k)
                    if key in unknowns:
                        _add(eq, unknowns[key], x)
                for k, x in rows_of_A.get(r, {}).items():
                    key = (k, c)
                    if key in unknowns:
                        _add(eq, unknowns[key], -x)
                if eq:
                    eqs.append(eq)
    mat = SparseMat(eqs, range(len(unknowns)), module.field)
    return len(kernel_basis(mat))


def lie_generators(alg):
    """Images of E_{a,b} (a != b) from the Lie superalgebra: one off-diagonal column,
    the rest diagonal, summed over all diagonal completions."""
    out = {}
    letters = range(1, alg.size + 1)
    for a in letters:
        for b in letters:
            if a == b:
                continue
            elem = {}
            for rest in combinations_with_replacement(letters, alg.d - 1):
                cols = tuple(sorted(((a, b),) + tuple((x, x) for x in rest)))
                elem[cols] = 1
            out[(a, b)] = elem
    return out


# -- the type Q algebra -----------------------------------------------------------

class QAlgebra:
    """Q(n,d) = Gamma^d End_C1(V_n), realised inside S(n|n,d).

    Basis letters E_{eps;i,j} are triples (eps, i, j), ordered lexicographically
    with eps first; eps = 1 letters are odd.  A basis element is a sorted
    tuple of triples whose odd triples do not repeat.
    """

    def __init__(self, n, d):
        self.n, self.d = n, d
        self.big = _algebra(n, n, d)
        self.letters = [(e, i, j) for e in (0, 1) for i in range(1, n + 1) for j in range(1, n + 1)]
        self._span = None
        self._embedded = {}

    def basis(self):
        out = []
        for cols in combinations_with_replacement(self.letters, self.d):
            odd = [c for c in cols if c[0]]
            if len(odd) == len(set(odd)):
                out.append(tuple(cols))
        return out

    def _image_letter(self, q):
        e, i, j = q
        n = self.n
        if e == 0:
            return [(i, j), (n + i, n + j)]
        return [(i, n + j), (n + i, j)]

    def embed(self, label):
        """Image of E^{(eps; i, j)} in S(n|n,d) as {canonical pair label: coefficient}."""
        hit = self._embedded.get(label)
        if hit is None:
            hit = self._embedded[label] = self._embed(label)
        return dict(hit)

    def _embed(self, label):
        big = self.big
        idx = big._pair_index
        eb = big.end_basis
        counts = {}
        for q in label:
            counts[q] = counts.get(q, 0) + 1
        total = {(): 1}
        for q in sorted(counts):
            a = counts[q]
            x, y = (idx[p] for p in self._image_letter(q))
            # divided power of a sum: (x + y)^{(a)} = sum_b x^{(b)} y^{(a-b)}; odd q has a = 1
            piece = {}
            for b in range(a + 1):
                res = div_mult((x,) * b, (y,) * (a - b), eb)
                for w, c in res.items():
                    _add(piece, w, c)
            new = {}
            for w, c in total.items():
                for v, c2 in piece.items():
                    for u, c3 in div_mult(w, v, eb).items():
                        _add(new, u, c * c2 * c3)
            total = new
        pairs = big.pairs
        return {tuple(pairs[k - 1] for k in w): c for w, c in total.items()}

    def weight_idempotent(self, nu):
        word = tuple(a for a in range(1, self.n + 1) for _ in range(nu[a - 1]))
        return tuple((0, a, a) for a in word)

    def identity(self):
        return {self.weight_idempotent(nu): 1 for nu in self.weights()}

    def _solver(self):
        if self._span is None:
            basis = self.basis()
            self._span = (basis, SpanSolver([self.embed(q) for q in basis]))
        return self._span

    def mult(self, x, y):
        """Product of two elements (dicts over Q labels), computed inside S(n|n,d)."""
        big = self.big
        ex, ey = {}, {}
        for q, c in x.items():
            for k, v in self.embed(q).items():
                _add(ex, k, c * v)
        for q, c in y.items():
            for k, v in self.embed(q).items():
                _add(ey, k, c * v)
        prod = big.mult_elems(ex, ey)
        basis, solver = self._solver()
        coords = solver.solve(prod)
        if coords is None:
            raise AssertionError("product left the image of Q(n,d)")
        return {basis[t]: c for t, c in coords.items() if c}

    def weights(self):
        return _algebra(self.n, 0, self.d).weights()


def q_basis(n, d):
    return QAlgebra(n, d).basis()


def q_embed(label, n):
    return QAlgebra(n, len(label)).embed(label)


def q_weight_idempotent(nu, n):
    qa = QAlgebra(n, sum(nu))
    return qa.embed(qa.weight_idempotent(nu))
