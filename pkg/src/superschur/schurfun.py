"""Explicit matrices of the Schur superfunctor maps, bases, straightening and filtrations.

Conventions.  ``shape`` is always the shape of the target symmetric-power
tensor: ``theta_hat(shape)`` maps Gamma_Pi over ``shape.conjugate()`` into
S over ``shape``.  Domain and codomain elements are labelled by tuples of
row words; the basis passed in is the untwisted one (pi flag off) and the
twisted parities are taken from ``basis.flipped()``.

Everything here preserves weight, so ranks are computed one weight block
at a time.
"""

from functools import lru_cache
from itertools import product

from .exactalg import QQ, Echelon
from .hopf import delta_embed, div_comult, div_mult
from .shapes import (Partition, SkewShape, Tableau, enumerate_tableaux, m_part, predicates,
                     row_words, sigma_shape)
from .supercore import SuperBasis, act, standard_sign

__all__ = [
    "ThetaMatrix", "SchurBasis", "build_theta_hat", "build_theta_check",
    "build_diamond", "theta_hat_column", "theta_check_column",
    "diamond_image", "diamond_columns", "straighten", "Straightener",
    "schur_basis", "schur_complex_dim", "filtration_report",
    "factorization_check", "ShapeSpace", "rows_of", "row_costandard_rows",
    "costandard_rows", "rows_weight", "quasi_less",
]


def rows_of(word, lengths):
    out, k = [], 0
    for L in lengths:
        out.append(tuple(word[k:k + L]))
        k += L
    return tuple(out)


def rows_weight(rows, size):
    w = [0] * size
    for r in rows:
        for a in r:
            w[a - 1] += 1
    return tuple(w)


def row_costandard_rows(shape, basis):
    """Row tuples of the row-costandard tableaux of ``shape`` (a basis of Gamma_Pi over it)."""
    return [t.rows for t in enumerate_tableaux(shape, basis, "row_costandard")]


def costandard_rows(shape, basis):
    return [t.rows for t in enumerate_tableaux(shape, basis, "costandard")]


class _ShapeData:
    __slots__ = ("shape", "d", "sigma", "lengths", "domain_lengths", "t_exponent")

    def __init__(self, shape):
        self.shape = shape
        self.d = shape.size
        self.sigma = sigma_shape(shape)
        self.lengths = shape.row_lengths
        self.domain_lengths = shape.conjugate().row_lengths
        d = self.d
        # positions k (1-based) whose parity enters the odd isomorphism sign with exponent d-k
        self.t_exponent = tuple(k for k in range(d) if (d - 1 - k) & 1)


@lru_cache(maxsize=None)
def _shape_data(shape):
    return _ShapeData(shape)


def _odd_iso_sign(parities, positions):
    s = 0
    for k in positions:
        s += parities[k]
    return -1 if s & 1 else 1


def _blocks_project(word, lengths, basis):
    """Multiply each row block into S: (label, sign) or None."""
    sign = 1
    out = []
    k = 0
    ps, flip = basis.parities, basis.pi
    for L in lengths:
        block = word[k:k + L]
        k += L
        seen = set()
        for a in block:
            if ps[a - 1] ^ flip:
                if a in seen:
                    return None
                seen.add(a)
        sign *= standard_sign(block, basis)
        out.extend(sorted(block))
    return tuple(out), sign


def _delta_rows(rows, basis):
    return [list(delta_embed(r, basis).items()) for r in rows]


def theta_hat_column(rows, shape, basis):
    """Image of Z_Pi^{(t)} (t given by its rows on shape') in S over ``shape``.

    Literal composite: embed each row into the twisted tensor power, pass
    through the odd isomorphism to the untwisted tensor power, permute
    places by sigma of the shape, multiply row blocks.  Keys of the result
    are the concatenated sorted row words.
    """
    data = _shape_data(shape)
    pib = basis.flipped()
    out = {}
    for combo in product(*_delta_rows(rows, pib)):
        word = ()
        c = 1
        for w, s in combo:
            word += w
            c *= s
        c *= _odd_iso_sign(pib.word_parity(word), data.t_exponent)
        new, s = act(word, data.sigma, basis)
        proj = _blocks_project(new, data.lengths, basis)
        if proj is None:
            continue
        label, s2 = proj
        out[label] = out.get(label, 0) + c * s * s2
    return {k: v for k, v in out.items() if v}


def theta_check_column(rows, shape, basis):
    """Image of Z^{(t)} (t row standard on shape') in the twisted symmetric powers over ``shape``."""
    data = _shape_data(shape)
    pib = basis.flipped()
    out = {}
    for combo in product(*_delta_rows(rows, basis)):
        word = ()
        c = 1
        for w, s in combo:
            word += w
            c *= s
        new, s = act(word, data.sigma, basis)
        c *= s * _odd_iso_sign(basis.word_parity(new), data.t_exponent)
        proj = _blocks_project(new, data.lengths, pib)
        if proj is None:
            continue
        label, s2 = proj
        out[label] = out.get(label, 0) + c * s2
    return {k: v for k, v in out.items() if v}


def diamond_image(shape, i, u, v, pre, a, b, c, post, basis):
    """One summand map: comultiply b, multiply the halves into a and c (twisted parities)."""
    pib = basis.flipped()
    p1, p2 = shape.row_length(i), shape.row_length(i + 1)
    out = {}
    for (b1, b2), s0 in div_comult(b, p1 - u, p2 - v, pib).items():
        x = div_mult(a, b1, pib)
        if not x:
            continue
        y = div_mult(b2, c, pib)
        if not y:
            continue
        (w1, c1), = x.items()
        (w2, c2), = y.items()
        key = pre + (w1, w2) + post
        out[key] = out.get(key, 0) + s0 * c1 * c2
    return {k: x for k, x in out.items() if x}


def diamond_triples(shape):
    """(i, u, v) indexing the summands of the diamond map."""
    out = []
    for i in range(1, shape.rows):
        overlap = shape.lam.part(i + 1) - shape.mu.part(i)
        for u in range(overlap):
            for v in range(overlap - u):
                out.append((i, u, v))
    return out


def diamond_columns(shape, basis):
    """All (label, image) pairs of the diamond map on its tensor-product basis."""
    lengths = shape.row_lengths
    words = {}

    def gw(L):
        if L not in words:
            words[L] = row_words(L, basis, 1)
        return words[L]

    for i, u, v in diamond_triples(shape):
        p1, p2 = lengths[i - 1], lengths[i]
        pre_lists = [gw(L) for L in lengths[:i - 1]]
        post_lists = [gw(L) for L in lengths[i + 1:]]
        for pre in product(*pre_lists):
            for a in gw(u):
                for b in gw(p1 - u + p2 - v):
                    for c in gw(v):
                        for post in product(*post_lists):
                            img = diamond_image(shape, i, u, v, pre, a, b, c, post, basis)
                            yield (i, u, v, pre, a, b, c, post), img


def _label_weight(label, size):
    i, u, v, pre, a, b, c, post = label
    return rows_weight(pre + (a, b, c) + post, size)


class ThetaMatrix:
    """A theta map as columns over domain tableaux (row tuples) with codomain labels."""

    def __init__(self, shape, space, kind, columns, domain_shape):
        self.shape = shape
        self.space = space
        self.kind = kind
        self.columns = columns  # domain rows -> {codomain label: int}
        self.domain_shape = domain_shape
        self.parity_bit = shape.size & 1

    @property
    def domain(self):
        return list(self.columns)

    def codomain(self):
        labels = set()
        for col in self.columns.values():
            labels.update(col)
        return sorted(labels)

    def rank(self, field=QQ, restrict=None):
        return _blocked_rank(self.columns, self.space.size, field, restrict)

    def apply(self, vec):
        out = {}
        for rows, c in vec.items():
            for lab, x in self.columns[rows].items():
                out[lab] = out.get(lab, 0) + c * x
        return {k: v for k, v in out.items() if v}


def _blocked_rank(columns, size, field, restrict=None):
    blocks = {}
    for rows, col in columns.items():
        if restrict is not None and rows not in restrict:
            continue
        blocks.setdefault(rows_weight(rows, size), []).append(col)
    return sum(_rank_of_vectors(cols, field) for cols in blocks.values())


def _rank_of_vectors(vectors, field):
    index = {}
    ech = Echelon(field)
    for vec in vectors:
        row = {}
        for lab, x in vec.items():
            k = index.get(lab)
            if k is None:
                k = index[lab] = len(index)
            row[k] = x
        ech.add(row)
    return ech.rank


def build_theta_hat(shape, space):
    dshape = shape.conjugate()
    cols = {rows: theta_hat_column(rows, shape, space)
            for rows in row_costandard_rows(dshape, space)}
    return ThetaMatrix(shape, space, "hat", cols, dshape)


def build_theta_check(shape, space):
    dshape = shape.conjugate()
    cols = {t.rows: theta_check_column(t.rows, shape, space)
            for t in enumerate_tableaux(dshape, space, "row_standard")}
    return ThetaMatrix(shape, space, "check", cols, dshape)


def build_diamond(shape, space):
    """The diamond map as {column label: image vector over row-costandard row tuples}."""
    return dict(diamond_columns(shape, space))


def quasi_counts_rows(rows, size):
    running = [0] * (size + 1)
    table = []
    for row in rows:
        for a in row:
            running[a] += 1
        acc, line = 0, []
        for q in range(1, size + 1):
            acc += running[q]
            line.append(acc)
        table.append(line)
    return table


def quasi_less(s, t, size):
    """s strictly precedes t in the quasi-order (row tuples on the same shape)."""
    strict = False
    for ls, lt in zip(quasi_counts_rows(s, size), quasi_counts_rows(t, size)):
        for a, b in zip(ls, lt):
            if a < b:
                return False
            if a > b:
                strict = True
    return strict


def _is_costandard_rows(rows, shape, basis):
    return predicates(Tableau(shape, rows, basis))["costandard"]


def _first_violation(rows, shape, basis):
    """(i, j0) of the first adjacent row pair failing column costandardness."""
    for i in range(1, shape.rows):
        lo = max(shape.mu.part(i), shape.mu.part(i + 1)) + 1
        hi = min(shape.lam.part(i), shape.lam.part(i + 1))
        for j in range(lo, hi + 1):
            x = rows[i - 1][j - shape.mu.part(i) - 1]
            y = rows[i][j - shape.mu.part(i + 1) - 1]
            if x > y or (x == y and basis.parity(x)):
                return i, j
    return None


class StraighteningError(AssertionError):
    pass


class Straightener:
    """Rewrites row-costandard basis elements modulo the diamond image.

    ``reduce(rows)`` returns {costandard rows: coefficient} with
    Z(t) = sum c_s Z(s) modulo the image.  Every step is checked: the
    coefficient of t in the chosen diamond image is +-1 and all other terms
    are strictly earlier in the quasi-order.
    """

    def __init__(self, shape, basis):
        self.shape = shape
        self.basis = basis
        self.memo = {}
        self.steps = 0

    def step(self, rows):
        """The diamond relation used for t: (i, u, v, a, b, c, image)."""
        shape, basis = self.shape, self.basis
        found = _first_violation(rows, shape, basis)
        if found is None:
            return None
        i, j0 = found
        mu, lam = shape.mu, shape.lam
        g = rows[i - 1]
        h = rows[i]
        u = j0 - mu.part(i) - 1
        v = lam.part(i + 1) - j0
        pos = j0 - mu.part(i + 1) - 1  # index of h at column j0
        r = 0
        while pos + r + 1 < len(h) and h[pos + r + 1] == h[pos]:
            r += 1
        a = g[:u]
        b = tuple(sorted(g[u:] + h[:pos + r + 1]))
        c = h[pos + r + 1:]
        pre, post = rows[:i - 1], rows[i + 1:]
        img = diamond_image(shape, i, u, v - r, pre, a, b, c, post, basis)
        return (i, u, v - r, a, b, c), img

    def reduce(self, rows):
        if rows in self.memo:
            return self.memo[rows]
        found = self.step(rows)
        if found is None:
            res = {rows: 1}
            self.memo[rows] = res
            return res
        _, img = found
        self.steps += 1
        e = img.get(rows)
        if e not in (1, -1):
            raise StraighteningError(f"leading coefficient {e} for {rows}")
        size = self.basis.size
        res = {}
        for other, c in img.items():
            if other == rows:
                continue
            if not quasi_less(other, rows, size):
                raise StraighteningError(f"{other} does not precede {rows}")
            # Z(t) = -e * sum c Z(other) modulo the image
            for s, x in self.reduce(other).items():
                res[s] = res.get(s, 0) - e * c * x
        res = {k: v for k, v in res.items() if v}
        self.memo[rows] = res
        return res


def straighten(t, shape=None, space=None):
    """Expansion of a row-costandard tableau modulo the diamond image in costandard tableaux."""
    if isinstance(t, Tableau):
        shape, space, rows = t.shape, t.basis, t.rows
    else:
        rows = tuple(tuple(r) for r in t)
    if not predicates(Tableau(shape, rows, space))["row_costandard"]:
        raise ValueError("tableau is not row costandard")
    return Straightener(shape, space).reduce(rows)


def words_within(length, budget, basis, repeat_parity):
    """Sorted words of the given length drawing letters from the multiset ``budget``.

    Repeated letters must have parity ``repeat_parity`` (1 gives the
    twisted-restricted words used for Gamma_Pi).  Yields (word, remaining budget).
    """
    size = len(budget)

    def rec(start, left, rem, acc):
        if left == 0:
            yield tuple(acc), tuple(rem)
            return
        for x in range(start, size + 1):
            have = rem[x - 1]
            if not have:
                continue
            cap = min(have, left) if basis.parity(x) == repeat_parity else 1
            for k in range(cap, 0, -1):
                rem[x - 1] -= k
                yield from rec(x + 1, left - k, rem, acc + [x] * k)
                rem[x - 1] += k

    yield from rec(1, length, list(budget), [])


def tuples_within(lengths, budget, basis, repeat_parity=1):
    """Tuples of sorted words with the given lengths using exactly the multiset ``budget``."""
    def rec(k, rem, acc):
        if k == len(lengths):
            if not any(rem):
                yield tuple(acc)
            return
        for w, rest in words_within(lengths[k], rem, basis, repeat_parity):
            yield from rec(k + 1, rest, acc + [w])

    yield from rec(0, tuple(budget), [])


def compositions(d, parts):
    if parts == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, parts - 1):
            yield (first,) + rest


def _orbit_size(seq):
    from math import factorial
    counts = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    n = factorial(len(seq))
    for c in counts.values():
        n //= factorial(c)
    return n


def weight_classes(d, basis, symmetric):
    """(weight, multiplicity) pairs.

    With ``symmetric`` only weights that are nonincreasing on the even
    letters and on the odd letters are returned, each with the size of its
    orbit under permutations of letters of equal parity.
    """
    even = [k for k, p in enumerate(basis.parities) if p == 0]
    odd = [k for k, p in enumerate(basis.parities) if p == 1]
    out = []
    for w in compositions(d, basis.size):
        if not symmetric:
            out.append((w, 1))
            continue
        we = [w[k] for k in even]
        wo = [w[k] for k in odd]
        if all(x >= y for x, y in zip(we, we[1:])) and all(x >= y for x, y in zip(wo, wo[1:])):
            out.append((w, _orbit_size(we) * _orbit_size(wo)))
    return out


class WeightBlock:
    """Row-costandard basis of one weight space of Gamma_Pi over a shape, with its maps."""

    def __init__(self, shape, basis, weight):
        self.shape = shape
        self.basis = basis
        self.weight = weight
        self.rows = list(tuples_within(shape.row_lengths, weight, basis))
        self.index = {r: k for k, r in enumerate(self.rows)}
        self.costd = [r for r in self.rows if _first_violation(r, shape, basis) is None]
        self._theta = {}
        self._diamond = None

    def theta(self, rows):
        col = self._theta.get(rows)
        if col is None:
            col = self._theta[rows] = theta_hat_column(rows, self.shape.conjugate(), self.basis)
        return col

    def diamond(self):
        """List of (label, image) for the diamond columns of this weight."""
        if self._diamond is None:
            shape, basis = self.shape, self.basis
            lengths = shape.row_lengths
            out = []
            for i, u, v in diamond_triples(shape):
                p1, p2 = lengths[i - 1], lengths[i]
                parts = lengths[:i - 1] + (u, p1 - u + p2 - v, v) + lengths[i + 1:]
                for words in tuples_within(parts, self.weight, basis):
                    pre = words[:i - 1]
                    a, b, c = words[i - 1:i + 2]
                    post = words[i + 2:]
                    img = diamond_image(shape, i, u, v, pre, a, b, c, post, basis)
                    if img:
                        out.append(((i, u, v) + words, img))
            self._diamond = out
        return self._diamond

    def theta_rank(self, field=QQ, columns=None):
        rows = self.rows if columns is None else columns
        return _rank_of_vectors([self.theta(r) for r in rows], field)

    def diamond_echelon(self, field=QQ, stop_at=None):
        ech = Echelon(field)
        index = self.index
        for _, img in self.diamond():
            ech.add({index[r]: x for r, x in img.items()})
            if stop_at is not None and ech.rank >= stop_at:
                break
        return ech

    def kernel_violations(self):
        bad = []
        for label, img in self.diamond():
            acc = {}
            for rows, c in img.items():
                for lab, x in self.theta(rows).items():
                    acc[lab] = acc.get(lab, 0) + c * x
            if any(acc.values()):
                bad.append(label)
        return bad


class ShapeSpace:
    """Weight-blocked checks that costandard tableaux give a basis, for one shape and space.

    ``shape`` indexes Gamma_Pi over ``shape``: the domain of theta_hat of
    the conjugate shape and the target of the diamond map.  With
    ``symmetric`` only one weight per orbit of parity-preserving letter
    permutations is computed and ranks are weighted by orbit size; all the
    maps involved commute with these permutations up to signed
    permutation matrices, so ranks are constant on orbits.
    """

    def __init__(self, shape, basis, symmetric=False):
        self.shape = shape
        self.basis = basis
        self.size = basis.size
        self.symmetric = symmetric
        self.classes = weight_classes(shape.size, basis, symmetric)

    def blocks(self):
        for w, mult in self.classes:
            yield WeightBlock(self.shape, self.basis, w), mult

    def counts(self):
        """(#row-costandard, #costandard), by direct enumeration over all fillings."""
        rc = row_costandard_rows(self.shape, self.basis)
        cs = costandard_rows(self.shape, self.basis)
        return len(rc), len(cs)

    def check(self, fields=(QQ,), kernel=True, early_exit=False):
        """Per-field totals of theta rank and diamond rank plus per-weight mismatches.

        With ``early_exit`` the diamond echelon stops once it reaches
        #row-costandard - rank(theta) in a block; that is its maximum once
        the kernel check on the same block has passed.
        """
        n_rowcost, n_cost = self.counts()
        totals = {repr(f): {"theta_rank": 0, "diamond_rank": 0} for f in fields}
        mismatches = []
        kernel_bad = []
        for blk, mult in self.blocks():
            if not blk.rows:
                continue
            if kernel:
                bad = blk.kernel_violations()
                kernel_bad.extend(bad)
            for f in fields:
                rt = blk.theta_rank(f)
                cap = len(blk.rows) - rt if (early_exit and kernel and not bad) else None
                rd = blk.diamond_echelon(f, stop_at=cap).rank
                t = totals[repr(f)]
                t["theta_rank"] += mult * rt
                t["diamond_rank"] += mult * rd
                if not rt == len(blk.costd) == len(blk.rows) - rd:
                    mismatches.append((blk.weight, repr(f), rt, len(blk.costd), len(blk.rows) - rd))
        ok = not mismatches and not kernel_bad and all(
            t["theta_rank"] == n_cost == n_rowcost - t["diamond_rank"] for t in totals.values())
        return {
            "shape": str(self.shape), "space": [self.basis.m, self.basis.n],
            "row_costandard": n_rowcost, "costandard": n_cost, "fields": totals,
            "weight_mismatches": mismatches, "kernel_violations": len(kernel_bad),
            "symmetric": self.symmetric, "ok": ok,
        }

    def straightening_check(self):
        """Straighten every row-costandard, non-costandard tableau and verify soundness.

        Returns (number checked, list of failures).  Soundness: the
        difference between a tableau and its straightened form lies in the
        span of the diamond columns of its weight (exact echelon over Q).
        """
        st = Straightener(self.shape, self.basis)
        failures = []
        checked = 0
        for w, _ in weight_classes(self.shape.size, self.basis, False):
            blk = None
            ech = None
            for rows in tuples_within(self.shape.row_lengths, w, self.basis):
                if _first_violation(rows, self.shape, self.basis) is None:
                    continue
                if blk is None:
                    blk = WeightBlock(self.shape, self.basis, w)
                    ech = blk.diamond_echelon(QQ)
                checked += 1
                try:
                    res = st.reduce(rows)
                except StraighteningError as exc:
                    failures.append((rows, str(exc)))
                    continue
                for s in res:
                    if _first_violation(s, self.shape, self.basis) is not None or \
                            not quasi_less(s, rows, self.size):
                        failures.append((rows, f"bad output term {s}"))
                diff = {blk.index[rows]: 1}
                for s, c in res.items():
                    k = blk.index[s]
                    diff[k] = diff.get(k, 0) - c
                diff = {k: v for k, v in diff.items() if v}
                if not ech.contains(diff):
                    failures.append((rows, "difference not in the diamond image"))
        return checked, failures


class SchurBasis:
    """Images of costandard tableaux of shape' under theta_hat(shape)."""

    def __init__(self, shape, space, vectors):
        self.shape = shape
        self.space = space
        self.vectors = vectors  # costandard rows (on shape') -> image vector

    def __len__(self):
        return len(self.vectors)

    @property
    def count(self):
        return len(self.vectors)

    def weight_dims(self):
        dims = {}
        for rows in self.vectors:
            w = rows_weight(rows, self.space.size)
            dims[w] = dims.get(w, 0) + 1
        return dims


def schur_basis(shape, space, check=True, field=QQ):
    dshape = shape.conjugate()
    vecs = {rows: theta_hat_column(rows, shape, space) for rows in costandard_rows(dshape, space)}
    if check:
        r = _blocked_rank(vecs, space.size, field)
        if r != len(vecs):
            raise AssertionError("costandard images are linearly dependent")
    return SchurBasis(shape, space, vecs)


def schur_complex_dim(shape, v_dim, w_dim):
    if shape.size == 0:
        return 1
    return schur_basis(shape, SuperBasis.standard(v_dim, w_dim)).count


# --- factorization through two adjacent rows -------------------------------------------

def _restrict_shape(shape, rows):
    """Sub-shape formed by the given consecutive rows (1-based, inclusive range)."""
    lo, hi = rows
    lam = [shape.lam.part(i) for i in range(lo, hi + 1)]
    mu = [shape.mu.part(i) for i in range(lo, hi + 1)]
    return SkewShape(lam, mu)


def factorization_check(shape, space, i):
    """Compare theta_hat of shape' with the composite through rows i, i+1 of ``shape``.

    ``shape`` is lambda/mu: Gamma_Pi over its rows is the domain.  The
    composite applies theta_hat to rows i, i+1 and to the blocks above and
    below, then regroups by columns of lambda'/mu' and multiplies.  Returns
    True when the two matrices agree exactly.
    """
    q = shape.rows
    if q < 2:
        return True
    if not 1 <= i < q:
        raise ValueError("row index out of range")
    pib = space.flipped()
    target = shape.conjugate()
    full = {rows: theta_hat_column(rows, target, space) for rows in row_costandard_rows(shape, space)}
    parts = []
    if i > 1:
        parts.append((1, i - 1))
    parts.append((i, i + 1))
    if i + 1 < q:
        parts.append((i + 2, q))
    subshapes = [_restrict_shape(shape, p) for p in parts]
    # columns of lambda'/mu' that each sub-shape occupies
    composite = {}
    for rows in full:
        pieces = [rows[lo - 1:hi] for lo, hi in parts]
        degs = [sum(len(r) for r in p) for p in pieces]
        images = [theta_hat_column(p, sh.conjugate(), space) for p, sh in zip(pieces, subshapes)]
        # Koszul signs of applying maps of parity deg to later factors:
        # (f1 (x) f2 (x) f3)(x1 (x) x2 (x) x3) = (-1)^{|f2||x1| + |f3|(|x1|+|x2|)} ...
        par_x = [sum(pib.word_parity(r).count(1) for r in p) & 1 for p in pieces]
        par_f = [dg & 1 for dg in degs]
        acc = {}
        for combo in product(*[list(img.items()) for img in images]):
            c = 1
            labels = []
            for lab, x in combo:
                c *= x
                labels.append(lab)
            kz = 0
            for k in range(len(pieces)):
                kz += par_f[k] * sum(par_x[:k])
            if kz & 1:
                c = -c
            val = _regroup_columns(labels, subshapes, target, space)
            if val is None:
                continue
            lab, s = val
            acc[lab] = acc.get(lab, 0) + c * s
        composite[rows] = {k: v for k, v in acc.items() if v}
    return full == composite


def _regroup_columns(labels, subshapes, target, space):
    """Merge row-of-column words of the pieces into rows of the target and multiply."""
    # each label lists symmetric words for the columns of the piece (rows of piece')
    segs = []
    for lab, sh in zip(labels, subshapes):
        cs = sh.conjugate()
        segs.append((rows_of(lab, cs.row_lengths), cs))
    # target row j (a column j of the original shape) collects, in order of
    # pieces, the piece's word for column j when the piece occupies it
    sequence = []  # (target row, word) in tensor order
    for words, cs in segs:
        for jj, w in enumerate(words, 1):
            j = jj  # conjugate shapes of consecutive rows share column numbering
            if w:
                sequence.append((j, w))
    order = sorted(range(len(sequence)), key=lambda k: sequence[k][0])
    # Koszul sign of moving the tensor factors into target-row order
    par = [sum(space.word_parity(w)) & 1 for _, w in sequence]
    sign = 1
    for x in range(len(order)):
        for y in range(x + 1, len(order)):
            if order[x] > order[y] and par[order[x]] and par[order[y]]:
                sign = -sign
    rows = {}
    for k in order:
        j, w = sequence[k]
        rows[j] = rows.get(j, ()) + w
    word = ()
    for j in range(1, target.rows + 1):
        block = rows.get(j, ())
        if len(block) != target.row_length(j):
            raise AssertionError("regrouping mismatch")
        proj = _blocks_project(block, (len(block),), space)
        if proj is None:
            return None
        lab, s = proj
        sign *= s
        word += lab
    return word, sign


# --- filtration of Gamma_Pi over a direct sum ---------------------------------------

def partitions_between(mu, lam):
    """Partitions xi with mu inside xi inside lam, in lexicographic order."""
    out = []

    def rec(i, acc):
        if i > len(lam):
            out.append(Partition(acc))
            return
        hi = lam.part(i) if not acc else min(lam.part(i), acc[-1])
        for x in range(mu.part(i), hi + 1):
            rec(i + 1, acc + [x])

    rec(1, [])
    width = len(lam)
    return sorted(set(out), key=lambda p: tuple(p) + (0,) * (width - len(p)))


def filtration_report(shape, space_m, space_n, field=QQ):
    """Dimensions of the filtration of the image of Gamma_Pi over ``shape`` in M+N.

    The basis of M+N lists the letters of M first.  L_xi is the image under
    theta_hat of the conjugate shape of the row-costandard tableaux whose
    M-part is lexicographically at least xi; straightening only raises the
    M-part, so these spans are nested and each has a costandard basis.
    Steps run through xi from the lexicographically largest down.  Returns
    a list of (xi, dim L_xi, dim L_xi - dim of the previous step,
    #costandard(xi/mu over M) * #costandard(lam/xi over N)).
    """
    total = SuperBasis.concat(space_m, space_n)
    r = space_m.size
    target = shape.conjugate()
    width = shape.rows
    cols = {}
    kappa = {}
    for rows in row_costandard_rows(shape, total):
        kappa[rows] = m_part(Tableau(shape, rows, total), r)
        cols[rows] = theta_hat_column(rows, target, total)
    report = []
    prev = 0
    for xi in reversed(partitions_between(shape.mu, shape.lam)):
        key = tuple(xi) + (0,) * (width - len(xi))
        allowed = {rows for rows, k in kappa.items() if k >= key}
        dim = _blocked_rank(cols, total.size, field, allowed)
        expected = (_costandard_count(SkewShape(xi, shape.mu), space_m)
                    * _costandard_count(SkewShape(shape.lam, xi), space_n))
        report.append((tuple(xi), dim, dim - prev, expected))
        prev = dim
    return report


def _costandard_count(shape, space):
    if shape.size == 0:
        return 1
    return len(costandard_rows(shape, space))
