"""Partitions, skew shapes, tableaux and their combinatorics.

A tableau is stored as its tuple of rows (each row a tuple of letters) on a
fixed skew shape.  Row i occupies columns mu_i+1 .. lambda_i.
"""

from itertools import combinations_with_replacement, product

__all__ = [
    "Partition", "SkewShape", "Tableau", "parse_shape", "conjugate",
    "sigma_shape", "predicates", "reading_word", "quasi_counts",
    "quasi_compare", "enumerate_tableaux", "row_words", "m_part",
    "kappa_monotone_check", "lex_compare", "partitions", "partitions_upto",
    "skew_shapes", "exchange", "conjugate_tableau",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """lambda_i with 1-based i, zero past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= i) for i in range(1, self[0] + 1))

    def contains(self, other):
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def conjugate(p):
    return Partition(p).conjugate()


def partitions(d, max_part=None):
    """Partitions of d in reverse lex order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield Partition()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_upto(dmax):
    for d in range(dmax + 1):
        yield from partitions(d)


class SkewShape:
    __slots__ = ("lam", "mu", "_cells")

    def __init__(self, lam, mu=()):
        lam, mu = Partition(lam), Partition(mu)
        if not lam.contains(mu):
            raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
        self.lam = lam
        self.mu = mu
        self._cells = None

    @property
    def rows(self):
        return len(self.lam)

    def row_length(self, i):
        return self.lam.part(i) - self.mu.part(i)

    @property
    def row_lengths(self):
        return tuple(self.row_length(i) for i in range(1, self.rows + 1))

    @property
    def size(self):
        return self.lam.size - self.mu.size

    def cells(self):
        """Cells (i, j), row-major."""
        if self._cells is None:
            self._cells = tuple((i, j) for i in range(1, self.rows + 1)
                                for j in range(self.mu.part(i) + 1, self.lam.part(i) + 1))
        return self._cells

    def conjugate(self):
        return SkewShape(self.lam.conjugate(), self.mu.conjugate())

    def is_normal(self):
        """No empty rows or columns."""
        if any(self.row_length(i) == 0 for i in range(1, self.rows + 1)):
            return False
        c = self.conjugate()
        return all(c.row_length(j) > 0 for j in range(1, c.rows + 1))

    def __eq__(self, other):
        return isinstance(other, SkewShape) and (self.lam, self.mu) == (other.lam, other.mu)

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __str__(self):
        lam = ",".join(map(str, self.lam))
        mu = ",".join(map(str, self.mu))
        return f"{lam}/{mu}" if mu else lam

    def __repr__(self):
        return f"SkewShape({self})"


def parse_shape(text):
    """Parse '4,3,1/2,1', '2,1', '2/' or '' into a SkewShape."""
    text = text.strip()
    if "/" in text:
        a, b = text.split("/", 1)
    else:
        a, b = text, ""

    def parts(s):
        s = s.strip()
        if not s:
            return ()
        try:
            return tuple(int(x) for x in s.split(","))
        except ValueError:
            raise ValueError(f"bad shape {text!r}") from None

    return SkewShape(parts(a), parts(b))


def skew_shapes(dmax, dmin=0):
    """All normal skew shapes (no empty rows or columns) with dmin <= size <= dmax.

    Every skew diagram equals one of these after deleting empty rows and
    columns.  Ordered by size, then lambda, then mu.
    """
    out = []
    for d in range(dmin, dmax + 1):
        found = set()
        # a normal shape of size d has at most d rows and at most d columns, so
        # lambda fits inside a d x d box with |lambda| <= d*d; enumerate mu first
        for lam in _partitions_in_box(d, d):
            for mu in _subpartitions(lam):
                if lam.size - mu.size != d:
                    continue
                s = SkewShape(lam, mu)
                if s.is_normal():
                    found.add(s)
        out.extend(sorted(found, key=lambda s: (tuple(s.lam), tuple(s.mu))))
    return out


def _partitions_in_box(rows, cols):
    def rec(i, maxp):
        if i == rows:
            yield ()
            return
        for p in range(maxp, -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest
    for parts in rec(0, cols):
        yield Partition(parts)


def _subpartitions(lam):
    def rec(i, maxp):
        if i == len(lam):
            yield ()
            return
        for p in range(min(maxp, lam[i]), -1, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest
    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def sigma_shape(shape):
    """sigma(r) = column-reading position of the cell at row-reading position r."""
    conj = shape.conjugate()
    lamc, muc = conj.lam, conj.mu
    before = [0]
    for c in range(1, len(lamc) + 1):
        before.append(before[-1] + lamc.part(c) - muc.part(c))
    return tuple(before[j - 1] + (i - muc.part(j)) for i, j in shape.cells())


class Tableau:
    """A filling of a skew shape by letters of a SuperBasis."""

    __slots__ = ("shape", "rows", "basis")

    def __init__(self, shape, rows, basis):
        rows = tuple(tuple(r) for r in rows)
        if tuple(len(r) for r in rows) != shape.row_lengths:
            raise ValueError("rows do not fit the shape")
        self.shape = shape
        self.rows = rows
        self.basis = basis

    @classmethod
    def from_word(cls, shape, word, basis):
        rows, k = [], 0
        for L in shape.row_lengths:
            rows.append(tuple(word[k:k + L]))
            k += L
        return cls(shape, rows, basis)

    def __getitem__(self, cell):
        i, j = cell
        return self.rows[i - 1][j - self.shape.mu.part(i) - 1]

    def word(self):
        return tuple(a for r in self.rows for a in r)

    def columns(self):
        cols = {}
        for i, j in self.shape.cells():
            cols.setdefault(j, []).append(self[i, j])
        return [tuple(cols[j]) for j in sorted(cols)]

    def weight(self):
        w = [0] * self.basis.size
        for a in self.word():
            w[a - 1] += 1
        return tuple(w)

    def __eq__(self, other):
        return isinstance(other, Tableau) and (self.shape, self.rows, self.basis) == (
            other.shape, other.rows, other.basis)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"Tableau({self.shape}, {list(map(list, self.rows))})"

    def to_json(self):
        return [list(r) for r in self.rows]


def reading_word(t):
    return t.word()


def conjugate_tableau(t):
    """t'(i, j) = t(j, i) on the conjugate shape."""
    conj = t.shape.conjugate()
    rows = [tuple(t[j, i] for j in range(conj.mu.part(i) + 1, conj.lam.part(i) + 1))
            for i in range(1, conj.rows + 1)]
    return Tableau(conj, rows, t.basis)


def _line_ok(seq, basis, repeat_parity):
    for a, b in zip(seq, seq[1:]):
        if a > b:
            return False
        if a == b and basis.parity(a) != repeat_parity:
            return False
    return True


def predicates(t):
    b = t.basis
    rs = all(_line_ok(r, b, 0) for r in t.rows)
    rc = all(_line_ok(r, b, 1) for r in t.rows)
    cols = t.columns()
    cs = all(_line_ok(c, b, 1) for c in cols)
    cc = all(_line_ok(c, b, 0) for c in cols)
    return {
        "row_standard": rs, "row_costandard": rc,
        "col_standard": cs, "col_costandard": cc,
        "standard": rs and cs, "costandard": rc and cc,
    }


def row_words(length, basis, repeat_parity):
    """Nondecreasing words whose repeated letters have the given parity, lex ordered."""
    out = []
    for w in combinations_with_replacement(basis.letters(), length):
        if _line_ok(w, basis, repeat_parity):
            out.append(w)
    return out


_ROW_RULE = {"row_standard": 0, "standard": 0, "row_costandard": 1, "costandard": 1}
_COL_RULE = {"standard": 1, "costandard": 0, "col_standard": 1, "col_costandard": 0}


def enumerate_tableaux(shape, basis, predicate):
    """All tableaux of ``shape`` satisfying ``predicate`` in lex order of reading words.

    ``predicate`` is one of the keys returned by :func:`predicates`, or
    "all" for every filling.
    """
    if predicate == "all":
        for word in product(basis.letters(), repeat=shape.size):
            yield Tableau.from_word(shape, word, basis)
        return
    if predicate in _ROW_RULE:
        per_row = [row_words(L, basis, _ROW_RULE[predicate]) for L in shape.row_lengths]
    else:
        per_row = [list(product(basis.letters(), repeat=L)) for L in shape.row_lengths]
    col_rule = _COL_RULE.get(predicate)
    if col_rule is None:
        for rows in product(*per_row):
            yield Tableau(shape, rows, basis)
        return
    yield from _column_filtered(shape, basis, per_row, col_rule)


def _column_filtered(shape, basis, per_row, rule):
    mu = shape.mu
    nrows = shape.rows

    def ok(prev, prev_i, row, i):
        # compare row i with row i-1 in shared columns
        lo = max(mu.part(i - 1), mu.part(i)) + 1
        hi = min(shape.lam.part(i - 1), shape.lam.part(i))
        for j in range(lo, hi + 1):
            a = prev[j - mu.part(i - 1) - 1]
            b = row[j - mu.part(i) - 1]
            if a > b or (a == b and basis.parity(a) != rule):
                return False
        return True

    def rec(i, acc):
        if i > nrows:
            yield Tableau(shape, acc, basis)
            return
        for row in per_row[i - 1]:
            if i == 1 or ok(acc[-1], i - 1, row, i):
                yield from rec(i + 1, acc + [row])

    yield from rec(1, [])


def quasi_counts(t):
    """Table t_{p,q}: entries <= q among the first p rows."""
    r = t.basis.size
    table = []
    running = [0] * (r + 1)
    for row in t.rows:
        for a in row:
            running[a] += 1
        acc, line = 0, []
        for q in range(1, r + 1):
            acc += running[q]
            line.append(acc)
        table.append(tuple(line))
    return table


def quasi_leq(s, t):
    """s ⊴ t."""
    for ls, lt in zip(quasi_counts(s), quasi_counts(t)):
        for a, b in zip(ls, lt):
            if a < b:
                return False
    return True


def quasi_compare(s, t):
    """'less' if s strictly precedes t, 'greater' if t strictly precedes s."""
    if s.shape != t.shape:
        raise ValueError("shape mismatch")
    cs, ct = quasi_counts(s), quasi_counts(t)
    ge = le = True
    strict_ge = strict_le = False
    for ls, lt in zip(cs, ct):
        for a, b in zip(ls, lt):
            if a < b:
                ge = False
                strict_le = True
            elif a > b:
                le = False
                strict_ge = True
    if ge and strict_ge:
        return "less"
    if le and strict_le:
        return "greater"
    return "equal-or-incomparable"


def exchange(t, k, pairs):
    """Swap t(k, h) with t(k+1, l) for each (h, l) in pairs."""
    rows = [list(r) for r in t.rows]
    mu = t.shape.mu
    for h, l in pairs:
        a = h - mu.part(k) - 1
        b = l - mu.part(k + 1) - 1
        rows[k - 1][a], rows[k][b] = rows[k][b], rows[k - 1][a]
    return Tableau(t.shape, rows, t.basis)


def m_part(t, r):
    """kappa(t)_i = mu_i + #(entries <= r in row i), for letters 1..r of the first summand."""
    mu = t.shape.mu
    return tuple(mu.part(i) + sum(1 for a in row if a <= r)
                 for i, row in enumerate(t.rows, 1))


def lex_compare(a, b):
    """-1, 0, 1 comparing sequences lexicographically, padding with zeros."""
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return (a > b) - (a < b)


def kappa_monotone_check(s, t, r):
    """For s ⊴ t: kappa(s) is lexicographically >= kappa(t)."""
    return lex_compare(m_part(s, r), m_part(t, r)) >= 0
