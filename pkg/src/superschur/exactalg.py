"""Exact scalars and sparse linear algebra over Q and prime fields.

Vectors are plain dicts mapping a column index (or label) to a nonzero
scalar.  Structure constants elsewhere in the package are integers, so the
common path is: build integer rows, hand them to a field, eliminate.

Over Q rows are kept as primitive integer vectors and reduced without
fractions.  Over GF(p) entries are ints in 0..p-1.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "FieldError", "Field", "Rational", "PrimeField", "QQ", "GF", "Mod",
    "parse_field", "SparseMat", "Echelon", "rank", "kernel_basis",
    "in_span", "bareiss_rank", "naive_rank",
]


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class Mod:
    """An element of GF(p), usable as a user-facing scalar."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if isinstance(value, Mod):
            if value.p != p:
                raise FieldError("inconsistent scalar field")
            value = value.value
        elif isinstance(value, Fraction):
            value = _frac_mod(value, p)
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldError("inconsistent scalar field")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return _frac_mod(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"


def _frac_mod(q, p):
    if q.denominator % p == 0:
        raise FieldError(f"{q} has no image in GF({p})")
    return q.numerator * pow(q.denominator, -1, p) % p


class Field:
    """Base class; concrete fields are QQ and GF(p)."""

    characteristic = 0

    def convert(self, x):
        raise NotImplementedError


class Rational(Field):
    characteristic = 0

    def convert(self, x):
        if isinstance(x, Mod):
            raise FieldError("inconsistent scalar field")
        if isinstance(x, int):
            return x
        q = Fraction(x)
        return q.numerator if q.denominator == 1 else q

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rational)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not a prime")
        self.p = p
        self.characteristic = p

    def convert(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldError("inconsistent scalar field")
            return x.value
        if isinstance(x, int):
            return x % self.p
        return _frac_mod(Fraction(x), self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rational()
_prime_fields = {}


def GF(p):
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def parse_field(text):
    """'q' -> QQ, 'p=5' -> GF(5).  Rejects p=2 and non-primes."""
    text = text.strip().lower()
    if text in ("q", "qq", "rational"):
        return QQ
    if text.startswith("p="):
        try:
            p = int(text[2:])
        except ValueError:
            raise FieldError(f"bad field {text!r}") from None
        return GF(p)
    raise FieldError(f"bad field {text!r}")


def _infer_field(values):
    field = None
    for x in values:
        if isinstance(x, Mod):
            f = GF(x.p)
            if field is not None and field != f:
                raise FieldError("inconsistent scalar field")
            field = f
    return field or QQ


def _primitive(row):
    """Scale an integer row so its entries are coprime and the leading one positive."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _clear_denominators(row):
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    if den == 1:
        return {k: int(v) for k, v in row.items()}
    return {k: int(v * den) for k, v in row.items()}


class Echelon:
    """Incremental row echelon form over a field.

    Rows are dicts {column index: value}.  Over QQ stored rows are primitive
    integer vectors; over GF(p) they are monic.  Pivot of a row is its
    smallest column.
    """

    def __init__(self, field=QQ):
        self.field = field
        self.pivots = {}  # pivot column -> stored row

    @property
    def rank(self):
        return len(self.pivots)

    def _prepare(self, row):
        if self.field.characteristic == 0:
            out = {}
            for k, v in row.items():
                if type(v) is not int:
                    v = self.field.convert(v)
                if v:
                    out[k] = v
            return _clear_denominators(out)
        out = {}
        for k, v in row.items():
            v = self.field.convert(v)
            if v:
                out[k] = v
        return out

    def reduce(self, row):
        """Remainder of row after elimination by the stored pivots (zero entries dropped)."""
        row = self._prepare(row)
        if self.field.characteristic == 0:
            return self._reduce_int(row)
        return self._reduce_mod(row)

    def _reduce_int(self, row):
        pivots = self.pivots
        done = {}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                done[c] = row.pop(c)
                continue
            a = prow[c]
            b = row[c]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                row = {k: v * a for k, v in row.items()}
                if done:
                    done = {k: v * a for k, v in done.items()}
            for k, v in prow.items():
                nv = row.get(k, 0) - b * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return done

    def _reduce_mod(self, row):
        p = self.field.p
        pivots = self.pivots
        done = {}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                done[c] = row.pop(c)
                continue
            b = row[c]
            for k, v in prow.items():
                nv = (row.get(k, 0) - b * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return done

    def add(self, row):
        """Insert a row; return True when it is independent of the stored rows."""
        rem = self.reduce(row)
        if not rem:
            return False
        c = min(rem)
        if self.field.characteristic == 0:
            rem = _primitive(rem)
        else:
            p = self.field.p
            inv = pow(rem[c], -1, p)
            rem = {k: v * inv % p for k, v in rem.items()}
        self.pivots[c] = rem
        return True

    def contains(self, row):
        return not self.reduce(row)

    def reduced_rows(self):
        """Fully reduced (RREF-style) copy of the stored rows, keyed by pivot column."""
        rows = {c: dict(r) for c, r in self.pivots.items()}
        order = sorted(rows, reverse=True)
        for i, c in enumerate(order):
            rc = rows[c]
            for c2 in order[i + 1:]:
                r2 = rows[c2]
                b = r2.get(c)
                if not b:
                    continue
                if self.field.characteristic == 0:
                    a = rc[c]
                    g = gcd(a, b)
                    a //= g
                    b //= g
                    new = {k: v * a for k, v in r2.items()}
                    for k, v in rc.items():
                        nv = new.get(k, 0) - b * v
                        if nv:
                            new[k] = nv
                        else:
                            new.pop(k, None)
                    rows[c2] = _primitive(new)
                else:
                    p = self.field.p
                    for k, v in rc.items():
                        nv = (r2.get(k, 0) - b * v) % p
                        if nv:
                            r2[k] = nv
                        else:
                            r2.pop(k, None)
        return rows


class SparseMat:
    """Label-indexed sparse matrix over QQ or GF(p).

    ``rows`` is a list of dicts keyed by column label.  Column labels are
    opaque but must be listed in ``cols``; their order there is the pivoting
    order.
    """

    def __init__(self, rows, cols, field=None, row_labels=None):
        rows = [dict(r) for r in rows]
        if field is None:
            field = _infer_field(v for r in rows for v in r.values())
        self.field = field
        self.cols = list(cols)
        self.col_index = {c: k for k, c in enumerate(self.cols)}
        if len(self.col_index) != len(self.cols):
            raise ValueError("duplicate column labels")
        self.row_labels = list(row_labels) if row_labels is not None else list(range(len(rows)))
        if len(self.row_labels) != len(rows):
            raise ValueError("row label count mismatch")
        clean = []
        for r in rows:
            out = {}
            for c, v in r.items():
                if c not in self.col_index:
                    raise ValueError(f"column label {c!r} not declared")
                v = field.convert(v)
                if v:
                    out[c] = v
            clean.append(out)
        self.rows = clean

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def indexed_rows(self):
        ci = self.col_index
        return [{ci[c]: v for c, v in r.items()} for r in self.rows]

    def transpose(self):
        cols = {c: {} for c in self.cols}
        for lab, r in zip(self.row_labels, self.rows):
            for c, v in r.items():
                cols[c][lab] = v
        return SparseMat([cols[c] for c in self.cols], self.row_labels, self.field, self.cols)

    def apply(self, vec):
        """Matrix times a column vector given as {column label: value}."""
        out = {}
        for lab, r in zip(self.row_labels, self.rows):
            s = 0
            for c, v in r.items():
                x = vec.get(c)
                if x:
                    s += v * x
            s = self.field.convert(s)
            if s:
                out[lab] = s
        return out

    def is_zero(self):
        return not any(self.rows)

    def dense(self):
        return [[r.get(c, 0) for c in self.cols] for r in self.rows]


def _check_same_field(*fields):
    f0 = fields[0]
    for f in fields[1:]:
        if f != f0:
            raise FieldError("inconsistent scalar field")
    return f0


def rank(m):
    """Rank of a SparseMat (rows inserted in order, smallest-column pivots)."""
    ech = Echelon(m.field)
    for r in m.indexed_rows():
        ech.add(r)
    return ech.rank


def kernel_basis(m):
    """Basis of {v : m v = 0}, as dicts over column labels.

    Over QQ the vectors are primitive integer vectors; over GF(p) the free
    coordinate is 1.
    """
    ech = Echelon(m.field)
    for r in m.indexed_rows():
        ech.add(r)
    rows = ech.reduced_rows()
    ncols = len(m.cols)
    free = [c for c in range(ncols) if c not in rows]
    basis = []
    for f in free:
        if m.field.characteristic == 0:
            # v_f = L, v_c = -L * r[f] / r[c]; L = lcm of pivots involved
            involved = [(c, r) for c, r in rows.items() if f in r]
            L = 1
            for c, r in involved:
                a = abs(r[c])
                L = L * a // gcd(L, a)
            vec = {f: L}
            for c, r in involved:
                vec[c] = -L * r[f] // r[c]
            vec = _primitive(vec) if vec else vec
        else:
            p = m.field.p
            vec = {f: 1}
            for c, r in rows.items():
                if f in r:
                    vec[c] = (-r[f]) % p
        basis.append({m.cols[c]: v for c, v in sorted(vec.items())})
    return basis


def in_span(v, basis, field=None, cols=None):
    """True iff v is a linear combination of the vectors in basis."""
    if field is None:
        field = _infer_field(x for w in [v, *basis] for x in w.values())
    if cols is None:
        keys = set(v)
        for b in basis:
            keys.update(b)
        cols = sorted(keys, key=repr) if not _orderable(keys) else sorted(keys)
    index = {c: k for k, c in enumerate(cols)}
    ech = Echelon(field)
    for b in basis:
        ech.add({index[c]: x for c, x in b.items()})
    return ech.contains({index[c]: x for c, x in v.items()})


def _orderable(keys):
    try:
        sorted(keys)
        return True
    except TypeError:
        return False


def bareiss_rank(matrix):
    """Rank of a dense integer (or rational) matrix by Bareiss fraction-free elimination."""
    a = [list(r) for r in matrix]
    if not a or not a[0]:
        return 0
    den = 1
    for r in a:
        for v in r:
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
    a = [[int(v * den) for v in r] for r in a]
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (p * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        # rows above the pivot row are already settled; keep the division chain intact
        prev = p
        r += 1
    return r


def naive_rank(matrix):
    """Rank by textbook Gaussian elimination over Fractions."""
    a = [[Fraction(v) for v in r] for r in matrix]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r
