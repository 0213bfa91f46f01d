"""Super bases, words, and the signed place-permutation action.

Letters are integers 1..r.  A basis is described by the tuple of parities of
its letters; the standard basis of k^{m|n} has m even letters followed by n
odd ones.  Permutations are tuples of images of 1..d (one-based).
"""

from itertools import permutations

__all__ = [
    "SuperBasis", "sgn", "charge", "act", "standardize", "compose",
    "inverse", "identity", "transposition", "is_restricted", "weight",
    "koszul_between", "distinct_rearrangements",
]


class SuperBasis:
    """An ordered homogeneous basis Z_1 < ... < Z_r of a superspace."""

    __slots__ = ("parities", "pi")

    def __init__(self, parities, pi=False):
        self.parities = tuple(int(p) & 1 for p in parities)
        self.pi = bool(pi)

    @classmethod
    def standard(cls, m, n, pi=False):
        if m < 0 or n < 0:
            raise ValueError("dimensions must be nonnegative")
        return cls((0,) * m + (1,) * n, pi)

    @classmethod
    def concat(cls, first, second):
        """Basis of a direct sum: letters of ``first`` precede those of ``second``."""
        if first.pi != second.pi:
            raise ValueError("cannot concatenate bases with different twists")
        return cls(first.parities + second.parities, first.pi)

    @property
    def size(self):
        return len(self.parities)

    @property
    def m(self):
        return self.parities.count(0)

    @property
    def n(self):
        return self.parities.count(1)

    def flipped(self):
        """The same letters viewed in the parity-shifted space."""
        return SuperBasis(self.parities, not self.pi)

    def parity(self, letter):
        return self.parities[letter - 1] ^ self.pi

    def word_parity(self, word):
        ps, flip = self.parities, self.pi
        return tuple(ps[a - 1] ^ flip for a in word)

    def letters(self):
        return range(1, len(self.parities) + 1)

    def name(self, letter):
        """X1.., Y1.. for the standard layout, Z<k> otherwise."""
        ps = self.parities
        if ps == tuple(sorted(ps)):
            m = ps.count(0)
            return f"X{letter}" if letter <= m else f"Y{letter - m}"
        return f"Z{letter}"

    def __eq__(self, other):
        return isinstance(other, SuperBasis) and (self.parities, self.pi) == (other.parities, other.pi)

    def __hash__(self):
        return hash((self.parities, self.pi))

    def __repr__(self):
        ps = self.parities
        if ps == tuple(sorted(ps)):
            tag = f"{ps.count(0)}|{ps.count(1)}"
        else:
            tag = "".join(map(str, ps))
        return f"SuperBasis({tag}{', pi' if self.pi else ''})"


def identity(d):
    return tuple(range(1, d + 1))


def transposition(d, a, b):
    p = list(range(1, d + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def compose(sigma, tau):
    """(sigma tau)(k) = sigma(tau(k))."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma):
    inv = [0] * len(sigma)
    for k, s in enumerate(sigma, 1):
        inv[s - 1] = k
    return tuple(inv)


def _check_perm(sigma, d):
    if len(sigma) != d or sorted(sigma) != list(range(1, d + 1)):
        raise ValueError("not a permutation of the right degree")


def sgn(eps, sigma):
    """Koszul sign: product over s<t with sigma^-1(s) > sigma^-1(t) of (-1)^(eps_s eps_t)."""
    d = len(eps)
    _check_perm(sigma, d)
    inv = inverse(sigma)
    odd = [s for s in range(d) if eps[s]]
    count = 0
    for a in range(len(odd)):
        ia = inv[odd[a]]
        for b in range(a + 1, len(odd)):
            if ia > inv[odd[b]]:
                count += 1
    return -1 if count & 1 else 1


def charge(eps, delta):
    """Product over s<t of (-1)^(eps_s delta_t)."""
    if len(eps) != len(delta):
        raise ValueError("length mismatch")
    total = 0
    later = 0
    for s in range(len(eps) - 1, -1, -1):
        if eps[s]:
            total += later
        later += delta[s]
    return -1 if total & 1 else 1


def act(word, sigma, basis):
    """Right action Z^w . sigma = sgn(|w|, sigma) Z^{w.sigma}, (w.sigma)(k) = w(sigma(k))."""
    _check_perm(sigma, len(word))
    new = tuple(word[s - 1] for s in sigma)
    return new, sgn(basis.word_parity(word), sigma)


def standardize(word, basis):
    """Return (st(w), sigma, sign) with st(w) = w.sigma sorted (stable) and sign = sgn(|w|, sigma).

    The sign is also the coefficient in Z^{(w)} = sign * Z^{(st w)} and in
    m(Z^w) = sign * Z_{st w}.
    """
    order = sorted(range(len(word)), key=word.__getitem__)
    sigma = tuple(k + 1 for k in order)
    st = tuple(word[k] for k in order)
    return st, sigma, standard_sign(word, basis)


def standard_sign(word, basis):
    """Sign of stably sorting ``word``: (-1)^(odd-odd inversions)."""
    ps, flip = basis.parities, basis.pi
    count = 0
    seen_odd = []
    for a in word:
        if ps[a - 1] ^ flip:
            for b in seen_odd:
                if b > a:
                    count += 1
            seen_odd.append(a)
    return -1 if count & 1 else 1


def is_restricted(word, basis):
    """Odd letters occur at most once."""
    seen = set()
    ps, flip = basis.parities, basis.pi
    for a in word:
        if ps[a - 1] ^ flip:
            if a in seen:
                return False
            seen.add(a)
    return True


def weight(word, size):
    w = [0] * size
    for a in word:
        w[a - 1] += 1
    return tuple(w)


def koszul_between(source, target, odd):
    """Sign of rearranging the sequence ``source`` into ``target``.

    Items flagged odd by ``odd(item)`` must be pairwise distinct; even items
    may repeat.  Returns (-1)^(number of odd pairs whose order differs).
    """
    src = [x for x in source if odd(x)]
    pos = {x: k for k, x in enumerate(src)}
    seq = [pos[x] for x in target if odd(x)]
    count = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                count += 1
    return -1 if count & 1 else 1


def distinct_rearrangements(word):
    """Distinct permutations of a word, lex ordered."""
    return sorted(set(permutations(word)))
