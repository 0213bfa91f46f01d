"""Structure maps of the symmetric and divided power superalgebras on basis words.

An element Z^{(i)} of the divided powers is represented by its standardized
restricted word i; elements of tensor powers by words; linear combinations
by dicts {label: int}.  The basis argument decides parities, so twisted
(parity-flipped) versions use the same functions with ``basis.flipped()``.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

from .shapes import row_words
from .supercore import act, is_restricted, standard_sign, standardize

__all__ = [
    "div_mult", "div_comult", "delta_embed", "sym_project", "sym_basis",
    "divided_basis", "shuffle_product", "tensor_product_words",
    "multiplicity_constant", "div_mult_via_tensor",
]


def _check_standardized(word):
    if any(a > b for a, b in zip(word, word[1:])):
        raise ValueError(f"word {word} is not standardized")


def multiplicity_constant(a, b, basis):
    """Product over even letters s of binom(wt(a)_s + wt(b)_s, wt(a)_s)."""
    ca, cb = {}, {}
    for x in a:
        ca[x] = ca.get(x, 0) + 1
    for x in b:
        cb[x] = cb.get(x, 0) + 1
    c = 1
    for s, k in ca.items():
        if s in cb and not basis.parity(s):
            c *= comb(k + cb[s], k)
    return c


def div_mult(a, b, basis):
    """Z^{(a)} * Z^{(b)} as {word: coefficient}; empty when the product vanishes."""
    _check_standardized(a)
    _check_standardized(b)
    res = mult_term(tuple(a), tuple(b), basis)
    return {} if res is None else {res[0]: res[1]}


@lru_cache(maxsize=1 << 16)
def mult_term(a, b, basis):
    """(word, coefficient) of the product of two basis elements, or None."""
    joined = a + b
    if not is_restricted(joined, basis):
        return None
    st, _, sign = standardize(joined, basis)
    return st, sign * multiplicity_constant(a, b, basis)


def div_comult(a, r, s, basis):
    """The (r, s) component of the coproduct of Z^{(a)} as {(a1, a2): coefficient}."""
    _check_standardized(a)
    a = tuple(a)
    if r + s != len(a) or r < 0 or s < 0:
        raise ValueError("degree mismatch")
    return dict(comult_terms(a, r, basis))


@lru_cache(maxsize=1 << 16)
def comult_terms(a, r, basis):
    """Tuple of ((a1, a2), sign) for the (r, len(a)-r) coproduct component."""
    out = {}
    for pos in combinations(range(len(a)), r):
        first = tuple(a[k] for k in pos)
        chosen = set(pos)
        second = tuple(a[k] for k in range(len(a)) if k not in chosen)
        key = (first, second)
        if key not in out:
            out[key] = standard_sign(first + second, basis)
    return tuple(out.items())


def _rearrangements(word):
    """Distinct rearrangements of a sorted word, in lex order."""
    word = tuple(word)
    if not word:
        yield ()
        return
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
    letters = sorted(counts)
    d = len(word)
    cur = []

    def rec():
        if len(cur) == d:
            yield tuple(cur)
            return
        for x in letters:
            if counts[x]:
                counts[x] -= 1
                cur.append(x)
                yield from rec()
                cur.pop()
                counts[x] += 1

    yield from rec()


def delta_embed(a, basis):
    """Image of Z^{(a)} in the tensor power: sum over rearrangements w of sign(w) Z^w."""
    _check_standardized(a)
    return dict(embed_terms(tuple(a), basis))


@lru_cache(maxsize=1 << 16)
def embed_terms(a, basis):
    """Tuple of (word, sign) making up the embedding of Z^{(a)}."""
    if not is_restricted(a, basis):
        return ()
    return tuple((w, standard_sign(w, basis)) for w in _rearrangements(a))


def sym_project(word, basis):
    """Multiplication onto S^d: (sorted word, sign), or None when an odd letter repeats."""
    if not is_restricted(word, basis):
        return None
    st, _, sign = standardize(tuple(word), basis)
    return st, sign


def sym_basis(d, basis):
    """Standardized restricted words of length d: a basis of S^d, also of Gamma^d."""
    return row_words(d, basis, 0)


divided_basis = sym_basis


def tensor_product_words(x, y):
    """Tensor product of two vectors over words (concatenation, no signs)."""
    out = {}
    for u, cu in x.items():
        for v, cv in y.items():
            k = u + v
            out[k] = out.get(k, 0) + cu * cv
    return {k: c for k, c in out.items() if c}


def shuffle_product(x, y, basis):
    """Sum over shuffles sigma of (x (x) y).sigma, computed with the signed place action.

    For x in degree d and y in degree e, the shuffles are the permutations
    sigma with sigma increasing on the positions taken from x and on those
    taken from y.
    """
    out = {}
    for u, cu in x.items():
        d = len(u)
        for v, cv in y.items():
            e = len(v)
            w = u + v
            for positions in combinations(range(1, d + e + 1), d):
                sigma = [0] * (d + e)
                pset = set(positions)
                k1, k2 = 1, d + 1
                for p in range(1, d + e + 1):
                    if p in pset:
                        sigma[p - 1] = k1
                        k1 += 1
                    else:
                        sigma[p - 1] = k2
                        k2 += 1
                new, sign = act(w, tuple(sigma), basis)
                out[new] = out.get(new, 0) + sign * cu * cv
    return {k: c for k, c in out.items() if c}


def div_mult_via_tensor(a, b, basis):
    """Product computed inside the tensor algebra, then read off by pairing with monomials.

    Returns (coefficient dict like div_mult, residual) where residual is the
    tensor vector minus coefficient times the embedding of the product; it is
    empty exactly when the shuffle product lies in the embedded image.
    """
    prod = shuffle_product(delta_embed(a, basis), delta_embed(b, basis), basis)
    target = tuple(sorted(tuple(a) + tuple(b)))
    # the sorted word appears with coefficient +1 in the embedding, so pairing
    # against the dual monomial reads off the coefficient directly
    c = prod.get(target, 0)
    residual = dict(prod)
    if c:
        for w, s in delta_embed(target, basis).items():
            nv = residual.get(w, 0) - c * s
            if nv:
                residual[w] = nv
            else:
                residual.pop(w, None)
    return ({target: c} if c else {}), residual
