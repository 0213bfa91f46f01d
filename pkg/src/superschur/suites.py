"""Named verification suites over ranges of shapes and spaces.

Each suite returns a JSON-ready report: the statement it checks, the caps
used, the number of cases, the failures found (truncated), and ``ok``.
Cases are independent and may be fanned out to a process pool; results are
always reduced in case order, so reports do not depend on scheduling.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .exactalg import GF, QQ
from .hopf import div_mult, div_mult_via_tensor, divided_basis
from .shapes import Partition, SkewShape, partitions, skew_shapes
from .supercore import SuperBasis

__all__ = ["Caps", "SUITES", "run_suite", "run_all", "hook_content_count"]

MAX_FAILURES = 20


@dataclass
class Caps:
    max_deg: int = 5
    max_m: int = 3
    max_n: int = 3
    fields: tuple = dc_field(default_factory=lambda: (QQ, GF(3), GF(5)))
    jobs: int = 1
    seed: int = 0

    def spaces(self, m_cap=None, n_cap=None, min_total=1):
        m_cap = self.max_m if m_cap is None else min(m_cap, self.max_m)
        n_cap = self.max_n if n_cap is None else min(n_cap, self.max_n)
        return [(m, n) for m in range(m_cap + 1) for n in range(n_cap + 1) if m + n >= min_total]

    def as_dict(self):
        return {"max_deg": self.max_deg, "max_m": self.max_m, "max_n": self.max_n,
                "fields": [repr(f) for f in self.fields], "seed": self.seed}


def _fan_out(fn, cases, jobs):
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cases, chunksize=max(1, len(cases) // (8 * jobs))))
    return [fn(c) for c in cases]


def _report(name, statement, caps, results):
    failures = [r for r in results if r is not None]
    return {
        "suite": name,
        "statement": statement,
        "caps": caps.as_dict(),
        "cases": len(results),
        "failures": failures[:MAX_FAILURES],
        "failure_count": len(failures),
        "ok": not failures,
    }


def _shape_space_cases(caps, max_deg=None, m_cap=None, n_cap=None):
    d = caps.max_deg if max_deg is None else min(max_deg, caps.max_deg)
    return [(str(sh), m, n) for sh in skew_shapes(d, 1) for m, n in caps.spaces(m_cap, n_cap)]


def _parse(text):
    from .shapes import parse_shape
    return parse_shape(text)


# -- divided powers ------------------------------------------------------------

def _hopf_case(args):
    a, b, parities = args
    basis = SuperBasis(parities)
    direct = div_mult(a, b, basis)
    via, residual = div_mult_via_tensor(a, b, basis)
    if direct != via or residual:
        return {"a": a, "b": b, "binomial": str(direct), "pairing": str(via), "residual": len(residual)}
    return None


def suite_hopf(caps):
    """Products of divided powers against the tensor-algebra pairing, over k^{2|2}."""
    m, n = min(2, caps.max_m), min(2, caps.max_n)
    basis = SuperBasis.standard(m, n)
    top = min(caps.max_deg, 4)
    words = {k: divided_basis(k, basis) for k in range(top + 1)}
    cases = [(a, b, basis.parities) for k in range(top + 1) for j in range(top + 1 - k)
             for a in words[k] for b in words[j]]
    results = _fan_out(_hopf_case, cases, caps.jobs)
    return _report("hopf", "binomial product constant equals the dual-pairing oracle", caps, results)


# -- standard basis, kernel, straightening -----------------------------------------

def _standard_case(args):
    from .schurfun import ShapeSpace
    text, m, n, fields = args
    res = ShapeSpace(_parse(text), SuperBasis.standard(m, n)).check(fields, kernel=True, early_exit=True)
    return None if res["ok"] else res


def suite_standard(caps):
    """rank theta_hat(shape') = #costandard = #row-costandard - rank diamond, per field."""
    cases = [c + (caps.fields,) for c in _shape_space_cases(caps)]
    results = _fan_out(_standard_case, cases, caps.jobs)
    return _report("standard", "costandard tableaux give a basis of the Schur superfunctor image",
                   caps, results)


def _kernel_case(args):
    from .schurfun import ShapeSpace
    text, m, n = args
    bad = []
    for blk, _ in ShapeSpace(_parse(text), SuperBasis.standard(m, n)).blocks():
        bad.extend(blk.kernel_violations())
    return {"shape": text, "space": [m, n], "violations": len(bad)} if bad else None


def suite_kernel(caps):
    results = _fan_out(_kernel_case, _shape_space_cases(caps), caps.jobs)
    return _report("kernel", "theta_hat of the conjugate shape kills the image of diamond",
                   caps, results)


def _straighten_case(args):
    from .schurfun import ShapeSpace
    text, m, n = args
    checked, failures = ShapeSpace(_parse(text), SuperBasis.standard(m, n)).straightening_check()
    if failures:
        return {"shape": text, "space": [m, n], "checked": checked,
                "failures": [[repr(r), why] for r, why in failures[:3]]}
    return None


def suite_straighten(caps):
    results = _fan_out(_straighten_case, _shape_space_cases(caps), caps.jobs)
    return _report("straighten", "straightening terminates, strictly lowers tableaux, "
                   "and stays in its class modulo the diamond image", caps, results)


# -- filtration ----------------------------------------------------------------

def _filtration_case(args):
    from .schurfun import _costandard_count, filtration_report
    text, mn1, mn2 = args
    shape = _parse(text)
    M, N = SuperBasis.standard(*mn1), SuperBasis.standard(*mn2)
    rep = filtration_report(shape, M, N)
    total = _costandard_count(shape, SuperBasis.concat(M, N))
    ok = all(g == e for _, _, g, e in rep) and rep[-1][1] == total and sum(e for *_, e in rep) == total
    if ok:
        return None
    return {"shape": text, "M": list(mn1), "N": list(mn2), "steps": [list(map(str, r)) for r in rep],
            "total": total}


def suite_filtration(caps):
    d = min(caps.max_deg, 4)
    spaces = caps.spaces(2, 2)
    cases = [(str(sh), a, b) for sh in skew_shapes(d, 1) for a in spaces for b in spaces]
    results = _fan_out(_filtration_case, cases, caps.jobs)
    return _report("filtration", "graded pieces of the M-part filtration have the dimensions of "
                   "the tensor products of smaller Schur modules", caps, results)


# -- Schur superalgebra ------------------------------------------------------------

ALGEBRA_CASES = ((1, 1, 2), (2, 1, 2), (1, 1, 3))


def _algebra_case(mnd):
    from .schuralg import SchurAlgebra
    m, n, d = mnd
    alg = SchurAlgebra(m, n, d)
    B = alg.basis()
    problems = []
    # associativity on every basis triple
    prods = {(a, b): alg.mult(a, b) for a in B for b in B}
    for a in B:
        for b in B:
            ab = prods[(a, b)]
            for c in B:
                lhs = {}
                for x, cx in ab.items():
                    for y, cy in prods[(x, c)].items():
                        lhs[y] = lhs.get(y, 0) + cx * cy
                rhs = {}
                for x, cx in prods[(b, c)].items():
                    for y, cy in prods[(a, x)].items():
                        rhs[y] = rhs.get(y, 0) + cx * cy
                if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                    problems.append(["associativity", repr((a, b, c))])
    # the product agrees with composing the tensor-space operators (both twists)
    for twisted in (False, True):
        ops = {a: alg.operator({a: 1}, twisted) for a in B}
        for a in B:
            for b in B:
                prod_op = alg.operator(prods[(a, b)], twisted)
                for w in alg.tensor_words():
                    comp = alg.act_vector({a: 1}, ops[b][w], twisted)
                    if comp != prod_op[w]:
                        problems.append(["tensor action", repr((a, b, w, twisted))])
                        break
    # faithfulness
    from .exactalg import Echelon
    words = {w: k for k, w in enumerate(alg.tensor_words())}
    nw = len(words)
    ech = Echelon(QQ)
    for a in B:
        op = alg.operator({a: 1})
        ech.add({words[w] * nw + words[v]: c for w, col in op.items() for v, c in col.items()})
    if ech.rank != len(B):
        problems.append(["faithfulness", f"rank {ech.rank} of {len(B)}"])
    # weight idempotents
    ident = alg.identity()
    idem = {mu: alg.weight_idempotent(mu) for mu in alg.weights()}
    for mu, e in idem.items():
        for nu, f in idem.items():
            p = alg.mult(e, f)
            if p != ({e: 1} if mu == nu else {}):
                problems.append(["idempotents", repr((mu, nu))])
    for b in B:
        if alg.mult_elems(ident, {b: 1}) != {b: 1} or alg.mult_elems({b: 1}, ident) != {b: 1}:
            problems.append(["unit", repr(b)])
        i, j = alg.words(b)
        for mu, e in idem.items():
            want = {b: 1} if alg.weight_of(i) == mu else {}
            if alg.mult(e, b) != want:
                problems.append(["left idempotent", repr((mu, b))])
    return {"case": list(mnd), "problems": problems[:5], "count": len(problems)} if problems else None


def _q_case(nd):
    from .schuralg import QAlgebra, SchurAlgebra
    n, d = nd
    qa = QAlgebra(n, d)
    big = SchurAlgebra(n, n, d)
    problems = []
    if d == 1 and len(qa.basis()) != 2 * n * n:
        problems.append("dim Q(n,1) != 2n^2")
    total = {}
    for nu in qa.weights():
        e = qa.embed(qa.weight_idempotent(nu))
        want = {big.weight_idempotent(mu): 1 for mu in big.weights()
                if tuple(mu[k] + mu[n + k] for k in range(n)) == tuple(nu)}
        if e != want:
            problems.append(f"weight idempotent {nu}")
        for k, v in e.items():
            total[k] = total.get(k, 0) + v
    if total != big.identity():
        problems.append("weight idempotents do not sum to the identity")
    idem = {nu: {qa.weight_idempotent(nu): 1} for nu in qa.weights()}
    for a, x in idem.items():
        for b, y in idem.items():
            if qa.mult(x, y) != (x if a == b else {}):
                problems.append(f"orthogonality {a} {b}")
    return {"case": [n, d], "problems": problems[:5]} if problems else None


def suite_algebra(caps):
    results = _fan_out(_algebra_case, list(ALGEBRA_CASES), caps.jobs)
    q_cases = [(n, d) for n in (1, 2) for d in (1, 2, 3)]
    results += _fan_out(_q_case, q_cases, caps.jobs)
    return _report("algebra", "structure constants are associative, match the tensor action, "
                   "and the weight idempotents are orthogonal and sum to one", caps, results)


# -- highest weight vectors --------------------------------------------------------

def _invariants_case(args):
    from .schuralg import SchurModule, n_invariants
    lam, m, n, field = args
    lam = Partition(lam)
    module = SchurModule(SkewShape(lam.conjugate(), ()), m, n, field)
    inv = n_invariants(module)
    hw = module.highest_vector_index()
    if len(inv) == 1 and hw is not None and set(inv[0]) == {hw}:
        return None
    return {"lambda": list(lam), "space": [m, n], "field": repr(field),
            "invariant_dim": len(inv), "highest": hw}


def suite_invariants(caps):
    """For lambda_1 <= m: the raising-invariants of the module over lambda' are the canonical line."""
    d = min(caps.max_deg, 4)
    cases = []
    for k in range(1, d + 1):
        for lam in partitions(k):
            for m, n in caps.spaces(3, 2):
                if lam[0] <= m:
                    cases.append((tuple(lam), m, n, QQ))
    results = _fan_out(_invariants_case, cases, caps.jobs)
    return _report("invariants", "the invariants of the raising part are spanned by the canonical "
                   "tableau image", caps, results)


# -- characters ------------------------------------------------------------------

def _char_case(args):
    from .chars import truncation_check, verify_char_typeI, verify_char_typeII
    kind, lam, m, n = args
    if kind == "I":
        ok = verify_char_typeI(lam, m, n)
    elif kind == "II":
        ok = verify_char_typeII(lam, n)
    else:
        ok = truncation_check(lam, m, n, max(m - 1, 0), max(n - 1, 0))
    return None if ok else {"type": kind, "lambda": list(lam), "space": [m, n]}


def suite_characters(caps):
    d = min(caps.max_deg, 4)
    lams = [tuple(lam) for k in range(1, d + 1) for lam in partitions(k)]
    cases = [("I", lam, m, n) for lam in lams for m, n in caps.spaces(2, 2)]
    cases += [("II", lam, n, n) for lam in lams for n in range(1, min(2, caps.max_n) + 1)]
    cases += [("trunc", lam, m, n) for lam in lams for m, n in caps.spaces(2, 2) if m and n]
    results = _fan_out(_char_case, cases, caps.jobs)
    return _report("characters", "characters equal hook Schur functions (type I) and their x = y "
                   "specialization (type II)", caps, results)


# -- classical specializations --------------------------------------------------------

def hook_content_count(lam, m):
    """Number of semistandard tableaux of shape lam with entries <= m (hook-content formula)."""
    lam = Partition(lam)
    conj = lam.conjugate()
    num = den = 1
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            num *= m + j - i
            den *= (row - j) + (conj.part(j) - i) + 1
    return num // den if num > 0 else 0


def _classical_case(args):
    from .schurfun import schur_complex_dim
    lam, m, n = args
    shape = SkewShape(lam, ())
    got_even = schur_complex_dim(shape, m, 0)
    got_odd = schur_complex_dim(shape, 0, n)
    want_even = hook_content_count(lam, m)
    want_odd = hook_content_count(Partition(lam).conjugate(), n)
    if (got_even, got_odd) != (want_even, want_odd):
        return {"lambda": list(lam), "m": m, "n": n, "even": [got_even, want_even], "odd": [got_odd, want_odd]}
    return None


def suite_classical(caps):
    cases = [(tuple(lam), k, k) for d in range(1, caps.max_deg + 1) for lam in partitions(d)
             for k in range(1, max(caps.max_m, caps.max_n) + 1)]
    results = _fan_out(_classical_case, cases, caps.jobs)
    return _report("classical", "purely even and purely odd spaces give the classical Schur and "
                   "Weyl dimensions", caps, results)


SUITES = {
    "hopf": suite_hopf,
    "kernel": suite_kernel,
    "standard": suite_standard,
    "straighten": suite_straighten,
    "filtration": suite_filtration,
    "algebra": suite_algebra,
    "invariants": suite_invariants,
    "characters": suite_characters,
    "classical": suite_classical,
}


def run_suite(name, caps):
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(caps)


def run_all(caps):
    reports = [run_suite(name, caps) for name in SUITES]
    return {"suite": "all", "caps": caps.as_dict(), "reports": reports,
            "ok": all(r["ok"] for r in reports)}

