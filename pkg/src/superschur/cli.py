"""Command-line front end.

    superschur dim    --shape 2,1/ --space 2,1
    superschur char   --shape 2,1 --space 2,2 --type II
    superschur basis  --shape 2/ --space 1,1
    superschur verify standard --max-deg 4 --space 2,2 --field q

Every command prints one JSON document (to --out when given).  Exit codes:
0 success, 1 a mathematical check failed, 2 usage error.
"""

import argparse
import json
import sys

from .exactalg import GF, QQ, FieldError, parse_field
from .shapes import parse_shape
from .supercore import SuperBasis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _space(text):
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--space expects 'm,n', got {text!r}") from None
    if m < 0 or n < 0:
        raise UsageError("space dimensions must be nonnegative")
    return m, n


def _shape(args):
    if args.shape is None:
        raise UsageError("--shape is required")
    try:
        shape = parse_shape(args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if shape.size > args.cap:
        raise UsageError(f"shape size {shape.size} exceeds --cap {args.cap}")
    return shape


def _field(args):
    try:
        return parse_field(args.field) if args.field else QQ
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _label(rows):
    return "|".join(" ".join(map(str, r)) for r in rows)


def cmd_dim(args):
    from .schurfun import ShapeSpace

    shape = _shape(args)
    m, n = _space(args.space)
    if m + n == 0:
        raise UsageError("the space must be nonzero")
    field = _field(args)
    if shape.size == 0:
        out = {"dim": 1, "rank": 1, "costandard_count": 1}
    else:
        res = ShapeSpace(shape.conjugate(), SuperBasis.standard(m, n)).check((field,))
        tot = res["fields"][repr(field)]
        out = {"dim": res["row_costandard"] - tot["diamond_rank"], "rank": tot["theta_rank"],
               "costandard_count": res["costandard"]}
    out.update({"shape": str(shape), "space": [m, n], "field": repr(field)})
    ok = out["dim"] == out["rank"] == out["costandard_count"]
    out["ok"] = ok
    return out, ok


def cmd_char(args):
    from .chars import hall_littlewood, hook_schur, q_character, schur_character

    shape = _shape(args)
    if shape.mu:
        raise UsageError("characters are computed for straight shapes")
    m, n = _space(args.space)
    lam = tuple(shape.lam)
    if args.type == "II":
        if m != n:
            raise UsageError("type II needs a square space n,n")
        ch = q_character(lam, n)
        other = hall_littlewood(lam, n)
    else:
        ch = schur_character(lam, m, n)
        other = hook_schur(lam, m, n)
    ok = ch == other
    out = {"shape": str(shape), "space": [m, n], "type": args.type,
           "character": str(ch), "symmetric_function": str(other),
           "terms": json.loads(ch.to_json())["terms"], "equal": ok}
    return out, ok


def cmd_basis(args):
    from .schurfun import schur_basis

    shape = _shape(args)
    m, n = _space(args.space)
    field = _field(args)
    try:
        basis = schur_basis(shape, SuperBasis.standard(m, n), check=True, field=field)
    except AssertionError as exc:
        return {"shape": str(shape), "error": str(exc)}, False
    items = []
    for rows, vec in sorted(basis.vectors.items()):
        items.append({"tableau": [list(r) for r in rows],
                      "image": {" ".join(map(str, k)): c for k, c in sorted(vec.items())}})
    out = {"shape": str(shape), "space": [m, n], "field": repr(field),
           "domain_shape": str(shape.conjugate()), "dim": len(items), "basis": items}
    return out, True


def cmd_verify(args):
    from .suites import SUITES, Caps, run_all, run_suite

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    m, n = _space(args.space) if args.space else (3, 3)
    fields = (_field(args),) if args.field else (QQ, GF(3), GF(5))
    caps = Caps(max_deg=args.max_deg, max_m=m, max_n=n, fields=fields, jobs=args.jobs, seed=args.seed)
    report = run_all(caps) if args.suite == "all" else run_suite(args.suite, caps)
    return report, report["ok"]


COMMANDS = {"dim": cmd_dim, "char": cmd_char, "basis": cmd_basis, "verify": cmd_verify}


def build_parser():
    p = argparse.ArgumentParser(prog="superschur", description="Schur superfunctor computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, space_default="1,1"):
        sp.add_argument("--shape", help="skew shape such as 4,3,1/2,1 or 2/")
        sp.add_argument("--space", default=space_default, help="m,n for k^{m|n}")
        sp.add_argument("--field", help="q or p=K for an odd prime K")
        sp.add_argument("--cap", type=int, default=6, help="largest allowed shape size")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write the JSON report here")

    common(sub.add_parser("dim", help="dimension of the Schur supermodule, three ways"))
    c = sub.add_parser("char", help="formal character against the symmetric-function formula")
    common(c)
    c.add_argument("--type", choices=("I", "II"), default="I")
    common(sub.add_parser("basis", help="costandard tableau basis with images"))
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="hopf, kernel, standard, straighten, filtration, algebra, "
                                 "invariants, characters, classical or all")
    common(v, space_default=None)
    v.add_argument("--max-deg", type=int, default=5)
    v.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"superschur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(out, indent=2, sort_keys=True, default=str)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
