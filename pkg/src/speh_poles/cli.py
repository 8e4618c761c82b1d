"""Command-line driver: ``speh-poles {orbits,table,verify,regress}``.

Exit codes: 0 success, 1 a check came out false, 2 usage or environment error.
"""

import argparse
import json
import sys

from .analysis import verify_theorem
from .coset import DEFAULT_CAP, sigma_context
from .errors import ConsistencyError, DomainError, EnumerationLimitError
from .orbit import compute_orbits, exponent_profile, format_profile, orbits_to_json
from .tables import build_table, compare_table, load_corpus, render_json, render_latex, render_text

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _dump(doc):
    return json.dumps(doc, indent=2) + "\n"


def cmd_orbits(args, out):
    ctx = sigma_context(args.m, args.n, args.sigma)
    orbits = compute_orbits(ctx, args.cap)
    if args.format == "json":
        out.write(_dump(orbits_to_json(ctx, orbits)))
    elif args.format == "latex":
        out.write("\\begin{tabular}{cccc}\n    Orbit & base point & blocks & rank\\\\\n")
        rows = []
        for o in orbits:
            blocks = ";".join(f"{list(K)}\\leftrightarrow{list(L)}" for K, L in o.blocks) or "-"
            rows.append(
                f"    ${{{','.join(w.label() for w in o.members)}}}$ & ${o.base_point.label()}$ "
                f"& ${blocks}$ & {o.rank}"
            )
        out.write("\\\\\n".join(rows) + "\n\\end{tabular}\n")
    else:
        out.write(f"m={ctx.m} n={ctx.n} sigma={ctx.sigma} s={ctx.s} case={ctx.case}\n")
        for o in orbits:
            blocks = " ".join(f"{list(K)}<->{list(L)}" for K, L in o.blocks) or "-"
            out.write(
                f"{','.join(str(w) for w in o.members)} | base {o.base_point} | "
                f"profile {format_profile(exponent_profile(o.base_point, ctx))} | "
                f"rank {o.rank} | blocks {blocks}\n"
            )
    return EXIT_OK


def cmd_table(args, out):
    table = build_table(args.m, args.n, args.sigma, args.cap)
    render = {"text": render_text, "latex": render_latex, "json": render_json}[args.format]
    out.write(render(table))
    return EXIT_OK


def cmd_verify(args, out):
    if args.m + args.n > args.max_mn:
        raise EnumerationLimitError(args.m, args.n, args.max_mn)
    model = None
    if args.numeric:
        from .zeta import NumericModel

        model = NumericModel(precision=args.precision)
    try:
        report = verify_theorem(
            args.m, args.n, numeric=args.numeric, model=model, cap=args.cap, raise_on_violation=False
        )
    except ConsistencyError as exc:
        out.write(f"consistency failure: {exc}\n")
        return EXIT_FALSE
    if args.format == "json":
        out.write(_dump(report.to_json()))
    else:
        out.write(f"m={report.m} n={report.n}\n")
        for r in report.per_sigma:
            orders = ", ".join(
                f"{x.orbit.base_point}:{x.symbolic_order}"
                + (f"/{x.numeric_order}" if args.numeric else "")
                for x in r.sums
            )
            out.write(f"sigma={r.sigma} s={r.s} maxOrder={r.max_order} [{orders}]\n")
        out.write(f"poleSigmas={report.pole_sigmas}\n")
        for v in report.violations:
            out.write(f"VIOLATION sigma={v['sigma']} orbit={v['basePoint']}: {v['reason']}\n")
        out.write("OK\n" if report.ok else "FAILED\n")
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_regress(args, out):
    try:
        corpus = load_corpus(args.corpus)
    except (FileNotFoundError, OSError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE
    failures = 0
    for ct in corpus:
        mismatches = compare_table(ct, args.cap)
        status = "ok" if not mismatches else "MISMATCH"
        out.write(f"{ct.name} (m={ct.m} n={ct.n} sigma={ct.sigma}, {len(ct.rows)} rows): {status}\n")
        for mm in mismatches:
            out.write(f"  {mm}\n")
        failures += len(mismatches)
    return EXIT_OK if not failures else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(prog="speh-poles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=("text", "latex", "json"), default="text")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on m+n")

    for name, helptext in (("orbits", "list the orbits at (m, n, sigma)"),
                           ("table", "orbit / exponent profile / orbit sum table")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        sp.add_argument("sigma", type=int)
        common(sp)

    sp = sub.add_parser("verify", help="check the pole-order bound for every sigma")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--numeric", action="store_true", help="cross-check orders numerically")
    sp.add_argument("--precision", type=int, default=30, help="oracle working digits")
    sp.add_argument("--max-mn", type=int, default=12, help="refuse m+n above this")
    common(sp)

    sp = sub.add_parser("regress", help="re-derive the bundled reference tables")
    sp.add_argument("--corpus", default=None, help="directory of corpus files")
    common(sp, fmt=False)
    return p


COMMANDS = {"orbits": cmd_orbits, "table": cmd_table, "verify": cmd_verify, "regress": cmd_regress}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (DomainError, EnumerationLimitError) as exc:
        sys.stderr.write(f"speh-poles: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
