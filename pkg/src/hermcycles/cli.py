"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 table verification
mismatch, 3 internal assertion failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import tables
from .cycles import SigmaElement, all_sigma, c_of_X, codim, min_codim_over_sigma, outer_involution
from .dot import dynkin_dot, hasse_dot, hasse_text
from .families import format_family, parse_family
from .levi import compact_dual_of
from .parabolic import classify
from .rootsys import build, epsilon_display, fw_display

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def class_record(family: str, rs, cls) -> dict:
    return {
        "family": family,
        "r_plus": cls.r_plus,
        "r_minus": cls.r_minus,
        "U": [list(a) for a in cls.U],
        "D": [list(a) for a in cls.D],
        "witness_fw": [_frac(x) for x in cls.witness.fw],
        "witness_epsilon": epsilon_display(rs, cls.witness),
        "compact_dual": compact_dual_of(rs, cls).to_json(),
    }


def _family(text):
    try:
        fam = parse_family(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return fam, build(fam)


def cmd_classify(args, out):
    fam, rs = _family(args.family)
    name = format_family(fam)
    r_max = args.max_hodge if args.max_hodge is not None else max(1, c_of_X(rs))
    if r_max < 1:
        raise UsageError("--max-hodge must be at least 1")
    classes = classify(rs, r_max, unbalanced=args.unbalanced, max_degree=args.max_degree, method=args.method)
    if args.format == "json":
        for cls in classes:
            out.write(json.dumps(class_record(name, rs, cls), ensure_ascii=False, sort_keys=True) + "\n")
    else:
        out.write("| λ | ε | R₊ | R₋ | Y_q | χ |\n|---|---|---|---|---|---|\n")
        for cls in classes:
            d = compact_dual_of(rs, cls)
            out.write(
                f"| {fw_display(cls.witness)} | {epsilon_display(rs, cls.witness)} | {cls.r_plus} | "
                f"{cls.r_minus} | {d.name} | {d.euler} |\n"
            )
    return EXIT_OK


def cmd_codim(args, out):
    fam, rs = _family(args.family)
    if args.all_sigma:
        sigmas = all_sigma(rs)
    else:
        try:
            sigmas = [SigmaElement.parse(args.sigma)]
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        reports = [codim(rs, s) for s in sigmas]
    except ValueError as e:
        raise UsageError(str(e)) from None
    reports.sort(key=lambda r: (r.codim, r.sigma.S, r.sigma.theta))
    if args.format == "json":
        for r in reports:
            out.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
        return EXIT_OK
    name = format_family(fam)
    out.write("| family | sigma | codim | fixed noncompact |\n|---|---|---|---|\n")
    for r in reports:
        out.write(f"| {name} | {r.sigma.label()} | {r.codim} | {r.fixed_noncompact_count} |\n")
    if args.all_sigma:
        c, s = min_codim_over_sigma(rs)
        tau = outer_involution(rs)
        summary = f"min nontrivial codim over the group: {c} ({s.label() if s else '-'})"
        if tau is not None:
            summary += f"; outer involution with fixed subgroup {tau.fixed_subgroup}: codim {tau.codim}"
        out.write(summary + f"; c(X) = {c_of_X(rs)}\n")
    return EXIT_OK


def cmd_hasse(args, out):
    fam, rs = _family(args.family)
    out.write(hasse_dot(rs, format_family(fam)) if args.dot else hasse_text(rs))
    return EXIT_OK


def cmd_dynkin(args, out):
    fam, rs = _family(args.family)
    out.write(dynkin_dot(rs, format_family(fam)))
    return EXIT_OK


def cmd_tables(args, out):
    ids = args.only.split(",") if args.only else list(tables.TABLE_IDS)
    for t in ids:
        if t not in tables.COLUMNS:
            raise UsageError(f"unknown table {t!r}")
    if args.emit:
        emitted = tables.emit_tables()
        for t in ids:
            text = emitted[t].render()
            if args.out:
                Path(args.out).mkdir(parents=True, exist_ok=True)
                (Path(args.out) / f"{t}.txt").write_text(text, encoding="utf-8")
            else:
                out.write(text + "\n")
        return EXIT_OK
    status = EXIT_OK
    for t in ids:
        try:
            table = tables.load_fixture(t, args.fixtures)
        except FileNotFoundError as e:
            sys.stderr.write(f"{e}\n")
            return EXIT_USAGE
        except tables.FixtureError as e:
            sys.stderr.write(f"{t}: malformed fixture: {e}\n")
            return EXIT_USAGE
        bad = tables.verify_table(table)
        out.write(f"{t}: {'OK' if not bad else f'{len(bad)} mismatch(es)'} ({len(table.rows)} rows)\n")
        for m in bad:
            out.write(f"  {m}\n")
        if bad:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermcycles", description="Hodge types of theta-stable parabolics and special cycles")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classes of Hodge type (r, r)")
    c.add_argument("family")
    c.add_argument("--max-hodge", type=int, help="largest r (default: c(X))")
    c.add_argument("--format", choices=["json", "md"], default="md")
    c.add_argument("--unbalanced", action="store_true", help="also list classes with R+ != R-")
    c.add_argument("--max-degree", type=int, help="degree bound for --unbalanced")
    c.add_argument("--method", choices=["simplex", "fm", "both"], default="simplex")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("codim", help="codimension of fixed cycles")
    d.add_argument("family")
    g = d.add_mutually_exclusive_group(required=True)
    g.add_argument("--all-sigma", action="store_true")
    g.add_argument("--sigma", help='e.g. "psi_3,theta"')
    d.add_argument("--format", choices=["json", "md"], default="md")
    d.set_defaults(func=cmd_codim)

    h = sub.add_parser("hasse", help="poset of positive noncompact roots")
    h.add_argument("family")
    h.add_argument("--dot", action="store_true")
    h.set_defaults(func=cmd_hasse)

    y = sub.add_parser("dynkin", help="extended Dynkin diagram as DOT")
    y.add_argument("family")
    y.set_defaults(func=cmd_dynkin)

    t = sub.add_parser("tables", help="regenerate or verify the golden tables")
    m = t.add_mutually_exclusive_group(required=True)
    m.add_argument("--verify", action="store_true")
    m.add_argument("--emit", action="store_true")
    t.add_argument("--only", help="comma-separated table ids")
    t.add_argument("--fixtures", help="fixture directory (default: packaged fixtures)")
    t.add_argument("--out", help="write emitted tables here instead of stdout")
    t.set_defaults(func=cmd_tables)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        sys.stderr.write(f"hermcycles: error: {e}\n")
        return EXIT_USAGE
    except AssertionError as e:
        sys.stderr.write(f"hermcycles: internal assertion failed: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
