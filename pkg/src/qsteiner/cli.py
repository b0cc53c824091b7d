"""Command-line front end.

Exit codes: 0 on success (verification passed where applicable), 1 when
a check or verification fails, 2 on bad arguments.  All numeric output
is exact decimal; stdout is deterministic for fixed inputs.

The environment variable QSTEINER_DATA may point at a directory of
parallelism files named ``parallelism-q{q}-n{n}.txt``; ``--parallelism
auto`` looks there before falling back to the backtracking search.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import counting, designs, equations, files
from .subspaces import Subspace


def _fmt_value(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fmt_subspace(b: Subspace) -> str:
    return files.format_block_rows(b)


def cmd_gauss(args) -> int:
    print(counting.gaussian(args.n, args.k, args.q))
    return 0


def cmd_necessary(args) -> int:
    report = counting.necessary_conditions(args.t, args.k, args.n, args.q)
    for e in report.entries:
        verdict = "divides" if e.divides else "DOES NOT divide"
        quotient = f" = {e.numerator // e.denominator}" if e.divides else ""
        print(f"i={e.i}: {e.numerator} / {e.denominator} {verdict}{quotient}")
    print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def cmd_oracle(args) -> int:
    if args.count == "N":
        s, m, t, n, q = args.params
        formula, oracle = (counting.count_N(s, m, t, n, q),
                           counting.oracle_N(s, m, t, n, q))
    elif args.count == "C":
        s, t, r, k, q = args.params
        formula, oracle = (counting.count_C(s, t, r, k, q),
                           counting.oracle_C(s, t, r, k, q))
    else:
        s, r, m, q = args.params
        formula, oracle = (counting.count_D(s, r, m, q),
                           counting.oracle_D(s, r, m, q))
    print(f"formula {formula}")
    print(f"oracle  {oracle}")
    print("MATCH" if formula == oracle else "MISMATCH")
    return 0 if formula == oracle else 1


def _parse_pins(pin_args) -> dict:
    pins = {}
    for item in pin_args or ():
        name, _, value = item.partition("=")
        if not name.startswith("X") or not value:
            raise SystemExit(f"bad pin {item!r}; expected e.g. X0=1")
        pins[int(name[1:])] = Fraction(value)
    return pins


def _print_outcome(out, keys, label) -> None:
    print(f"status: {out.status}")
    for key in keys:
        if key in out.assignment:
            print(f"{label(key)} = {_fmt_value(out.assignment[key])}")
    if out.free_keys:
        print(f"free variables: {len(out.free_keys)}")
    if out.status != "inconsistent":
        print("nonnegative integers: " + ("yes" if out.nonneg_integer else "no"))


def cmd_uniform_solve(args) -> int:
    pins = _parse_pins(args.pin)
    if args.full:
        return _full_solve(args, pins)
    system = equations.build_uniform(args.q, args.t, args.k, args.n, args.m)
    out = equations.solve(system, pins)
    _print_outcome(out, system.r_values, lambda r: f"X_{r}")
    return 0 if out.status != "inconsistent" else 1


def _full_solve(args, pins) -> int:
    system = equations.build_full(args.q, args.t, args.k, args.n, args.m)
    out = equations.solve(system, pins)
    print(f"status: {out.status}")
    for y in system.variables:
        if y in out.assignment:
            print(f"a[{_fmt_subspace(y)}] = {_fmt_value(out.assignment[y])}")
    if out.free_keys:
        print(f"free variables: {len(out.free_keys)}")
    if out.status != "inconsistent":
        print("nonnegative integers: " + ("yes" if out.nonneg_integer else "no"))
    return 0 if out.status != "inconsistent" else 1


def cmd_full_solve(args) -> int:
    return _full_solve(args, _parse_pins(args.pin))


def _report_verdict(report) -> int:
    if report.ok:
        print(f"PASS: {report.equations_checked} equations, "
              f"total multiplicity {report.total_multiplicity}")
        return 0
    if report.block_dim_violations:
        b, dim = report.block_dim_violations[0]
        print(f"FAIL: block {_fmt_subspace(b)} has dimension {dim} "
              f"outside the legal range")
    if report.violations:
        v = report.first_violation()
        print(f"FAIL: equation for the {v.s}-subspace [{_fmt_subspace(v.subject)}] "
              f"gives {v.got}, expected {v.expected} "
              f"({len(report.violations)} violated equations)")
    return 1


def cmd_verify(args) -> int:
    design = files.parse_design_file(args.file)
    return _report_verdict(designs.verify(design, jobs=args.jobs))


def _resolve_parallelism(q: int, n: int, source: str) -> designs.Parallelism:
    if source == "auto":
        data_dir = os.environ.get("QSTEINER_DATA")
        if data_dir:
            candidate = os.path.join(data_dir, f"parallelism-q{q}-n{n}.txt")
            if os.path.exists(candidate):
                return designs.build_parallelism(q, n, source=candidate)
        packaged = files.packaged_parallelism_path(q, n)
        if packaged is not None:
            return designs.build_parallelism(q, n, source=str(packaged))
        return designs.build_parallelism(q, n, source="search")
    if source == "search":
        return designs.build_parallelism(q, n, source="search")
    return designs.build_parallelism(q, n, source=source)


def cmd_build(args) -> int:
    q = args.q
    if args.name == "fano-m4":
        assignment = equations.uniform_family_solution("S(2,3,7;4)", q)
        design = designs.construct_uniform_design(q, 2, 3, 7, 4, assignment)
    elif args.name == "s3484":
        assignment = equations.uniform_family_solution("S(3,4,8;4)", q)
        design = designs.construct_uniform_design(q, 3, 4, 8, 4, assignment)
    elif args.name == "s3485":
        design = designs.construct_s3485(q)
    elif args.name == "fano-m5":
        para = _resolve_parallelism(q, 4, args.parallelism)
        design = designs.construct_fano_m5(q, para)
    elif args.name == "recursive":
        k = args.k
        if k is None:
            raise SystemExit("build recursive needs --k")
        para = _resolve_parallelism(q, k + 1, args.parallelism)
        if args.base:
            base = files.parse_design_file(args.base)
        elif k == 3:
            base = designs.construct_uniform_design(2, 2, 3, 3, 1, {1: 1})
        else:
            raise SystemExit(f"build recursive with k={k} needs --base FILE")
        design = designs.construct_recursive(q, k, para, base)
    else:
        raise SystemExit(f"unknown build target {args.name!r}")
    out = args.output or f"{args.name}-q{q}.design"
    files.write_design(design, out)
    print(f"wrote {out} ({len(design.blocks)} distinct blocks)")
    return _report_verdict(designs.verify(design, jobs=args.jobs))


def cmd_puncture(args) -> int:
    design = files.parse_design_file(args.file)
    punctured = designs.puncture_design(design)
    if args.output:
        out = args.output
    else:
        stem, ext = os.path.splitext(args.file)
        out = f"{stem}-m{punctured.params.m}{ext or '.design'}"
    files.write_design(punctured, out)
    print(f"wrote {out}")
    return _report_verdict(designs.verify(punctured, jobs=args.jobs))


def cmd_spread(args) -> int:
    spread = designs.build_spread(args.q, args.n)
    lines = ["qsteiner-spread v1", f"q={args.q} n={args.n}"]
    for line in spread.lines:
        lines.append(";".join(files._format_row(r, args.q) for r in line.rows))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    print(f"PASS: {len(spread.lines)} lines partition the nonzero vectors")
    return 0


def cmd_parallelism(args) -> int:
    para = _resolve_parallelism(args.q, args.n, args.source)
    out = args.output or f"parallelism-q{args.q}-n{args.n}.txt"
    files.write_parallelism(para, out)
    sizes = {len(sp.lines) for sp in para.spreads}
    print(f"wrote {out} ({len(para.spreads)} spreads of "
          f"{', '.join(map(str, sorted(sizes)))} lines)")
    return 0


def _parse_ops(op_args, ncols: int) -> list:
    ops = []
    for item in op_args or ():
        col, _, coeffs = item.partition("=")
        try:
            j = int(col)
            cs = tuple(int(c) for c in coeffs.split(","))
        except ValueError:
            raise SystemExit(f"bad op {item!r}; expected J=c0,c1,...")
        if len(cs) != ncols:
            raise SystemExit(f"op {item!r} needs {ncols} coefficients")
        ops.append((j, cs))
    return ops


def cmd_transform(args) -> int:
    design = files.parse_design_file(args.file)
    ops = _parse_ops(args.op, design.params.m)
    transformed = designs.apply_transform(design, ops)
    if args.output:
        out = args.output
    else:
        stem, ext = os.path.splitext(args.file)
        out = f"{stem}-transformed{ext or '.design'}"
    files.write_design(transformed, out)
    print(f"wrote {out}")
    return _report_verdict(designs.verify(transformed, jobs=args.jobs))


def _add_system_args(sub) -> None:
    for name in ("q", "t", "k", "n", "m"):
        sub.add_argument(name, type=int)
    sub.add_argument("--pin", action="append", metavar="Xr=VALUE",
                     help="pin a variable, e.g. --pin X0=1 (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsteiner",
        description="Exact construction, solving and verification of "
                    "punctured q-Steiner systems S_q(t,k,n;m).")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gauss", help="q-binomial coefficient [n choose k]_q")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_gauss)

    p = subs.add_parser("necessary",
                        help="divisibility necessary conditions for S_q(t,k,n)")
    for name in ("t", "k", "n", "q"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_necessary)

    p = subs.add_parser("oracle",
                        help="compare a closed-form count with its brute-force oracle")
    p.add_argument("count", choices=("N", "C", "D"))
    p.add_argument("params", type=int, nargs="+",
                   help="N: s m t n q | C: s t r k q | D: s r m q")
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("uniform-solve",
                        help="solve the uniform equation system for S_q(t,k,n;m)")
    _add_system_args(p)
    p.add_argument("--full", action="store_true",
                   help="solve the per-subspace system instead")
    p.set_defaults(func=cmd_uniform_solve)

    p = subs.add_parser("full-solve",
                        help="solve the per-subspace equation system")
    _add_system_args(p)
    p.set_defaults(func=cmd_full_solve)

    p = subs.add_parser("verify", help="re-verify a design file")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("build", help="build, write and verify a design")
    p.add_argument("name",
                   choices=("fano-m4", "s3484", "s3485", "fano-m5", "recursive"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, help="parameter k for 'recursive'")
    p.add_argument("--parallelism", default="auto",
                   help="auto | search | path to a parallelism file")
    p.add_argument("--base", help="base design file for 'recursive'")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_build)

    p = subs.add_parser("puncture",
                        help="puncture a design file once and verify the result")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_puncture)

    p = subs.add_parser("spread", help="build the field-extension spread of F_q^n")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_spread)

    p = subs.add_parser("parallelism",
                        help="search or load a parallelism and write it out")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--source", default="auto",
                   help="auto | search | path to a parallelism file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_parallelism)

    p = subs.add_parser("transform",
                        help="apply column transforms to a design file")
    p.add_argument("file")
    p.add_argument("--op", action="append", metavar="J=c0,c1,...",
                   help="replace column J by the given combination "
                        "(0-based; coefficient of column J must be nonzero)")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_transform)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
