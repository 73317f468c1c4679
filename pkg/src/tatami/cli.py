"""Command-line entry point: ``tatami <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .catgen import gen_vh_codes
from .core import Covering, InvalidCodeError, TernaryCode, apply_flips, decode_code, tile_census
from .oracle import MAX_TILING_N, enumerate_tn
from .polylab.conjectures import check_conjectures
from .polylab.generating import d_poly, p_poly, r_poly, vh_coeff, vh_poly
from .render import RenderSpec, render, render_ascii, render_svg_sheet
from .verify import run_verify

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _need_n(n: int, low: int = 2) -> None:
    if n < low:
        raise UsageError(f"--n must be at least {low}")


def _print_row(values) -> None:
    print(" ".join(str(v) for v in values))


def cmd_count(args) -> int:
    _need_n(args.n)
    if args.k is None:
        _print_row(vh_poly(args.n).coeffs)
    else:
        print(vh_coeff(args.n, args.k) if args.k >= 0 else 0)
    return EXIT_OK


def cmd_gen(args) -> int:
    _need_n(args.n)
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    n = args.n
    found: list[tuple[TernaryCode, Covering]] = []

    def keep(code: TernaryCode) -> None:
        grid = apply_flips(n, code.flips())
        found.append((code, Covering(n, tuple("".join(row) for row in grid))))

    gen_vh_codes(n, args.k, keep)
    out = sys.stdout
    if args.format == "jsonl":
        for index, (code, cov) in enumerate(found):
            v, h, _ = tile_census(cov)
            out.write(json.dumps({"n": n, "k": args.k, "index": index, "code": str(code),
                                  "key": cov.key, "v": v, "h": h}) + "\n")
    elif args.format == "ascii":
        for index, (code, cov) in enumerate(found):
            out.write(f"# {index} code={code}\n{render_ascii(cov)}\n\n")
    elif found:
        spec = RenderSpec("svg", cell_size=args.cell_size, columns=args.columns)
        out.write(render_svg_sheet([cov for _, cov in found], spec))
    return EXIT_OK


def cmd_render(args) -> int:
    _need_n(args.n)
    try:
        code = TernaryCode.parse(args.n, args.code)
        cov = decode_code(args.n, code)
    except InvalidCodeError as exc:
        print(f"invalid code {exc.code}:", file=sys.stderr)
        for kind, where in exc.report.violations:
            print(f"  {kind}: {where}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    spec = RenderSpec(args.format, cell_size=args.cell_size, highlight_flipped=not args.plain)
    text = render(cov, spec)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


_POLYS = {"vh": vh_poly, "d": d_poly, "p": p_poly, "r": r_poly}


def cmd_poly(args) -> int:
    _need_n(args.n)
    _print_row(_POLYS[args.which](args.n).coeffs)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.oracle_nmax > MAX_TILING_N:
        raise UsageError(f"--oracle-nmax is limited to {MAX_TILING_N}")
    results = run_verify(args.nmax, args.oracle_nmax, corrupt_d=args.inject_corrupt_d)
    failures = [r for r in results if not r.ok]
    for r in failures if not args.verbose else results:
        print(r.line())
    verdict = "FAIL" if failures else "PASS"
    print(f"{verdict}: {len(results) - len(failures)}/{len(results)} checks "
          f"(nmax={args.nmax}, oracle-nmax={args.oracle_nmax})")
    return EXIT_CHECK if failures else EXIT_OK


def cmd_conjectures(args) -> int:
    if args.nmax < 3:
        raise UsageError("--nmax must be at least 3")
    reports = [r.to_json() for r in check_conjectures(args.nmax)]
    print(json.dumps(reports, indent=2))
    return EXIT_OK


def cmd_oracle(args) -> int:
    _need_n(args.n)
    if args.n > MAX_TILING_N:
        raise UsageError(f"--n is limited to {MAX_TILING_N} for the brute-force oracle")
    for cov in enumerate_tn(args.n):
        v, h, _ = tile_census(cov)
        sys.stdout.write(json.dumps({"n": args.n, "key": cov.key, "v": v, "h": h}) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tatami", description="Tatami coverings of the n x n grid with n monominoes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="coefficients of VH_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gen", help="generate the coverings with census k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("jsonl", "ascii", "svg"), default="jsonl")
    p.add_argument("--cell-size", type=int, default=12)
    p.add_argument("--columns", type=int, default=6)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw the covering of a ternary code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--code", required=True, help='comma-separated symbols, e.g. "0,1,-1,0"')
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--cell-size", type=int, default=12)
    p.add_argument("--plain", action="store_true", help="do not mark flipped monominoes")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("poly", help="coefficient list of VH_n, D_n, P_n or R_n(x,1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=tuple(_POLYS), default="vh")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run the theorem and oracle suites")
    p.add_argument("--nmax", type=int, default=60)
    p.add_argument("--oracle-nmax", type=int, default=9)
    p.add_argument("--verbose", action="store_true", help="print passing checks too")
    p.add_argument("--inject-corrupt-d", type=int, metavar="N", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjectures", help="check the conjectured properties, JSON report")
    p.add_argument("--nmax", type=int, default=30)
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("oracle", help="brute-force enumeration of T_n as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tatami {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"tatami {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
