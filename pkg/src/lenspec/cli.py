"""Command-line surface.

Subcommands: count, grid, fig3, enumerate, spectrum. Everything is emitted
as CSV or JSON lines for external consumption; grid, fig3 and spectrum can
additionally render a matplotlib figure next to the delimited output via
--plot. All output is byte-stable for fixed flags and seed.

Exit codes: 0 success, 2 usage, 3 undefined quantity, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from .asymptotics import asymptotic_ratio_point
from .classcount import count_classes
from .oracle import (
    DEFAULT_N_CAP,
    DEFAULT_V_CAP,
    SizeError,
    enumerate_orbits,
    group_by_class,
)
from .spectrum import (
    build_spectrum,
    default_lengths,
    spectrum_csv,
    spectrum_json_lines,
)
from .walks import (
    GraphSpec,
    UndefinedDegeneracyError,
    closed_walks_complete,
    cyclic_orbit_count,
    is_extension,
    mean_degeneracy,
    naive_orbit_count,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNDEFINED = 3
EXIT_CAP = 4

GRID_QUANTITIES = (
    "classes",
    "orbits",
    "walks",
    "mean_degeneracy",
    "log10_mean_degeneracy",
    "asymptotic_ratio",
)

_DPS = 60


def _dec15(value) -> str:
    """Render an exact value as a decimal at 15 significant digits."""
    with mpmath.workdps(_DPS):
        if isinstance(value, Fraction):
            x = mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)
        else:
            x = mpmath.mpf(value)
        return mpmath.nstr(x, 15)


def _log10_frac(value: Fraction) -> str:
    with mpmath.workdps(_DPS):
        x = mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)
        return mpmath.nstr(mpmath.log10(x), 15)


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A or A:B")
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_table(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        lines = [
            json.dumps({c: row.get(c) for c in columns}, separators=(",", ":"))
            for row in rows
        ]
        return "\n".join(lines) + ("\n" if lines else "")
    out = [",".join(columns)]
    for row in rows:
        cells = []
        for c in columns:
            value = row.get(c)
            if value is None:
                cells.append("")
            elif isinstance(value, bool):
                cells.append("true" if value else "false")
            else:
                cells.append(str(value))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def _cmd_count(args) -> int:
    n, V = args.n, args.V
    if n < 1 or V < 2:
        raise ValueError(f"need n >= 1 and V >= 2, got n={n}, V={V}")
    marker = " (extension)" if is_extension(n) and n >= 2 else ""
    if args.quantity == "classes":
        print(count_classes(n, V))
    elif args.quantity == "walks":
        print(closed_walks_complete(n, V))
    elif args.quantity == "orbits":
        if args.naive_orbits:
            value = naive_orbit_count(n, V)
            print(f"{value.numerator}/{value.denominator} ({_dec15(value)})")
        else:
            print(f"{cyclic_orbit_count(n, V)}{marker}")
    else:  # mean-degeneracy
        d = mean_degeneracy(n, V, naive=args.naive_orbits)
        print(f"{d.numerator}/{d.denominator} ({_dec15(d)}){marker}")
    return EXIT_OK


def _grid_row(n: int, V: int, quantities: list[str], naive: bool) -> dict:
    row: dict = {"n": n, "V": V, "extension": is_extension(n)}
    classes = count_classes(n, V) if ("classes" in quantities or
                                      "mean_degeneracy" in quantities or
                                      "log10_mean_degeneracy" in quantities) else None
    if "classes" in quantities:
        row["classes"] = classes
    if "walks" in quantities:
        row["walks"] = closed_walks_complete(n, V)
    if "orbits" in quantities:
        row["orbits"] = cyclic_orbit_count(n, V)
    if "mean_degeneracy" in quantities or "log10_mean_degeneracy" in quantities:
        if classes:
            d = mean_degeneracy(n, V, naive=naive)
            if "mean_degeneracy" in quantities:
                row["mean_degeneracy"] = _dec15(d)
            if "log10_mean_degeneracy" in quantities:
                row["log10_mean_degeneracy"] = _log10_frac(d)
        else:
            for q in ("mean_degeneracy", "log10_mean_degeneracy"):
                if q in quantities:
                    row[q] = None
    if "asymptotic_ratio" in quantities:
        if n % 2 == 0 and V >= 3:
            row["asymptotic_ratio"] = mpmath.nstr(asymptotic_ratio_point(n, V).ratio, 15)
        else:
            row["asymptotic_ratio"] = None  # pairing defined for even n, V >= 3
    return row


def _cmd_grid(args) -> int:
    n_lo, n_hi = args.n_range
    v_lo, v_hi = args.v_range
    if n_lo < 2 or v_lo < 2:
        raise ValueError("grid requires n >= 2 and V >= 2")
    quantities = args.quantities
    rows = [
        _grid_row(n, V, quantities, args.naive_orbits)
        for n in range(n_lo, n_hi + 1)
        for V in range(v_lo, v_hi + 1)
    ]
    columns = ["n", "V", "extension"] + list(quantities)
    _write_output(_emit_table(rows, columns, args.format), args.output)
    if args.plot:
        from .plots import plot_grid

        plot_grid(rows, quantities, args.plot)
    return EXIT_OK


def _cmd_fig3(args) -> int:
    if args.n_max < 2:
        raise ValueError("need --n-max >= 2")
    rows = []
    for V in args.V:
        if V < 3:
            raise ValueError("asymptotic ratio needs V >= 3")
        for n in range(2, args.n_max + 1, 2):
            point = asymptotic_ratio_point(n, V)
            rows.append(
                {
                    "V": V,
                    "n": n,
                    "exact_pair": point.exact_pair,
                    "asymptotic_pair": mpmath.nstr(point.asymptotic_pair, 15),
                    "ratio": mpmath.nstr(point.ratio, 15),
                }
            )
    columns = ["V", "n", "exact_pair", "asymptotic_pair", "ratio"]
    _write_output(_emit_table(rows, columns, args.format), args.output)
    if args.plot:
        from .plots import plot_ratio

        plot_ratio(rows, args.plot)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.n < 2 or args.V < 2:
        raise ValueError("need n >= 2 and V >= 2")
    orbits = enumerate_orbits(
        GraphSpec.complete(args.V), args.n, n_cap=args.n_cap, v_cap=args.v_cap
    )
    classes: dict = {}
    for orbit in orbits:
        from .oracle import class_code_of

        code = class_code_of(orbit)
        degeneracy, example = classes.get(code, (0, None))
        classes[code] = (
            degeneracy + 1,
            orbit if example is None or orbit < example else example,
        )
    lines = []
    for code in sorted(classes):
        degeneracy, example = classes[code]
        lines.append(
            json.dumps(
                {
                    "code": [[i, j, q] for i, j, q in code.bonds],
                    "degeneracy": degeneracy,
                    "example_orbit": list(example),
                },
                separators=(",", ":"),
            )
        )
    _write_output("\n".join(lines) + ("\n" if lines else ""), args.output)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    if args.V < 2 or args.n_max < 2:
        raise ValueError("need V >= 2 and n_max >= 2")
    assignment = default_lengths(args.V, scheme=args.scheme, seed=args.seed)
    entries = build_spectrum(
        GraphSpec.complete(args.V),
        args.n_max,
        assignment,
        n_cap=args.n_cap,
        v_cap=args.v_cap,
    )
    text = spectrum_csv(entries) if args.format == "csv" else spectrum_json_lines(entries)
    _write_output(text, args.output)
    if args.plot:
        from .plots import plot_spectrum

        plot_spectrum(entries, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP)
    common.add_argument("--v-cap", type=int, default=DEFAULT_V_CAP)
    common.add_argument("--output", default=None, help="write to file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="lenspec",
        description="Exact periodic-orbit degeneracy counts on complete graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="one exact value")
    p.add_argument("--quantity", required=True,
                   choices=("classes", "orbits", "walks", "mean-degeneracy"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--V", type=int, required=True)
    p.add_argument("--naive-orbits", action="store_true",
                   help="use N(n,V)/n even at composite n")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("grid", parents=[common], help="(n, V) table of quantities")
    p.add_argument("--n-range", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--v-range", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--quantities", type=lambda s: s.split(","),
                   default=list(GRID_QUANTITIES))
    p.add_argument("--naive-orbits", action="store_true")
    p.add_argument("--plot", default=None, help="also render a figure to this file")
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("fig3", parents=[common],
                       help="exact vs asymptotic class-count pair ratio, even n")
    p.add_argument("--V", type=_parse_int_list, required=True, metavar="V1,V2,...")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--plot", default=None, help="also render a figure to this file")
    p.set_defaults(func=_cmd_fig3)

    p = sub.add_parser("enumerate", parents=[common],
                       help="oracle listing of degeneracy classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--V", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("spectrum", parents=[common],
                       help="degenerate length spectrum")
    p.add_argument("--V", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--scheme", choices=("sqrt-primes", "uniform-random"),
                   default="sqrt-primes")
    p.add_argument("--plot", default=None, help="also render a figure to this file")
    p.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UndefinedDegeneracyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
