"""Command-line entry point.

Reports are ``key: value`` lines; vectors are space-separated integers and
codes are printed one word per line in the code file format.

Exit codes: 0 success, 1 verification failure, 2 input or capacity error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import designs
from .classify import verify_theorem
from .equivalence import are_equivalent
from .errors import CapacityError, InputError
from .hypercube import Code, format_word, read_code
from .linear import HAMMING_7_4_CHECKS, external_distance, hamming_7_4
from .regularity import (
    EquitableFailure,
    OuterDistribution,
    antipodal_check,
    is_completely_regular,
    outer_distribution_check,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def design_report(code: Code) -> list[str]:
    lines = []
    for k in range(1, code.n):
        blocks = designs.weight_class(code, k)
        if not blocks.blocks:
            continue
        lines.append(f"weight_class: {k}")
        lines.append(f"blocks: {len(blocks)}")
        params = designs.design_parameters(blocks)
        if params is None:
            lines += ["design_strength: 0", "design_lambda: none"]
        else:
            t, v, bk, lam = params
            lines += [f"design_strength: {t}", f"design_lambda: {lam}", f"design: {t}-({v},{bk},{lam})"]
        if len(blocks) >= 2:
            lines.append(f"block_intersection_numbers: {_ints(sorted(designs.intersection_numbers(blocks)))}")
        lines.append(f"symmetric: {_bool(designs.is_symmetric(blocks))}")
    return lines


def analyze_report(code: Code, check_outer: bool = False) -> list[str]:
    n = code.n
    delta = code.minimum_distance()
    verdict = is_completely_regular(code)
    part = verdict.partition
    lines = [
        f"n: {n}",
        f"size: {len(code)}",
        f"min_distance: {'none' if delta is None else delta}",
        f"covering_radius: {part.rho}",
        f"cell_sizes: {_ints(part.cell_sizes)}",
        f"completely_regular: {_bool(verdict.regular)}",
    ]
    if verdict.regular:
        lines.append(f"intersection_array_b: {_ints(verdict.array.b)}")
        lines.append(f"intersection_array_c: {_ints(verdict.array.c)}")
    else:
        f: EquitableFailure = verdict.failure
        lines.append(
            f"equitable_witness: cell {f.i} "
            f"{format_word(f.x, n)} c={f.x_counts[0]} b={f.x_counts[1]} "
            f"{format_word(f.y, n)} c={f.y_counts[0]} b={f.y_counts[1]}"
        )
    lines.append(f"antipodal_C_rho_eq_1_plus_C: {_bool(antipodal_check(code, part))}")
    if check_outer:
        outer = outer_distribution_check(code, part)
        if isinstance(outer, OuterDistribution):
            lines.append("outer_distribution: constant")
            lines += [f"outer_distribution_row_{i}: {_ints(row)}" for i, row in enumerate(outer.table)]
        else:
            lines.append(
                f"outer_distribution: varies cell {outer.i} k={outer.k} "
                f"{format_word(outer.v, n)} {format_word(outer.w, n)}"
            )
    return lines + design_report(code)


def demo_hamming7() -> list[str]:
    ham = hamming_7_4()
    half = ham.even_half()
    half_code = half.to_code()
    s = external_distance(half)
    delta = half.minimum_distance()
    lines = ["parity_check_matrix:", *HAMMING_7_4_CHECKS]
    lines.append(f"hamming_codewords: {2 ** ham.k}")
    lines += ham.to_code().to_strings()
    lines += [
        f"weight_distribution: {_ints(ham.weight_distribution())}",
        f"hamming_min_distance: {ham.minimum_distance()}",
        f"even_half_words: {len(half_code)}",
        *half_code.to_strings(),
        f"even_half_weight_distribution: {_ints(half.weight_distribution())}",
        f"dual_equals_even_half: {_bool(ham.dual().to_code() == half_code)}",
        f"external_distance: {s}",
        f"even_half_min_distance: {delta}",
        f"delta_eq_2s_minus_2: {_bool(delta == 2 * s - 2)}",
    ]
    comp = designs.complement_design(designs.weight_class(half_code, 4))
    t, v, k, lam = designs.design_parameters(comp)
    lines.append(f"complement_design: {t}-({v},{k},{lam})")
    lines.append("even_half_report:")
    return lines + analyze_report(half_code, check_outer=True)


DEMOS = {"hamming7": demo_hamming7}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crcodes", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report distance partition, regularity and designs of a code file")
    p.add_argument("path")
    p.add_argument("--check-outer", action="store_true", help="also run the definitional l_ik check")

    p = sub.add_parser("classify", help="classify completely regular codes with delta > max(2, n/2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta-min", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("equiv", help="decide equivalence of two code files")
    p.add_argument("path_a")
    p.add_argument("path_b")

    p = sub.add_parser("demo", help="print a worked example")
    p.add_argument("name", choices=sorted(DEMOS))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "analyze":
            lines = analyze_report(read_code(args.path), check_outer=args.check_outer)
        elif args.command == "equiv":
            a, b = read_code(args.path_a), read_code(args.path_b)
            lines = [f"equivalent: {_bool(are_equivalent(a, b))}"]
        elif args.command == "demo":
            lines = DEMOS[args.name]()
        else:
            if args.jobs < 1:
                raise InputError("--jobs must be at least 1")
            passed, text = verify_theorem(args.n, args.delta_min, args.jobs)
            sys.stdout.write(text)
            return EXIT_OK if passed else EXIT_FAIL
    except (InputError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
