"""Command-line interface.

Every subcommand prints one deterministic report to standard output and
returns a meaningful exit code: 0 on success, 1 when a mathematical check
fails (the message names the violated statement), 2 on malformed input.
Reports echo the package version and the seed in a header; big integers
and rationals are serialized as decimal strings so no consumer has to
worry about 64-bit overflow.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import __version__
from .combinatorics import (
    bipermutation_count,
    count_bipermutations_recursively,
    enumerate_bipermutations,
)
from .deformation import (
    enumerate_walls,
    format_support_csv,
    generic_wallcross_oracle,
    is_ample,
    is_nef,
    minkowski_quotient,
    named_support,
    parse_support_csv,
    same_inequality,
    wall_count,
    wall_inequality,
    wall_value_table,
)
from .geometry import (
    SupportFunction,
    facet_check,
    facets_json,
    hyperplane_face_counts,
    symmetry_checks,
    vertices_json,
)
from .invariants import (
    bieulerian_by_descents,
    bieulerian_by_ehrhart,
    f_generating_check,
    f_vector_bruteforce,
    f_vector_formula,
    h_from_f,
    logconcavity_check,
    polytope_f_vector,
    sweep_orientation_check,
    unimodality_check,
)
from .polynomials import real_root_check
from .triangulation import (
    cover_check,
    face_to_face_check,
    hstar_consistency,
    pi1_lattice_check,
    unimodularity_check,
)

MAX_THREADS = 64

SUITES = (
    "combinatorics",
    "invariants",
    "geometry",
    "triangulation",
    "deformation",
    "all",
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _threads(text: str) -> int:
    value = int(text)
    if not 1 <= value <= MAX_THREADS:
        raise argparse.ArgumentTypeError(f"must be in 1..{MAX_THREADS}")
    return value


def _default_threads() -> int:
    raw = os.environ.get("BIPERMUTAHEDRON_THREADS", "1")
    try:
        return max(1, min(MAX_THREADS, int(raw)))
    except ValueError:
        return 1


def _add_common(parser: argparse.ArgumentParser, formats=("json", "csv", "text")):
    parser.add_argument("--n", type=_positive_int, required=True)
    parser.add_argument("--format", choices=formats, default="json")
    parser.add_argument(
        "--threads",
        type=_threads,
        default=_default_threads(),
        help="worker cap for library calls (current routines are sequential)",
    )


def _header_lines(seed: int | None) -> list[str]:
    seed_text = "none" if seed is None else str(seed)
    return [f"# bipermutahedron {__version__} seed={seed_text}"]


def _emit(payload: dict, fmt: str, seed: int | None, text_body: Iterable[str]) -> None:
    if fmt == "json":
        report = {"version": __version__, "seed": seed}
        report.update(payload)
        print(json.dumps(report, indent=2))
    else:
        for line in _header_lines(seed):
            print(line)
        for line in text_body:
            print(line)


def _coeff_strings(values: Iterable) -> list[str]:
    return [str(v) for v in values]


def _cmd_fvector(args) -> int:
    route = f_vector_formula if args.method == "formula" else f_vector_bruteforce
    fan = route(args.n)
    coeffs = fan if args.object == "fan" else [1] + fan[::-1]
    _emit(
        {
            "n": args.n,
            "object": args.object,
            "method": args.method,
            "coeffs": _coeff_strings(coeffs),
        },
        args.format,
        None,
        [",".join(_coeff_strings(coeffs))],
    )
    return 0


def _cmd_hvector(args) -> int:
    route = f_vector_formula if args.method == "formula" else f_vector_bruteforce
    poly = h_from_f(route(args.n), 2 * args.n - 2)
    _emit(
        {"n": args.n, "method": args.method, "coeffs": _coeff_strings(poly.coefficients)},
        args.format,
        None,
        [",".join(_coeff_strings(poly.coefficients))],
    )
    return 0


def _bieulerian_routes(n: int):
    return {
        "descents": lambda: bieulerian_by_descents(n),
        "hfromf": lambda: h_from_f(f_vector_formula(n), 2 * n - 2),
        "ehrhart": lambda: bieulerian_by_ehrhart(n),
    }


def _cmd_bieulerian(args) -> int:
    routes = _bieulerian_routes(args.n)
    if args.method == "all":
        results = {name: route() for name, route in routes.items()}
        values = set(results.values())
        if len(values) != 1:
            print(
                "route disagreement: the descent, h-from-f, and Ehrhart "
                "routes must all produce the same biEulerian polynomial, got "
                + "; ".join(f"{k}={list(v.coefficients)}" for k, v in results.items()),
                file=sys.stderr,
            )
            return 1
        poly = values.pop()
    else:
        poly = routes[args.method]()
    _emit(
        {"n": args.n, "method": args.method, "coeffs": _coeff_strings(poly.coefficients)},
        args.format,
        None,
        [",".join(_coeff_strings(poly.coefficients))],
    )
    return 0


def _cmd_vertices(args) -> int:
    data = vertices_json(args.n)
    body = [
        "{} top={} bottom={}".format(
            v["biperm"],
            ",".join(map(str, v["top"])),
            ",".join(map(str, v["bottom"])),
        )
        for v in data["vertices"]
    ]
    _emit(data, args.format, None, body)
    return 0


def _cmd_facets(args) -> int:
    data = facets_json(args.n)
    body = [
        "{};{};{}".format(
            ",".join(map(str, f["S"])),
            ",".join(map(str, f["T"])),
            f["rhs"],
        )
        for f in data["facets"]
    ]
    _emit(data, args.format, None, body)
    return 0


def _cmd_walls(args) -> int:
    walls = [
        w
        for w in enumerate_walls(args.n)
        if args.kind == "all" or w.kind == args.kind
    ]
    data = {
        "n": args.n,
        "kind": args.kind,
        "count": len(walls),
        "walls": [
            {"kind": w.kind, "bisequence": str(w.bisequence)} for w in walls
        ],
    }
    _emit(data, args.format, None, (f"{w.kind} {w.bisequence}" for w in walls))
    return 0


def _load_support(spec_text: str, n: int) -> SupportFunction:
    if spec_text in ("biperm", "harmonic"):
        return named_support(spec_text, n)
    with open(spec_text, "r", encoding="utf-8") as handle:
        return parse_support_csv(handle.read(), n)


def _cmd_nef_check(args) -> int:
    h = _load_support(args.support, args.n)
    verdict = is_ample(h, args.n) if args.ample else is_nef(h, args.n)
    payload = {
        "n": args.n,
        "support": args.support,
        "strict": args.ample,
        "passed": verdict.passed,
        "witness": None
        if verdict.passed
        else {
            "wall": str(verdict.witness_wall),
            "value": str(verdict.witness_value),
        },
    }
    body = ["passed" if verdict.passed else
            f"failed {verdict.witness_wall} value={verdict.witness_value}"]
    _emit(payload, args.format, None, body)
    if not verdict.passed:
        print(
            f"the wall-crossing inequality at wall {verdict.witness_wall} "
            f"evaluates to {verdict.witness_value}, violating the "
            + ("strict positivity required for an ample class"
               if args.ample
               else "nonnegativity required for a nef class"),
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_quotient(args) -> int:
    p = _load_support(args.p, args.n)
    q = _load_support(args.q, args.n)
    result = minkowski_quotient(p, q, args.n)
    value = "unbounded" if result.status == "unbounded" else str(result.value)
    payload = {
        "n": args.n,
        "p": args.p,
        "q": args.q,
        "status": result.status,
        "value": value,
        "witness": result.witness,
    }
    _emit(payload, args.format, None, [value])
    if result.status == "not-summand":
        print(
            f"no positive multiple of Q is a Minkowski summand of P: the "
            f"wall-crossing value of P vanishes at wall {result.witness} "
            f"while Q's is positive",
            file=sys.stderr,
        )
        return 1
    return 0


def _suite_combinatorics(n: int, samples: int, seed: int | None) -> tuple[list[str], dict]:
    failures = []
    for m in range(1, n + 1):
        if sum(1 for _ in enumerate_bipermutations(m)) != bipermutation_count(m):
            failures.append(f"bipermutation count at n={m} differs from (2n)!/2^n")
        if count_bipermutations_recursively(m) != bipermutation_count(m):
            failures.append(f"recursive count at n={m} differs from (2n)!/2^n")
        if not bieulerian_by_descents(m).is_palindromic():
            failures.append(f"descent histogram at n={m} is not palindromic")
    return failures, {}


def _suite_invariants(n: int, samples: int, seed: int | None) -> tuple[list[str], dict]:
    failures = []
    for m in range(1, n + 1):
        if f_vector_formula(m) != f_vector_bruteforce(m):
            failures.append(f"f-vector formula and brute force differ at n={m}")
        routes = _bieulerian_routes(m)
        values = {name: route() for name, route in routes.items()}
        if len(set(values.values())) != 1:
            failures.append(f"biEulerian routes disagree at n={m}")
        poly = values["descents"]
        if poly.evaluate(1) != bipermutation_count(m):
            failures.append(f"B_n(1) differs from (2n)!/2^n at n={m}")
        if real_root_check(poly) != "real-rooted":
            failures.append(f"B_n fails the real-rootedness certificate at n={m}")
        if not (logconcavity_check(poly) and unimodality_check(poly)):
            failures.append(f"B_n fails log-concavity/unimodality at n={m}")
        if not sweep_orientation_check(min(m, 3)).passed:
            failures.append(f"sweep indegrees differ from descents at n={min(m, 3)}")
    if not f_generating_check(min(n, 4), 2 * min(n, 4)):
        failures.append("generating-function coefficients differ from the f-vector")
    return failures, {}


def _suite_geometry(n: int, samples: int, seed: int | None) -> tuple[list[str], dict]:
    failures = []
    for m in range(1, n + 1):
        if not facet_check(m).passed:
            failures.append(f"facet pairing bound fails at n={m}")
        report = symmetry_checks(m)
        if not (
            report.rays_relabel_invariant
            and report.rays_swap_invariant
            and report.vertices_relabel_equivariant
            and report.vertices_swap_reverse
        ):
            failures.append(f"relabeling/swap symmetry fails at n={m}")
        if m >= 3 and report.negation_is_automorphism:
            failures.append(f"negation unexpectedly preserves the fan at n={m}")
    counts = hyperplane_face_counts(min(n, 3))
    if not counts.passed:
        failures.append("hyperplane face counts differ from the closed forms")
    return failures, {}


def _suite_triangulation(n: int, samples: int, seed: int | None) -> tuple[list[str], dict]:
    failures = []
    if not pi1_lattice_check(n):
        failures.append("projection does not identify the two sublattices")
    if not unimodularity_check(n):
        failures.append("some simplex has determinant other than +-1")
    cover = cover_check(n, samples, seed if seed is not None else 0)
    if not cover.passed:
        failures.append(
            "a sampled point received a negative barycentric coefficient: "
            + "; ".join(cover.failures[:3])
        )
    f2f = face_to_face_check(min(n, 3), max(4, samples // 1000), seed if seed is not None else 0)
    if not f2f.passed:
        failures.append("two simplices fail to meet along a common face")
    if not hstar_consistency(n):
        failures.append("triangulation h-vector differs from the Ehrhart route")
    volumes = {str(n): str(bipermutation_count(n))}
    return failures, {"volumes": volumes}


def _suite_deformation(n: int, samples: int, seed: int | None) -> tuple[list[str], dict]:
    failures = []
    for wall in enumerate_walls(n):
        if not same_inequality(wall_inequality(wall), generic_wallcross_oracle(wall)):
            failures.append(f"closed-form inequality differs from the oracle at {wall}")
            break
    biperm = named_support("biperm", n)
    harmonic = named_support("harmonic", n)
    table_p = wall_value_table(biperm, n)
    expected_a = {"i": {2}, "ii": {2}, "iii": {4}} if n >= 3 else {"iii": {4}}
    for case, values in expected_a.items():
        if table_p.kind_a_values(case) != {Fraction(v) for v in values}:
            failures.append(f"kind-A case {case} values for the bipermutahedron differ")
    if table_p.kind_b and table_p.kind_b_min() < n:
        failures.append("a kind-B wall value for the bipermutahedron is below n")
    table_h = wall_value_table(harmonic, n)
    if table_h.kind_b and set(table_h.kind_b) != {Fraction(1)}:
        failures.append("kind-B values for the harmonic polytope differ from 1")
    result = minkowski_quotient(biperm, harmonic, n)
    if result.status != "ok" or result.value != 2:
        failures.append("the Minkowski quotient of the pair differs from 2")
    return failures, {}


def _cmd_check(args) -> int:
    suites = {
        "combinatorics": _suite_combinatorics,
        "invariants": _suite_invariants,
        "geometry": _suite_geometry,
        "triangulation": _suite_triangulation,
        "deformation": _suite_deformation,
    }
    selected = list(suites) if args.suite == "all" else [args.suite]
    needs_seed = "triangulation" in selected
    if needs_seed and args.seed is None:
        print("a seed is required for randomized suites", file=sys.stderr)
        return 2
    failures: list[str] = []
    extras: dict = {}
    for name in selected:
        suite_failures, suite_extras = suites[name](args.n, args.samples, args.seed)
        failures.extend(f"{name}: {msg}" for msg in suite_failures)
        extras.update(suite_extras)
    payload = {
        "suite": args.suite,
        "n": args.n,
        "samples": args.samples,
        "passed": not failures,
        "failures": failures,
    }
    payload.update(extras)
    body = ["passed" if not failures else "failed"] + failures
    _emit(payload, args.format, args.seed, body)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipermutahedron",
        description=(
            "exact constructions and checks for the bipermutahedron, its "
            "normal fan, and their invariants"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fvector", help="face numbers of the fan or the polytope")
    _add_common(p)
    p.add_argument("--object", choices=("fan", "polytope"), default="fan")
    p.add_argument("--method", choices=("formula", "bruteforce"), default="formula")
    p.set_defaults(func=_cmd_fvector)

    p = sub.add_parser("hvector", help="h-vector of the fan from its f-vector")
    _add_common(p)
    p.add_argument("--method", choices=("formula", "bruteforce"), default="formula")
    p.set_defaults(func=_cmd_hvector)

    p = sub.add_parser("bieulerian", help="biEulerian polynomial by any route")
    _add_common(p)
    p.add_argument(
        "--method",
        choices=("descents", "hfromf", "ehrhart", "all"),
        default="all",
    )
    p.set_defaults(func=_cmd_bieulerian)

    p = sub.add_parser("vertices", help="vertex table of the polytope")
    _add_common(p)
    p.set_defaults(func=_cmd_vertices)

    p = sub.add_parser("facets", help="facet right-hand sides of the polytope")
    _add_common(p)
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("walls", help="codimension-1 cones of the fan")
    _add_common(p)
    p.add_argument("--kind", choices=("A", "B", "all"), default="all")
    p.set_defaults(func=_cmd_walls)

    p = sub.add_parser("nef-check", help="wall-crossing inequalities for a support")
    _add_common(p)
    p.add_argument(
        "--support",
        required=True,
        help="'biperm', 'harmonic', or a CSV file of lines S;T;value",
    )
    p.add_argument("--ample", action="store_true", help="require strict inequalities")
    p.set_defaults(func=_cmd_nef_check)

    p = sub.add_parser("quotient", help="Minkowski quotient P/Q")
    _add_common(p)
    p.add_argument("--p", default="biperm", help="nef numerator: name or CSV file")
    p.add_argument("--q", default="harmonic", help="denominator: name or CSV file")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("check", help="run a verification suite")
    _add_common(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--samples", type=_nonnegative_int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
