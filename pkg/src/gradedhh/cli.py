"""Command-line reports over the library, as deterministic JSON.

Every subcommand prints one JSON document to stdout (and to --out FILE when
given) with byte-identical output across runs.  Exit codes: 0 when the
requested computation verifies (or is a plain computation), 1 when a
mathematical check is falsified, 2 for usage errors (unknown commands or
presets, malformed flags, violated preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dg_complexes, graded_algebra, hochschild, trace_obstruction
from .chromatic_presets import parse_preset, preset_families, _FAMILIES, ChromaticParams
from .graded_algebra import (
    element_from_string,
    localize,
    matrix_units_table,
    ore_check,
    presentation_to_json,
    table_from_presentation,
)

_NEGATIVE_VALUE_FLAGS = ("--window", "--element", "--s")


def _merge_negative_values(argv):
    """Let "--window -10:4" parse: argparse treats "-10:4" as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok in _NEGATIVE_VALUE_FLAGS
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and len(argv[i + 1]) > 1
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _parse_window(text: str):
    try:
        lo_str, hi_str = text.split(":")
        lo, hi = int(lo_str), int(hi_str)
    except ValueError:
        raise ValueError(f"window must be LO:HI, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"window must satisfy LO <= HI, got {text!r}")
    return lo, hi


def _parse_multidegree(pres, text: str):
    weights = {}
    text = text.strip()
    if text not in ("", "0"):
        for chunk in text.split(","):
            name, _, count = chunk.partition(":")
            name = name.strip()
            if not count:
                raise ValueError(f"multidegree entries are name:count, got {chunk!r}")
            try:
                weights[name] = int(count)
            except ValueError:
                raise ValueError(f"bad multidegree count in {chunk!r}") from None
    try:
        return hochschild.multidegree_from_dict(pres, weights)
    except KeyError as exc:
        raise ValueError(f"unknown generator in multidegree: {exc.args[0]}") from None


def _dims_json(dims: dict) -> dict:
    return {str(k): dims[k] for k in sorted(dims)}


def _emit(obj, out_path=None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Subcommand handlers return (json object, exit code).


def cmd_presets(args):
    if (args.p is None) != (args.n is None):
        raise ValueError("give both --p and --n, or neither")
    if args.p is None:
        return {
            "families": preset_families(),
            "address_format": "family:p:n",
            "examples": ["bp:2:2", "en:2:2", "a:2:2", "hh_a:3:1"],
        }, 0
    params = ChromaticParams(args.p, args.n)
    out = {}
    for family in preset_families():
        address = f"{family}:{args.p}:{args.n}"
        try:
            out[address] = presentation_to_json(_FAMILIES[family](params))
        except ValueError as exc:
            out[address] = {"error": str(exc)}
    return out, 0


def cmd_hh(args):
    pres = parse_preset(args.preset)
    m = _parse_multidegree(pres, args.multidegree)
    dims = hochschild.hh_dims(pres, m)
    return {
        "preset": args.preset,
        "multidegree": hochschild.multidegree_to_dict(pres, m),
        "internal_degree": hochschild.internal_degree(pres, m),
        "level_bound": sum(m),
        "dims": _dims_json(dims),
    }, 0


def cmd_hkr_check(args):
    pres = parse_preset(args.preset)
    if args.max_weight < 0:
        raise ValueError("--max-weight must be nonnegative")
    multidegrees = hochschild.multidegrees_up_to(pres, args.max_weight)
    report = hochschild.hkr_check(pres, multidegrees)
    obj = {"preset": args.preset, "max_weight": args.max_weight}
    obj.update(report.to_json())
    return obj, 0 if report.all_equal else 1


def cmd_obstruction(args):
    exponents = []
    if args.exponents.strip():
        try:
            exponents = [int(x) for x in args.exponents.split(",")]
        except ValueError:
            raise ValueError(
                f"--exponents must be comma-separated integers, got {args.exponents!r}"
            ) from None
    report = trace_obstruction.obstruction_report(args.p, args.n, exponents)
    return report.to_json(), 0 if report.all_ok else 1


def cmd_matrix_dga(args):
    window = _parse_window(args.window)
    ring = dg_complexes.homology_ring_check(args.p, args.n, window)
    structure = dg_complexes.dga_structure_check(args.p, args.n, window)
    ok = ring["all_ok"] and structure["d_squared_zero"] and structure["derivation_law"]
    obj = {
        "p": args.p,
        "n": args.n,
        "window": list(window),
        "homology": {
            "computed_dims": _dims_json(ring["computed_dims"]),
            "expected_product_dims": _dims_json(ring["expected_product_dims"]),
            "expected_splitting_dims": _dims_json(ring["expected_splitting_dims"]),
            "dims_match": ring["dims_match"],
        },
        "eps": {
            "degree": ring["eps_degree"],
            "is_cycle": ring["eps_is_cycle"],
            "nonzero_in_homology": ring["eps_nonzero_in_homology"],
            "square_zero": ring["eps_square_zero"],
            "central": ring["eps_central"],
        },
        "v_classes_nonzero": ring["v_classes_nonzero"],
        "structure": {
            "basis_size": structure["basis_size"],
            "pairs_checked": structure["pairs_checked"],
            "d_squared_zero": structure["d_squared_zero"],
            "derivation_law": structure["derivation_law"],
        },
        "all_ok": ok,
    }
    return obj, 0 if ok else 1


def cmd_quasi_iso(args):
    window = _parse_window(args.window)
    report = dg_complexes.commutative_model_check(args.p, args.n, window)
    obj = {
        "p": report["p"],
        "n": report["n"],
        "window": report["window"],
        "subalgebra_size": report["subalgebra_size"],
        "closed_under_product": report["closed_under_product"],
        "graded_commutative": report["graded_commutative"],
        "chain_map": report["chain_map"],
        "quasi_iso_per_degree": report["quasi_iso_per_degree"],
        "all_ok": report["all_ok"],
    }
    return obj, 0 if report["all_ok"] else 1


def cmd_ore_check(args):
    if (args.preset is None) == (args.table is None):
        raise ValueError("give exactly one of --preset or --table")
    if args.table is not None:
        if args.table != "matrix-units":
            raise ValueError(f"unknown built-in table {args.table!r}")
        table = matrix_units_table()
        s_elements = [s.strip() for s in args.s.split(",")]
        source = {"table": args.table}
    else:
        pres = parse_preset(args.preset)
        if args.window is None:
            raise ValueError("--window is required with --preset")
        window = _parse_window(args.window)
        table = table_from_presentation(pres, window, caps=args.cap)
        s_elements = []
        for chunk in args.s.split(","):
            el = element_from_string(pres, chunk.strip())
            combo = {}
            for mono, coeff in el.terms.items():
                combo[graded_algebra.mono_str(pres, mono)] = coeff
            s_elements.append(combo)
        source = {"preset": args.preset, "window": list(window)}
    report = ore_check(table, s_elements)
    obj = dict(source)
    obj["s"] = args.s
    obj.update(report.to_json())
    return obj, 1 if report.verdict == "violated" else 0


def cmd_cone(args):
    pres = parse_preset(args.preset)
    window = _parse_window(args.window)
    r = element_from_string(pres, args.element)
    report = dg_complexes.cone_report(pres, r, window, caps=args.cap)
    obj = {
        "preset": args.preset,
        "element": graded_algebra.poly_str(r),
        "window": report["window"],
        "homology_dims": _dims_json(report["homology_dims"]),
        "quotient_dims": _dims_json(report["quotient_dims"]),
        "regular": report["regular"],
        "dims_match_quotient": report["dims_match_quotient"],
        "comparison_binding": report["comparison_binding"],
    }
    failed = report["regular"] and not report["dims_match_quotient"]
    return obj, 1 if failed else 0


def cmd_localize(args):
    pres = parse_preset(args.preset)
    new = localize(pres, args.generator)
    return {
        "preset": args.preset,
        "generator": args.generator,
        "result": presentation_to_json(new),
    }, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedhh",
        description="Exact Hochschild homology and DG algebra reports",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="also write the JSON to FILE")

    p = sub.add_parser("presets", help="list preset families or print them")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(handler=cmd_presets)

    p = sub.add_parser("hh", help="Hochschild homology dims for one multidegree")
    p.add_argument("--preset", required=True)
    p.add_argument("--multidegree", required=True,
                   help='e.g. "v1:1,eps:1"; "0" for the empty multidegree')
    common(p)
    p.set_defaults(handler=cmd_hh)

    p = sub.add_parser("hkr-check",
                       help="computed vs predicted dims for all small multidegrees")
    p.add_argument("--preset", required=True)
    p.add_argument("--max-weight", type=int, required=True)
    common(p)
    p.set_defaults(handler=cmd_hkr_check)

    p = sub.add_parser("obstruction", help="trace-image obstruction report")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exponents", default="",
                   help="comma-separated v_i exponents (n-1 of them)")
    common(p)
    p.set_defaults(handler=cmd_obstruction)

    p = sub.add_parser("matrix-dga",
                       help="homology ring and structure checks of the cone DGA")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", required=True, help="LO:HI total degree window")
    common(p)
    p.set_defaults(handler=cmd_matrix_dga)

    p = sub.add_parser("quasi-iso",
                       help="commutative cycle subalgebra vs the full DGA")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", required=True, help="LO:HI total degree window")
    common(p)
    p.set_defaults(handler=cmd_quasi_iso)

    p = sub.add_parser("ore-check", help="right Ore condition on a window table")
    p.add_argument("--preset", default=None)
    p.add_argument("--table", default=None,
                   help='built-in table name (only "matrix-units")')
    p.add_argument("--s", required=True,
                   help="comma-separated generators of the multiplicative set")
    p.add_argument("--window", default=None, help="LO:HI degree window")
    p.add_argument("--cap", type=int, default=None,
                   help="per-generator exponent cap for the table basis")
    common(p)
    p.set_defaults(handler=cmd_ore_check)

    p = sub.add_parser("cone", help="cone homology vs quotient dims")
    p.add_argument("--preset", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--window", required=True, help="LO:HI total degree window")
    p.add_argument("--cap", type=int, default=None)
    common(p)
    p.set_defaults(handler=cmd_cone)

    p = sub.add_parser("localize", help="invert an even generator of a preset")
    p.add_argument("--preset", required=True)
    p.add_argument("--generator", required=True)
    common(p)
    p.set_defaults(handler=cmd_localize)

    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_merge_negative_values(argv))
    try:
        obj, code = args.handler(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(obj, args.out)
    return code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
