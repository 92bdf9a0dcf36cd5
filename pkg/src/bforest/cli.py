"""Command-line front end for batch tree-count experiments.

Subcommands cover spec validation, the three counting paths, the
arithmetic square structure, Mahler asymptotics, generating functions,
and a combined machine-readable report.  JSON output is canonical and
byte-deterministic; CSV and text cover the tabular subcommands.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .arithmetic import arithmetic_profile, verify_square_structure
from .counting import spectral_system, tree_count_closed
from .errors import BforestError, SpecError
from .genfun import (
    find_recurrence,
    genfun,
    symmetry_scale,
    tau_sequence,
    verify_symmetry,
)
from .graphs import ConnectionSpec, check_connectivity, validate_spec
from .mahler import convergence_report, growth_base, mahler_quadrature
from .matrixtree import tree_count_oracle

__all__ = ["main", "run"]

_MIN_PRECISION = 32


def _load_spec_source(source: str) -> dict:
    """Parse --spec as inline JSON first, then as a file path."""
    text = source
    try:
        return json.loads(text)
    except ValueError:
        pass
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError(f"--spec is neither inline JSON nor a readable file: {exc}")
    except ValueError as exc:
        raise SpecError(f"spec file {source!r} is not valid JSON: {exc}")


def _n_values(args, spec: ConnectionSpec) -> list[int]:
    if args.n_start is None and args.n_end is None:
        return [spec.n]
    start = args.n_start if args.n_start is not None else spec.n
    end = args.n_end if args.n_end is not None else start
    step = args.step
    if step < 1:
        raise SpecError(f"--step must be positive, got {step}")
    values = list(range(start, end + 1, step))
    if not values:
        raise SpecError(f"empty n-range {start}..{end} step {step}")
    return values


def _at_order(spec: ConnectionSpec, n: int) -> ConnectionSpec:
    data = spec.to_dict()
    data["n"] = n
    return validate_spec(data)


# Worker functions are module-level so a process pool can pickle them.


def _row_closed(task):
    spec_dict, n = task
    try:
        sp = _at_order(validate_spec(spec_dict), n)
        return {"n": n, "tau": tree_count_closed(sp).tau}
    except BforestError as exc:
        return {"n": n, "error": str(exc)}


def _row_oracle(task):
    spec_dict, n = task
    try:
        sp = _at_order(validate_spec(spec_dict), n)
        return {"n": n, "tau": tree_count_oracle(sp)}
    except BforestError as exc:
        return {"n": n, "error": str(exc)}


def _row_compare(task):
    spec_dict, n = task
    try:
        sp = _at_order(validate_spec(spec_dict), n)
        closed = tree_count_closed(sp).tau
        oracle = tree_count_oracle(sp)
        return {"n": n, "closed": closed, "oracle": oracle, "equal": closed == oracle}
    except BforestError as exc:
        return {"n": n, "error": str(exc)}


def _row_arithmetic(task):
    spec_dict, n = task
    try:
        sp = _at_order(validate_spec(spec_dict), n)
        tau = tree_count_closed(sp)
        witness = verify_square_structure(sp, tau)
        return {
            "n": n,
            "tau": tau.tau,
            "branch": witness.branch,
            "cofactor_numerator": witness.cofactor.numerator,
            "cofactor_denominator": witness.cofactor.denominator,
            "witness": witness.witness,
        }
    except BforestError as exc:
        return {"n": n, "error": str(exc)}


def _map_rows(worker, spec: ConnectionSpec, ns: list[int], jobs: int) -> list[dict]:
    tasks = [(spec.to_dict(), n) for n in ns]
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _cmd_validate(spec: ConnectionSpec, args) -> dict:
    report = check_connectivity(spec)
    return {
        "spec": spec.to_dict(),
        "family": spec.family,
        "gcd_flags": list(report["gcd_flags"]),
        "connected": report["connected"],
    }


def _cmd_count(spec: ConnectionSpec, args) -> dict:
    return {"rows": _map_rows(_row_closed, spec, _n_values(args, spec), args.jobs)}


def _cmd_oracle(spec: ConnectionSpec, args) -> dict:
    return {"rows": _map_rows(_row_oracle, spec, _n_values(args, spec), args.jobs)}


def _cmd_compare(spec: ConnectionSpec, args) -> dict:
    rows = _map_rows(_row_compare, spec, _n_values(args, spec), args.jobs)
    checked = [r for r in rows if "equal" in r]
    return {"rows": rows, "all_equal": bool(checked) and all(r["equal"] for r in checked)}


def _cmd_arithmetic(spec: ConnectionSpec, args) -> dict:
    rows = _map_rows(_row_arithmetic, spec, _n_values(args, spec), args.jobs)
    profile = arithmetic_profile(spec)
    return {
        "structure_odd": profile.structure_odd,
        "structure_even": profile.structure_even,
        "rows": rows,
    }


def _cmd_asymptotics(spec: ConnectionSpec, args) -> dict:
    root = growth_base(spec, digits=args.precision)
    sys = spectral_system(spec)
    poly = sys.base_poly if sys.family == 1 else sys.family_poly * sys.base_poly
    quad = mahler_quadrature(poly)
    rows = convergence_report(spec, _n_values(args, spec), digits=args.precision)
    return {
        "measure": {
            "root_product": {"value": root.value, "error_bound": root.error_bound},
            "quadrature": {"value": quad.value, "error_bound": quad.error_bound},
        },
        "convergence": rows,
    }


def _cmd_genfun(spec: ConnectionSpec, args) -> dict:
    terms = 2 * args.max_order + 2
    seq = tau_sequence(spec, terms)
    recurrence = find_recurrence(seq, max_order=args.max_order)
    gf = genfun(seq, recurrence)
    scale = symmetry_scale(spec)
    indexing = (
        "term k is the tree count at group order k"
        if spec.family == 1
        else "term k is the tree count at group order 2k (vertex count 4k)"
    )
    return {
        "recurrence": list(recurrence),
        "generating_function": gf.to_dict(),
        "symmetry_scale": scale,
        "symmetry": verify_symmetry(gf, scale),
        "indexing": indexing,
        "value_at_0.1": float(Fraction(gf.numerator(Fraction(1, 10)), gf.denominator(Fraction(1, 10)))),
    }


def _cmd_report(spec: ConnectionSpec, args) -> dict:
    return {
        "validate": _cmd_validate(spec, args),
        "compare": _cmd_compare(spec, args),
        "arithmetic": _cmd_arithmetic(spec, args),
        "asymptotics": _cmd_asymptotics(spec, args),
        "genfun": _cmd_genfun(spec, args),
    }


_COMMANDS = {
    "validate": _cmd_validate,
    "count": _cmd_count,
    "oracle": _cmd_oracle,
    "compare": _cmd_compare,
    "arithmetic": _cmd_arithmetic,
    "asymptotics": _cmd_asymptotics,
    "genfun": _cmd_genfun,
    "report": _cmd_report,
}

_TABULAR_KEYS = {"rows": None, "convergence": None}


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _table_of(payload: dict) -> list[dict] | None:
    for key in ("rows", "convergence"):
        if key in payload:
            return payload[key]
    return None


def _emit_csv(payload: dict) -> str:
    rows = _table_of(payload)
    if rows is None:
        raise SpecError("csv output is only available for tabular subcommands")
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def _emit_text(payload: dict, indent: str = "") -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_emit_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for row in value:
                cells = " ".join(f"{k}={row[k]}" for k in sorted(row))
                lines.append(f"{indent}  {cells}")
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(line for line in lines if line != "")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bforest",
        description="Spanning-tree counts of bicirculant graphs: exact counting, "
        "arithmetic structure, asymptotics and generating functions.",
    )
    default_precision = int(os.environ.get("BFOREST_PRECISION", "64"))
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("validate", "normalize a spec and report connectivity"),
        ("count", "closed-form tree counts over an n-range"),
        ("oracle", "matrix-tree tree counts over an n-range"),
        ("compare", "closed form vs oracle with an equality verdict"),
        ("arithmetic", "square-structure witnesses over an n-range"),
        ("asymptotics", "Mahler measure values and convergence table"),
        ("genfun", "minimal recurrence, rational GF and symmetry verdict"),
        ("report", "everything above as one JSON document"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--spec", required=True, help="inline JSON object or path to a JSON file")
        p.add_argument("--n-start", type=int, default=None, help="first group order (default: the spec's n)")
        p.add_argument("--n-end", type=int, default=None, help="last group order, inclusive")
        p.add_argument("--step", type=int, default=1, help="stride through the n-range")
        p.add_argument(
            "--precision",
            type=int,
            default=default_precision,
            help="working decimal digits for float paths (env BFOREST_PRECISION)",
        )
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker processes across n-values")
        p.add_argument("--max-order", type=int, default=128, help="recurrence order cap for genfun")
    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.precision < _MIN_PRECISION:
            raise SpecError(f"--precision must be at least {_MIN_PRECISION}")
        spec = validate_spec(_load_spec_source(args.spec))
        payload = _COMMANDS[args.command](spec, args)
        if args.format == "json":
            sys.stdout.write(_emit_json(payload))
        elif args.format == "csv":
            sys.stdout.write(_emit_csv(payload))
        else:
            sys.stdout.write(_emit_text(payload) + "\n")
        return 0
    except SpecError as exc:
        print(f"invalid spec: {exc}", file=sys.stderr)
        return 1
    except (BforestError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
