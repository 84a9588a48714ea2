"""Command-line front end: file-driven, deterministic, JSON in and out.

Verbs: compute, verify, op, from-code, from-facets, from-graph, from-wei.
Exit codes: 0 ok, 1 invariant/verification failure, 2 usage or input error.

Input files are JSON and are recognized by their keys:
  rank table   {"n": 3, "ranks": [0, 0, 0, 1, 0, 1, 1, 2]}   (mask order)
  complex      {"n": 5, "facets": [[1, 2], [2, 3, 4], [3, 4, 5]]}
  graph        {"n": 6, "edges": [[1, 2], [1, 3]]}
  Wei sequence {"n": 3, "d": [2, 3]}
  check matrix {"p": 2, "rows": [[1, 0, 1], [0, 1, 1]]}
A fixture file may also carry "name" and "expected" blocks; they are ignored
by compute and consumed by ``verify --fixtures``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import codes, core, hamming, ops, simplicial, tutte, verify, weights
from .errors import DemimatError, KindError, MalformedInputError
from .poly import LaurentPoly, monomial, zero

INVARIANT_FLAGS = (
    "tutte",
    "whitney",
    "charpoly",
    "fpoly",
    "hamming",
    "macwilliams",
    "ghwe",
    "conjecture",
    "betti",
    "wei",
)


# -- canonical polynomial text ---------------------------------------------------

_FACTOR = re.compile(r"^([xytq])(?:\^(-?\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str) -> LaurentPoly:
    """Parse the canonical text form (round-trips with str())."""
    s = text.strip()
    if not s:
        raise MalformedInputError("empty polynomial text")
    if s == "0":
        return zero()
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:].lstrip()
    pieces = re.split(r" ([+-]) ", s)
    terms = [(sign, pieces[0])]
    for op, body in zip(pieces[1::2], pieces[2::2]):
        terms.append((1 if op == "+" else -1, body))
    total = zero()
    for sgn, body in terms:
        coeff = Fraction(sgn)
        exps = {"x": 0, "y": 0, "t": 0, "q": 0}
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise MalformedInputError(f"bad polynomial factor {factor!r}")
            exps[m.group(1)] += int(m.group(2)) if m.group(2) else 1
        total = total + monomial(coeff, **exps)
    return total


# -- input handling ----------------------------------------------------------------


@dataclass
class LoadedInput:
    construction: str
    table: core.RankTable | None
    cx: core.Complex | None = None
    matrix: codes.PrimeMatrix | None = None


def load_input(path: str) -> LoadedInput:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise MalformedInputError(f"no such input file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path}: {exc}") from exc
    return interpret_input(data)


def interpret_input(data: dict) -> LoadedInput:
    if not isinstance(data, dict):
        raise MalformedInputError("input must be a JSON object")
    if "ranks" in data:
        table = core.RankTable.build(int(data["n"]), data["ranks"])
        return LoadedInput("rank-table", table)
    if "facets" in data:
        cx = core.Complex.from_facet_lists(int(data["n"]), data["facets"])
        table = None if cx.is_void else core.complex_to_demimatroid(cx)
        return LoadedInput("complex-up", table, cx=cx)
    if "edges" in data:
        edges = [tuple(e) for e in data["edges"]]
        return LoadedInput("graph", core.graph_demimatroid(int(data["n"]), edges))
    if "d" in data:
        return LoadedInput("wei-sequence", core.from_wei_sequence(int(data["n"]), data["d"]))
    if "rows" in data:
        matrix = codes.PrimeMatrix.build(int(data["p"]), data["rows"])
        return LoadedInput("parity-matroid", codes.parity_matroid(matrix), matrix=matrix)
    raise MalformedInputError(
        "unrecognized input: expected one of the keys ranks/facets/edges/d/rows"
    )


def table_json(table: core.RankTable) -> dict:
    return {"n": table.n, "ranks": list(table.ranks), "kind": table.kind}


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _field_from_flag(flag: str) -> simplicial.FieldSpec:
    if flag.upper() in ("Q", "0"):
        return simplicial.FieldSpec.rationals()
    return simplicial.FieldSpec.prime(int(flag))


# -- compute ------------------------------------------------------------------------


def _compute_wei(table: core.RankTable) -> dict:
    profile = weights.wei_hierarchy(table)
    return {
        "k": profile.k,
        "d": list(profile.d),
        "d_up": list(profile.d_up),
        "wei_duality": weights.check_wei_duality(table),
        "full": weights.is_full(table) if table.rank else False,
        "uniform": weights.is_uniform_demimatroid(table),
    }


def _compute_hamming(table: core.RankTable, fieldspec) -> dict:
    w = hamming.hamming_subset_sum(table)
    routes = {
        "tutte_route": hamming.hamming_via_tutte(table) == w,
        "pj_route": hamming.w_from_pj(table) == w,
        "betti_route": simplicial.w_via_betti(table, fieldspec) == w,
    }
    result = {"w": str(w), "routes": routes}
    try:
        data = hamming.hamming_data(table)
        result["delta"] = data.delta
        result["c"] = data.c
        result["a"] = {str(j): str(p) for j, p in sorted(data.a.items())}
    except KindError:
        result["delta"] = None
        result["c"] = None
        result["a"] = {}
    return result


def _compute_fpoly(cx: core.Complex) -> dict:
    face = tutte.f_polynomial(cx)
    via_t = tutte.f_polynomial_via_tutte(cx)
    via_w = tutte.f_polynomial_via_hamming(cx)
    return {
        "f": str(face),
        "via_tutte": str(via_t),
        "via_hamming": str(via_w),
        "agree": face == via_t == via_w,
        "h": str(tutte.h_polynomial(cx)),
    }


def _compute_betti(table: core.RankTable, fieldspec) -> dict:
    tables = simplicial.betti_of_elongations(table, fieldspec)
    w = simplicial.w_via_betti(table, fieldspec)
    return {
        "field": str(fieldspec),
        "tables": [
            {
                "r": r,
                "poly": str(bt.poly()),
                "entries": {f"{i},{j}": v for (i, j), v in bt.entries},
            }
            for r, bt in enumerate(tables)
        ],
        "w_via_betti": str(w),
        "agrees_with_subset_sum": w == hamming.hamming_subset_sum(table),
    }


def _compute_ghwe(table: core.RankTable) -> dict:
    enumerators = hamming.generalized_w_all(table)
    definition_route = [
        hamming.generalized_w(table, r, route="tutte")
        for r in range(table.total_nullity + 1)
    ]
    return {
        "w_r": {str(r): str(p) for r, p in enumerate(enumerators)},
        "definition_route_agrees": enumerators == definition_route,
    }


def cmd_compute(args) -> int:
    loaded = load_input(args.input)
    fieldspec = _field_from_flag(args.field)
    requested = [f for f in INVARIANT_FLAGS if getattr(args, f)]
    if args.all:
        requested = [f for f in INVARIANT_FLAGS if f != "fpoly" or loaded.cx]
    if not requested:
        raise MalformedInputError("no invariants requested; pass --all or flags")

    manifest = {
        "command": "compute",
        "input": args.input,
        "construction": loaded.construction,
        "invariants": requested,
        "field": str(fieldspec),
        "seed": args.seed,
        "out": args.out,
    }
    table = loaded.table
    results: dict = {}
    if table is not None:
        results["kind"] = table.kind
        results["n"] = table.n
    for name in requested:
        if name == "fpoly":
            if loaded.cx is None or loaded.cx.is_void:
                raise MalformedInputError("fpoly needs a nonvoid complex input")
            results["fpoly"] = _compute_fpoly(loaded.cx)
            continue
        if table is None:
            raise MalformedInputError(f"{name} needs a rank-table-backed input")
        if name == "tutte":
            results["tutte"] = str(tutte.tutte(table))
        elif name == "whitney":
            results["whitney"] = str(tutte.whitney_f(table))
        elif name == "charpoly":
            results["charpoly"] = str(tutte.characteristic(table))
        elif name == "wei":
            results["wei"] = _compute_wei(table)
        elif name == "hamming":
            results["hamming"] = _compute_hamming(table, fieldspec)
        elif name == "macwilliams":
            results["macwilliams"] = str(hamming.macwilliams(table))
        elif name == "ghwe":
            results["ghwe"] = _compute_ghwe(table)
        elif name == "conjecture":
            verdict = hamming.conjecture_check(table)
            results["conjecture"] = {
                "holds": verdict.holds,
                "residual": None if verdict.residual is None else str(verdict.residual),
                "error": verdict.error,
            }
        elif name == "betti":
            results["betti"] = _compute_betti(table, fieldspec)
    _emit({"manifest": manifest, "results": results}, args.out)
    return 0


# -- verify -------------------------------------------------------------------------


def _check_fixture(path: Path, fieldspec) -> list[str]:
    data = json.loads(path.read_text())
    expected = data.get("expected", {})
    loaded = interpret_input(data)
    table = loaded.table
    problems = []
    for key, want in expected.items():
        if key == "tutte":
            got = str(tutte.tutte(table))
        elif key == "hamming":
            got = str(hamming.hamming_subset_sum(table))
        elif key == "whitney":
            got = str(tutte.whitney_f(table))
        elif key == "charpoly":
            got = str(tutte.characteristic(table))
        elif key == "fpoly":
            got = str(tutte.f_polynomial(loaded.cx))
        elif key == "kind":
            got = table.kind
        elif key == "d":
            got = list(weights.wei_hierarchy(table).d)
        elif key == "ghwe":
            got = {
                str(r): str(p)
                for r, p in enumerate(hamming.generalized_w_all(table))
            }
        elif key.startswith("betti"):
            field = _field_from_flag(key.split("/")[1]) if "/" in key else fieldspec
            got = [str(bt.poly()) for bt in simplicial.betti_of_elongations(table, field)]
        else:
            problems.append(f"{path.name}: unknown expected key {key!r}")
            continue
        if got != want:
            problems.append(f"{path.name}: {key}: got {got!r}, want {want!r}")
    return problems


def cmd_verify(args) -> int:
    if args.fixtures:
        fieldspec = _field_from_flag(args.field)
        root = Path(args.fixtures)
        files = sorted(root.glob("*.json"))
        if not files:
            raise MalformedInputError(f"no fixture files under {root}")
        problems = []
        for path in files:
            problems.extend(_check_fixture(path, fieldspec))
        payload = {
            "manifest": {"command": "verify", "fixtures": str(root)},
            "files": len(files),
            "ok": not problems,
            "problems": problems,
        }
        _emit(payload, args.out)
        return 0 if not problems else 1

    if args.n > core.GROUND_SET_CAP:
        raise MalformedInputError(
            f"--n {args.n} exceeds the ground-set cap {core.GROUND_SET_CAP}"
        )
    report = verify.run_battery(args.seed, args.n, args.samples)
    payload = {"manifest": {"command": "verify", "seed": args.seed, "n": args.n,
                            "samples": args.samples}}
    payload.update(report.as_dict())
    _emit(payload, args.out)
    return 0 if report.ok else 1


# -- operators and converters ----------------------------------------------------------


def cmd_op(args) -> int:
    loaded = load_input(args.input)
    table = loaded.table
    if table is None:
        raise MalformedInputError("operator verbs need a rank-table-backed input")
    verb = args.operator
    payload: dict
    if verb in ("dual", "nullity", "supplement"):
        result = ops.apply_operator(
            {"dual": ops.DUAL, "nullity": ops.NULLITY, "supplement": ops.SUPPLEMENT}[verb],
            table,
        )
        payload = table_json(result)
    elif verb in ("delete", "contract"):
        if not args.elements:
            raise MalformedInputError(f"{verb} needs --elements")
        mask = core.mask_of(args.elements, table.n)
        result = ops.delete(table, mask) if verb == "delete" else ops.contract(table, mask)
        payload = table_json(result)
        payload["labels"] = list(ops.surviving_labels(table.n, mask))
    elif verb == "elongate":
        if args.i is None:
            raise MalformedInputError("elongate needs --i")
        payload = table_json(ops.elongate(table, args.i))
    else:
        raise MalformedInputError(f"unknown operator verb {verb!r}")
    payload["manifest"] = {"command": "op", "operator": verb, "input": args.input}
    _emit(payload, args.out)
    return 0


def _cmd_convert(args, expected_key: str, construction: str) -> int:
    loaded = load_input(args.input)
    if loaded.construction != construction:
        raise MalformedInputError(
            f"expected a {expected_key} input for this converter, got {loaded.construction}"
        )
    payload = table_json(loaded.table)
    payload["manifest"] = {"command": construction, "input": args.input}
    _emit(payload, args.out)
    return 0


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demimat",
        description="Exact invariants of demimatroids and combinatroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute invariants of one input file")
    p_compute.add_argument("--in", dest="input", required=True)
    p_compute.add_argument("--out")
    p_compute.add_argument("--field", default="Q")
    p_compute.add_argument("--seed", type=int, default=0)
    p_compute.add_argument("--all", action="store_true")
    for flag in INVARIANT_FLAGS:
        p_compute.add_argument(f"--{flag}", action="store_true")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="run the identity battery or fixture goldens")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--n", type=int, default=5)
    p_verify.add_argument("--samples", type=int, default=20)
    p_verify.add_argument("--fixtures", help="directory of golden fixture files")
    p_verify.add_argument("--field", default="Q")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    p_op = sub.add_parser("op", help="apply an operator, emit the resulting table")
    p_op.add_argument(
        "operator",
        choices=["dual", "nullity", "supplement", "delete", "contract", "elongate"],
    )
    p_op.add_argument("--in", dest="input", required=True)
    p_op.add_argument("--elements", type=lambda s: [int(v) for v in s.split(",")])
    p_op.add_argument("--i", type=int)
    p_op.add_argument("--out")
    p_op.set_defaults(func=cmd_op)

    for name, key, construction in (
        ("from-code", "check matrix", "parity-matroid"),
        ("from-facets", "facets", "complex-up"),
        ("from-graph", "graph", "graph"),
        ("from-wei", "Wei sequence", "wei-sequence"),
    ):
        p = sub.add_parser(name, help=f"build a rank table from a {key} file")
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--out")
        p.set_defaults(func=lambda a, k=key, c=construction: _cmd_convert(a, k, c))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(json.dumps({"error": "malformed-input", "detail": str(exc)}), file=sys.stderr)
        return 2
    except DemimatError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
