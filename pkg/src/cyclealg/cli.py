"""Command-line surface: tower specs, invariant reports, comparison, verification.

Tower specs are JSON files:

    {"schema_version": 1, "m": 3, "mode": "stationary_matroid", "d": 4, "s": 6}

    {"schema_version": 1, "m": 3, "mode": "explicit",
     "shapes": [[1, 1, 1, 1, 1, 1], [2, 2, 2, 2, 2, 2]],
     "embeddings": [[1, 1, 0, 0, 0, 0]]}

Exit codes: 0 success (or "isomorphic" for compare), 2 parse/validation
error or refusal, 3 assertion failure or "not isomorphic".  Reports go to
stdout (human-readable text by default, ``--json`` for the structured
record), diagnostics to stderr.  Output is byte-identical for identical
inputs, flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import (
    CrossCycleLengthError,
    CycleAlgebraError,
    SpecValidationError,
)
from .limits import (
    ExplicitTower,
    LimitScaleQuery,
    StationaryMatroidTower,
    decide_isomorphism,
    enumerate_S,
    finite_level_invariants,
    h1_limit,
    is_extreme,
    is_homologically_limited,
    k0_limit,
    unital_joint_scale_contains,
)
from .matrix_model import (
    MatrixAlgebraModel,
    composition_oracle_report,
    entrywise_partial_isometry_report,
    nonregular_embedding_example,
    perturbed_entry_report,
)
from .signatures import (
    CycleAlgebraShape,
    Signature,
    h1,
    homology_range,
    k0_matrix,
    k0h1_roundtrip_report,
    signature_compose,
    signature_from_k0h1,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_FAILED = 3


# ---------------------------------------------------------------------------
# Tower-spec loading
# ---------------------------------------------------------------------------

def _expect(condition, message, field):
    if not condition:
        raise SpecValidationError(message, field=field)


def parse_tower_spec(data) -> tuple:
    """Validate a decoded tower spec; returns ("stationary"|"explicit", tower)."""
    _expect(isinstance(data, dict), "spec must be a JSON object", "$")
    _expect(data.get("schema_version") == SCHEMA_VERSION,
            f"schema_version must be {SCHEMA_VERSION}", "$.schema_version")
    m = data.get("m")
    _expect(isinstance(m, int) and m >= 3, "m must be an integer >= 3", "$.m")
    mode = data.get("mode")
    _expect(mode in ("stationary_matroid", "explicit"),
            "mode must be 'stationary_matroid' or 'explicit'", "$.mode")

    if mode == "stationary_matroid":
        d = data.get("d")
        _expect(isinstance(d, int) and d >= 1, "d must be a positive integer", "$.d")
        s = data.get("s")
        _expect(isinstance(s, int), "s must be an integer", "$.s")
        _expect(s in enumerate_S(m, d),
                f"s must lie in {enumerate_S(m, d)}", "$.s")
        return "stationary", StationaryMatroidTower(m, d, s)

    shapes_raw = data.get("shapes")
    _expect(isinstance(shapes_raw, list) and shapes_raw, "shapes must be a nonempty list",
            "$.shapes")
    shapes = []
    for i, row in enumerate(shapes_raw):
        field = f"$.shapes[{i}]"
        _expect(isinstance(row, list) and len(row) == 2 * m,
                f"each shape needs {2 * m} vertex multiplicities", field)
        _expect(all(isinstance(x, int) and x >= 1 for x in row),
                "vertex multiplicities must be positive integers", field)
        shapes.append(CycleAlgebraShape(m, tuple(row)))
    embeddings_raw = data.get("embeddings")
    _expect(isinstance(embeddings_raw, list), "embeddings must be a list", "$.embeddings")
    _expect(len(embeddings_raw) == len(shapes) - 1,
            f"{len(shapes)} shapes need {len(shapes) - 1} embeddings", "$.embeddings")
    embeddings = []
    for i, row in enumerate(embeddings_raw):
        field = f"$.embeddings[{i}]"
        _expect(isinstance(row, list) and len(row) == 2 * m,
                f"each signature needs {2 * m} entries", field)
        _expect(all(isinstance(x, int) and x >= 0 for x in row),
                "signature entries must be nonnegative integers", field)
        _expect(any(row), "linking signatures must be nonzero", field)
        embeddings.append(Signature(m, tuple(row)))
    try:
        tower = ExplicitTower(tuple(shapes), tuple(embeddings))
        finite_level_invariants(tower)
    except CycleAlgebraError as exc:
        raise SpecValidationError(str(exc), field="$.embeddings") from exc
    return "explicit", tower


def load_tower_spec(path) -> tuple:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecValidationError(f"cannot read {path}: {exc}", field="$") from exc
    except json.JSONDecodeError as exc:
        raise SpecValidationError(f"invalid JSON in {path}: {exc}", field="$") from exc
    return parse_tower_spec(data)


# ---------------------------------------------------------------------------
# Report plumbing
# ---------------------------------------------------------------------------

def _report(command, input_data, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "cyclealg", "version": __version__},
        "command": command,
        "input": input_data,
        "result": result,
    }


def _emit(report, as_json) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    print(f"cyclealg {__version__} :: {report['command']}")
    print(f"input: {json.dumps(report['input'], sort_keys=True)}")
    _emit_plain(report["result"], indent="  ")


def _emit_plain(value, indent="") -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)):
                print(f"{indent}{key}:")
                _emit_plain(item, indent + "  ")
            else:
                print(f"{indent}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                print(f"{indent}-")
                _emit_plain(item, indent + "  ")
            else:
                print(f"{indent}- {item}")
    else:
        print(f"{indent}{value}")


def _parse_signature(text) -> Signature:
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SpecValidationError(f"malformed signature {text!r}", field="signature") from exc
    if len(entries) % 2 or len(entries) < 6:
        raise SpecValidationError(
            f"a signature needs an even number of entries (>= 6), got {len(entries)}",
            field="signature")
    return Signature(len(entries) // 2, entries)


def _parse_matrix(text, m):
    rows = text.split(";")
    if len(rows) != 2 * m:
        raise SpecValidationError(f"matrix needs {2 * m} rows, got {len(rows)}", field="k0")
    out = []
    for row in rows:
        try:
            entries = [int(x) for x in row.split(",")]
        except ValueError as exc:
            raise SpecValidationError(f"malformed matrix row {row!r}", field="k0") from exc
        if len(entries) != 2 * m:
            raise SpecValidationError(f"matrix rows need {2 * m} entries", field="k0")
        out.append(entries)
    return out


def _parse_dims(text, m) -> tuple:
    parts = text.split(",")
    try:
        values = [int(x) for x in parts]
    except ValueError as exc:
        raise SpecValidationError(f"malformed dims {text!r}", field="dims") from exc
    if len(values) == 1:
        values = values * (2 * m)
    if len(values) != 2 * m:
        raise SpecValidationError(f"dims needs 1 or {2 * m} entries", field="dims")
    return tuple(values)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_invariants(args) -> int:
    mode, tower = load_tower_spec(args.spec)
    if mode == "stationary":
        sn, k0_desc = k0_limit(tower)
        group = h1_limit(tower)
        md = tower.level_multiplier
        samples = [k for k in range(-md, md + 1)
                   if unital_joint_scale_contains(tower, LimitScaleQuery(k, 1))]
        result = {
            "mode": "stationary_matroid",
            "tower": {"m": tower.m, "d": tower.d, "s": tower.s},
            "k0": {"supernatural": sn.to_json(), "display": str(sn), **k0_desc},
            "h1": {"kind": group.kind, "primes": list(group.primes),
                   "display": group.describe()},
            "extreme": is_extreme(tower),
            "homologically_limited": is_homologically_limited(tower),
            "joint_scale_sample": {
                "description": "numerators k with 1/m (+) 1/m (+) k/(md) in the unital joint scale",
                "t": 1,
                "contained": samples,
            },
        }
        input_data = {"spec": args.spec, "mode": mode,
                      "tower": {"m": tower.m, "d": tower.d, "s": tower.s}}
    else:
        levels = finite_level_invariants(tower)
        result = {"mode": "explicit", "levels": levels,
                  "note": "finite prefix: no limit verdict is attached"}
        input_data = {"spec": args.spec, "mode": mode,
                      "shapes": [list(s.vertex_mults) for s in tower.shapes],
                      "embeddings": [list(e.r) for e in tower.embeddings]}
    _emit(_report("invariants", input_data, result), args.json)
    return EXIT_OK


def cmd_compare(args) -> int:
    mode_a, tower_a = load_tower_spec(args.spec_a)
    mode_b, tower_b = load_tower_spec(args.spec_b)
    if mode_a != "stationary" or mode_b != "stationary":
        raise SpecValidationError("limit verdicts require stationary mode", field="$.mode")
    verdict = decide_isomorphism(tower_a, tower_b)
    result = {
        "verdict": verdict.verdict,
        "witness": verdict.witness,
        "detail": verdict.detail,
        "towers": [{"m": t.m, "d": t.d, "s": t.s} for t in (tower_a, tower_b)],
    }
    input_data = {"spec_a": args.spec_a, "spec_b": args.spec_b}
    _emit(_report("compare", input_data, result), args.json)
    return EXIT_OK if verdict.isomorphic else EXIT_FAILED


def cmd_signature(args) -> int:
    if args.operation == "compose":
        inner = _parse_signature(args.args[0])
        outer = _parse_signature(args.args[1])
        composed = signature_compose(inner, outer)
        result = {"inner": list(inner.r), "outer": list(outer.r),
                  "composed": list(composed.r), "h1": h1(composed)}
        exit_code = EXIT_OK
    elif args.operation == "homrange":
        sig = _parse_signature(args.args[0])
        result = {"signature": list(sig.r), "h1": h1(sig),
                  "homology_range": list(homology_range(sig))}
        exit_code = EXIT_OK
    else:  # fromk0h1
        if args.m is None or args.k0 is None or args.h is None:
            raise SpecValidationError("fromk0h1 needs --m, --k0 and --h", field="fromk0h1")
        matrix = _parse_matrix(args.k0, args.m)
        try:
            sig = signature_from_k0h1(matrix, args.h)
            result = {"realizable": True, "signature": list(sig.r),
                      "k0_matrix": k0_matrix(sig).tolist(), "h1": h1(sig)}
            exit_code = EXIT_OK
        except CycleAlgebraError as exc:
            result = {"realizable": False, "reason": str(exc),
                      "kind": type(exc).__name__}
            exit_code = EXIT_FAILED
    input_data = {"operation": args.operation, "args": list(args.args),
                  "m": args.m, "k0": args.k0, "h": args.h}
    _emit(_report(f"signature {args.operation}", input_data, result), args.json)
    return exit_code


def cmd_verify(args) -> int:
    model = MatrixAlgebraModel(args.m, _parse_dims(args.dims, args.m)) \
        if args.target in ("lemma22", "lemma31") else None
    if args.target == "lemma22":
        result = entrywise_partial_isometry_report(model, trials=args.trials,
                                                   tol=args.tol, seed=args.seed)
    elif args.target == "lemma31":
        result = perturbed_entry_report(model, delta=args.delta, trials=args.trials,
                                        epsilon=args.epsilon, seed=args.seed)
    elif args.target == "example23":
        _, result = nonregular_embedding_example()
    elif args.target == "composition-oracle":
        result = composition_oracle_report(args.m)
    else:  # lemma42-roundtrip
        result = k0h1_roundtrip_report(args.m, max_entry=args.max_entry)
    input_data = {"target": args.target, "m": args.m, "dims": args.dims,
                  "trials": args.trials, "tol": args.tol, "delta": args.delta,
                  "epsilon": args.epsilon, "seed": args.seed,
                  "max_entry": args.max_entry}
    _emit(_report(f"verify {args.target}", input_data, result), args.json)
    return EXIT_OK if result.get("ok", False) else EXIT_FAILED


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclealg",
        description="Invariants and isomorphism decisions for towers of 2m-cycle algebras")
    parser.add_argument("--version", action="version", version=f"cyclealg {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for a tower spec")
    p_inv.add_argument("spec")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_cmp = sub.add_parser("compare", help="isomorphism verdict for two stationary specs")
    p_cmp.add_argument("spec_a")
    p_cmp.add_argument("spec_b")
    p_cmp.add_argument("--json", action="store_true")
    p_cmp.set_defaults(func=cmd_compare)

    p_sig = sub.add_parser("signature", help="exact signature arithmetic")
    p_sig.add_argument("operation", choices=["compose", "homrange", "fromk0h1"])
    p_sig.add_argument("args", nargs="*",
                       help="signatures as comma lists in canonical label order")
    p_sig.add_argument("--m", type=int, default=None)
    p_sig.add_argument("--k0", default=None, help="matrix rows 'a,b,..;..' (odd-then-even order)")
    p_sig.add_argument("--h", type=int, default=None)
    p_sig.add_argument("--json", action="store_true")
    p_sig.set_defaults(func=cmd_signature)

    p_ver = sub.add_parser("verify", help="run a numerical verification harness")
    p_ver.add_argument("target", choices=["lemma22", "lemma31", "example23",
                                          "composition-oracle", "lemma42-roundtrip"])
    p_ver.add_argument("--m", type=int, default=3)
    p_ver.add_argument("--dims", default="2", help="vertex multiplicities (single value or list)")
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument("--tol", type=float, default=1e-9)
    p_ver.add_argument("--delta", type=float, default=1e-6)
    p_ver.add_argument("--epsilon", type=float, default=1e-4)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-entry", type=int, default=2)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SpecValidationError as exc:
        print(f"error ({exc.field}): {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CrossCycleLengthError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CycleAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
