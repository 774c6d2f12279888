"""Command-line front end.

Verbs map onto the library operations: ``eval`` (element arithmetic),
``classify`` (cone membership), ``dist`` (Thompson distance plus the
positive-functional lower bound), ``metric`` (Riemannian metric values),
``symmetry``, ``geodesic``, and ``verify`` (the suite harness).  Results are
printed as JSON.  Exit status: 0 success / all suites pass, 1 suite failure
or domain error (point outside the cone, singular element), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import (
    AlgebraMismatch,
    Element,
    NotInCone,
    Orthant,
    SingularElement,
    SpinFactor,
    SymMatrices,
    alg_from_json,
    element_to_json,
    exp_element,
    identity,
    inverse,
    is_jh_mode,
    log_element,
    power,
    product,
    sqrt,
    triple_product,
)
from .cone import classify
from .geometry import (
    caratheodory_restricted,
    characteristic_metric,
    geodesic_through,
    riemannian_metric_jh,
    symmetry,
    thompson_distance,
)
from .harness import DEFAULT_INSTANCES, run_all
from .report import SUITE_IDS


class UsageError(Exception):
    pass


def _parse_alg(args):
    if getattr(args, "alg_file", None):
        with open(args.alg_file) as fh:
            return alg_from_json(json.load(fh))
    if not getattr(args, "alg", None):
        return None
    spec = args.alg
    try:
        kind, _, n_text = spec.partition(":")
        n = int(n_text)
    except ValueError:
        raise UsageError(f"bad algebra spec {spec!r}; expected kind:n")
    kinds = {"orthant": Orthant, "sym": SymMatrices, "spin": SpinFactor}
    if kind not in kinds:
        raise UsageError(
            f"unknown algebra kind {kind!r}; use orthant:n, sym:n, spin:n or --alg-file"
        )
    return kinds[kind](n)


def _require_alg(args):
    alg = _parse_alg(args)
    if alg is None:
        raise UsageError("an algebra is required (--alg kind:n or --alg-file path)")
    return alg


def _parse_element(alg, text, flag):
    if text is None:
        raise UsageError(f"missing required element {flag}")
    try:
        coords = np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated numbers, got {text!r}")
    if coords.shape != (alg.dim,):
        raise UsageError(
            f"{flag}: expected {alg.dim} coordinates for {alg!r}, got {coords.size}"
        )
    return Element(alg, coords)


def _emit(payload, args):
    text = json.dumps(payload)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_eval(args):
    alg = _require_alg(args)
    op = args.op
    if op == "identity":
        result = identity(alg)
    elif op in ("inverse", "sqrt", "exp", "log"):
        x = _parse_element(alg, args.x, "--x")
        fn = {"inverse": inverse, "sqrt": sqrt, "exp": exp_element, "log": log_element}[op]
        result = fn(x)
    elif op == "power":
        if args.n is None:
            raise UsageError("--op power requires --n")
        result = power(_parse_element(alg, args.x, "--x"), args.n)
    elif op == "product":
        result = product(
            _parse_element(alg, args.x, "--x"), _parse_element(alg, args.y, "--y")
        )
    elif op == "triple":
        result = triple_product(
            _parse_element(alg, args.x, "--x"),
            _parse_element(alg, args.y, "--y"),
            _parse_element(alg, args.z, "--z"),
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown op {op!r}")
    _emit(element_to_json(result), args)
    return 0


def _cmd_classify(args):
    alg = _require_alg(args)
    x = _parse_element(alg, args.x, "--x")
    res = classify(x)
    _emit({"status": res.status.value, "min_eigenvalue": res.min_eigenvalue}, args)
    return 0


def _cmd_dist(args):
    alg = _require_alg(args)
    x = _parse_element(alg, args.x, "--x")
    y = _parse_element(alg, args.y, "--y")
    payload = {
        "thompson": thompson_distance(x, y),
        "caratheodory_lb": caratheodory_restricted(
            x, y, n_extreme=args.functional_samples, seed=args.seed
        ),
    }
    _emit(payload, args)
    return 0


def _cmd_metric(args):
    alg = _require_alg(args)
    p = _parse_element(alg, args.p, "--p")
    u = _parse_element(alg, args.u, "--u")
    v = _parse_element(alg, args.v, "--v")
    payload = {}
    want = args.kind
    if want in ("jh", "both"):
        if is_jh_mode(alg):
            payload["jh"] = riemannian_metric_jh(p, u, v)
        elif want == "jh":
            raise NotInCone("jh metric requires the l2/trace inner-product mode")
    if want in ("characteristic", "both"):
        if isinstance(alg, (Orthant, SpinFactor)):
            payload["characteristic"] = characteristic_metric(p, u, v)
        elif want == "characteristic":
            raise ValueError(
                "characteristic metric is available for orthant and spin cones only"
            )
    _emit(payload, args)
    return 0


def _cmd_symmetry(args):
    alg = _require_alg(args)
    x = _parse_element(alg, args.x, "--x")
    y = _parse_element(alg, args.y, "--y")
    _emit(element_to_json(symmetry(x, y)), args)
    return 0


def _cmd_geodesic(args):
    alg = _require_alg(args)
    p = _parse_element(alg, args.p, "--p")
    q = _parse_element(alg, args.q, "--q")
    _emit(element_to_json(geodesic_through(p, q, args.t)), args)
    return 0


def _cmd_verify(args):
    alg = _parse_alg(args)
    algs = [alg] if alg is not None else list(DEFAULT_INSTANCES)
    if args.suite == "all":
        suites = SUITE_IDS
    else:
        suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
        unknown = [s for s in suites if s not in SUITE_IDS]
        if unknown:
            raise UsageError(f"unknown suites: {', '.join(unknown)}")
    reports = run_all(algs, trials=args.trials, tol=args.tol, seed=args.seed, suites=suites)
    payload = [r.to_json() for r in reports]
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        summary_stream = sys.stdout
    else:
        print(text)
        summary_stream = sys.stderr
    failed = 0
    for r in reports:
        if r.skipped:
            tag = "SKIP"
        elif r.passed:
            tag = "PASS"
        else:
            tag = "FAIL"
            failed += 1
        if not args.quiet:
            print(
                f"{tag} {r.spec.suite_id} [{json.dumps(r.to_json()['algebra'])}] "
                f"max_residual={r.max_residual:.3e} tol={r.spec.tol:.1e}",
                file=summary_stream,
            )
    return 0 if failed == 0 else 1


def _add_alg_flags(parser):
    parser.add_argument("--alg", help="algebra shorthand kind:n (orthant, sym, spin)")
    parser.add_argument(
        "--alg-file", help="path to an algebra descriptor JSON (required for direct sums)"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jbcone",
        description="Jordan-algebra cone arithmetic, geometry, and verification suites",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate element operations")
    _add_alg_flags(p)
    p.add_argument(
        "--op",
        required=True,
        choices=["product", "inverse", "sqrt", "exp", "log", "power", "triple", "identity"],
    )
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--z")
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("classify", help="classify cone membership")
    _add_alg_flags(p)
    p.add_argument("--x", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("dist", help="Thompson distance and functional lower bound")
    _add_alg_flags(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--functional-samples", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("metric", help="Riemannian metric values at a base point")
    _add_alg_flags(p)
    p.add_argument("--p", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--kind", choices=["jh", "characteristic", "both"], default="both")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_metric)

    p = sub.add_parser("symmetry", help="point symmetry s_x(y)")
    _add_alg_flags(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_symmetry)

    p = sub.add_parser("geodesic", help="point on the geodesic through p and q")
    _add_alg_flags(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_geodesic)

    p = sub.add_parser("verify", help="run verification suites")
    _add_alg_flags(p)
    p.add_argument("--suite", default="all", help="'all' or comma-separated suite ids")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report array to this path")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"jbcone: {exc}", file=sys.stderr)
        return 2
    except (NotInCone, SingularElement, AlgebraMismatch, ValueError) as exc:
        print(f"jbcone: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"jbcone: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
