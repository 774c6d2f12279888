"""Open-cone membership, the induced partial order, order-unit norms,
states and duality diagnostics.

The cone of every instance is the interior of the set of squares; membership
is decided by the sign of the minimum eigenvalue, with a relative boundary
band of width ``BOUNDARY_RTOL * (1 + max|eig|)``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import (
    AlgebraMismatch,
    BasePointNotInCone,
    Element,
    alg_from_json,
    alg_to_json,
    apply_operator,
    eigenvalues,
    identity,
    inner,
    inv_sqrt,
    is_jh_mode,
    product,
    quadratic_rep,
    random_element,
    random_interior,
    spectral_radius,
    _spectrum,
)
from .report import SuiteReport, SuiteSpec

__all__ = [
    "BOUNDARY_RTOL",
    "ConeStatus",
    "ConeClassification",
    "Functional",
    "classify",
    "boundary_tolerance",
    "order_leq",
    "relative_eigenvalues",
    "order_unit_norm",
    "squares_norm_axioms",
    "state_value",
    "random_state",
    "frame_states",
    "min_frame_state",
    "interior_by_states",
    "self_dual_check",
    "normality_probe",
    "jh_identity_check",
    "functional_to_json",
    "functional_from_json",
]

# Relative width of the boundary band used by classify().
BOUNDARY_RTOL = 1e-10


class ConeStatus(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class ConeClassification:
    status: ConeStatus
    min_eigenvalue: float


@dataclass(frozen=True)
class Functional:
    """Linear functional acting by the coordinate inner product."""

    alg: object
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        weights = np.array(self.weights, dtype=float)
        if weights.shape != (self.alg.dim,):
            raise ValueError(f"weights must have length {self.alg.dim}")
        if not np.all(np.isfinite(weights)):
            raise ValueError("weights must be finite")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)


def boundary_tolerance(x: Element) -> float:
    return BOUNDARY_RTOL * (1.0 + spectral_radius(x))


def classify(x: Element) -> ConeClassification:
    """Locate an element relative to the open cone by its minimum eigenvalue."""
    eigs = eigenvalues(x)
    lo = float(eigs[0])
    tol = BOUNDARY_RTOL * (1.0 + max(abs(lo), abs(float(eigs[-1]))))
    if lo > tol:
        status = ConeStatus.INTERIOR
    elif lo >= -tol:
        status = ConeStatus.BOUNDARY
    else:
        status = ConeStatus.EXTERIOR
    return ConeClassification(status=status, min_eigenvalue=lo)


def order_leq(x: Element, y: Element) -> bool:
    """Partial order of the closed cone: x <= y iff y - x is in its closure."""
    alg = x.alg
    if alg != y.alg:
        raise AlgebraMismatch(f"mixed algebras: {alg!r} vs {y.alg!r}")
    diff = Element(alg, y.coords - x.coords)
    return classify(diff).status is not ConeStatus.EXTERIOR


def relative_eigenvalues(x: Element, p: Element) -> np.ndarray:
    """Spectrum of x relative to the base point p, i.e. the eigenvalues of
    ``P(p^{-1/2}) x``, ascending.  Requires p in the open cone."""
    if classify(p).status is not ConeStatus.INTERIOR:
        raise BasePointNotInCone("base point must lie in the open cone")
    conj = quadratic_rep(inv_sqrt(p))
    return eigenvalues(apply_operator(conj, x))


def order_unit_norm(x: Element, p: Element | None = None) -> float:
    """Order-unit norm ``inf{lam > 0 : -lam p <= x <= lam p}``.

    With the default base point e this is max|eig(x)|; for a general interior
    p it is the spectral radius of ``P(p^{-1/2}) x``.
    """
    if p is None or np.array_equal(p.coords, identity(x.alg).coords):
        return spectral_radius(x)
    eigs = relative_eigenvalues(x, p)
    return float(max(abs(eigs[0]), abs(eigs[-1])))


def squares_norm_axioms(x: Element, y: Element) -> tuple[float, float, float]:
    """Residuals of the three Banach-algebra norm axioms at the identity:
    submultiplicativity, the square identity, and square monotonicity.
    All three vanish (up to roundoff) on every instance."""
    if x.alg != y.alg:
        raise AlgebraMismatch(f"mixed algebras: {x.alg!r} vs {y.alg!r}")
    nx = order_unit_norm(x)
    ny = order_unit_norm(y)
    xy = order_unit_norm(product(x, y))
    x2 = product(x, x)
    y2 = product(y, y)
    nx2 = order_unit_norm(x2)
    nsum = order_unit_norm(Element(x.alg, x2.coords + y2.coords))
    return (
        max(0.0, xy - nx * ny),
        abs(nx2 - nx * nx),
        max(0.0, nx2 - nsum),
    )


# ---------------------------------------------------------------------------
# States
# ---------------------------------------------------------------------------


def state_value(f: Functional, x: Element) -> float:
    if f.alg != x.alg:
        raise AlgebraMismatch(f"mixed algebras: {f.alg!r} vs {x.alg!r}")
    return float(f.weights @ x.coords)


def random_state(alg, rng) -> Functional:
    """State drawn from the dual cone: a normalized random square.

    Under the trace-form packing the dual cone equals the cone itself, so
    ``f(v) = <w, v> / <w, e>`` with w a square is positive and f(e) = 1.
    """
    if isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(rng)
    e = identity(alg).coords
    while True:
        z = random_element(alg, rng)
        w = product(z, z).coords
        denom = float(w @ e)
        if denom > 1e-12:
            return Functional(alg, w / denom)


def frame_states(x: Element) -> list[Functional]:
    """Extreme-ray states read off the spectral frame of x: each frame
    idempotent c normalized to ``<c, .> / <c, e>``."""
    _, frame = _spectrum(x.alg, x.coords)
    e = identity(x.alg).coords
    states = []
    for row in frame:
        denom = float(row @ e)
        if denom > 1e-12:
            states.append(Functional(x.alg, row / denom))
    return states


def min_frame_state(x: Element) -> Functional:
    """The frame state attaining the minimum eigenvalue of x."""
    _, frame = _spectrum(x.alg, x.coords)
    e = identity(x.alg).coords
    row = frame[0]
    return Functional(x.alg, row / float(row @ e))


def interior_by_states(x: Element, samples: int = 32, seed: int = 0) -> bool:
    """Cone-interior test through states: x is interior iff f(x) > 0 for all
    states.  Samples random states and always includes the extreme-ray states
    of x's own spectral frame, which attain the minimum eigenvalue, so the
    test agrees with :func:`classify` on the implemented instances."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    states = frame_states(x)
    states.extend(random_state(x.alg, rng) for _ in range(samples))
    low = min(state_value(f, x) for f in states)
    return low > boundary_tolerance(x)


# ---------------------------------------------------------------------------
# Duality and normality diagnostics
# ---------------------------------------------------------------------------


def _require_jh(alg, what):
    if not is_jh_mode(alg):
        raise ValueError(f"{what} requires the l2/trace inner-product mode")


def self_dual_check(alg, trials: int, seed: int, tol: float = 1e-10) -> SuiteReport:
    """Sampled self-duality: interior points pair strictly positively with
    the closed cone, and exterior points admit a closed-cone witness with
    non-positive pairing (the minimum-eigenvalue frame idempotent)."""
    _require_jh(alg, "self_dual_check")
    spec = SuiteSpec("self_duality", alg, trials, tol, seed)
    start = time.perf_counter()
    worst = 0.0
    witness = None
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        x = random_interior(alg, rng)
        for _ in range(4):
            z = random_element(alg, rng)
            y = product(z, z)
            ny = float(np.linalg.norm(y.coords))
            if ny <= 1e-12:
                continue
            pairing = inner(x, y)
            res = max(0.0, -pairing) / (1.0 + np.linalg.norm(x.coords) * ny)
            if res > worst:
                worst = res
                witness = {
                    "check": "self_dual_interior_pairing",
                    "inputs": {"x": x.coords.tolist(), "y": y.coords.tolist()},
                    "residual": res,
                }
        z = random_element(alg, rng)
        shift = float(eigenvalues(z)[0]) + 0.5 * (1.0 + spectral_radius(z))
        x_ext = Element(alg, z.coords - shift * identity(alg).coords)
        c = min_frame_state(x_ext)
        pairing = float(c.weights @ x_ext.coords)
        res = max(0.0, pairing) / (1.0 + spectral_radius(x_ext))
        if res > worst:
            worst = res
            witness = {
                "check": "self_dual_exterior_witness",
                "inputs": {"x": x_ext.coords.tolist(), "y": c.weights.tolist()},
                "residual": res,
            }
    passed = worst <= tol
    return SuiteReport(
        spec=spec,
        passed=passed,
        max_residual=worst,
        witness=None if passed else witness,
        wall_time=time.perf_counter() - start,
    )


def normality_probe(alg, trials: int, seed: int, ambient: str = "order_unit") -> float:
    """Estimate the normality constant: max of ||x|| / ||y|| over sampled
    ordered pairs 0 <= x <= y.  In the order-unit ambient norm the ratio is
    bounded by 1 (monotonicity); the l2 ambient estimate is reported as is.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if ambient not in ("order_unit", "jh"):
        raise ValueError("ambient must be 'order_unit' or 'jh'")
    gamma = 0.0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        z1 = random_element(alg, rng)
        z2 = random_element(alg, rng)
        x = product(z1, z1)
        y = Element(alg, x.coords + product(z2, z2).coords)
        if ambient == "order_unit":
            nx, ny = order_unit_norm(x), order_unit_norm(y)
        else:
            nx, ny = float(np.linalg.norm(x.coords)), float(np.linalg.norm(y.coords))
        if ny > 1e-12:
            gamma = max(gamma, nx / ny)
    return gamma


def jh_identity_check(alg, trials: int, seed: int, tol: float = 1e-10) -> SuiteReport:
    """Associativity of the inner product: <ab, c> == <b, ac>."""
    _require_jh(alg, "jh_identity_check")
    spec = SuiteSpec("jh_identity", alg, trials, tol, seed)
    start = time.perf_counter()
    worst = 0.0
    witness = None
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        c = random_element(alg, rng)
        lhs = inner(product(a, b), c)
        rhs = inner(b, product(a, c))
        scale = 1.0 + order_unit_norm(a) * order_unit_norm(b) * order_unit_norm(c)
        res = abs(lhs - rhs) / scale
        if res > worst:
            worst = res
            witness = {
                "check": "jh_identity",
                "inputs": {
                    "a": a.coords.tolist(),
                    "b": b.coords.tolist(),
                    "c": c.coords.tolist(),
                },
                "residual": res,
            }
    passed = worst <= tol
    return SuiteReport(
        spec=spec,
        passed=passed,
        max_residual=worst,
        witness=None if passed else witness,
        wall_time=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def functional_to_json(f: Functional) -> dict:
    return {"alg": alg_to_json(f.alg), "weights": f.weights.tolist()}


def functional_from_json(data) -> Functional:
    if isinstance(data, str):
        data = json.loads(data)
    return Functional(alg_from_json(data["alg"]), np.asarray(data["weights"], dtype=float))
