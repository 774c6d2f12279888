"""Metric and symmetric-space geometry on the open cone.

Covers the gauge and Thompson metric, the order-unit tangent norm and its
automorphism-transported twin, point symmetries and their Loos axioms,
geodesics, the positive-functional lower bound for the Thompson distance,
and the two comparison Riemannian metrics (the inner-product metric driven
by P(p^{-1}) and the log-characteristic-function metric).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .algebra import (
    Element,
    LinearOperator,
    NotInCone,
    Orthant,
    SpinFactor,
    apply_operator,
    eigenvalues,
    exp_element,
    identity,
    inner,
    inv_sqrt,
    inverse,
    is_jh_mode,
    log_element,
    quadratic_rep,
    random_element,
    random_interior,
    sqrt,
)
from .cone import (
    ConeStatus,
    classify,
    frame_states,
    order_unit_norm,
    relative_eigenvalues,
)
from .report import SuiteReport, SuiteSpec

__all__ = [
    "TangentVector",
    "Automorphism",
    "LoosResiduals",
    "gauge_M",
    "thompson_distance",
    "tangent_norm_tau",
    "tangent_norm_b",
    "quadratic_automorphism",
    "automorphism_from_point",
    "compose",
    "apply_automorphism",
    "symmetry",
    "loos_axioms",
    "geodesic_through",
    "caratheodory_restricted",
    "riemannian_metric_jh",
    "characteristic_metric",
    "tau_isometry_check",
]


def _require_interior(x: Element, what: str) -> None:
    if classify(x).status is not ConeStatus.INTERIOR:
        raise NotInCone(f"{what}: point is not in the open cone")


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector (base point in the open cone, free direction)."""

    base: Element
    dir: Element

    def __post_init__(self):
        if self.base.alg != self.dir.alg:
            raise ValueError("base and dir must share an algebra")
        _require_interior(self.base, "TangentVector")


@dataclass(frozen=True)
class Automorphism:
    """Invertible linear map preserving the cone.

    ``kind`` is ``"quadratic_rep"`` (op = P(a) for the stored source) or
    ``"composition"``.
    """

    op: LinearOperator
    kind: str
    sources: tuple = ()

    def __post_init__(self):
        if self.kind not in ("quadratic_rep", "composition"):
            raise ValueError(f"unknown automorphism kind: {self.kind!r}")
        if not np.isfinite(np.linalg.cond(self.op.matrix)) or np.linalg.cond(
            self.op.matrix
        ) > 1e14:
            raise ValueError("automorphism matrix is numerically singular")


def quadratic_automorphism(a: Element) -> Automorphism:
    """P(a) as a cone automorphism; a must be invertible (here: interior)."""
    _require_interior(a, "quadratic_automorphism")
    return Automorphism(op=quadratic_rep(a), kind="quadratic_rep", sources=(a,))


def automorphism_from_point(a: Element) -> Automorphism:
    """The transitivity witness g = P(sqrt(a)), which maps e to a."""
    return quadratic_automorphism(sqrt(a))


def compose(g: Automorphism, h: Automorphism) -> Automorphism:
    if g.op.alg != h.op.alg:
        raise ValueError("automorphisms act on different algebras")
    op = LinearOperator(g.op.alg, g.op.matrix @ h.op.matrix)
    return Automorphism(op=op, kind="composition", sources=(g, h))


def apply_automorphism(g: Automorphism, x: Element) -> Element:
    return apply_operator(g.op, x)


# ---------------------------------------------------------------------------
# Gauge and Thompson metric
# ---------------------------------------------------------------------------


def gauge_M(a: Element, b: Element) -> float:
    """Gauge ``M(a/b) = inf{beta > 0 : beta a >= b}`` for interior a, b;
    equals the top eigenvalue of ``P(a^{-1/2}) b``."""
    _require_interior(a, "gauge_M")
    _require_interior(b, "gauge_M")
    return float(relative_eigenvalues(b, a)[-1])


def thompson_distance(x: Element, y: Element) -> float:
    """Thompson metric ``max(log M(x/y), log M(y/x))`` on the open cone."""
    return max(math.log(gauge_M(x, y)), math.log(gauge_M(y, x)))


# ---------------------------------------------------------------------------
# Tangent norms
# ---------------------------------------------------------------------------


def tangent_norm_tau(t: TangentVector) -> float:
    """Compatible tangent norm: the order-unit norm of the direction taken
    at the base point."""
    return order_unit_norm(t.dir, t.base)


def tangent_norm_b(t: TangentVector, h: Automorphism) -> float:
    """Tangent norm transported to the identity by any automorphism h with
    h(base) = e; equal to tau by invariance."""
    moved = apply_automorphism(h, t.base)
    e = identity(t.base.alg)
    if not np.allclose(moved.coords, e.coords, rtol=0.0, atol=1e-8):
        raise ValueError("tangent_norm_b: automorphism does not map base to e")
    return order_unit_norm(apply_automorphism(h, t.dir), e)


# ---------------------------------------------------------------------------
# Symmetries and geodesics
# ---------------------------------------------------------------------------


def symmetry(x: Element, y: Element) -> Element:
    """Point symmetry around x: ``{x, y^{-1}, x} = P(x) y^{-1}``."""
    _require_interior(x, "symmetry")
    _require_interior(y, "symmetry")
    return apply_operator(quadratic_rep(x), inverse(y))


@dataclass(frozen=True)
class LoosResiduals:
    """Residuals of the symmetric-space multiplication axioms at (x, y, z).

    ``min_sphere_displacement`` witnesses the isolated-fixed-point axiom: the
    smallest displacement of the symmetry around x over a sampled sphere of
    radius ``sphere_radius`` about x (expected near twice the radius).
    """

    idempotent: float
    involution: float
    distributive: float
    min_sphere_displacement: float
    sphere_radius: float


def loos_axioms(
    x: Element,
    y: Element,
    z: Element,
    sphere_points: int = 24,
    seed: int = 0,
) -> LoosResiduals:
    for point in (x, y, z):
        _require_interior(point, "loos_axioms")

    r_idem = order_unit_norm(
        Element(x.alg, symmetry(x, x).coords - x.coords)
    ) / (1.0 + order_unit_norm(x))
    r_inv = order_unit_norm(
        Element(x.alg, symmetry(x, symmetry(x, y)).coords - y.coords)
    ) / (1.0 + order_unit_norm(y))
    lhs = symmetry(x, symmetry(y, z))
    rhs = symmetry(symmetry(x, y), symmetry(x, z))
    r_dist = order_unit_norm(Element(x.alg, lhs.coords - rhs.coords)) / (
        1.0 + order_unit_norm(lhs)
    )

    # Isolated fixed point: points on a small sphere around x are all moved.
    # The radius keeps the sphere inside the cone (coordinate 2-norm balls of
    # radius rho sit inside the cone when rho < min_eig / sqrt(2) for every
    # implemented instance).
    min_eig = float(eigenvalues(x)[0])
    radius = min(0.1 * order_unit_norm(x), min_eig / (2.0 * math.sqrt(2.0)))
    rng = np.random.default_rng(seed)
    min_disp = math.inf
    for _ in range(sphere_points):
        direction = rng.standard_normal(x.alg.dim)
        direction /= np.linalg.norm(direction)
        y_sphere = Element(x.alg, x.coords + radius * direction)
        moved = symmetry(x, y_sphere)
        min_disp = min(min_disp, float(np.linalg.norm(moved.coords - y_sphere.coords)))
    return LoosResiduals(
        idempotent=r_idem,
        involution=r_inv,
        distributive=r_dist,
        min_sphere_displacement=min_disp,
        sphere_radius=radius,
    )


def geodesic_through(p: Element, q: Element, t: float) -> Element:
    """Point at parameter t on the geodesic with gamma(0) = p, gamma(1) = q:
    translate p to e by P(p^{-1/2}), run the one-parameter exp curve, and
    translate back."""
    _require_interior(p, "geodesic_through")
    _require_interior(q, "geodesic_through")
    to_e = quadratic_rep(inv_sqrt(p))
    z = log_element(apply_operator(to_e, q))
    back = quadratic_rep(sqrt(p))
    return apply_operator(back, exp_element(Element(p.alg, t * z.coords)))


# ---------------------------------------------------------------------------
# Caratheodory-restriction lower bound
# ---------------------------------------------------------------------------


def caratheodory_restricted(x: Element, y: Element, n_extreme: int, seed: int = 0) -> float:
    """Supremum of |log(f(x)/f(y))| over sampled positive functionals.

    Always includes the extreme-ray functionals of the spectral frames of x
    and y, and the pushforwards through P(x^{-1/2}), P(y^{-1/2}) of the frame
    functionals of the relative elements; the latter attain the Thompson
    distance on the implemented instances.  Increasing ``n_extreme`` only
    extends the sampled family, so the bound is monotone in it.
    """
    if n_extreme < 1:
        raise ValueError("n_extreme must be >= 1")
    _require_interior(x, "caratheodory_restricted")
    _require_interior(y, "caratheodory_restricted")
    alg = x.alg
    weights = []
    for base, other in ((y, x), (x, y)):
        conj = quadratic_rep(inv_sqrt(base))
        w = apply_operator(conj, other)
        # P is self-adjoint for the coordinate inner product, so f . P has
        # weight vector P f.
        weights.extend(conj.matrix @ f.weights for f in frame_states(w))
    weights.extend(f.weights for f in frame_states(x))
    weights.extend(f.weights for f in frame_states(y))
    rng = np.random.default_rng(seed)
    for _ in range(n_extreme):
        weights.extend(f.weights for f in frame_states(random_element(alg, rng)))

    best = 0.0
    for w in weights:
        fx = float(w @ x.coords)
        fy = float(w @ y.coords)
        if fx > 0.0 and fy > 0.0:
            best = max(best, abs(math.log(fx / fy)))
    return best


# ---------------------------------------------------------------------------
# Comparison Riemannian metrics
# ---------------------------------------------------------------------------


def riemannian_metric_jh(p: Element, u: Element, v: Element) -> float:
    """Inner-product Riemannian metric ``g_p(u, v) = <P(p^{-1}) u, v>``;
    reduces to the plain inner product at the identity."""
    if not is_jh_mode(p.alg):
        raise ValueError("riemannian_metric_jh requires the l2/trace mode")
    _require_interior(p, "riemannian_metric_jh")
    return inner(apply_operator(quadratic_rep(inverse(p)), u), v)


def characteristic_metric(p: Element, u: Element, v: Element) -> float:
    """Hessian metric of the log characteristic function of the cone.

    Closed forms: on the orthant the Hessian of ``-sum log p_i``; on the
    Lorentz cone of a spin factor (ambient dimension m) the Hessian of
    ``-(m/2) log q(p)`` with q the Lorentz form.  Constants of the
    characteristic function drop out of the Hessian.
    """
    alg = p.alg
    _require_interior(p, "characteristic_metric")
    if isinstance(alg, Orthant):
        return float(np.sum(u.coords * v.coords / p.coords**2))
    if isinstance(alg, SpinFactor):
        m = alg.dim
        j_diag = np.concatenate([-np.ones(alg.n), [1.0]])
        jp = j_diag * p.coords
        q = float(p.coords @ jp)
        ujp = float(u.coords @ jp)
        vjp = float(v.coords @ jp)
        ujv = float(u.coords @ (j_diag * v.coords))
        return m * (2.0 * ujp * vjp / q**2 - ujv / q)
    raise ValueError(
        "characteristic_metric has closed forms for the orthant and Lorentz (spin) cones only"
    )


# ---------------------------------------------------------------------------
# Invariance suite
# ---------------------------------------------------------------------------


def tau_isometry_check(g: Automorphism, trials: int, seed: int, tol: float = 1e-9) -> SuiteReport:
    """Invariance of the tangent norm and the Thompson distance under a cone
    automorphism."""
    alg = g.op.alg
    spec = SuiteSpec("tau_invariance", alg, trials, tol, seed)
    start = time.perf_counter()
    worst = 0.0
    witness = None
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        p = random_interior(alg, rng)
        v = random_element(alg, rng)
        tau = tangent_norm_tau(TangentVector(p, v))
        gp = apply_automorphism(g, p)
        gv = apply_automorphism(g, v)
        res = abs(tangent_norm_tau(TangentVector(gp, gv)) - tau) / (1.0 + tau)
        check = "tau_invariance"
        inputs = {"p": p.coords.tolist(), "v": v.coords.tolist()}
        x = random_interior(alg, rng)
        y = random_interior(alg, rng)
        d = thompson_distance(x, y)
        gd = thompson_distance(apply_automorphism(g, x), apply_automorphism(g, y))
        res_d = abs(gd - d) / (1.0 + d)
        if res_d > res:
            res = res_d
            check = "thompson_invariance"
            inputs = {"x": x.coords.tolist(), "y": y.coords.tolist()}
        if res > worst:
            worst = res
            witness = {"check": check, "inputs": inputs, "residual": res}
    passed = worst <= tol
    return SuiteReport(
        spec=spec,
        passed=passed,
        max_residual=worst,
        witness=None if passed else witness,
        wall_time=time.perf_counter() - start,
    )
