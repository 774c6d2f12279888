"""Independent oracles for the test suite.

Each oracle avoids the closed-form code path it checks: order-unit norms and
gauges are bisected through the partial order alone, the exponential is a
truncated product series, Thompson distances on the orthant come from the
componentwise formula, and the characteristic-function metric is compared
against a finite-difference Hessian of a numerically integrated phi.
"""

import numpy as np

from jbcone import Element, identity, order_leq, power, product


def bisect_order_unit_norm(x, p, iters=60):
    """inf{lam > 0 : -lam p <= x <= lam p} by doubling and bisection over
    order_leq only."""
    neg = Element(x.alg, -x.coords)

    def dominated(lam):
        bound = Element(x.alg, lam * p.coords)
        return order_leq(x, bound) and order_leq(neg, bound)

    hi = 1.0
    while not dominated(hi):
        hi *= 2.0
        assert hi < 1e12, "bisection bracket blew up"
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if dominated(mid):
            hi = mid
        else:
            lo = mid
    return hi


def bisect_gauge(a, b, iters=60):
    """inf{beta > 0 : beta a >= b} by doubling and bisection over order_leq."""

    def dominates(beta):
        return order_leq(b, Element(a.alg, beta * a.coords))

    hi = 1.0
    while not dominates(hi):
        hi *= 2.0
        assert hi < 1e12, "bisection bracket blew up"
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if dominates(mid):
            hi = mid
        else:
            lo = mid
    return hi


def exp_series(z, terms=40):
    """Truncated exponential series e + z + z^2/2! + ... via products only."""
    acc = identity(z.alg).coords.copy()
    fact = 1.0
    for k in range(1, terms + 1):
        fact *= k
        acc = acc + power(z, k).coords / fact
    return Element(z.alg, acc)


def orthant_thompson(x, y):
    return float(np.max(np.abs(np.log(x.coords / y.coords))))


def pointwise_triple(x, y, z):
    """Triple product in the associative orthant algebra."""
    return x.coords * y.coords * z.coords


def sym_product_matrix(a_mat, b_mat):
    """Symmetrized matrix product evaluated by plain matrix arithmetic."""
    return 0.5 * (a_mat @ b_mat + b_mat @ a_mat)


# ---------------------------------------------------------------------------
# Characteristic-function quadrature (2-dimensional cones)
# ---------------------------------------------------------------------------


def phi_orthant2(x, epsabs=1e-11):
    from scipy.integrate import dblquad

    val, _ = dblquad(
        lambda y2, y1: np.exp(-(x[0] * y1 + x[1] * y2)),
        0.0,
        np.inf,
        0.0,
        np.inf,
        epsabs=epsabs,
        epsrel=epsabs,
    )
    return val


def phi_lorentz2(x, epsabs=1e-11):
    """Characteristic function of the 2-d Lorentz cone {(b, beta): beta > |b|},
    integrating over its (self-)dual cone."""
    from scipy.integrate import dblquad

    val, _ = dblquad(
        lambda b, beta: np.exp(-(x[0] * b + x[1] * beta)),
        0.0,
        np.inf,
        lambda beta: -beta,
        lambda beta: beta,
        epsabs=epsabs,
        epsrel=epsabs,
    )
    return val


def fd_hessian_log(phi, p, h=5e-3):
    """Central finite-difference Hessian of log(phi) at p (length-2 p)."""
    p = np.asarray(p, dtype=float)

    def f(q):
        return np.log(phi(q))

    hess = np.empty((2, 2))
    for i in range(2):
        ei = np.zeros(2)
        ei[i] = h
        hess[i, i] = (f(p + ei) - 2.0 * f(p) + f(p - ei)) / h**2
    e0 = np.array([h, 0.0])
    e1 = np.array([0.0, h])
    hess[0, 1] = hess[1, 0] = (
        f(p + e0 + e1) - f(p + e0 - e1) - f(p - e0 + e1) + f(p - e0 - e1)
    ) / (4.0 * h**2)
    return hess
