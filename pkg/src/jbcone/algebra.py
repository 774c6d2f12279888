"""Concrete Euclidean Jordan algebra instances and their arithmetic.

Four instance families are supported: the positive orthant algebra on
``R^n`` (pointwise product), real symmetric matrices with the symmetrized
product ``(AB + BA) / 2``, spin factors ``R^n + R`` with the product
``(a, alpha)(b, beta) = (beta a + alpha b, <a, b> + alpha beta)``, and
depth-one direct sums of the above with componentwise arithmetic.

Elements are stored as flat coordinate vectors.  Symmetric matrices use an
upper-triangular packing with off-diagonal entries scaled by sqrt(2), so the
coordinate dot product equals the trace form ``tr(AB)``.  All values are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "AlgebraMismatch",
    "SingularElement",
    "NotInCone",
    "BasePointNotInCone",
    "Orthant",
    "SymMatrices",
    "SpinFactor",
    "DirectSum",
    "Element",
    "LinearOperator",
    "SpectralDecomposition",
    "SINGULAR_RTOL",
    "identity",
    "element",
    "random_element",
    "random_interior",
    "product",
    "left_mult",
    "apply_operator",
    "commutator",
    "triple_product",
    "quadratic_rep",
    "power",
    "eigenvalues",
    "spectral_radius",
    "spectral_decompose",
    "inverse",
    "sqrt",
    "log_element",
    "exp_element",
    "inv_sqrt",
    "inner",
    "pack_sym",
    "unpack_sym",
    "alg_to_json",
    "alg_from_json",
    "element_to_json",
    "element_from_json",
]

# Relative eigenvalue threshold below which an element is treated as
# singular / on the cone boundary for functional-calculus purposes.
SINGULAR_RTOL = 1e-12


class AlgebraMismatch(ValueError):
    """Operands belong to different algebra instances."""


class SingularElement(ValueError):
    """Inverse requested for an element with a (numerically) zero eigenvalue."""


class NotInCone(ValueError):
    """Operation requires a point of the open cone."""


class BasePointNotInCone(NotInCone):
    """Base point of an order-unit norm must lie in the open cone."""


# ---------------------------------------------------------------------------
# Algebra descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Orthant:
    """Pointwise product algebra on R^n; cone = positive orthant."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Orthant requires n >= 1")

    @property
    def dim(self) -> int:
        return self.n


@dataclass(frozen=True)
class SymMatrices:
    """Real symmetric n x n matrices under the symmetrized product."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("SymMatrices requires n >= 1")

    @property
    def dim(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class SpinFactor:
    """Spin factor R^n + R; coordinates pack the vector part first, the
    scalar part last, so the identity is (0, ..., 0, 1)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("SpinFactor requires n >= 1")

    @property
    def dim(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class DirectSum:
    """Direct sum of non-sum instances with componentwise arithmetic.

    ``norm_mode`` selects the natural Banach structure of the sum:
    ``"inf"`` (sup of component order-unit norms) or ``"l2"`` (Hilbert sum,
    the mode in which the summed inner product is associative).
    """

    parts: tuple
    norm_mode: str = "inf"

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("DirectSum requires at least one part")
        for part in self.parts:
            if isinstance(part, DirectSum):
                raise ValueError("DirectSum parts must be non-sum instances")
            if not isinstance(part, (Orthant, SymMatrices, SpinFactor)):
                raise TypeError(f"invalid direct-sum part: {part!r}")
        if self.norm_mode not in ("inf", "l2"):
            raise ValueError("norm_mode must be 'inf' or 'l2'")

    @property
    def dim(self) -> int:
        return sum(part.dim for part in self.parts)

    def offsets(self):
        """(start, stop) coordinate slices of the parts."""
        bounds = []
        start = 0
        for part in self.parts:
            bounds.append((start, start + part.dim))
            start += part.dim
        return bounds


def is_jh_mode(alg) -> bool:
    """True when the instance carries the associative (trace / l2) inner
    product: always for the non-sum families, only in l2 mode for sums."""
    if isinstance(alg, DirectSum):
        return alg.norm_mode == "l2"
    return True


# ---------------------------------------------------------------------------
# Elements and operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Element:
    """An algebra element, held as its coordinate vector."""

    alg: object
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float)
        if coords.shape != (self.alg.dim,):
            raise ValueError(
                f"coords must have length {self.alg.dim}, got {coords.shape}"
            )
        if not np.all(np.isfinite(coords)):
            raise ValueError("coords must be finite")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    def __repr__(self):
        return f"Element({self.alg!r}, {self.coords.tolist()})"


@dataclass(frozen=True)
class LinearOperator:
    """Dense matrix of a linear map on the algebra's coordinate space."""

    alg: object
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        d = self.alg.dim
        if matrix.shape != (d, d):
            raise ValueError(f"matrix must be {d}x{d}, got {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("matrix entries must be finite")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) with a matching complete orthogonal system of
    idempotents, so that the element equals sum(lambda_i * c_i)."""

    eigenvalues: np.ndarray
    idempotents: list


def _check_same_algebra(*elems):
    alg = elems[0].alg
    for other in elems[1:]:
        if other.alg != alg:
            raise AlgebraMismatch(f"mixed algebras: {alg!r} vs {other.alg!r}")
    return alg


# ---------------------------------------------------------------------------
# Symmetric-matrix packing (trace-form isometry)
# ---------------------------------------------------------------------------

_SQRT2 = float(np.sqrt(2.0))


@lru_cache(maxsize=None)
def _sym_packing(n):
    rows, cols = np.triu_indices(n)
    off = rows != cols
    pack_scale = np.where(off, _SQRT2, 1.0)
    unpack_scale = np.where(off, 1.0 / _SQRT2, 1.0)
    return rows, cols, pack_scale, unpack_scale


def pack_sym(matrix) -> np.ndarray:
    """Pack a symmetric matrix into coordinates; off-diagonals are scaled by
    sqrt(2) so that ``pack(A) . pack(B) == tr(A B)``."""
    matrix = np.asarray(matrix, dtype=float)
    rows, cols, pack_scale, _ = _sym_packing(matrix.shape[0])
    return matrix[rows, cols] * pack_scale


def unpack_sym(n: int, coords) -> np.ndarray:
    """Inverse of :func:`pack_sym`."""
    coords = np.asarray(coords, dtype=float)
    rows, cols, _, unpack_scale = _sym_packing(n)
    matrix = np.zeros((n, n))
    vals = coords * unpack_scale
    matrix[rows, cols] = vals
    matrix[cols, rows] = vals
    return matrix


# ---------------------------------------------------------------------------
# Kernel arithmetic on raw coordinate vectors
# ---------------------------------------------------------------------------


def _identity_coords(alg) -> np.ndarray:
    if isinstance(alg, Orthant):
        return np.ones(alg.n)
    if isinstance(alg, SymMatrices):
        return pack_sym(np.eye(alg.n))
    if isinstance(alg, SpinFactor):
        coords = np.zeros(alg.n + 1)
        coords[-1] = 1.0
        return coords
    if isinstance(alg, DirectSum):
        return np.concatenate([_identity_coords(part) for part in alg.parts])
    raise TypeError(f"unknown algebra: {alg!r}")


def _product_coords(alg, x, y) -> np.ndarray:
    if isinstance(alg, Orthant):
        return x * y
    if isinstance(alg, SymMatrices):
        a = unpack_sym(alg.n, x)
        b = unpack_sym(alg.n, y)
        return pack_sym(0.5 * (a @ b + b @ a))
    if isinstance(alg, SpinFactor):
        a, alpha = x[:-1], x[-1]
        b, beta = y[:-1], y[-1]
        out = np.empty(alg.n + 1)
        out[:-1] = beta * a + alpha * b
        out[-1] = a @ b + alpha * beta
        return out
    if isinstance(alg, DirectSum):
        out = np.empty(alg.dim)
        for part, (lo, hi) in zip(alg.parts, alg.offsets()):
            out[lo:hi] = _product_coords(part, x[lo:hi], y[lo:hi])
        return out
    raise TypeError(f"unknown algebra: {alg!r}")


def _eigvals(alg, x) -> np.ndarray:
    """Spectrum of an element, ascending, without idempotents."""
    if isinstance(alg, Orthant):
        return np.sort(x)
    if isinstance(alg, SymMatrices):
        return np.linalg.eigvalsh(unpack_sym(alg.n, x))
    if isinstance(alg, SpinFactor):
        r = float(np.linalg.norm(x[:-1]))
        alpha = x[-1]
        return np.array([alpha - r, alpha + r])
    if isinstance(alg, DirectSum):
        return np.sort(
            np.concatenate(
                [_eigvals(part, x[lo:hi]) for part, (lo, hi) in zip(alg.parts, alg.offsets())]
            )
        )
    raise TypeError(f"unknown algebra: {alg!r}")


def _spectrum(alg, x):
    """Return ``(eigenvalues, frame)`` with eigenvalues ascending and
    ``frame`` a (k, dim) array of idempotent coordinate rows."""
    if isinstance(alg, Orthant):
        order = np.argsort(x, kind="stable")
        return x[order], np.eye(alg.n)[order]
    if isinstance(alg, SymMatrices):
        eigs, vecs = np.linalg.eigh(unpack_sym(alg.n, x))
        rows, cols, pack_scale, _ = _sym_packing(alg.n)
        # packed rank-one projectors of all eigenvectors at once
        frame = (vecs[rows] * vecs[cols]).T * pack_scale
        return eigs, frame
    if isinstance(alg, SpinFactor):
        a, alpha = x[:-1], x[-1]
        r = float(np.linalg.norm(a))
        if r > 0.0:
            u = a / r
        else:
            # Spectral frame of a scalar multiple of the identity is not
            # unique; any unit direction gives a valid (and, for functional
            # calculus, equivalent) frame.
            u = np.zeros(alg.n)
            u[0] = 1.0
        low = np.concatenate([-0.5 * u, [0.5]])
        high = np.concatenate([0.5 * u, [0.5]])
        return np.array([alpha - r, alpha + r]), np.stack([low, high])
    if isinstance(alg, DirectSum):
        eigs = []
        frames = []
        for part, (lo, hi) in zip(alg.parts, alg.offsets()):
            part_eigs, part_frame = _spectrum(part, x[lo:hi])
            eigs.append(part_eigs)
            embedded = np.zeros((part_frame.shape[0], alg.dim))
            embedded[:, lo:hi] = part_frame
            frames.append(embedded)
        eigs = np.concatenate(eigs)
        frame = np.vstack(frames)
        order = np.argsort(eigs, kind="stable")
        return eigs[order], frame[order]
    raise TypeError(f"unknown algebra: {alg!r}")


def _singular_tol(eigs) -> float:
    scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    return SINGULAR_RTOL * (1.0 + scale)


def _spectral_map(a: Element, fn, require_positive=False, op_name="") -> Element:
    eigs, frame = _spectrum(a.alg, a.coords)
    tol = _singular_tol(eigs)
    if require_positive and eigs[0] <= tol:
        raise NotInCone(
            f"{op_name}: element is not in the open cone (min eigenvalue {eigs[0]:.3e})"
        )
    return Element(a.alg, frame.T @ fn(eigs))


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def identity(alg) -> Element:
    """The algebra identity e (order unit of the cone)."""
    return Element(alg, _identity_coords(alg))


def element(alg, coords) -> Element:
    """Validated element constructor."""
    return Element(alg, np.asarray(coords, dtype=float))


def random_element(alg, rng) -> Element:
    """Element with independent standard-normal coordinates."""
    return Element(alg, rng.standard_normal(alg.dim))


def random_interior(alg, rng, scale=0.7) -> Element:
    """Random point of the open cone, exp of a scaled Gaussian draw."""
    return exp_element(Element(alg, scale * rng.standard_normal(alg.dim)))


def product(a: Element, b: Element) -> Element:
    """Jordan product of two elements.

    Commutative and bilinear; satisfies the Jordan identity
    ``a(b a^2) = (a b) a^2`` for every instance family.
    """
    alg = _check_same_algebra(a, b)
    return Element(alg, _product_coords(alg, a.coords, b.coords))


def _left_mult_matrix(alg, a: np.ndarray) -> np.ndarray:
    if isinstance(alg, Orthant):
        return np.diag(a)
    if isinstance(alg, SpinFactor):
        n = alg.n
        m = np.zeros((n + 1, n + 1))
        np.fill_diagonal(m, a[-1])
        m[:n, -1] = a[:n]
        m[-1, :n] = a[:n]
        return m
    if isinstance(alg, SymMatrices):
        mat = unpack_sym(alg.n, a)
        d = alg.dim
        basis = np.eye(d)
        out = np.empty((d, d))
        for k in range(d):
            ek = unpack_sym(alg.n, basis[k])
            out[:, k] = pack_sym(0.5 * (mat @ ek + ek @ mat))
        return out
    if isinstance(alg, DirectSum):
        out = np.zeros((alg.dim, alg.dim))
        for part, (lo, hi) in zip(alg.parts, alg.offsets()):
            out[lo:hi, lo:hi] = _left_mult_matrix(part, a[lo:hi])
        return out
    raise TypeError(f"unknown algebra: {alg!r}")


def left_mult(a: Element) -> LinearOperator:
    """Matrix of the left multiplication ``x -> a x``."""
    return LinearOperator(a.alg, _left_mult_matrix(a.alg, a.coords))


def apply_operator(op: LinearOperator, x: Element) -> Element:
    if op.alg != x.alg:
        raise AlgebraMismatch(f"mixed algebras: {op.alg!r} vs {x.alg!r}")
    return Element(x.alg, op.matrix @ x.coords)


def commutator(s: LinearOperator, t: LinearOperator) -> LinearOperator:
    """Operator commutator ``S T - T S``."""
    if s.alg != t.alg:
        raise AlgebraMismatch(f"mixed algebras: {s.alg!r} vs {t.alg!r}")
    return LinearOperator(s.alg, s.matrix @ t.matrix - t.matrix @ s.matrix)


def triple_product(a: Element, b: Element, c: Element) -> Element:
    """Jordan triple product ``(ab)c + a(bc) - b(ac)``."""
    _check_same_algebra(a, b, c)
    ab_c = product(product(a, b), c)
    a_bc = product(a, product(b, c))
    b_ac = product(b, product(a, c))
    return Element(a.alg, ab_c.coords + a_bc.coords - b_ac.coords)


def quadratic_rep(a: Element) -> LinearOperator:
    """Quadratic representation ``P(a) = 2 L_a^2 - L_{a^2}``, i.e. the matrix
    of ``x -> {a, x, a}``."""
    alg = a.alg
    la = _left_mult_matrix(alg, a.coords)
    la2 = _left_mult_matrix(alg, _product_coords(alg, a.coords, a.coords))
    return LinearOperator(alg, 2.0 * (la @ la) - la2)


def power(a: Element, n: int) -> Element:
    """Left-iterated power ``a^1 = a, a^{n+1} = a a^n`` (n >= 1)."""
    if n < 1:
        raise ValueError("power requires n >= 1; use identity() for n = 0")
    out = a.coords
    for _ in range(n - 1):
        out = _product_coords(a.alg, a.coords, out)
    return Element(a.alg, out)


def eigenvalues(a: Element) -> np.ndarray:
    """Spectrum of the element, ascending."""
    return _eigvals(a.alg, a.coords)


def spectral_radius(a: Element) -> float:
    """max |eigenvalue|; equals the order-unit norm at the identity."""
    eigs = _eigvals(a.alg, a.coords)
    return float(max(abs(eigs[0]), abs(eigs[-1])))


def spectral_decompose(a: Element) -> SpectralDecomposition:
    """Eigenvalues with an idempotent frame reconstructing the element."""
    eigs, frame = _spectrum(a.alg, a.coords)
    idems = [Element(a.alg, row) for row in frame]
    return SpectralDecomposition(eigenvalues=eigs, idempotents=idems)


def inverse(a: Element) -> Element:
    """Jordan inverse, via the eigenvalue map ``lambda -> 1/lambda``.

    Raises :class:`SingularElement` when the spectrum touches zero at
    relative tolerance ``SINGULAR_RTOL``.
    """
    eigs, frame = _spectrum(a.alg, a.coords)
    if np.min(np.abs(eigs)) <= _singular_tol(eigs):
        raise SingularElement(
            f"inverse: eigenvalue {eigs[np.argmin(np.abs(eigs))]:.3e} is numerically zero"
        )
    return Element(a.alg, frame.T @ (1.0 / eigs))


def sqrt(a: Element) -> Element:
    """Square root of a point of the open cone: sqrt(a)^2 = a."""
    return _spectral_map(a, np.sqrt, require_positive=True, op_name="sqrt")


def log_element(a: Element) -> Element:
    """Logarithm on the open cone; inverse of :func:`exp_element`."""
    return _spectral_map(a, np.log, require_positive=True, op_name="log")


def inv_sqrt(a: Element) -> Element:
    """``a^{-1/2}`` on the open cone, in one spectral pass."""
    return _spectral_map(
        a, lambda t: 1.0 / np.sqrt(t), require_positive=True, op_name="inv_sqrt"
    )


def exp_element(z: Element) -> Element:
    """Exponential ``e + z + z^2/2! + ...`` via the eigenvalue map; always
    lands in the open cone."""
    return _spectral_map(z, np.exp)


def inner(a: Element, b: Element) -> float:
    """Associative inner product (coordinate dot product; equals the trace
    form on symmetric matrices through the packing)."""
    _check_same_algebra(a, b)
    return float(a.coords @ b.coords)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def alg_to_json(alg) -> dict:
    if isinstance(alg, Orthant):
        return {"kind": "orthant", "n": alg.n}
    if isinstance(alg, SymMatrices):
        return {"kind": "sym", "n": alg.n}
    if isinstance(alg, SpinFactor):
        return {"kind": "spin", "n": alg.n}
    if isinstance(alg, DirectSum):
        return {
            "kind": "sum",
            "parts": [alg_to_json(part) for part in alg.parts],
            "norm": alg.norm_mode,
        }
    raise TypeError(f"unknown algebra: {alg!r}")


def alg_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "orthant":
        return Orthant(int(data["n"]))
    if kind == "sym":
        return SymMatrices(int(data["n"]))
    if kind == "spin":
        return SpinFactor(int(data["n"]))
    if kind == "sum":
        parts = tuple(alg_from_json(part) for part in data["parts"])
        return DirectSum(parts, data.get("norm", "inf"))
    raise ValueError(f"unknown algebra kind: {kind!r}")


def element_to_json(a: Element) -> dict:
    return {"alg": alg_to_json(a.alg), "coords": a.coords.tolist()}


def element_from_json(data) -> Element:
    if isinstance(data, str):
        data = json.loads(data)
    return Element(alg_from_json(data["alg"]), np.asarray(data["coords"], dtype=float))
