"""Matrix Lie algebras, the group algebra, and their basic maps.

Wave-function amplitudes live in the group algebra of a compact group,
modelled here as the full space of N x N complex matrices in a fixed
faithful unitary representation.  Lagrangian-like quantities and gauge
potentials live in the Lie algebra, modelled as anti-Hermitian matrices.
The probability map p(g) = Tr(g^dag g) connects amplitudes to observable
weights; ordered products of exponentials realize time ordering, with
later times acting on the left.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg as sla

from .errors import (
    DimensionError,
    NotAntiHermitianError,
    NotUnitaryError,
    RealModeError,
)

__all__ = [
    "AlgebraElement",
    "GroupAlgebraElement",
    "GroupElement",
    "AlgebraBasis",
    "su_basis",
    "u_basis",
    "exp_map",
    "expm_anti_hermitian",
    "probability",
    "inner_product",
    "inner_product_real",
    "time_ordered_exp",
    "random_algebra_element",
    "random_group_algebra_element",
    "random_unitary",
]

ANTIHERM_PROJECT_TOL = 1e-8
UNITARY_TOL = 1e-12


def _as_square_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise DimensionError("matrix dimension must be positive")
    return m


class AlgebraElement:
    """An anti-Hermitian N x N matrix: a Lie-algebra value.

    Construction projects x <- (x - x^dag)/2 when the anti-Hermiticity
    defect is below ``tol`` (roundoff repair) and rejects larger defects
    as genuine errors.
    """

    __slots__ = ("_m",)

    def __init__(self, matrix, tol: float = ANTIHERM_PROJECT_TOL):
        m = _as_square_matrix(matrix)
        if not np.all(np.isfinite(m)):
            raise ValueError("algebra element has non-finite entries")
        defect = np.max(np.abs(m + m.conj().T))
        if defect > tol:
            raise NotAntiHermitianError(
                f"anti-Hermiticity defect {defect:.3e} exceeds tolerance {tol:.1e}")
        if defect > 0.0:
            m = 0.5 * (m - m.conj().T)
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def dim(self) -> int:
        return self._m.shape[0]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self._m + other._m)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self._m - other._m)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self._m)

    def __mul__(self, scalar) -> "AlgebraElement":
        if np.iscomplexobj(type(scalar)) or (isinstance(scalar, complex) and scalar.imag != 0.0):
            raise ValueError("scaling by a non-real scalar leaves the Lie algebra")
        return AlgebraElement(float(scalar) * self._m)

    __rmul__ = __mul__

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self._m @ other._m - other._m @ self._m)

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self._m))

    def __repr__(self):
        return f"AlgebraElement(dim={self.dim})"


class GroupAlgebraElement:
    """An arbitrary N x N complex matrix: a probability-amplitude value."""

    __slots__ = ("_m",)

    def __init__(self, matrix):
        m = _as_square_matrix(matrix)
        if not np.all(np.isfinite(m)):
            raise ValueError("group-algebra element has non-finite entries")
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def dim(self) -> int:
        return self._m.shape[0]

    def dagger(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self._m.conj().T)

    def __add__(self, other):
        return GroupAlgebraElement(self._m + other._m)

    def __sub__(self, other):
        return GroupAlgebraElement(self._m - other._m)

    def __mul__(self, scalar):
        return GroupAlgebraElement(complex(scalar) * self._m)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return GroupAlgebraElement(self._m @ other._m)

    def __repr__(self):
        return f"GroupAlgebraElement(dim={self.dim})"


class GroupElement:
    """A unitary N x N matrix: a group element (e.g. a gauge transformation)."""

    __slots__ = ("_m",)

    def __init__(self, matrix, tol: float = UNITARY_TOL):
        m = _as_square_matrix(matrix)
        defect = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
        if defect > tol:
            raise NotUnitaryError(f"unitarity defect {defect:.3e} exceeds tolerance {tol:.1e}")
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def dim(self) -> int:
        return self._m.shape[0]

    def dagger(self) -> "GroupElement":
        return GroupElement(self._m.conj().T)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self._m @ other._m)

    def __repr__(self):
        return f"GroupElement(dim={self.dim})"


@dataclass(frozen=True)
class AlgebraBasis:
    """Ordered set of trace-orthogonal anti-Hermitian generators.

    ``normalization`` is the constant c in Tr(T_a^dag T_b) = c delta_ab.
    """

    group: str
    generators: tuple
    normalization: float
    _structure: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise DimensionError("basis needs at least one generator")
        d = gens[0].dim
        for i, t in enumerate(gens):
            if t.dim != d:
                raise DimensionError("generators have inconsistent dimensions")
        gram = np.array([[np.einsum("ij,ij->", a.matrix.conj(), b.matrix)
                          for b in gens] for a in gens])
        target = self.normalization * np.eye(len(gens))
        if np.max(np.abs(gram - target)) > 1e-10:
            raise ValueError("generators are not trace-orthogonal with the stated constant")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    def __len__(self) -> int:
        return len(self.generators)

    def element(self, coefficients) -> AlgebraElement:
        """Real linear combination sum_a c_a T_a."""
        c = np.asarray(coefficients, dtype=float)
        if c.shape != (len(self),):
            raise DimensionError(f"expected {len(self)} coefficients, got {c.shape}")
        mats = np.stack([t.matrix for t in self.generators])
        return AlgebraElement(np.einsum("a,aij->ij", c, mats))

    def coefficients(self, x: AlgebraElement) -> np.ndarray:
        """Project an algebra element onto the basis (least squares in trace norm)."""
        return np.array([
            np.einsum("ij,ij->", t.matrix.conj(), x.matrix).real / self.normalization
            for t in self.generators])

    def structure_constants(self) -> np.ndarray:
        """f[a,b,c] with [T_a, T_b] = sum_c f[a,b,c] T_c (cached)."""
        if "f" not in self._structure:
            d = len(self)
            f = np.empty((d, d, d))
            for a in range(d):
                for b in range(d):
                    f[a, b] = self.coefficients(self.generators[a].commutator(self.generators[b]))
            self._structure["f"] = f
        return self._structure["f"]


def su_basis(n: int) -> AlgebraBasis:
    """Anti-Hermitian traceless generators of su(N), Tr(T_a^dag T_b) = delta_ab / 2.

    The generators are i/2 times the generalized Gell-Mann matrices:
    symmetric and antisymmetric off-diagonal pairs plus diagonal elements.
    """
    if int(n) != n or n < 2:
        raise DimensionError(f"su(N) basis needs integer N >= 2, got {n!r}")
    n = int(n)
    gens = []
    for j in range(n):
        for k in range(j + 1, n):
            sym = np.zeros((n, n), dtype=complex)
            sym[j, k] = sym[k, j] = 1.0
            gens.append(sym)
            asym = np.zeros((n, n), dtype=complex)
            asym[j, k] = -1j
            asym[k, j] = 1j
            gens.append(asym)
    for l in range(1, n):
        diag = np.zeros((n, n), dtype=complex)
        diag[np.arange(l), np.arange(l)] = 1.0
        diag[l, l] = -l
        gens.append(np.sqrt(2.0 / (l * (l + 1))) * diag)
    elements = tuple(AlgebraElement(0.5j * g) for g in gens)
    return AlgebraBasis(group=f"su({n})", generators=elements, normalization=0.5)


def u_basis(n: int) -> AlgebraBasis:
    """Generators of u(N): su(N) plus the normalized anti-Hermitian identity.

    For N = 1 this is the single generator i/sqrt(2), the ordinary
    complex-phase direction.
    """
    if int(n) != n or n < 1:
        raise DimensionError(f"u(N) basis needs integer N >= 1, got {n!r}")
    n = int(n)
    center = AlgebraElement(1j * np.eye(n) / np.sqrt(2.0 * n))
    if n == 1:
        gens = (center,)
    else:
        gens = su_basis(n).generators + (center,)
    return AlgebraBasis(group=f"u({n})", generators=gens, normalization=0.5)


def expm_anti_hermitian(x: np.ndarray) -> np.ndarray:
    """exp of (a stack of) anti-Hermitian matrices via eigendecomposition.

    Writes x = -iH with H Hermitian, so exp(x) = V diag(e^{-iw}) V^dag.
    Unitary to machine precision, vectorized over leading axes.
    """
    w, v = np.linalg.eigh(1j * np.asarray(x))
    return np.einsum("...ij,...j,...kj->...ik", v, np.exp(-1j * w), v.conj())


def exp_map(x: AlgebraElement, scale: complex = 1.0) -> GroupAlgebraElement:
    """Matrix exponential exp(scale * x) as a group-algebra element.

    A real scale keeps the exponent anti-Hermitian and uses the
    eigendecomposition route (exactly unitary output); a genuinely complex
    scale falls back to scaling-and-squaring.
    """
    scale = complex(scale)
    if not np.isfinite(scale) or not np.all(np.isfinite(x.matrix)):
        raise ValueError("non-finite input to exp_map")
    if scale.imag == 0.0:
        return GroupAlgebraElement(expm_anti_hermitian(scale.real * x.matrix))
    return GroupAlgebraElement(sla.expm(scale * x.matrix))


def probability(g: GroupAlgebraElement) -> float:
    """p(g) = Tr(g^dag g) = sum_ij |g_ij|^2, the probability weight of g."""
    m = g.matrix
    return float(np.einsum("ij,ij->", m.conj(), m).real)


def inner_product(g1: GroupAlgebraElement, g2: GroupAlgebraElement) -> complex:
    """Sesquilinear inner product (g1, g2) = Tr(g1^dag g2)."""
    if g1.dim != g2.dim:
        raise DimensionError(f"dimension mismatch: {g1.dim} vs {g2.dim}")
    return complex(np.einsum("ij,ij->", g1.matrix.conj(), g2.matrix))


def inner_product_real(g1: GroupAlgebraElement, g2: GroupAlgebraElement) -> float:
    """Bilinear form Tr(g1^T g2) for real (orthonormal) representations."""
    if g1.dim != g2.dim:
        raise DimensionError(f"dimension mismatch: {g1.dim} vs {g2.dim}")
    if np.any(g1.matrix.imag != 0.0) or np.any(g2.matrix.imag != 0.0):
        raise RealModeError("inner_product_real requires real-valued entries")
    return float(np.einsum("ij,ij->", g1.matrix.real, g2.matrix.real))


def time_ordered_exp(
    l: Callable[[float], AlgebraElement],
    t1: float,
    t2: float,
    steps: int,
    sampling: str = "midpoint",
) -> GroupAlgebraElement:
    """Ordered product prod_k exp(dt * L(t_k)), later factors on the left.

    Midpoint sampling t_k = t1 + (k + 1/2) dt is second-order accurate;
    ``sampling="left"`` uses left endpoints (first order, for comparison).
    """
    if steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps}")
    if not t2 > t1:
        raise ValueError(f"need t2 > t1, got [{t1}, {t2}]")
    if sampling not in ("midpoint", "left"):
        raise ValueError(f"unknown sampling rule {sampling!r}")
    dt = (t2 - t1) / steps
    offset = 0.5 if sampling == "midpoint" else 0.0
    values = np.stack([l(t1 + (k + offset) * dt).matrix for k in range(steps)])
    factors = expm_anti_hermitian(dt * values)
    out = factors[0]
    for k in range(1, steps):
        out = factors[k] @ out
    return GroupAlgebraElement(out)


# ---------------------------------------------------------------------------
# seeded random elements, used by verification suites and tests

def random_algebra_element(rng: np.random.Generator, dim: int, scale: float = 1.0) -> AlgebraElement:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return AlgebraElement(scale * 0.5 * (m - m.conj().T))


def random_group_algebra_element(rng: np.random.Generator, dim: int, scale: float = 1.0) -> GroupAlgebraElement:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return GroupAlgebraElement(scale * m)


def random_unitary(rng: np.random.Generator, dim: int) -> GroupElement:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(m)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return GroupElement(q)
