"""Little-group generators of the Lorentz group in the (x, y, z, t) representation.

Generator matrices are held as exact Gaussian-integer arrays so that the
commutator tables can be checked with no rounding at all. Floating point only
enters once a boost or an exponential is applied.

Group elements are ``exp(-1j * xi * G)``; with this sign the exponential of
``K3`` is exactly :func:`wignerlab.minkowski.boost_z`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral

import numpy as np

from .errors import DomainError
from .minkowski import boost_z

GENERATOR_NAMES = ("J1", "J2", "J3", "K1", "K2", "K3", "N1", "N2")

B_INV_G_B = "B_inv_G_B"
B_G_B_INV = "B_G_B_inv"
DIRECTIONS = (B_INV_G_B, B_G_B_INV)


def _as_gaussian_int(c) -> tuple[int, int]:
    if isinstance(c, Integral):
        return int(c), 0
    c = complex(c)
    if c.real != int(c.real) or c.imag != int(c.imag):
        raise TypeError(f"exact matrices only scale by Gaussian integers, got {c!r}")
    return int(c.real), int(c.imag)


class GaussianMatrix:
    """A square matrix whose entries are Gaussian integers ``a + ib``.

    Real and imaginary parts live in separate read-only ``int64`` arrays, so
    products and sums are exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        re = np.array(re, dtype=np.int64)
        im = np.array(im, dtype=np.int64)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or im.shape != re.shape:
            raise ValueError("GaussianMatrix requires square real and imaginary parts of equal shape")
        re.flags.writeable = False
        im.flags.writeable = False
        self.re = re
        self.im = im

    @classmethod
    def zeros(cls, dim: int = 4) -> GaussianMatrix:
        return cls(np.zeros((dim, dim)), np.zeros((dim, dim)))

    @property
    def matrix(self) -> np.ndarray:
        return self.re + 1j * self.im

    def __array__(self, dtype=None, copy=None):
        m = self.matrix
        return m if dtype is None else m.astype(dtype)

    def __matmul__(self, other):
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return GaussianMatrix(
            self.re @ other.re - self.im @ other.im,
            self.re @ other.im + self.im @ other.re,
        )

    def __add__(self, other):
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return GaussianMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return GaussianMatrix(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianMatrix(-self.re, -self.im)

    def __mul__(self, c):
        try:
            a, b = _as_gaussian_int(c)
        except TypeError:
            return NotImplemented
        return GaussianMatrix(a * self.re - b * self.im, a * self.im + b * self.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return bool(np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((self.re.tobytes(), self.im.tobytes()))

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def max_abs_difference(self, other: GaussianMatrix) -> int:
        """Largest |entry| of ``self - other`` in the sup norm of the integer parts."""
        d = self - other
        return int(max(np.abs(d.re).max(), np.abs(d.im).max()))

    def __repr__(self):
        return f"GaussianMatrix({self.matrix.tolist()!r})"


class GeneratorMatrix(GaussianMatrix):
    """A named Lorentz generator; every entry is exactly 0, +i or -i."""

    __slots__ = ("name",)

    def __init__(self, name: str, re, im):
        super().__init__(re, im)
        if self.re.any() or not np.isin(self.im, (-1, 0, 1)).all():
            raise ValueError(f"generator {name} must have entries in {{0, +i, -i}}")
        self.name = name

    def __repr__(self):
        return f"GeneratorMatrix({self.name})"


def _from_entries(name: str, entries: dict[tuple[int, int], int]) -> GeneratorMatrix:
    """``entries`` maps 1-based (row, col) to the coefficient of i."""
    im = np.zeros((4, 4), dtype=np.int64)
    for (r, c), v in entries.items():
        im[r - 1, c - 1] = v
    return GeneratorMatrix(name, np.zeros((4, 4), dtype=np.int64), im)


_TABLE = {
    "J1": {(2, 3): -1, (3, 2): 1},
    "J2": {(1, 3): 1, (3, 1): -1},
    "J3": {(1, 2): -1, (2, 1): 1},
    "K1": {(1, 4): 1, (4, 1): 1},
    "K2": {(2, 4): 1, (4, 2): 1},
    "K3": {(3, 4): 1, (4, 3): 1},
    "N1": {(1, 3): -1, (1, 4): 1, (3, 1): 1, (4, 1): 1},
    "N2": {(2, 3): -1, (2, 4): 1, (3, 2): 1, (4, 2): 1},
}

_GENERATORS = {name: _from_entries(name, _TABLE[name]) for name in GENERATOR_NAMES}


def generator(name: str) -> GeneratorMatrix:
    """Look up one of ``J1 J2 J3 K1 K2 K3 N1 N2``."""
    try:
        return _GENERATORS[name]
    except KeyError:
        raise KeyError(f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}") from None


def _e2_generator(entries: dict[tuple[int, int], int]) -> GaussianMatrix:
    im = np.zeros((3, 3), dtype=np.int64)
    for (r, c), v in entries.items():
        im[r - 1, c - 1] = v
    return GaussianMatrix(np.zeros((3, 3), dtype=np.int64), im)


def e2_generators() -> dict[str, GaussianMatrix]:
    """Rotation ``L`` and translations ``Px``, ``Py`` of the plane.

    They act on homogeneous coordinates ``(x, y, 1)`` with the same
    ``exp(-1j * xi * G)`` convention as the Lorentz generators.
    """
    return {
        "L": _e2_generator({(1, 2): -1, (2, 1): 1}),
        "Px": _e2_generator({(1, 3): 1}),
        "Py": _e2_generator({(2, 3): 1}),
    }


def structure_constants(basis) -> np.ndarray:
    """Exact ``c[a, b, k]`` with ``[X_a, X_b] = sum_k c[a, b, k] X_k``.

    Coefficients are Gaussian integers returned as a complex array. Raises
    ``ValueError`` if the span of ``basis`` is not closed under commutation.
    """
    basis = list(basis)
    flat = np.array([np.asarray(x).ravel() for x in basis]).T
    out = np.zeros((len(basis),) * 3, dtype=np.complex128)
    for a, xa in enumerate(basis):
        for b, xb in enumerate(basis):
            comm = commutator(xa, xb)
            coef = np.linalg.lstsq(flat, np.asarray(comm).ravel(), rcond=None)[0]
            coef = np.round(coef.real) + 1j * np.round(coef.imag)
            rebuilt = GaussianMatrix.zeros(xa.re.shape[0])
            for k, c in enumerate(coef):
                rebuilt = rebuilt + complex(c) * basis[k]
            if rebuilt != comm:
                raise ValueError("basis does not close under commutation")
            out[a, b] = coef
    return out


def commutator(a, b):
    """``a @ b - b @ a``; exact when both arguments are :class:`GaussianMatrix`."""
    if isinstance(a, GaussianMatrix) and isinstance(b, GaussianMatrix):
        return a @ b - b @ a
    a = np.asarray(a)
    b = np.asarray(b)
    return a @ b - b @ a


def boost_conjugate(g, eta, direction: str = B_INV_G_B) -> np.ndarray:
    """Conjugate ``g`` by the z boost, either ``B^-1 g B`` or ``B g B^-1``."""
    b = boost_z(eta)
    b_inv = boost_z(-float(eta))
    g = np.asarray(g, dtype=np.complex128)
    if direction == B_INV_G_B:
        return b_inv @ g @ b
    if direction == B_G_B_INV:
        return b @ g @ b_inv
    raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")


@dataclass(frozen=True)
class ContractionFit:
    eta: float
    fitted_scale: float
    residual_norm: float
    source: str = "J2"
    target: str = "N1"
    direction: str = B_G_B_INV


# J1 carries an extra minus sign in the contraction formula for N2.
_CONTRACTION = {"J2": ("N1", 1.0), "J1": ("N2", -1.0)}


def contraction_fit(j_name: str, eta, direction: str = B_G_B_INV) -> ContractionFit:
    """Fit ``sign * exp(-eta) * Ad_B(J)`` to a multiple of its contracted generator.

    The scalar is the least-squares (Frobenius) coefficient; the residual is the
    sup norm of what the multiple fails to explain. In the ``B g B^-1`` order the
    scale tends to -1/2 and the residual decays like ``exp(-2 eta) / 2``.
    """
    if j_name not in _CONTRACTION:
        raise ValueError(f"contraction is defined for J1 and J2, got {j_name!r}")
    eta = float(eta)
    if eta < 0:
        raise DomainError(f"contraction requires eta >= 0, got {eta}")
    target_name, sign = _CONTRACTION[j_name]
    target = generator(target_name).matrix
    scaled = sign * math.exp(-eta) * boost_conjugate(generator(j_name), eta, direction)
    c = np.vdot(target, scaled) / np.vdot(target, target)
    residual = float(np.abs(scaled - c * target).max())
    return ContractionFit(eta, float(c.real), residual, j_name, target_name, direction)


def residual_decay_slope(fits) -> float:
    """Least-squares slope of ``log(residual_norm)`` against ``eta``."""
    etas = np.array([f.eta for f in fits])
    logs = np.log([f.residual_norm for f in fits])
    return float(np.polyfit(etas, logs, 1)[0])


def exp_generator(g: GaussianMatrix, xi: float) -> np.ndarray:
    """Closed-form ``exp(-1j * xi * g)`` as a real 4x4 matrix.

    With ``M = -1j * g`` real, rotations satisfy ``M**3 = -M``, boosts
    ``M**3 = M`` and the null-plane generators ``M**3 = 0``, so the series
    collapses to ``I + s(xi) M + c(xi) M**2`` in every case.
    """
    if not isinstance(g, GaussianMatrix):
        raise TypeError("exp_generator takes an exact generator matrix")
    minus_i_g = -1j * g
    if minus_i_g.im.any():
        raise ValueError("-i*G must be real for a real Lorentz transformation")
    m = minus_i_g.re
    m2 = m @ m
    m3 = m2 @ m
    if not m3.any():
        s, c = xi, xi * xi / 2.0
    elif np.array_equal(m3, -m):
        s, c = math.sin(xi), 1.0 - math.cos(xi)
    elif np.array_equal(m3, m):
        s, c = math.sinh(xi), math.cosh(xi) - 1.0
    else:
        raise ValueError("no closed form: generator is not a rotation, boost or null rotation")
    return np.eye(4) + s * m + c * m2


def leaves_invariant(lam, p, tol: float) -> bool:
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    p = np.asarray(p, dtype=np.float64)
    return bool(np.abs(np.asarray(lam) @ p - p).max() <= tol)


def _check_lightlike_z(p: np.ndarray, rtol: float = 1e-12) -> None:
    x, y, z, t = p
    scale = max(1.0, abs(t))
    if t <= 0 or abs(x) > rtol * scale or abs(y) > rtol * scale or abs(z - t) > rtol * scale:
        raise DomainError(f"momentum {tuple(p)} is not light-like along +z")


def fit_gauge_shift(eps, p, xi: float, which: str = "N1") -> tuple[float, float]:
    """Return ``(c, residual)`` with ``Lambda eps ~= eps + c p`` for ``Lambda = exp(-i xi N)``.

    ``c`` is the least-squares coefficient and the residual is the sup norm of
    ``Lambda eps - eps - c p``.
    """
    if which not in ("N1", "N2"):
        raise ValueError(f"gauge shifts are generated by N1 or N2, got {which!r}")
    eps = np.asarray(eps, dtype=np.float64).reshape(4)
    p = np.asarray(p, dtype=np.float64).reshape(4)
    _check_lightlike_z(p)
    d = exp_generator(generator(which), xi) @ eps - eps
    c = float(d @ p / (p @ p))
    return c, float(np.abs(d - c * p).max())


def gauge_shift_check(eps, p, xi: float, which: str = "N1") -> float:
    return fit_gauge_shift(eps, p, xi, which)[1]
