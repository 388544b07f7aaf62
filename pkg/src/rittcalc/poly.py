"""Polynomials, bivariate polynomials, and rational functions.

Coefficients are stored ascending in the degree, trailing (near-)zeros
trimmed.  Evaluation is by Horner's scheme for scalars, NumPy arrays and
square matrices alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

_TRIM = 0.0  # exact-zero trim only; callers decide about tiny coefficients


def _trim(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == _TRIM:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class Poly:
    """One-variable complex polynomial, ascending coefficients."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[complex] = (0,)):
        arr = _trim(np.asarray(tuple(coeffs), dtype=np.complex128))
        if arr.size == 0:
            arr = np.zeros(1, dtype=np.complex128)
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in arr))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        out = np.full(z.shape, self.coeffs[-1], dtype=np.complex128)
        for c in reversed(self.coeffs[:-1]):
            out = out * z + c
        return out if out.shape else complex(out)

    def at_matrix(self, t: np.ndarray) -> np.ndarray:
        """Horner evaluation at a square matrix."""
        t = np.asarray(t, dtype=np.complex128)
        d = t.shape[0]
        out = self.coeffs[-1] * np.eye(d, dtype=np.complex128)
        for c in reversed(self.coeffs[:-1]):
            out = out @ t + c * np.eye(d, dtype=np.complex128)
        return out

    def __add__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.complex128)
        a[: len(self.coeffs)] += self.coeffs
        a[: len(other.coeffs)] += other.coeffs
        return Poly(a)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return Poly(np.convolve(self.coeffs, other.coeffs))
        return Poly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def compose(self, inner: "Poly") -> "Poly":
        """Return self(inner(z)) by Horner over polynomial arithmetic."""
        out = Poly([self.coeffs[-1]])
        for c in reversed(self.coeffs[:-1]):
            out = out * inner + Poly([c])
        return out

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    @staticmethod
    def x() -> "Poly":
        return Poly([0.0, 1.0])

    @staticmethod
    def from_roots(roots: Sequence[complex], lead: complex = 1.0) -> "Poly":
        out = Poly([lead])
        for r in roots:
            out = out * Poly([-r, 1.0])
        return out


@dataclass(frozen=True)
class BivarPoly:
    """Two-variable polynomial Q(lam, z); coeffs[i, j] multiplies lam^i z^j."""

    coeffs: np.ndarray

    def __init__(self, coeffs: np.ndarray):
        object.__setattr__(
            self, "coeffs", np.array(coeffs, dtype=np.complex128, copy=True)
        )

    def __call__(self, lam: complex, z: complex) -> complex:
        zi = np.asarray(
            [z**j for j in range(self.coeffs.shape[1])], dtype=np.complex128
        )
        per_i = self.coeffs @ zi
        out = per_i[-1]
        for c in reversed(per_i[:-1]):
            out = out * lam + c
        return complex(out)

    def at_matrix(self, lam: complex, t: np.ndarray) -> np.ndarray:
        """Evaluate Q(lam, T) with the matrix substituted in the second slot."""
        t = np.asarray(t, dtype=np.complex128)
        mats = [Poly(row).at_matrix(t) for row in self.coeffs]
        out = mats[-1]
        for m in reversed(mats[:-1]):
            out = out * lam + m
        return out

    def lam_coefficients(self) -> list[Poly]:
        """Coefficients in lam as polynomials in z."""
        return [Poly(self.coeffs[i]) for i in range(self.coeffs.shape[0])]


def divide_by_lambda_minus_z(p_lam: Sequence[Poly]) -> tuple[BivarPoly, Poly]:
    """Divide P(lam, z) = sum_i p_i(z) lam^i by (lam - z).

    Synthetic division in lam with coefficients in C[z]; returns (Q, remainder)
    with P = (lam - z) Q + remainder.
    """
    deg = len(p_lam) - 1
    if deg < 1:
        return BivarPoly(np.zeros((1, 1))), p_lam[0]
    z = Poly.x()
    q: list[Poly] = [Poly([0.0])] * deg
    q[deg - 1] = p_lam[deg]
    for i in range(deg - 1, 0, -1):
        q[i - 1] = p_lam[i] + z * q[i]
    remainder = p_lam[0] + z * q[0]
    width = max(len(poly.coeffs) for poly in q)
    c = np.zeros((deg, width), dtype=np.complex128)
    for i, poly in enumerate(q):
        c[i, : len(poly.coeffs)] = poly.coeffs
    return BivarPoly(c), remainder


@dataclass(frozen=True)
class RationalFunc:
    """Quotient num/den of one-variable polynomials."""

    num: Poly
    den: Poly

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        out = self.num(z) / self.den(z)
        return out if np.shape(out) else complex(out)

    def at_matrix(self, t: np.ndarray) -> np.ndarray:
        """num(T) den(T)^{-1} via a linear solve."""
        return np.linalg.solve(self.den.at_matrix(t).T, self.num.at_matrix(t).T).T

    def compose_affine(self, a: complex, b: complex) -> "RationalFunc":
        """Return self(a + b z)."""
        inner = Poly([a, b])
        return RationalFunc(self.num.compose(inner), self.den.compose(inner))

    def degree_at_infinity(self) -> int:
        """deg(num) - deg(den); nonpositive means bounded at infinity."""
        return self.num.degree - self.den.degree

    def limit_at_infinity(self) -> complex:
        d = self.degree_at_infinity()
        if d < 0:
            return 0.0
        if d == 0:
            return self.num.coeffs[-1] / self.den.coeffs[-1]
        raise ValueError("unbounded at infinity")
