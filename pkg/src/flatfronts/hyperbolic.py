"""Hermitian-matrix model of hyperbolic 3-space.

A point ``(x0, x1, x2, x3)`` of Minkowski space corresponds to the matrix
``[[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]]``; the hyperboloid is
``det = 1, x0 > 0`` and ``SL(2, C)`` acts by ``X -> a X a*``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HermitianPoint:
    h11: float
    h12: complex
    h22: float

    @classmethod
    def from_matrix(cls, m) -> "HermitianPoint":
        m = np.asarray(m, dtype=complex)
        return cls(float(m[0, 0].real), complex(m[0, 1]), float(m[1, 1].real))

    @classmethod
    def from_coords(cls, x0, x1, x2, x3) -> "HermitianPoint":
        return cls(x0 + x3, complex(x1, x2), x0 - x3)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.h11, self.h12], [self.h12.conjugate(), self.h22]], dtype=complex)

    @property
    def coords(self) -> tuple[float, float, float, float]:
        return (
            (self.h11 + self.h22) / 2,
            self.h12.real,
            self.h12.imag,
            (self.h11 - self.h22) / 2,
        )

    @property
    def det(self) -> float:
        return self.h11 * self.h22 - abs(self.h12) ** 2

    def inner(self, other: "HermitianPoint") -> float:
        """Lorentz product ``-x0 y0 + x1 y1 + x2 y2 + x3 y3``."""
        return lorentz(np.array(self.coords), np.array(other.coords))

    def congruence(self, a) -> "HermitianPoint":
        a = np.asarray(a, dtype=complex)
        return HermitianPoint.from_matrix(a @ self.matrix @ a.conj().T)

    def to_ball(self) -> np.ndarray:
        return to_ball(np.array(self.coords))


def lorentz(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    return -x[..., 0] * y[..., 0] + np.sum(x[..., 1:] * y[..., 1:], axis=-1)


def coords_from_matrices(m: np.ndarray) -> np.ndarray:
    """``(..., 2, 2)`` Hermitian matrices to ``(..., 4)`` coordinates."""
    h11 = m[..., 0, 0].real
    h22 = m[..., 1, 1].real
    h12 = m[..., 0, 1]
    return np.stack([(h11 + h22) / 2, h12.real, h12.imag, (h11 - h22) / 2], axis=-1)


def to_ball(x: np.ndarray) -> np.ndarray:
    """Hyperboloid coordinates to the Poincare ball, ``(x1, x2, x3) / (1 + x0)``."""
    x = np.asarray(x, dtype=float)
    return x[..., 1:] / (1.0 + x[..., :1])


def congruence(a: np.ndarray, m: np.ndarray) -> np.ndarray:
    """``a m a*`` for a single matrix ``a`` and a stack ``m``."""
    a = np.asarray(a, dtype=complex)
    return np.einsum("ij,...jk,lk->...il", a, m, a.conj())
