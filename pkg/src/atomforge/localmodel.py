"""Exact local models Re(x+iy)^k on the closed upper half-plane.

Expansion, zero-level rays and sector signs are all exact: coefficients are
big integers, ray angles are rational multiples of pi.  The k rays at
angles (2m+1)*pi/(2k) split the half-plane into k+1 sign sectors, which is
precisely the arc count of the corresponding chord diagram circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class LocalModel:
    """Re(x+iy)^k as data: coefficients of x^(k-2j) y^(2j), rays, signs."""

    k: int
    coefficients: tuple[int, ...]
    ray_angles: tuple[Fraction, ...]  # fractions of pi, ascending in (0, 1)
    sector_signs: tuple[int, ...]

    def evaluate(self, x: float, y: float) -> float:
        total = 0.0
        for j, c in enumerate(self.coefficients):
            total += c * x ** (self.k - 2 * j) * y ** (2 * j)
        return total


@dataclass(frozen=True)
class ExtremumModel:
    """Definite quadratic model at a boundary extremum: sign * (x^2 + y^2)."""

    sign: int
    kind: str  # "minimum" | "maximum"
    zero_ray_count: int = 0
    level_curves: str = "half-circles"

    def evaluate(self, x: float, y: float) -> float:
        return self.sign * (x * x + y * y)


def build_local_model(k: int) -> LocalModel:
    """Coefficients (-1)^j C(k, 2j), rays (2m+1)/(2k), alternating signs."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    coefficients = tuple((-1) ** j * comb(k, 2 * j) for j in range(k // 2 + 1))
    signs = tuple(1 if m % 2 == 0 else -1 for m in range(k + 1))
    return LocalModel(k, coefficients, zero_rays(k), signs)


def zero_rays(k: int) -> tuple[Fraction, ...]:
    """Angles of the k zero-level rays, as fractions of pi in (0, 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return tuple(Fraction(2 * m + 1, 2 * k) for m in range(k))


def sector_arc_count(k: int) -> int:
    """Sign sectors of the half-plane model = arcs of the diagram circle."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return k + 1


def extremum_model(sign: int) -> ExtremumModel:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ExtremumModel(sign, "minimum" if sign > 0 else "maximum")
