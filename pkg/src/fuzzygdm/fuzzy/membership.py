"""Piecewise-linear membership functions (triangular and trapezoidal)."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError

TRIANGULAR = "triangular"
TRAPEZOIDAL = "trapezoidal"


def triangular_mu(x: float, a: float, b: float, c: float) -> float:
    """Membership of x in the triangle (a, b, c).

    Degenerate edges (a == b or b == c) are vertical: the peak still
    evaluates to 1, which gives shoulder sets at domain ends.
    """
    if x < a or x > c:
        return 0.0
    if x == b:
        return 1.0
    if x < b:
        return (x - a) / (b - a)
    return (c - x) / (c - b)


def trapezoidal_mu(x: float, a: float, b: float, c: float, d: float) -> float:
    """Membership of x in the trapezoid (a, b, c, d); plateau on [b, c]."""
    if x < a or x > d:
        return 0.0
    if b <= x <= c:
        return 1.0
    if x < b:
        return (x - a) / (b - a)
    return (d - x) / (d - c)


@dataclass(frozen=True)
class MembershipFunction:
    """A triangular or trapezoidal membership function.

    ``points`` are the ordered breakpoints: 3 for triangular (a <= b <= c),
    4 for trapezoidal (a <= b <= c <= d).
    """

    kind: str
    points: tuple[float, ...]

    def __post_init__(self) -> None:
        expected = {TRIANGULAR: 3, TRAPEZOIDAL: 4}.get(self.kind)
        if expected is None:
            raise ValidationError(f"unknown membership kind {self.kind!r}")
        if len(self.points) != expected:
            raise ValidationError(
                f"{self.kind} needs {expected} breakpoints, got {len(self.points)}"
            )
        if any(b < a for a, b in zip(self.points, self.points[1:])):
            raise ValidationError(f"breakpoints must be non-decreasing: {self.points}")

    @classmethod
    def triangular(cls, a: float, b: float, c: float) -> "MembershipFunction":
        return cls(TRIANGULAR, (float(a), float(b), float(c)))

    @classmethod
    def trapezoidal(cls, a: float, b: float, c: float, d: float) -> "MembershipFunction":
        return cls(TRAPEZOIDAL, (float(a), float(b), float(c), float(d)))

    @property
    def support(self) -> tuple[float, float]:
        return self.points[0], self.points[-1]

    def mu(self, x: float) -> float:
        if self.kind == TRIANGULAR:
            return triangular_mu(x, *self.points)
        return trapezoidal_mu(x, *self.points)
