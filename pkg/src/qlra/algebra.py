"""Arithmetic in the two-dimensional hyperbolic (split-complex) algebra.

Elements have the form z = x + j*y with j**2 = 1.  The algebra is
commutative but has zero divisors on the null cone x = +-y, so inversion
and the argument are partial operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArgDomainError, ZeroDivisorError

__all__ = [
    "HNumber",
    "ONE",
    "J",
    "exp_j",
    "h_arg",
    "h_close",
]


@dataclass(frozen=True)
class HNumber:
    """A split-complex number re + j*hy, with j**2 = 1."""

    re: float
    hy: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.hy)):
            raise ValueError(f"non-finite components: {self.re!r}, {self.hy!r}")

    @staticmethod
    def _coerce(other) -> "HNumber":
        if isinstance(other, HNumber):
            return other
        if isinstance(other, (int, float)):
            return HNumber(float(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HNumber(self.re + other.re, self.hy + other.hy)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HNumber(self.re - other.re, self.hy - other.hy)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (x1 + j y1)(x2 + j y2) = x1 x2 + y1 y2 + j (x1 y2 + x2 y1)
        return HNumber(
            self.re * other.re + self.hy * other.hy,
            self.re * other.hy + other.re * self.hy,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return HNumber(-self.re, -self.hy)

    def conj(self) -> "HNumber":
        """Hyperbolic conjugate: flips the sign of the j component."""
        return HNumber(self.re, -self.hy)

    def sq_modulus(self) -> float:
        """z * conj(z) = x^2 - y^2.  May be negative or zero."""
        return self.re * self.re - self.hy * self.hy

    def inv(self) -> "HNumber":
        """Multiplicative inverse conj(z) / |z|^2.

        Raises ZeroDivisorError on the null cone, where no inverse exists.
        """
        m = self.sq_modulus()
        if m == 0.0:
            raise ZeroDivisorError(f"{self} lies on the null cone; not invertible")
        return HNumber(self.re / m, -self.hy / m)


ONE = HNumber(1.0)
J = HNumber(0.0, 1.0)


def exp_j(theta: float) -> HNumber:
    """Hyperbolic exponential e^{j*theta} = cosh(theta) + j*sinh(theta).

    The result has squared modulus 1 (a point on the unit hyperbola).
    OverflowError propagates when |theta| exceeds the range of cosh.
    """
    return HNumber(math.cosh(theta), math.sinh(theta))


def h_arg(z: HNumber) -> float:
    """Argument of z on the positive cone: arctanh(y/x) = 0.5*ln((x+y)/(x-y)).

    Defined for x^2 - y^2 > 0, on both branches x > 0 and x < 0; satisfies
    z = sign(x) * sqrt(|z|^2) * exp_j(h_arg(z)).
    """
    if z.sq_modulus() <= 0.0:
        raise ArgDomainError(f"argument undefined for {z}: x^2 - y^2 <= 0")
    # (x+y)/(x-y) is positive on both branches of the cone.
    return 0.5 * math.log((z.re + z.hy) / (z.re - z.hy))


def h_close(a: HNumber, b: HNumber, rel: float = 1e-9, abs_: float = 1e-12) -> bool:
    """Componentwise closeness with relative tolerance and absolute floor."""
    return math.isclose(a.re, b.re, rel_tol=rel, abs_tol=abs_) and math.isclose(
        a.hy, b.hy, rel_tol=rel, abs_tol=abs_
    )
