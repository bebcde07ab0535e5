"""Values in Q/2Z, the codomain of discriminant quadratic forms."""

from __future__ import annotations

from fractions import Fraction


class QMod2:
    """A rational number reduced to the half-open interval [0, 2)."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = Fraction(value) % 2

    def __add__(self, other):
        other = other.value if isinstance(other, QMod2) else Fraction(other)
        return QMod2(self.value + other)

    __radd__ = __add__

    def __neg__(self):
        return QMod2(-self.value)

    def __sub__(self, other):
        other = other.value if isinstance(other, QMod2) else Fraction(other)
        return QMod2(self.value - other)

    def scale(self, a):
        """q(a*x) = a^2 q(x) for integer a."""
        return QMod2(a * a * self.value)

    def __eq__(self, other):
        if isinstance(other, QMod2):
            return self.value == other.value
        return self.value == Fraction(other) % 2

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"QMod2({self.value})"
