"""Exact arithmetic in Z[J], where J is a primitive cube root of unity.

Every element is a + bJ with arbitrary-precision integer coordinates,
reduced by J^2 = -1 - J.  The seven elements {0, +-1, +-J, +-J^2} form
the closed value set that all Hankel determinants of this package land
in; ``UnitOrZero`` is their compact form.
"""

from __future__ import annotations

from dataclasses import dataclass


class NotDivisibleError(ArithmeticError):
    """Exact division left a remainder."""


class NotInValueSetError(ValueError):
    """Element is not one of 0, +-1, +-J, +-J^2."""


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    a: int
    b: int

    @classmethod
    def from_cubic_basis(cls, a: int, b: int, c: int) -> EisensteinInt:
        """Normalize a + bJ + cJ^2 into the {1, J} basis via J^2 = -1 - J."""
        return cls(a - c, b - c)

    def __add__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: EisensteinInt | int) -> EisensteinInt:
        return (-self) + other

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EisensteinInt:
        if exponent < 0:
            raise ValueError("negative exponents are not defined in Z[J]")
        result = EisensteinInt(1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conjugate(self) -> EisensteinInt:
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """a^2 - ab + b^2 = x * conj(x); nonnegative, zero iff x = 0."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def exact_div(self, other: EisensteinInt) -> EisensteinInt:
        """Quotient q with q * other == self.

        Raises ZeroDivisionError on a zero divisor and NotDivisibleError
        if other does not divide self in Z[J].
        """
        if not other:
            raise ZeroDivisionError("division by zero in Z[J]")
        num = self * other.conjugate()
        d = other.norm()
        qa, ra = divmod(num.a, d)
        qb, rb = divmod(num.b, d)
        if ra or rb:
            raise NotDivisibleError(f"{other} does not divide {self}")
        return EisensteinInt(qa, qb)

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        j = "J" if abs(b) == 1 else f"{abs(b)}J"
        if a == 0:
            return j if b > 0 else f"-{j}"
        return f"{a}+{j}" if b > 0 else f"{a}-{j}"

    ZERO: EisensteinInt
    ONE: EisensteinInt
    J: EisensteinInt
    J2: EisensteinInt


EisensteinInt.ZERO = EisensteinInt(0, 0)
EisensteinInt.ONE = EisensteinInt(1, 0)
EisensteinInt.J = EisensteinInt(0, 1)
EisensteinInt.J2 = EisensteinInt(-1, -1)


def _coerce(value: object) -> EisensteinInt:
    if isinstance(value, EisensteinInt):
        return value
    if isinstance(value, int):
        return EisensteinInt(value, 0)
    return NotImplemented


@dataclass(frozen=True, slots=True)
class UnitOrZero:
    """Element of {0, +-1, +-J, +-J^2}: sign * J^exp, or zero when sign == 0."""

    sign: int
    exp: int = 0

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.exp not in (0, 1, 2) or (self.sign == 0 and self.exp != 0):
            raise ValueError(f"invalid unit-or-zero ({self.sign}, {self.exp})")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __bool__(self) -> bool:
        return self.sign != 0

    def __mul__(self, other: UnitOrZero) -> UnitOrZero:
        if not isinstance(other, UnitOrZero):
            return NotImplemented
        if self.sign == 0 or other.sign == 0:
            return UnitOrZero(0)
        return UnitOrZero(self.sign * other.sign, (self.exp + other.exp) % 3)

    def __neg__(self) -> UnitOrZero:
        return UnitOrZero(-self.sign, self.exp)

    def __pow__(self, exponent: int) -> UnitOrZero:
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        if self.sign == 0:
            return UnitOrZero(0) if exponent else UnitOrZero(1)
        sign = -1 if self.sign < 0 and exponent % 2 else 1
        return UnitOrZero(sign, self.exp * exponent % 3)

    def to_eisenstein(self) -> EisensteinInt:
        if self.sign == 0:
            return EisensteinInt.ZERO
        if self.exp == 0:
            return EisensteinInt(self.sign, 0)
        if self.exp == 1:
            return EisensteinInt(0, self.sign)
        return EisensteinInt(-self.sign, -self.sign)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        body = ("1", "J", "J^2")[self.exp]
        return body if self.sign > 0 else f"-{body}"

    ZERO: UnitOrZero
    ONE: UnitOrZero
    MINUS_ONE: UnitOrZero
    J: UnitOrZero
    J2: UnitOrZero
    MINUS_J2: UnitOrZero


UnitOrZero.ZERO = UnitOrZero(0)
UnitOrZero.ONE = UnitOrZero(1, 0)
UnitOrZero.MINUS_ONE = UnitOrZero(-1, 0)
UnitOrZero.J = UnitOrZero(1, 1)
UnitOrZero.J2 = UnitOrZero(1, 2)
UnitOrZero.MINUS_J2 = UnitOrZero(-1, 2)


_CLASSIFY_TABLE = {
    (0, 0): UnitOrZero(0),
    (1, 0): UnitOrZero(1, 0),
    (-1, 0): UnitOrZero(-1, 0),
    (0, 1): UnitOrZero(1, 1),
    (0, -1): UnitOrZero(-1, 1),
    (-1, -1): UnitOrZero(1, 2),
    (1, 1): UnitOrZero(-1, 2),
}


def classify(x: EisensteinInt) -> UnitOrZero:
    """Map x into {0, +-1, +-J, +-J^2}, or raise NotInValueSetError.

    Strict on purpose: a determinant outside the seven-element set means
    a broken invariant, and must never be silently absorbed.
    """
    try:
        return _CLASSIFY_TABLE[(x.a, x.b)]
    except KeyError:
        raise NotInValueSetError(f"{x} is not 0, +-1, +-J or +-J^2") from None
