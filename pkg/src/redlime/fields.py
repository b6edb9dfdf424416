"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Every value is kept in a unique normalized form (coprime numerator and
positive denominator for rationals, residue in [0, p-1] for GF(p)), so
equality and hashing are plain representational comparisons.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError, UsageError

_INT_RE = re.compile(r"-?[0-9]+\Z")
_FRACTION_RE = re.compile(r"(-?[0-9]+)/([1-9][0-9]*)\Z")


def _is_prime(p: int) -> bool:
    # trial division; moduli here are desk-scale
    if p < 2:
        return False
    if p in (2, 3):
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when ``modulus`` is None, else GF(modulus)."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not _is_prime(self.modulus):
            raise DomainError(f"modulus {self.modulus} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or same-field Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise UsageError(f"scalar belongs to {value.field}, not {self}")
            return value
        if not isinstance(value, (int, Fraction)):
            raise UsageError(
                f"cannot make a {self} scalar from {type(value).__name__}")
        if self.modulus is None:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise UsageError(f"cannot coerce non-integer {value} into {self}")
            value = value.numerator
        return Scalar(self, value % self.modulus)

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    def elements(self):
        """Iterate every element (finite fields only)."""
        if self.modulus is None:
            raise UsageError("cannot enumerate the rationals")
        return (Scalar(self, r) for r in range(self.modulus))

    def __str__(self):
        return "Q" if self.modulus is None else f"GF({self.modulus})"


RATIONALS = FieldSpec()


def gf(p: int) -> FieldSpec:
    """The prime field GF(p); raises DomainError unless p is prime."""
    return FieldSpec(p)


class Scalar:
    """One exact field element.

    ``value`` is a ``Fraction`` over Q and a residue int over GF(p); both
    representations are canonical, so ``==`` and ``hash`` need no extra work.
    Arithmetic insists that both operands carry the same FieldSpec.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _check_same_field(self, other: "Scalar"):
        if other.field != self.field:
            raise UsageError(f"mixed fields: {self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_same_field(other)
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, self.value + other.value)
        return Scalar(self.field, (self.value + other.value) % p)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_same_field(other)
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, self.value - other.value)
        return Scalar(self.field, (self.value - other.value) % p)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_same_field(other)
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, self.value * other.value)
        return Scalar(self.field, (self.value * other.value) % p)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_same_field(other)
        return self * other.inverse()

    def __neg__(self):
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % p)

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; DomainError on zero."""
        if not self.value:
            raise DomainError("zero has no multiplicative inverse")
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.value}, {self.field})"


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse one scalar token: ``-?[0-9]+`` anywhere, ``a/b`` over Q only."""
    if _INT_RE.match(text):
        return field.scalar(int(text))
    m = _FRACTION_RE.match(text)
    if m:
        if field.is_prime_field:
            raise ParseError(f"fraction {text!r} is not a valid {field} scalar")
        return field.scalar(Fraction(int(m.group(1)), int(m.group(2))))
    raise ParseError(f"malformed scalar token {text!r}")
