"""Exact scalar fields: the rationals and prime fields GF(p).

A :class:`Field` describes the working field; calling it coerces a value
into a :class:`Scalar` of that field::

    >>> Q = Field.rationals()
    >>> Q("2/3").inverse()
    Scalar(3/2, Q)
    >>> F7 = Field.gf(7)
    >>> F7(3).inverse()
    Scalar(5, GF(7))

Python ints are accepted wherever a Scalar is expected and are mapped into
the field through the canonical ring homomorphism from the integers.
Scalars of two different fields never mix.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")

RATIONALS = "Q"
PRIME_FIELD = "GF"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor of the working field (``Q`` or ``GF(p)`` with p prime)."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime integer, got {self.modulus!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> Field:
        return cls(RATIONALS)

    @classmethod
    def gf(cls, p: int) -> Field:
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse a field selector: ``q`` for the rationals, ``gf:<p>`` for GF(p)."""
        t = text.strip().lower()
        if t in ("q", "qq"):
            return cls.rationals()
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ParseError(f"bad field selector {text!r}") from None
            if not is_prime(p):
                raise ParseError(f"GF modulus must be prime, got {p}")
            return cls.gf(p)
        raise ParseError(f"bad field selector {text!r} (expected 'q' or 'gf:<p>')")

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.modulus

    @property
    def selector(self) -> str:
        """The selector string that :meth:`parse` maps back to this field."""
        return "q" if self.is_rational else f"gf:{self.modulus}"

    @property
    def zero(self) -> Scalar:
        return Scalar(0, self)

    @property
    def one(self) -> Scalar:
        return Scalar(1, self)

    def __call__(self, value: ScalarLike | str) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value} lies in {value.field}, not {self}")
            return value
        if isinstance(value, str):
            return self.parse_scalar(value)
        return Scalar(value, self)

    def parse_scalar(self, text: str) -> Scalar:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ParseError(f"cannot parse scalar {text!r}")
        num = Scalar(int(m.group(1)), self)
        if m.group(2) is None:
            return num
        den = Scalar(int(m.group(2)), self)
        if den.is_zero():
            raise DivisionByZero(f"zero denominator in {text.strip()!r} over {self}")
        return num / den

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"GF({self.modulus})"


class Scalar:
    """An immutable element of a :class:`Field`, stored in canonical form.

    Rationals are held as :class:`fractions.Fraction` (lowest terms, positive
    denominator); GF(p) elements as residues in ``range(p)``.
    """

    __slots__ = ("field", "value")

    def __init__(self, value: int | Fraction, field: Field):
        if field.is_rational:
            if isinstance(value, Fraction):
                v = value
            elif isinstance(value, int):
                v = Fraction(value)
            else:
                raise TypeError(f"cannot embed {type(value).__name__} in Q")
        else:
            p = field.modulus
            if isinstance(value, int):
                v = value % p
            elif isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise DivisionByZero(f"denominator of {value} vanishes in {field}")
                v = value.numerator * pow(value.denominator, -1, p) % p
            else:
                raise TypeError(f"cannot embed {type(value).__name__} in {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", v)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, self.field)
        return NotImplemented

    def _make(self, v) -> Scalar:
        return Scalar(v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self) -> Scalar:
        return self._make(-self.value)

    def __pos__(self) -> Scalar:
        return self

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.is_rational:
            return self._make(self.value**n)
        return self._make(pow(self.value, n, self.field.modulus))

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        if self.field.is_rational:
            return self._make(1 / self.value)
        return self._make(pow(self.value, -1, self.field.modulus))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def is_integer(self) -> bool:
        """True for rationals with denominator 1, and for every GF(p) element."""
        return not self.field.is_rational or self.value.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == Scalar(other, self.field).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        if self.field.is_rational:
            return hash(self.value)
        return hash((self.field.modulus, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"


ScalarLike = Union[Scalar, int, Fraction]


_PASCAL: list[tuple[int, ...]] = [(1,)]


def _pascal_row(n: int) -> tuple[int, ...]:
    while len(_PASCAL) <= n:
        prev = _PASCAL[-1]
        _PASCAL.append((1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,))
    return _PASCAL[n]


def integer_binomial(n: int, k: int) -> int:
    """C(n, k) over the integers via Pascal's rule; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        return 0
    return _pascal_row(n)[k]


def binomial(n: int, k: int, field: Field) -> Scalar:
    """Image in ``field`` of the integer binomial coefficient C(n, k).

    Never divides, so the result is correct in positive characteristic.
    """
    return Scalar(integer_binomial(n, k), field)
