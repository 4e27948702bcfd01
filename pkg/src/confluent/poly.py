"""Dense univariate polynomials over a :class:`~confluent.field.Field`."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, FieldMismatch
from .field import Field, Scalar, ScalarLike, binomial


class Poly:
    """Polynomial with ascending coefficients ``(c_0, ..., c_n)``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable[ScalarLike | str], field: Field):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls((), field)

    @classmethod
    def constant(cls, c: ScalarLike, field: Field) -> Poly:
        return cls((c,), field)

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls((0, 1), field)

    @classmethod
    def monomial(cls, n: int, field: Field, c: ScalarLike = 1) -> Poly:
        return cls([0] * n + [c], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def padded(self, n: int) -> list[Scalar]:
        """Coefficients zero-padded (never truncated) to length ``n``."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in {n} coefficients")
        return list(self.coeffs) + [self.field.zero] * (n - len(self.coeffs))

    def _check(self, other: Poly) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int)):
            return Poly.constant(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self.coeff(i) + o.coeff(i) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.is_zero() or o.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        result = Poly.constant(1, self.field)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: ScalarLike) -> Poly:
        c = self.field(c)
        return Poly([c * a for a in self.coeffs], self.field)

    def mul_linear(self, root: ScalarLike) -> Poly:
        """Return ``(x - root) * self``."""
        lam = self.field(root)
        shifted = [self.field.zero] + list(self.coeffs)
        return Poly(
            [shifted[i] - lam * self.coeff(i) for i in range(len(shifted))], self.field
        )

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        self._check(divisor)
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = divisor.coeffs[-1].inverse()
        quot = [self.field.zero] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lead_inv
            quot[k - dd] = q
            if q.is_zero():
                continue
            for i, b in enumerate(divisor.coeffs):
                rem[k - dd + i] = rem[k - dd + i] - q * b
        return Poly(quot, self.field), Poly(rem[:dd], self.field)

    def __mod__(self, divisor: Poly) -> Poly:
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: Poly) -> Poly:
        return self.divmod(divisor)[0]

    def hasse_derivative(self, r: int) -> Poly:
        """The r-th Hasse derivative ``sum_i c_i * C(i, r) * x^(i-r)``."""
        if r < 0:
            raise ValueError("derivative order must be nonnegative")
        f = self.field
        return Poly(
            [self.coeffs[i] * binomial(i, r, f) for i in range(r, len(self.coeffs))], f
        )

    def __call__(self, at: ScalarLike) -> Scalar:
        lam = self.field(at)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    eval = __call__

    def taylor_at(self, at: ScalarLike) -> list[Scalar]:
        """Coefficients ``(a_0, ..., a_n)`` with ``self = sum a_i (x - at)^i``.

        Computed by repeated synthetic division by ``x - at``; ``a_r`` is the
        r-th Hasse derivative evaluated at ``at``.
        """
        lam = self.field(at)
        work = list(self.coeffs)
        out = []
        while work:
            # synthetic division: quotient overwrites work[1:], remainder is work[0]
            for i in range(len(work) - 2, -1, -1):
                work[i] = work[i] + lam * work[i + 1]
            out.append(work[0])
            work = work[1:]
        return out

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[ScalarLike, int]], field: Field) -> Poly:
        """Monic ``prod (x - root)^mult`` over ``(root, mult)`` pairs."""
        p = cls.constant(1, field)
        for root, mult in roots:
            for _ in range(mult):
                p = p.mul_linear(root)
        return p

    @classmethod
    def from_shifted(cls, coeffs: Sequence[ScalarLike], at: ScalarLike, field: Field) -> Poly:
        """Expand ``sum coeffs[i] * (x - at)^i`` to standard form."""
        acc = cls.zero(field)
        for c in reversed(coeffs):
            acc = acc.mul_linear(at) + cls.constant(c, field)
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (Scalar, int)):
            try:
                return self == Poly.constant(other, self.field)
            except FieldMismatch:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{self}], {self.field})"


def hasse_derivative(p: Poly, r: int) -> Poly:
    return p.hasse_derivative(r)


def taylor_at(p: Poly, at: ScalarLike) -> list[Scalar]:
    return p.taylor_at(at)


def from_roots(roots: Iterable[tuple[ScalarLike, int]], field: Field) -> Poly:
    return Poly.from_roots(roots, field)
