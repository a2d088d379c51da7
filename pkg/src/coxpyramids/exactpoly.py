"""Exact dense polynomials over Z and reduced rational functions.

A polynomial ``c0 + c1*t + ... + cn*t^n`` is stored as the tuple
``(c0, c1, ..., cn)`` with ``cn != 0``; the zero polynomial is ``()``.
Everything here is exact: Python integers and ``fractions.Fraction`` only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"integer coefficient expected, got {x!r}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * n + (c,))

    @property
    def degree(self) -> float | int:
        """Index of the leading coefficient; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "t") -> str:
        """Human-readable ascending form, e.g. ``-1 + 2*t + t^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return IntPolynomial(x // c for x in self.coeffs)

    def reversed(self, n: int | None = None) -> IntPolynomial:
        """``t^n * p(1/t)``; ``n`` defaults to the degree."""
        if n is None:
            n = len(self.coeffs) - 1
        if n < len(self.coeffs) - 1:
            raise ValueError("n below degree")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def pseudo_rem(self, other: IntPolynomial) -> IntPolynomial:
        """Remainder of ``lead(other)^k * self`` by ``other`` (stays in Z[t])."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = list(other.coeffs)
        lc = d[-1]
        while len(r) >= len(d) and r:
            q = r[-1]
            shift = len(r) - len(d)
            r = [lc * x for x in r]
            for i, y in enumerate(d):
                r[i + shift] -= q * y
            while r and r[-1] == 0:
                r.pop()
        return IntPolynomial(r)

    def divexact(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient ``self / other`` when it lies in Z[t]; raises otherwise."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        if len(r) < len(d):
            if r:
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial()
        q = [0] * (len(r) - len(d) + 1)
        for shift in range(len(q) - 1, -1, -1):
            top = r[shift + len(d) - 1]
            if top % lc:
                raise ArithmeticError("inexact polynomial division")
            c = top // lc
            q[shift] = c
            if c:
                for i, y in enumerate(d):
                    r[i + shift] -= c * y
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(q)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[t] (primitive remainder sequence), positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if not a:
        return b
    if not b:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


def bracket(n: int) -> IntPolynomial:
    """``[n] = 1 + t + ... + t^(n-1)``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bracket needs a positive integer, got {n!r}")
    return IntPolynomial((1,) * n)


class RationalFunction:
    """Reduced quotient ``num / den`` of integer polynomials.

    Canonical form: ``gcd(num, den)`` is constant, ``den`` has a positive
    leading coefficient and the joint content of ``num`` and ``den`` is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, IntPolynomial) else IntPolynomial.constant(num)
        den = den if isinstance(den, IntPolynomial) else IntPolynomial.constant(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        c = gcd(num.content(), den.content())
        if den.lead < 0:
            c = -c
        num = IntPolynomial(x // c for x in num)
        den = IntPolynomial(x // c for x in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def __str__(self) -> str:
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        n = self.num(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d


def rf_combine(terms: Sequence[tuple[int, RationalFunction]]) -> RationalFunction:
    """Signed sum ``sum(sign * rf)`` over a common denominator, fully reduced."""
    if not terms:
        raise ValueError("rf_combine needs at least one term")
    num = IntPolynomial()
    den = IntPolynomial((1,))
    for sign, rf in terms:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        g = poly_gcd(den, rf.den)
        # lcm-based accumulation keeps the running denominator small
        cof_acc = rf.den.divexact(g)
        cof_new = den.divexact(g)
        num = num * cof_acc + (rf.num * cof_new) * sign
        den = den * cof_acc
    return RationalFunction(num, den)


class InconsistentSteinbergSum(ArithmeticError):
    """The Steinberg sum produced a zero numerator."""


def reciprocal_transform(rf: RationalFunction) -> RationalFunction:
    """Turn the value of ``1/f(1/t)`` into ``f(t)``.

    ``f(t) = den(1/t) / num(1/t)``, with powers of ``t`` cleared.
    """
    if not rf.num:
        raise InconsistentSteinbergSum("zero numerator: 1/f(1/t) vanishes identically")
    n = max(rf.num.degree, rf.den.degree)
    return RationalFunction(rf.den.reversed(n), rf.num.reversed(n))


def series_coefficients(rf: RationalFunction, count: int) -> list[int]:
    """First ``count`` Taylor coefficients of ``num/den`` at ``t = 0``."""
    if count < 1:
        raise ValueError("count must be positive")
    d0 = rf.den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at t = 0 (pole at the origin)")
    den = rf.den.coeffs
    out: list = []
    for k in range(count):
        acc = Fraction(rf.num[k])
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / d0)
    return [int(x) if x.denominator == 1 else x for x in out]
