"""Exact arithmetic foundation: p-adic valuations, symmetric residues,
modular inverses, and real quadratic field elements.

Everything here is exact integer/rational arithmetic; floating point only
appears in ``float()`` conversions used for advisory estimates.
"""

from __future__ import annotations

import math
from fractions import Fraction

# The universal exact value type of the whole package.
Rational = Fraction


def is_odd_prime(p: int) -> bool:
    """True for primes >= 3 (2 is deliberately rejected)."""
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def int_vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(r: Fraction | int, p: int) -> int:
    """Signed p-adic valuation: r = p**v * (u/w) with p dividing neither u nor w."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("valuation of zero undefined")
    num, den = r.numerator, r.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    if v > 0:
        return v
    # num and den are coprime, so at most one side carries factors of p
    while den % p == 0:
        den //= p
        v -= 1
    return v


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m, in [1, m-1]."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"not invertible: gcd({a}, {m}) != 1") from None


def symmetric_residue(x: int, m: int) -> int:
    """Residue of x modulo odd m in the symmetric range [-(m-1)/2, (m-1)/2]."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {m}")
    s = x % m
    return s - m if s > m // 2 else s


def _sign_of(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _square_part(n: int) -> tuple[int, int]:
    # n = s*s*m with m squarefree; trial division is plenty for our radicands
    root = math.isqrt(n)
    if root * root == n:
        return root, 1
    s, m, f = 1, n, 2
    while f * f <= m:
        ff = f * f
        while m % ff == 0:
            m //= ff
            s *= f
        f += 1
    return s, m


class QuadraticElement:
    """Exact element x + y*sqrt(d) of a real quadratic field.

    Square factors of the radicand fold into y on construction, so rational
    values always normalize to d = 1 and equality is plain componentwise
    comparison.  Elements with distinct irrational radicands refuse to mix:
    each computation lives in a single field.
    """

    __slots__ = ("x", "y", "d")

    def __init__(self, x: Fraction | int = 0, y: Fraction | int = 0, d: int = 1) -> None:
        x, y = Fraction(x), Fraction(y)
        if d < 1:
            raise ValueError(f"radicand must be positive, got {d}")
        if y == 0:
            d = 1
        elif d > 1:
            s, d = _square_part(d)
            y *= s
        if d == 1:
            x, y = x + y, Fraction(0)
        self.x = x
        self.y = y
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> QuadraticElement:
        """The element sqrt(d)."""
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    def as_fraction(self) -> Fraction:
        if self.y != 0:
            raise ValueError(f"{self} is irrational")
        return self.x

    def conjugate(self) -> QuadraticElement:
        return QuadraticElement(self.x, -self.y, self.d)

    def sign(self) -> int:
        """Exact sign of the real number x + y*sqrt(d); no floating point."""
        if self.y == 0:
            return _sign_of(self.x)
        if self.x == 0:
            return _sign_of(self.y)
        sx, sy = _sign_of(self.x), _sign_of(self.y)
        if sx == sy:
            return sx
        # opposite-sign parts: compare x**2 against y**2 * d exactly
        gap = self.x * self.x - self.y * self.y * self.d
        if gap == 0:
            return 0  # impossible for a squarefree radicand > 1
        return sx if gap > 0 else sy

    def _coerce(self, other: object) -> QuadraticElement | None:
        if isinstance(other, QuadraticElement):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(other)
        return None

    def _common_d(self, other: QuadraticElement) -> int:
        if self.d == other.d or other.d == 1:
            return self.d
        if self.d == 1:
            return other.d
        raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")

    def __add__(self, other: object) -> QuadraticElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._common_d(other)
        return QuadraticElement(self.x + other.x, self.y + other.y, d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticElement:
        return QuadraticElement(-self.x, -self.y, self.d)

    def __sub__(self, other: object) -> QuadraticElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> QuadraticElement:
        return (-self) + other

    def __mul__(self, other: object) -> QuadraticElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._common_d(other)
        x = self.x * other.x + self.y * other.y * d
        y = self.x * other.y + self.y * other.x
        return QuadraticElement(x, y, d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadraticElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.x == 0 and other.y == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        # multiply by the conjugate; the norm of a nonzero element is nonzero
        norm = other.x * other.x - other.y * other.y * other.d
        return self * QuadraticElement(other.x / norm, -other.y / norm, other.d)

    def __rtruediv__(self, other: object) -> QuadraticElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced / self

    def __pow__(self, n: int) -> QuadraticElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (QuadraticElement(1) / self) ** (-n)
        out = QuadraticElement(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.x == coerced.x and self.y == coerced.y and self.d == coerced.d

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.d))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __float__(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(self.d)

    def __repr__(self) -> str:
        return f"QuadraticElement({self.x}, {self.y}, d={self.d})"

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}*sqrt({self.d})"
        op = "-" if self.y < 0 else "+"
        return f"{self.x} {op} {abs(self.y)}*sqrt({self.d})"


def qf_pow(e: QuadraticElement, n: int) -> QuadraticElement:
    """Exact n-th power in the element's field; qf_pow(e, 0) is 1."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return e ** n


def qf_sign(e: QuadraticElement) -> int:
    """Exact sign (-1, 0, +1) of a quadratic field element."""
    return e.sign()
