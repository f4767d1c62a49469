"""Symmetric-digit base-p expansion of a rational and its fractional part.

Digits live in {-(p-1)/2, ..., (p-1)/2}.  The fractional part collects the
terms with exponent <= 0 and is the partial quotient used by the Browkin
expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactarith import mod_inverse, require_odd_prime, symmetric_residue, vp


@dataclass(frozen=True)
class PAdicDigits:
    """A finite window of the symmetric-digit expansion of a rational.

    The window value sum(digits[i] * p**(start_exponent+i)) is congruent to
    the source rational modulo p**(start_exponent+count), and so is every
    shorter prefix at its own modulus.
    """

    p: int
    start_exponent: int
    digits: tuple[int, ...]
    count: int

    def prefix_value(self, length: int | None = None) -> Fraction:
        """Exact value of the first `length` digits (default: all of them)."""
        if length is None:
            length = len(self.digits)
        total = Fraction(0)
        scale = Fraction(self.p) ** self.start_exponent
        for digit in self.digits[:length]:
            total += digit * scale
            scale *= self.p
        return total


def _unit_digit(t: Fraction, p: int) -> int:
    # t has a p-free denominator; its digit is the symmetric residue mod p
    if t == 0:
        return 0
    return symmetric_residue(t.numerator * mod_inverse(t.denominator, p), p)


def padic_digits(r: Fraction | int, p: int, count: int) -> PAdicDigits:
    """First `count` symmetric digits of r, starting at exponent vp(r)."""
    require_odd_prime(p)
    if count < 1:
        raise ValueError("count must be positive")
    r = Fraction(r)
    if r == 0:
        return PAdicDigits(p, 0, (), count)
    start = vp(r, p)
    t = r / Fraction(p) ** start
    digits = []
    for _ in range(count):
        d = _unit_digit(t, p)
        digits.append(d)
        t = (t - d) / p
    return PAdicDigits(p, start, tuple(digits), count)


def fractional_part(r: Fraction | int, p: int) -> Fraction:
    """Sum of the expansion terms with exponent <= 0.

    Lies in Z[1/p] with real absolute value below p/2, and r minus the
    result has valuation >= 1.  Computed directly: with r = a/(b*p**k),
    k = max(0, -vp(r)) and p-free b, the value is the symmetric residue of
    a * b**-1 modulo p**(1+k), divided by p**k.
    """
    require_odd_prime(p)
    r = Fraction(r)
    if r == 0:
        return Fraction(0)
    k = max(0, -vp(r, p))
    modulus = p ** (1 + k)
    b = r.denominator // p**k
    x = symmetric_residue(r.numerator * mod_inverse(b, modulus), modulus)
    return Fraction(x, p**k)


def digit_period(r: Fraction | int, p: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Split the digit stream into (start_exponent, preperiod, period).

    The repeating tail is located by exact remainder-state repetition: the
    remainder after each extracted digit keeps a fixed p-free denominator,
    so there are finitely many states and the first revisit pins the cycle.
    """
    require_odd_prime(p)
    r = Fraction(r)
    if r == 0:
        return 0, (), (0,)
    start = vp(r, p)
    t = r / Fraction(p) ** start
    seen = {t: 0}
    digits: list[int] = []
    while True:
        d = _unit_digit(t, p)
        digits.append(d)
        t = (t - d) / p
        if t in seen:
            cut = seen[t]
            return start, tuple(digits[:cut]), tuple(digits[cut:])
        seen[t] = len(digits)
