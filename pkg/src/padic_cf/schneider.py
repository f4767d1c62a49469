"""Schneider continued fraction expansion of a rational, its convergent
matrices, stationarity detection, and exact head-length analysis.

The expansion writes a/b = b0 + p**a0/(b1 + p**a1/(...)) with digits in
{1,...,p-1} and exponents >= 1, driven by the integer recurrence

    y_{-1} = a,  y_0 = b
    b_m = y_{m-1} * y_m**-1 mod p,   alpha_m = vp(y_{m-1} - b_m y_m)
    y_{m+1} = (y_{m-1} - b_m y_m) / p**alpha_m

Every rational either terminates (some y_{m-1} - b_m y_m hits 0) or is
absorbed by the stationary loop: once (y_m, y_{m+1}) = (t, -t) with |t| = 1,
every later step is (p-1, 1) and the remaining tail has exact value -1.
A constant head of k+1 identical (digit, exponent) steps satisfies
(T2/T1)**k = theta where T1, T2 are the roots of T**2 - digit*T - p**exponent
and theta is a ratio of conjugate products; head_analysis certifies that
identity exactly in the quadratic field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactarith import (
    QuadraticElement,
    int_vp,
    mod_inverse,
    qf_sign,
    require_odd_prime,
)


@dataclass(frozen=True)
class SchneiderStep:
    b: int
    alpha: int
    y_next: int


@dataclass(frozen=True)
class SchneiderExpansion:
    """Recorded non-stationary head plus the tail marker.

    Exactly one of stationary_from / finite_end describes the tail:
    stationary_from is the index of the first of the everlasting (p-1, 1)
    steps (= len(steps)); finite_end means the next digit would divide
    exactly, leaving the integer tail value tail_value.
    """

    p: int
    a: int
    b: int
    steps: tuple[SchneiderStep, ...]
    stationary_from: int | None
    finite_end: bool

    @property
    def head(self) -> list[tuple[int, int]]:
        return [(s.b, s.alpha) for s in self.steps]

    @property
    def y_trace(self) -> list[int]:
        return [s.y_next for s in self.steps]

    @property
    def tail_value(self) -> Fraction:
        """Exact value of the unexpanded tail after the recorded steps."""
        if self.stationary_from is not None:
            return Fraction(-1)
        ys = [self.a, self.b] + [s.y_next for s in self.steps]
        return Fraction(ys[-2], ys[-1])


@dataclass(frozen=True)
class SchneiderMatrix:
    """Running product of the step matrices [[b, p**alpha], [1, 0]]."""

    u: int
    v: int
    w: int
    z: int

    def det(self) -> int:
        return self.u * self.z - self.v * self.w

    def times_step(self, b: int, alpha: int, p: int) -> SchneiderMatrix:
        pa = p**alpha
        return SchneiderMatrix(
            self.u * b + self.v, self.u * pa, self.w * b + self.z, self.w * pa
        )


@dataclass(frozen=True)
class HeadReport:
    """Exact certificate for the length of a constant (digit, exponent) head.

    exact_identity means (t2/t1)**(head_len-1) equals theta componentwise in
    the field; otherwise head_len is only the float-derived estimate and the
    input's head is not exactly constant.
    """

    digit: int
    alpha: int
    t1: QuadraticElement
    t2: QuadraticElement
    t1_float: float
    t2_float: float
    theta: QuadraticElement
    theta_float: float
    head_len: int
    exact_exponent: int | None
    exact_identity: bool


_STATIONARY_PAIRS = ((1, -1), (-1, 1))


def schneider_expand(a: int, b: int, p: int, max_steps: int = 10_000) -> SchneiderExpansion:
    """Expand a/b until stationarity or finite termination.

    Requires a nonzero, b positive, and a, b, p pairwise coprime.  Exceeding
    max_steps raises ArithmeticError: every rational is absorbed eventually.
    """
    require_odd_prime(p)
    if a == 0:
        raise ValueError("numerator must be nonzero")
    if b < 1:
        raise ValueError("denominator must be positive")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a and b must be coprime, got gcd = {math.gcd(a, b)}")
    if a % p == 0:
        raise ValueError("numerator must be coprime to p")
    if b % p == 0:
        raise ValueError("denominator must be coprime to p")
    if max_steps < 1:
        raise ValueError("max_steps must be positive")

    y_prev, y_cur = a, b
    if (y_prev, y_cur) in _STATIONARY_PAIRS:
        return SchneiderExpansion(p, a, b, (), 0, False)
    steps: list[SchneiderStep] = []
    while len(steps) < max_steps:
        digit = (y_prev * mod_inverse(y_cur, p)) % p
        delta = y_prev - digit * y_cur
        if delta == 0:
            return SchneiderExpansion(p, a, b, tuple(steps), None, True)
        alpha = int_vp(delta, p)
        y_next = delta // p**alpha
        steps.append(SchneiderStep(digit, alpha, y_next))
        y_prev, y_cur = y_cur, y_next
        if (y_prev, y_cur) in _STATIONARY_PAIRS:
            return SchneiderExpansion(p, a, b, tuple(steps), len(steps), False)
    raise ArithmeticError(f"stationarity not reached within {max_steps} steps")


def schneider_evaluate(head, tail_value: Fraction | int, p: int) -> Fraction:
    """Exact back-substitution of b0 + p**a0/(b1 + ... + p**ak/tail_value).

    The everlasting (p-1, 1) tail is represented by tail_value = -1, its
    exact value.
    """
    acc = Fraction(tail_value)
    if acc == 0:
        raise ZeroDivisionError("zero tail value")
    for digit, alpha in reversed(list(head)):
        if acc == 0:
            raise ZeroDivisionError("zero denominator in back-substitution")
        acc = digit + Fraction(p) ** alpha / acc
    return acc


def schneider_convergents(expansion: SchneiderExpansion) -> list[tuple[SchneiderMatrix, Fraction]]:
    """Matrix prefixes M_m with their convergent values U_m/W_m.

    det M_m = (-1)**(m+1) * p**(alpha_0+...+alpha_m), and the truncation
    error a/b - U_m/W_m has valuation exactly alpha_0+...+alpha_m.
    """
    if not expansion.steps:
        raise ValueError("empty expansion")
    out = []
    m = SchneiderMatrix(1, 0, 0, 1)
    for s in expansion.steps:
        m = m.times_step(s.b, s.alpha, expansion.p)
        out.append((m, Fraction(m.u, m.w)))
    return out


def _check_head_pair(digit: int, alpha: int, p: int) -> None:
    if not 1 <= digit <= p - 1:
        raise ValueError(f"digit must be in 1..{p - 1}, got {digit}")
    if alpha < 1:
        raise ValueError(f"exponent must be positive, got {alpha}")
    if (digit, alpha) == (p - 1, 1):
        raise ValueError("the stationary pair (p-1, 1) has no constant head")


def head_analysis(a: int, b: int, digit: int, alpha: int, p: int) -> HeadReport:
    """Certify the length of the constant (digit, alpha) head of a/b.

    Returns head_len = e + 1 with the exponent e certified by the exact
    identity (t2/t1)**e = theta; when no exponent near the float estimate
    satisfies it, the input's head is not exactly constant and the report
    carries the float-derived length with exact_identity False.
    """
    require_odd_prime(p)
    _check_head_pair(digit, alpha, p)
    if b < 1:
        raise ValueError("denominator must be positive")

    disc = 4 * p**alpha + digit * digit
    half = Fraction(1, 2)
    t1 = QuadraticElement(digit * half, -half, disc)
    t2 = QuadraticElement(digit * half, half, disc)
    pa = p**alpha
    for root in (t1, t2):
        if a - b * root == QuadraticElement(0):
            raise ValueError("a/b equals a characteristic root: theta undefined")
    theta = ((t1 - pa) * (a - b * t1)) / ((t2 - pa) * (a - b * t2))
    if qf_sign(theta * theta - 1) <= 0:
        raise ValueError("|theta| <= 1: no constant head to measure")

    ratio = t2 / t1
    t1f, t2f, thetaf = float(t1), float(t2), float(theta)
    estimate = math.log(abs(thetaf)) / math.log(abs(t2f / t1f))
    nearest = round(estimate)
    exact_exponent = None
    for candidate in (nearest - 1, nearest, nearest + 1):
        if candidate >= 1 and ratio**candidate == theta:
            exact_exponent = candidate
            break
    if exact_exponent is not None:
        head_len = exact_exponent + 1
        exact = True
    else:
        head_len = math.floor(estimate) + 1
        exact = False
    return HeadReport(
        digit, alpha, t1, t2, t1f, t2f, theta, thetaf, head_len, exact_exponent, exact
    )


def generate_constant_head(digit: int, alpha: int, k: int, p: int) -> tuple[int, int]:
    """Rational a/b whose expansion is (digit, alpha) repeated k+1 times,
    then the stationary tail.

    Built as the product of k+1 copies of [[digit, p**alpha], [1, 0]]
    applied to the stationary tail vector (1, -1), sign-normalized to b > 0.
    """
    require_odd_prime(p)
    _check_head_pair(digit, alpha, p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = SchneiderMatrix(1, 0, 0, 1)
    for _ in range(k + 1):
        m = m.times_step(digit, alpha, p)
    a, b = m.u - m.v, m.w - m.z
    if b < 0:
        a, b = -a, -b
    return a, b
