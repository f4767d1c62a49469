"""Browkin continued fraction expansion of a rational, its convergents,
the majorant sequence that forces termination, and the certified length
bound.

The expansion writes r = a0 + 1/(a1 + 1/(...)) with every partial quotient
an = xn / p**kn taken from Z[1/p] with |an| < p/2.  Bookkeeping runs on an
integer pair (beta_{n-1}, beta_n):

    r = alpha / (beta * p**k0),  beta_{-1} = alpha,  beta_0 = beta
    xn     = symmetric residue of beta_{n-1} * beta_n**-1  mod p**(1+kn)
    delta  = beta_{n-1} - xn * beta_n          (divisible by p**(1+kn))
    k_{n+1} = vp(delta) - kn,   beta_{n+1} = delta / p**(kn + k_{n+1})

beta_{n+1} = 0 terminates: the last complete quotient equals its partial
quotient exactly.  |beta_n| is dominated by a linear recurrence whose decay
certifies that at most n_bound + 1 quotients can appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactarith import (
    QuadraticElement,
    int_vp,
    mod_inverse,
    qf_sign,
    require_odd_prime,
    symmetric_residue,
    vp,
)


@dataclass(frozen=True)
class BrowkinStep:
    """One expansion step: exponent kn, residue xn, denominator bookkeeping
    integer beta_n, partial quotient an = xn/p**kn, complete quotient rn."""

    k: int
    x: int
    beta: int
    a: Fraction
    r: Fraction


@dataclass(frozen=True)
class BrowkinExpansion:
    p: int
    value: Fraction
    alpha: int
    beta0: int
    steps: tuple[BrowkinStep, ...]
    terminated: bool

    @property
    def quotients(self) -> list[Fraction]:
        return [s.a for s in self.steps]

    @property
    def k_trace(self) -> list[int]:
        return [s.k for s in self.steps]

    @property
    def beta_trace(self) -> list[int]:
        return [s.beta for s in self.steps]


@dataclass(frozen=True)
class Convergent:
    pn: Fraction
    qn: Fraction
    value: Fraction


@dataclass(frozen=True)
class BoundReport:
    """Certified upper bound on the number of partial quotients.

    n_bound is the integer part of -log(capacity)/log(lambda1) where
    capacity = 2|beta1|/(lambda1-lambda2) + |beta0|; the floor is certified
    by exact sign tests in the field holding lambda1, never by floats.
    exact_certificate records that the float estimate agreed.
    """

    lambda1: QuadraticElement
    lambda2: QuadraticElement
    lambda1_float: float
    lambda2_float: float
    capacity_constant: QuadraticElement
    n_bound: int
    exact_certificate: bool


def browkin_expand(
    r: Fraction | int, p: int, max_steps: int | None = None
) -> BrowkinExpansion:
    """Full Browkin expansion of a nonzero rational.

    max_steps defaults to 4*(n_bound+2) once beta_1 is known; exceeding the
    cap would contradict the length bound and raises ArithmeticError.
    """
    require_odd_prime(p)
    r = Fraction(r)
    if r == 0:
        raise ValueError("cannot expand zero")
    if max_steps is not None and max_steps < 1:
        raise ValueError("max_steps must be positive")

    k0 = max(0, -vp(r, p))
    alpha = r.numerator
    beta = r.denominator // p**k0  # positive and p-free; sign lives in alpha

    steps: list[BrowkinStep] = []
    b_prev, b_cur, k = alpha, beta, k0
    cap = max_steps
    while True:
        if cap is not None and len(steps) >= cap:
            raise ArithmeticError(
                f"bound violated: expansion of {r} exceeded {cap} steps"
            )
        modulus = p ** (1 + k)
        x = symmetric_residue(b_prev * mod_inverse(b_cur, modulus), modulus)
        steps.append(
            BrowkinStep(k, x, b_cur, Fraction(x, p**k), Fraction(b_prev, b_cur * p**k))
        )
        delta = b_prev - x * b_cur
        if delta == 0:
            return BrowkinExpansion(p, r, alpha, beta, tuple(steps), True)
        shifted = delta // p**k  # exact: delta is divisible by p**(1+k)
        k_next = int_vp(shifted, p)
        b_prev, b_cur, k = b_cur, shifted // p**k_next, k_next
        if cap is None and len(steps) == 2:
            report = browkin_bound(beta, abs(steps[1].beta), p)
            cap = 4 * (report.n_bound + 2)


def cf_evaluate(quotients) -> Fraction:
    """Exact back-substitution of a0 + 1/(a1 + 1/(... + 1/ak))."""
    qs = [Fraction(q) for q in quotients]
    if not qs:
        raise ValueError("empty quotient sequence")
    acc = qs[-1]
    for a in reversed(qs[:-1]):
        if acc == 0:
            raise ZeroDivisionError("divergent finite fraction")
        acc = a + 1 / acc
    return acc


def browkin_convergents(expansion) -> list[Convergent]:
    """Convergents p_n/q_n of an expansion (or bare quotient sequence).

    Recurrence u_{n+2} = a_{n+2} u_{n+1} + u_n seeded with p_{-1}=1, p_0=a_0,
    q_{-1}=0, q_0=1; successive pairs satisfy p_n q_{n-1} - p_{n-1} q_n =
    (-1)**(n+1).
    """
    if isinstance(expansion, BrowkinExpansion):
        qs = expansion.quotients
    else:
        qs = [Fraction(a) for a in expansion]
    if not qs:
        raise ValueError("empty expansion")
    out = []
    p_prev, q_prev = Fraction(1), Fraction(0)
    p_cur, q_cur = qs[0], Fraction(1)
    out.append(Convergent(p_cur, q_cur, p_cur / q_cur))
    for a in qs[1:]:
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        out.append(Convergent(p_cur, q_cur, p_cur / q_cur))
    return out


def theta_sequence(beta0_abs: int, beta1_abs: int, p: int, n: int) -> list[Fraction]:
    """Majorant sequence theta dominating |beta_n|:
    theta_0 = |beta_0|, theta_1 = |beta_1|, theta_{i+1} = theta_i/2 + theta_{i-1}/p**2.
    """
    if n < 2:
        raise ValueError("need at least two terms")
    seq = [Fraction(beta0_abs), Fraction(beta1_abs)]
    inv_pp = Fraction(1, p * p)
    while len(seq) < n:
        seq.append(seq[-1] / 2 + seq[-2] * inv_pp)
    return seq


@lru_cache(maxsize=None)
def browkin_bound(beta0_abs: int, beta1_abs: int, p: int) -> BoundReport:
    """Certified bound N: at most N+1 partial quotients can appear.

    lambda1 > |lambda2| are the roots of 2 p**2 X**2 - p**2 X - 2 = 0, i.e.
    (p +- sqrt(p**2+16)) / (4p).  N is the largest integer with
    lambda1**N * capacity >= 1, located from a float estimate and then
    certified by exact sign comparisons in Q(sqrt(p**2+16)).
    """
    require_odd_prime(p)
    if beta0_abs < 1:
        raise ValueError("beta0 magnitude must be >= 1")
    if beta1_abs < 0:
        raise ValueError("beta1 magnitude must be >= 0")

    disc = p * p + 16
    lam1 = QuadraticElement(Fraction(1, 4), Fraction(1, 4 * p), disc)
    lam2 = QuadraticElement(Fraction(1, 4), Fraction(-1, 4 * p), disc)
    # 2|b1|/(lam1-lam2) = 4p|b1|/sqrt(disc) = (4p|b1|/disc)*sqrt(disc)
    capacity = QuadraticElement(beta0_abs, Fraction(4 * p * beta1_abs, disc), disc)

    lf1, lf2, cf = float(lam1), float(lam2), float(capacity)
    n_float = math.floor(-math.log(cf) / math.log(lf1)) if cf > 1.0 else 0

    n = max(0, n_float)
    while qf_sign(lam1**n * capacity - 1) < 0:
        n -= 1  # capacity >= 1, so n = 0 always satisfies the first test
    while qf_sign(lam1 ** (n + 1) * capacity - 1) >= 0:
        n += 1
    return BoundReport(lam1, lam2, lf1, lf2, capacity, n, n == n_float)
