"""Verification of the value-envelope inequalities.

For x >= 2 the normalized value Phi_n(x)/x^phi(n) is pinned between
(x^q - 1)/x^q and x^q/(x^q - 1) (q = q(n)), on the side selected by the
Mobius value of the radical, and always between 1/2 and 2; the same
factor-two envelope holds for complex |z| >= 2.  On (0, 1/2] the log-ratio
of two cyclotomic values is certified nonzero.  All comparisons are exact
rational; logs use certified enclosures.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, moebius, profile
from .certified import BigFloat, ZERO, from_interval, log_interval, sqrt_interval
from .polycore import cyclotomic, eval_gaussian, eval_rational


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one envelope check at one evaluation point."""

    n: int
    point: object  # Fraction for real checks, (Fraction, Fraction) for complex
    ratio: BigFloat
    side: str  # "mu_plus" or "mu_minus"
    holds: bool
    equality: bool


def lemma_tail_gap(x: Fraction, k: int, j_max: int = 64) -> tuple[BigFloat, BigFloat, bool]:
    """Compare |log(1 - x^-k)| against the whole tail sum over j > k.

    Returns (left, right_tail, holds) where right_tail includes a rigorous
    geometric bound on the remainder beyond j_max.
    """
    x = Fraction(x)
    if x < 2:
        raise ValueError("tail gap comparison requires x >= 2")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if j_max <= k:
        raise ValueError("j_max must exceed k")
    prec = 96
    llo, lhi = log_interval(1 - x ** -k, prec)
    left = from_interval(-lhi, -llo, prec)

    slo = shi = ZERO
    for j in range(k + 1, j_max + 1):
        jlo, jhi = log_interval(1 - x ** -j, prec)
        slo += -jhi
        shi += -jlo
    # |log(1-t)| <= t/(1-t); geometric sum of x^-j for j > j_max
    t_head = x ** -(j_max + 1)
    tail = t_head / ((1 - 1 / x) * (1 - t_head))
    right = from_interval(slo, shi + tail, prec)
    return left, right, left.lo > right.hi


def f_ratio(n: int, x: Fraction, precision_bits: int = 64) -> BigFloat:
    """Phi_n(x) / x^phi(n), exactly.

    For n > 1 this equals Phi_n(1/x) by the reciprocal property; that
    identity is asserted as a cross-check.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("f_ratio requires x != 0")
    p = cyclotomic(n)
    phi = profile(n).phi
    ratio = eval_rational(p, x) / x ** phi
    if n > 1:
        mirrored = eval_rational(p, 1 / x)
        if mirrored != ratio:
            raise AssertionError("reciprocal identity failed; corrupted coefficients")
    return BigFloat(ratio, precision_bits, ZERO)


def check_real_bounds(n: int, x: Fraction) -> BoundReport:
    """Verify the envelope pair for real x >= 2, plus the factor-two bounds.

    Equality can only occur at (n, x) = (1, 2) and is detected exactly.
    """
    x = Fraction(x)
    if x < 2:
        raise ValueError("real bounds require x >= 2")
    prof = profile(n)
    value = eval_rational(cyclotomic(n), x)
    power = x ** prof.phi
    q = prof.qpart
    xq = x ** q
    equality = False
    if prof.mu_rad == 1:
        side = "mu_plus"
        lower = (xq - 1) / xq * power
        # the sharp lower bound is attained exactly when n = 1 (any x);
        # the factor-two bound is attained only at (n, x) = (1, 2)
        envelope = lower <= value < power and (value > lower or n == 1)
        equality = value == power / 2
        factor_two = power / 2 <= value and (not equality or (n == 1 and x == 2))
        holds = envelope and factor_two
    else:
        side = "mu_minus"
        upper = xq / (xq - 1) * power
        holds = power < value < upper and value < 2 * power
    return BoundReport(
        n=n,
        point=x,
        ratio=BigFloat(value / power, 64, ZERO),
        side=side,
        holds=holds,
        equality=equality,
    )


def check_complex_bounds(n: int, z: tuple[Fraction, Fraction]) -> BoundReport:
    """Verify (1/2)|z|^phi <= |Phi_n(z)| < 2|z|^phi for exact complex z, |z| >= 2.

    Comparisons are made on squared moduli so everything stays rational.
    The only equality cases are (n, z) = (1, 2) and (2, -2).
    """
    re, im = Fraction(z[0]), Fraction(z[1])
    mod2 = re * re + im * im
    if mod2 < 4:
        raise ValueError("complex bounds require |z| >= 2")
    phi = profile(n).phi
    vr, vi = eval_gaussian(cyclotomic(n), re, im)
    val2 = vr * vr + vi * vi
    pow2 = mod2 ** phi
    lower_eq = val2 * 4 == pow2
    holds = val2 * 4 >= pow2 and val2 < 4 * pow2
    equality = lower_eq
    if equality and (n, re, im) not in ((1, Fraction(2), Fraction(0)), (2, Fraction(-2), Fraction(0))):
        holds = False
    # report |Phi_n(z)| / |z|^phi via its exact square
    rlo, rhi = sqrt_interval(val2 / pow2, 64)
    return BoundReport(
        n=n,
        point=(re, im),
        ratio=from_interval(rlo, rhi, 64),
        side="complex",
        holds=holds,
        equality=equality,
    )


def g_value(m: int, n: int, x: Fraction, precision_bits: int = 64) -> BigFloat:
    """Certified log(Phi_m(x) / Phi_n(x)) for 0 < x <= 1/2, sign nonzero.

    Computed from the divisor expansion over the radicals:
        sum_{d | rad(m)} mu(rad(m)/d) log(1 - x^(d q(m)))
      - sum_{e | rad(n)} mu(rad(n)/e) log(1 - x^(e q(n)))
    The enclosure is tightened until it excludes zero, and its sign is
    cross-checked against the exact rational sign of Phi_m(x) - Phi_n(x).
    """
    x = Fraction(x)
    if not (0 < x <= Fraction(1, 2)):
        raise ValueError("g_value requires 0 < x <= 1/2")
    if m <= 1 or n <= 1:
        raise ValueError("g_value requires m, n > 1 (index 1 differs by sign alone)")
    if m == n:
        raise ValueError("g_value requires m != n")

    pm, pn = profile(m), profile(n)
    terms: list[tuple[int, Fraction]] = []
    for d in divisors(pm.rad):
        mu = moebius(pm.rad // d)
        if mu:
            terms.append((mu, 1 - x ** (d * pm.qpart)))
    for e in divisors(pn.rad):
        mu = moebius(pn.rad // e)
        if mu:
            terms.append((-mu, 1 - x ** (e * pn.qpart)))

    exact_sign = _exact_ratio_sign(m, n, x)
    prec = precision_bits
    while True:
        lo = hi = ZERO
        for sgn, arg in terms:
            llo, lhi = log_interval(arg, prec)
            if sgn > 0:
                lo += llo
                hi += lhi
            else:
                lo += -lhi
                hi += -llo
        if lo > 0 or hi < 0:
            break
        prec *= 2
        if prec > 16 * precision_bits:
            raise AssertionError("g enclosure failed to separate from zero")
    result = from_interval(lo, hi, prec)
    got = 1 if result.lo > 0 else -1
    if got != exact_sign:
        raise AssertionError("certified log sign disagrees with exact evaluation")
    return result


def _exact_ratio_sign(m: int, n: int, x: Fraction) -> int:
    a = eval_rational(cyclotomic(m), x)
    b = eval_rational(cyclotomic(n), x)
    if a <= 0 or b <= 0:
        raise AssertionError("cyclotomic values on (0, 1/2] must be positive for n > 1")
    if a == b:
        raise AssertionError("unexpected exact coincidence on (0, 1/2]")
    return 1 if a > b else -1


def real_bounds_grid(n_max: int, xs: list[Fraction]):
    """Yield BoundReports over the full (n, x) grid, n ascending then x."""
    for n in range(1, n_max + 1):
        for x in xs:
            yield check_real_bounds(n, Fraction(x))
