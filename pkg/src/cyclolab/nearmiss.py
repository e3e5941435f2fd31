"""Near-miss machinery: coincidence roots approaching 2 from prime triples,
and root families converging just above 1/2 in absolute value.

For primes p < q with r = pq - p - q also prime, Phi_pq - Phi_r has its
largest real root just below 2.  As q grows (p fixed) that root converges
to the largest root of x^(p+2) - 2x^(p+1) + 1, i.e. of psi_{p+1} where
psi_k(x) = x^k - x^(k-1) - ... - x - 1; the gap closes like 2^-q.

Note: the k-index matters.  The reference root used throughout the table
is the psi_{p+1} root; psi_{p-1} (whose root is far lower) is also
computable here so the two can be compared directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import is_prime, primes_up_to, primorial, profile
from .certified import BigFloat, from_interval
from .polycore import IntPoly, difference, eval_rational
from .roots import IsolatingInterval, isolate_real_roots, refine_root, squarefree_part, sturm_count


def psi(k: int) -> IntPoly:
    """x^k - x^(k-1) - ... - x - 1."""
    if k < 1:
        raise ValueError("psi requires k >= 1")
    return IntPoly([-1] * k + [1])


def alpha_root(k: int, digits: int = 15) -> BigFloat:
    """The largest real root of psi_k, certified.

    psi_k(2) = 1 and psi_k'(2) = 2^k - 1, so the root sits near
    2 - 1/(2^k - 1); it is bracketed in (1, 2) and confirmed largest by an
    exact count above the bracket.
    """
    if k < 2:
        raise ValueError("alpha_root requires k >= 2")
    return _largest_real_root(psi(k), digits)


def reference_alpha(p: int, digits: int = 15) -> BigFloat:
    """The limit root for fixed p: largest root of psi_{p+1}."""
    return alpha_root(p + 1, digits)


def _largest_real_root(poly: IntPoly, digits: int) -> BigFloat:
    ivs = isolate_real_roots(poly)
    if not ivs:
        raise ValueError("polynomial has no real roots")
    top = ivs[-1]
    above = sturm_count(poly, top.hi, None)
    if above:
        raise AssertionError("isolation missed a root above the top bracket")
    sf = squarefree_part(poly)
    return refine_root(sf, top, digits)


def find_triples(p: int, q_max: int) -> list[tuple[int, int]]:
    """All (q, r) with q prime in (p, q_max], r = pq - p - q prime."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    out = []
    for q in primes_up_to(q_max):
        if q <= p:
            continue
        r = p * q - p - q
        if is_prime(r):
            out.append((q, r))
    return out


@dataclass(frozen=True)
class DeltaDecomposition:
    """Phi_pq - Phi_r split into a dominant block and a small perturbation.

    main is psi_{p-1}(x) * x^(phi(pq) - phi(p)); delta is the exact rest,
    with deg(delta) <= phi(pq) - p and coefficients in {-2, -1, 0, 1}.
    """

    p: int
    q: int
    main: IntPoly
    delta: IntPoly

    @property
    def difference(self) -> IntPoly:
        return self.main + self.delta


def delta_decompose(p: int, q: int) -> DeltaDecomposition:
    r = _triple_r(p, q)
    d = difference(p * q, r)
    phi_pq = profile(p * q).phi
    phi_p = p - 1
    main = psi(p - 1).shift(phi_pq - phi_p)
    delta = d - main
    if delta.degree > phi_pq - p:
        raise AssertionError("perturbation degree bound failed")
    if any(c < -2 or c > 1 for c in delta.coeffs):
        raise AssertionError("perturbation coefficient bound failed")
    return DeltaDecomposition(p=p, q=q, main=main, delta=delta)


def _triple_r(p: int, q: int) -> int:
    if not is_prime(p) or not is_prime(q) or not p < q:
        raise ValueError("need primes p < q")
    r = p * q - p - q
    if not is_prime(r):
        raise ValueError(f"pq - p - q = {r} is not prime; not a valid triple")
    return r


def near_miss_root(p: int, q: int, digits: int = 15) -> BigFloat:
    """The largest real root of Phi_pq - Phi_r, certified and refined."""
    r = _triple_r(p, q)
    return _largest_real_root(difference(p * q, r), digits)


class PerturbationEstimate(NamedTuple):
    first_order: BigFloat  # alpha - delta(alpha) / (D'(alpha) - delta'(alpha))
    crude: BigFloat        # alpha - 2^-q


def perturbation_estimate(p: int, q: int, digits: int = 15) -> PerturbationEstimate:
    """First-order estimate of the near-miss root from the reference root.

    The perturbation is taken relative to the reference main term
    psi_{p+1}(x) * x^(phi(pq) - (p+1)), whose largest root is the
    reference alpha; the first-order shift of a simple root under an
    additive perturbation delta is -delta(alpha)/f'(alpha) with
    f' = D' - delta'.
    """
    r = _triple_r(p, q)
    d = difference(p * q, r)
    phi_pq = profile(p * q).phi
    ref_main = psi(p + 1).shift(phi_pq - (p + 1))
    delta = d - ref_main
    work = digits + 10
    alpha = reference_alpha(p, work)
    a = alpha.value
    shift = eval_rational(delta, a) / (
        eval_rational(d.derivative(), a) - eval_rational(delta.derivative(), a)
    )
    prec = alpha.precision_bits
    first = BigFloat(a - shift, prec, alpha.error_bound)
    crude = BigFloat(a - Fraction(1, 2 ** q), prec, alpha.error_bound)
    return PerturbationEstimate(first_order=first, crude=crude)


@dataclass(frozen=True)
class TripleRecord:
    """One row of the near-miss table."""

    p: int
    q: int
    r: int
    beta: BigFloat
    alpha: BigFloat
    inv_gap: BigFloat
    scaled_gap: BigFloat


TABLE_ROWS = [(3, 5), (3, 7), (3, 11), (3, 13), (5, 7), (5, 13), (5, 19), (7, 11), (7, 13), (7, 19)]


def table1(rows: list[tuple[int, int]] | None = None, digits: int = 15) -> list[TripleRecord]:
    """Near-miss table: for each triple, the root beta, the reference
    alpha, and the inverse gaps (alpha - beta)^-1 and 1/(2^q (alpha - beta)).

    Internal precision is pushed well past ``digits`` so the derived
    columns are certified at their printed precision.
    """
    if rows is None:
        rows = list(TABLE_ROWS)
    out = []
    for p, q in rows:
        r = _triple_r(p, q)
        work = max(digits + 12, 26)
        beta = near_miss_root(p, q, work)
        alpha = reference_alpha(p, work)
        gap_lo = alpha.lo - beta.hi
        gap_hi = alpha.hi - beta.lo
        if gap_lo <= 0:
            raise AssertionError("reference root must exceed the near-miss root")
        inv = from_interval(1 / gap_hi, 1 / gap_lo, beta.precision_bits)
        scaled = from_interval(inv.lo / 2 ** q, inv.hi / 2 ** q, beta.precision_bits)
        out.append(
            TripleRecord(p=p, q=q, r=r, beta=beta, alpha=alpha, inv_gap=inv, scaled_gap=scaled)
        )
    return out


# ---------------------------------------------------------------------------
# families converging near +-1/2 limit points


def limit_constants(digits: int = 13) -> tuple[BigFloat, BigFloat]:
    """(rho, sigma): the negative root of x^3 + x^2 + 2x + 1 and the (0,1)
    root of Phi_30 - Phi_4."""
    rho = _root_in_bracket(IntPoly([1, 2, 1, 1]), Fraction(-1), Fraction(0), digits)
    sigma = _root_in_bracket(difference(30, 4), Fraction(1, 4), Fraction(3, 4), digits)
    return rho, sigma


def _root_in_bracket(poly: IntPoly, lo: Fraction, hi: Fraction, digits: int) -> BigFloat:
    sf = squarefree_part(poly)
    count = sturm_count(poly, lo, hi)
    if count != 1:
        raise ValueError(f"bracket ({float(lo)}, {float(hi)}] holds {count} roots, need exactly 1")
    from .roots import _sign_at  # endpoint signs for the certified interval

    slo = _sign_at(list(sf.coeffs), lo)
    shi = _sign_at(list(sf.coeffs), hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("bracket endpoints must produce a sign change")
    return refine_root(sf, IsolatingInterval(lo, hi, slo, shi), digits)


LIMIT_FAMILIES = ("three_p", "six_p", "thirty_p", "primorial")

_RHO_BRACKET = (Fraction(-13, 20), Fraction(-1, 2))
_SIGMA_BRACKET = (Fraction(2, 5), Fraction(3, 5))


def limit_family_root(family: str, param: int, digits: int = 14) -> BigFloat:
    """The family member's root near its limit constant.

    three_p(p): root of Phi_3p - Phi_4 near rho (negative).
    six_p(p): root of Phi_6p - Phi_4 near -rho.
    thirty_p(p): root of Phi_30p - Phi_4p near sigma.
    primorial(k): root of Phi_m - Phi_n, m the product of the first k >= 3
    primes, n = 2m/15, near 0.52.

    Raises if the parameter is invalid or the family root has not yet
    entered the standard bracket around the limit.
    """
    if family not in LIMIT_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "primorial":
        if param < 3:
            raise ValueError("primorial family requires k >= 3")
        m = primorial(param)
        n = 2 * m // 15
        poly = difference(m, n)
        lo, hi = _SIGMA_BRACKET
    else:
        if not is_prime(param):
            raise ValueError("family parameter must be prime")
        if family == "three_p":
            poly = difference(3 * param, 4)
            lo, hi = _RHO_BRACKET
        elif family == "six_p":
            poly = difference(6 * param, 4)
            lo, hi = -_RHO_BRACKET[1], -_RHO_BRACKET[0]
        else:
            poly = difference(30 * param, 4 * param)
            lo, hi = _SIGMA_BRACKET
    return _root_in_bracket(poly, lo, hi, digits)
