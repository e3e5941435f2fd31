"""Two total orderings of the positive integers by cyclotomic values.

compare_large orders by values at any fixed x > 2: first by totient, then
lexicographically from the highest differing coefficient of the difference
polynomial (the comparator that agrees with evaluation).  compare_small
orders by values on (0, 1/2]: lexicographically from the lowest differing
coefficient.  Neither ever reports a tie for distinct indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .arith import inverse_phi, is_prime, phi_prime_power_primes, profile
from .polycore import cyclotomic

LESS = -1
GREATER = 1


@dataclass(frozen=True)
class OrderKey:
    """Totient plus coefficient vector; all the data the comparators use."""

    n: int
    phi: int
    coeffs: tuple[int, ...]


def order_key(n: int) -> OrderKey:
    p = cyclotomic(n)
    return OrderKey(n=n, phi=p.degree, coeffs=p.coeffs)


def compare_large(m: int, n: int) -> int:
    """-1 if Phi_m < Phi_n at every x > 2, +1 for the reverse."""
    if m == n:
        raise ValueError("compare_large requires m != n")
    pm, pn = profile(m), profile(n)
    if pm.phi != pn.phi:
        return LESS if pm.phi < pn.phi else GREATER
    a = cyclotomic(m).coeffs
    b = cyclotomic(n).coeffs
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return LESS if a[i] < b[i] else GREATER
    raise AssertionError("distinct indices produced identical polynomials")


def compare_small(m: int, n: int) -> int:
    """-1 if Phi_m < Phi_n on (0, 1/2], +1 for the reverse."""
    if m == n:
        raise ValueError("compare_small requires m != n")
    a = cyclotomic(m).coeffs
    b = cyclotomic(n).coeffs
    for i in range(max(len(a), len(b))):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        if ai != bi:
            return LESS if ai < bi else GREATER
    raise AssertionError("distinct indices produced identical polynomials")


def phi_class_sorted(k: int) -> list[int]:
    """All n with phi(n) = k, ascending in the large-argument order."""
    if k < 1:
        raise ValueError("phi_class_sorted requires k >= 1")
    return sorted(inverse_phi(k), key=cmp_to_key(compare_large))


def ordered_prefix(K: int) -> list[int]:
    """All n with phi(n) <= K, ascending in the large-argument order.

    Classes of equal totient are contiguous; within a class the
    lexicographic comparator decides.
    """
    if K < 1:
        raise ValueError("ordered_prefix requires K >= 1")
    out: list[int] = []
    for k in range(1, K + 1):
        out.extend(phi_class_sorted(k))
    return out


def gap(n: int) -> int:
    """Distance from the top degree to the next nonzero coefficient."""
    if n < 1:
        raise ValueError("gap requires n >= 1")
    cs = cyclotomic(n).coeffs
    phi = len(cs) - 1
    i = phi - 1
    while i >= 0 and cs[i] == 0:
        i -= 1
    return phi - i


@dataclass(frozen=True)
class ConsecutiveCertificate:
    """Adjacency verdict plus the totient classes that witnessed it."""

    m: int
    n: int
    consecutive: bool
    between: tuple[int, ...]
    classes: tuple[tuple[int, tuple[int, ...]], ...]


def certify_consecutive(m: int, n: int) -> ConsecutiveCertificate:
    """Decide whether nothing sits strictly between m and n in the order.

    Only integers with totient between phi(m) and phi(n) can intervene, so
    the decision reduces to finitely many totient classes, all listed in
    the certificate.
    """
    if m == n:
        raise ValueError("certify_consecutive requires m != n")
    lo, hi = (m, n) if compare_large(m, n) == LESS else (n, m)
    k_lo, k_hi = profile(lo).phi, profile(hi).phi
    classes = []
    between: list[int] = []
    for k in range(k_lo, k_hi + 1):
        members = phi_class_sorted(k)
        if members:
            classes.append((k, tuple(members)))
        for t in members:
            if t in (m, n):
                continue
            if compare_large(lo, t) == LESS and compare_large(t, hi) == LESS:
                between.append(t)
    return ConsecutiveCertificate(
        m=m,
        n=n,
        consecutive=not between,
        between=tuple(between),
        classes=tuple(classes),
    )


def check_3mod4_criterion(p: int) -> bool:
    """For prime p = 3 mod 4: are 2p and p adjacent in the order?

    Decided by the prime-power totient criterion (adjacent unless some
    phi(q^j) = p - 1 with j >= 2) and cross-checked against the direct
    class computation.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if p % 4 != 3:
        raise ValueError("criterion applies to p = 3 mod 4 only")
    witnesses = dict(phi_prime_power_primes(p))
    predicted = p not in witnesses
    direct = certify_consecutive(2 * p, p).consecutive
    if predicted != direct:
        raise AssertionError("prime-power criterion disagrees with class computation")
    return predicted
