"""Primitive prime divisors of a^n - b^n and exhaustive coincidence checks
at rational points.

A prime divisor of a^n - b^n is primitive when it divides no earlier
a^k - b^k.  One always exists except in two classical situations: n = 2
with a + b a power of two, and (a, b, n) = (2, 1, 6).  Primitive primes
are found by factoring the much smaller homogeneous cyclotomic value at
(a, b) and testing multiplicative orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import divisors, factorize, profile
from .polycore import eval_homogeneous_cyclotomic

EXCEPTION_BANG_2_6 = "bang_2_6"
EXCEPTION_MERSENNE_N2 = "mersenne_n2"


@dataclass(frozen=True)
class PpdResult:
    """Primitive-prime-divisor outcome for (a, b, n)."""

    a: int
    b: int
    n: int
    prime: int | None
    exception: str | None

    def __post_init__(self):
        if (self.prime is None) == (self.exception is None):
            raise ValueError("exactly one of prime/exception must be set")


def primitive_prime_divisor(a: int, b: int, n: int) -> PpdResult:
    """A prime dividing a^n - b^n but no earlier a^k - b^k, or the tagged
    exceptional case.  Requires a > b >= 1, gcd(a, b) = 1, n >= 2."""
    if not a > b >= 1:
        raise ValueError("requires a > b >= 1")
    if gcd(a, b) != 1:
        raise ValueError("requires gcd(a, b) = 1")
    if n < 2:
        raise ValueError("requires n >= 2")
    value = abs(eval_homogeneous_cyclotomic(n, a, b))
    for p, _ in factorize(value).factors if value > 1 else ():
        if b % p == 0:
            continue
        # order of a * b^-1 mod p divides n since p | a^n - b^n
        binv = pow(b, -1, p)
        g = a * binv % p
        order = n
        for d in divisors(n):
            if pow(g, d, p) == 1:
                order = d
                break
        if order == n:
            return PpdResult(a=a, b=b, n=n, prime=p, exception=None)
    if n == 6 and (a, b) == (2, 1):
        return PpdResult(a=a, b=b, n=n, prime=None, exception=EXCEPTION_BANG_2_6)
    if n == 2 and (a + b) & (a + b - 1) == 0:
        return PpdResult(a=a, b=b, n=n, prime=None, exception=EXCEPTION_MERSENNE_N2)
    raise AssertionError(f"no primitive prime and no known exception for ({a},{b},{n})")


# ---------------------------------------------------------------------------
# exhaustive coincidence verification


@dataclass(frozen=True)
class IntegerCoincidenceReport:
    """Result of checking Phi_m(a) = Phi_n(a) over a full integer box."""

    a_max: int
    max_index: int
    pairs_checked: int
    coincidences: tuple[tuple[int, int, int], ...]  # (a, m, n) with m < n

    @property
    def holds(self) -> bool:
        return self.coincidences == ((2, 2, 6),)


def _collisions(values: dict[int, object]) -> list[tuple[int, int]]:
    seen: dict[object, int] = {}
    out = []
    for m in sorted(values):
        v = values[m]
        if v in seen:
            out.append((seen[v], m))
        else:
            seen[v] = m
    return out


def _negative_index_value(m: int, a: int, b: int = 1):
    # value of Phi_m at -a/b expressed through positive-argument data:
    # odd m >= 3 maps to index 2m, m = 2 mod 4 (m >= 6) to m/2, 4 | m to m.
    # m = 1 and m = 2 pick up a sign and stay separate.
    if m == 1:
        return ("neg", a + b)  # -(a+b)/b
    if m == 2:
        return ("neg2", a - b)  # (b-a)/b = -(a-b)/b
    if m % 2 == 1:
        return ("pos", 2 * m)
    if m % 4 == 2:
        return ("pos", m // 2)
    return ("pos", m)


def verify_integer_coincidences(a_max: int, M: int) -> IntegerCoincidenceReport:
    """Exhaustively compare Phi_m(a) for 2 <= a <= a_max and m < n <= M,
    covering negative arguments through the index transformations."""
    if a_max < 2 or M < 2:
        raise ValueError("requires a_max >= 2 and M >= 2")
    found: list[tuple[int, int, int]] = []
    pairs = 0
    for a in range(2, a_max + 1):
        values = {m: eval_homogeneous_cyclotomic(m, a, 1) for m in range(1, M + 1)}
        pairs += M * (M - 1) // 2
        for m, n in _collisions(values):
            found.append((a, m, n))
        # negative argument -a: reduce indices to positive-argument values
        neg_values: dict[int, object] = {}
        for m in range(1, M + 1):
            tag, idx = _negative_index_value(m, a)
            if tag == "pos":
                v = values.get(idx)
                if v is None:
                    v = eval_homogeneous_cyclotomic(idx, a, 1)
                neg_values[m] = ("v", v)
            else:
                neg_values[m] = (tag, idx)
        pairs += M * (M - 1) // 2
        for m, n in _collisions(neg_values):
            found.append((-a, m, n))
    return IntegerCoincidenceReport(
        a_max=a_max, max_index=M, pairs_checked=pairs, coincidences=tuple(sorted(found))
    )


@dataclass(frozen=True)
class RationalCoincidenceReport:
    """Result over all reduced non-integer rationals of bounded height."""

    height: int
    max_index: int
    points_checked: int
    coincidences: tuple[tuple[str, int, int], ...]  # (point, m, n)

    @property
    def holds(self) -> bool:
        return not self.coincidences


def verify_rational_coincidences(H: int, M: int) -> RationalCoincidenceReport:
    """For every reduced a/b with 0 < b < a <= H, b >= 2, and m < n <= M,
    confirm the homogeneous values cannot agree (both signs of a/b).

    Comparison clears denominators to a common weight so it is exact
    integer equality: Phi_m(a,b) * b^(K - phi(m)) against the same for n.
    """
    if H < 2 or M < 2:
        raise ValueError("requires H >= 2 and M >= 2")
    found: list[tuple[str, int, int]] = []
    points = 0
    phis = {m: profile(m).phi for m in range(1, 2 * M + 1)}
    K = max(phis[m] for m in range(1, 2 * M + 1))
    for a in range(3, H + 1):
        for b in range(2, a):
            if gcd(a, b) != 1:
                continue
            points += 1
            weighted = {
                m: eval_homogeneous_cyclotomic(m, a, b) * b ** (K - phis[m])
                for m in range(1, 2 * M + 1)
            }
            pos = {m: weighted[m] for m in range(1, M + 1)}
            for m, n in _collisions(pos):
                found.append((f"{a}/{b}", m, n))
            neg: dict[int, object] = {}
            for m in range(1, M + 1):
                tag, idx = _negative_index_value(m, a, b)
                neg[m] = ("v", weighted[idx]) if tag == "pos" else (tag, idx)
            for m, n in _collisions(neg):
                found.append((f"-{a}/{b}", m, n))
    return RationalCoincidenceReport(
        height=H, max_index=M, points_checked=points, coincidences=tuple(sorted(found))
    )
