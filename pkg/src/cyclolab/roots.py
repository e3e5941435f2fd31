"""Certified root location for difference polynomials.

Real roots are bracketed by exact rational sign changes and counted by
Sturm chains built from a primitive pseudo-remainder sequence; no real
verdict depends on floating point.  Complex roots come from a
simultaneous Aberth-Ehrlich iteration at extended precision, then every
floating artifact is re-certified exactly: Weierstrass inclusion disks,
residuals and moduli are all evaluated in rational arithmetic.
"""
from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath as mp
import numpy as np

from .certified import (
    BigFloat,
    ZERO,
    decimal_in_interval,
    from_interval,
    sqrt_interval,
)
from .polycore import (
    IntPoly,
    _content,
    _divmod_exact,
    _eval_int_scaled,
    _trim,
    cyclotomic,
    difference,
    eval_rational,
)

KNOWN_WINDOW_EXCEPTION = ((2, 6), Fraction(2))  # the single sanctioned root at 2

WINDOW_REGIONS = ("(-inf,-2]", "[-1/2,0)", "(0,1/2]", "[2,inf)")


class RootConvergenceError(RuntimeError):
    """Simultaneous iteration failed to certify within its budget."""


# ---------------------------------------------------------------------------
# pseudo-remainder sequences, gcd, squarefree structure (list-level)


def _derivative_list(cs):
    return [i * c for i, c in enumerate(cs)][1:]


def _primitive(cs):
    g = _content(cs)
    out = [c // g for c in cs] if g > 1 else list(cs)
    return out


def _pseudo_rem_even(a, b):
    # remainder of a by b premultiplied by an even power >= deg a - deg b + 1
    # of lc(b): every inner division is then exact and the result is a
    # positive multiple of the true remainder
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    k = len(a) - db
    if k % 2 == 1:
        k += 1
    m = lb ** k
    a = [c * m for c in a]
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db]
        if c:
            q = c // lb
            for j in range(db):
                if b[j]:
                    a[i + j] -= q * b[j]
            a[i + db] = 0
    return _trim(a)


def _sturm_chain(cs):
    # primitive PRS of (p, p'); every element is a positive multiple of the
    # textbook Sturm element, so variation counts are exactly correct
    chain = [_primitive(list(cs))]
    d = _trim(_primitive(_derivative_list(cs)))
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _pseudo_rem_even(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in _primitive(r)])
    return chain


def _gcd_list(a, b):
    a = _trim(_primitive(list(a)))
    b = _trim(_primitive(list(b)))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _pseudo_rem_even(a, b)
        a, b = b, (_primitive(r) if r else [])
    if b:
        return [1]  # nonzero constant remainder: coprime
    g = a
    if g[-1] < 0:
        g = [-c for c in g]
    return g


def _squarefree_list(cs):
    cs = _primitive(list(cs))
    if len(cs) <= 1:
        return cs
    g = _gcd_list(cs, _derivative_list(cs))
    if len(g) > 1:
        q, r = _divmod_exact(cs, g)
        if r:
            raise AssertionError("squarefree reduction must divide exactly")
        return _primitive(q)
    return cs


def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive polynomial with the same distinct roots as p."""
    return IntPoly(_squarefree_list(list(p.coeffs)))


def yun_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Squarefree factors of p paired with their multiplicities."""
    cs = _primitive(list(p.coeffs))
    if len(cs) <= 1:
        return []
    g = _gcd_list(cs, _derivative_list(cs))
    if len(g) <= 1:
        return [(IntPoly(cs), 1)]
    w, r = _divmod_exact(cs, g)
    if r:
        raise AssertionError("gcd must divide")
    y, r = _divmod_exact(_derivative_list(cs), g)
    if r:
        raise AssertionError("gcd must divide the derivative")
    out = []
    i = 1
    z = _sub_list(y, _derivative_list(w))
    while len(w) > 1:
        gi = _gcd_list(w, z) if z else _primitive(w)
        if len(gi) > 1:
            out.append((IntPoly(gi), i))
            w, r1 = _divmod_exact(w, gi)
            y, r2 = _divmod_exact(z, gi)
            if r1 or r2:
                raise AssertionError("multiplicity factor must divide exactly")
        else:
            y = z
        z = _sub_list(y, _derivative_list(w))
        i += 1
    return out


def _sub_list(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


# ---------------------------------------------------------------------------
# variation counts


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain, a: int, b: int) -> int:
    # sign variations of the chain at the rational point a/b (b >= 1)
    last = 0
    var = 0
    for cs in chain:
        s = _sign(_eval_int_scaled(cs, a, b))
        if s:
            if last and s != last:
                var += 1
            last = s
    return var


def _variations_at_infinity(chain, negative: bool) -> int:
    last = 0
    var = 0
    for cs in chain:
        s = _sign(cs[-1])
        if negative and (len(cs) - 1) % 2 == 1:
            s = -s
        if s:
            if last and s != last:
                var += 1
            last = s
    return var


def _strip_root_at(cs, a: int, b: int):
    # divide out (b x - a) while it is an exact factor
    hit = False
    while len(cs) > 1 and _eval_int_scaled(cs, a, b) == 0:
        cs, r = _divmod_exact(cs, [-a, b])
        if r:
            raise AssertionError("claimed root must divide exactly")
        hit = True
    return _primitive(cs), hit


def sturm_count(p: IntPoly, lo: Fraction | None, hi: Fraction | None) -> int:
    """Exact number of distinct real roots of p in (lo, hi].

    ``None`` endpoints mean -infinity / +infinity.  The square part of p
    is removed first; endpoints that happen to be roots are divided out
    exactly and re-accounted, so the count is correct in every case.
    """
    if p.is_zero():
        raise ValueError("sturm_count is undefined for the zero polynomial")
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("sturm_count requires lo < hi")
    cs = _squarefree_list(list(p.coeffs))
    if len(cs) <= 1:
        return 0
    hi_root = False
    if lo is not None:
        lo = Fraction(lo)
        cs, _ = _strip_root_at(cs, lo.numerator, lo.denominator)
    if hi is not None and len(cs) > 1:
        hi = Fraction(hi)
        cs, hi_root = _strip_root_at(cs, hi.numerator, hi.denominator)
    extra = 1 if hi_root else 0
    if len(cs) <= 1:
        return extra
    chain = _sturm_chain(cs)
    va = (
        _variations_at_infinity(chain, True)
        if lo is None
        else _variations_at(chain, lo.numerator, lo.denominator)
    )
    vb = (
        _variations_at_infinity(chain, False)
        if hi is None
        else _variations_at(chain, hi.numerator, hi.denominator)
    )
    return va - vb + extra


# ---------------------------------------------------------------------------
# isolation


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval certified to contain exactly one root, with endpoint signs."""

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval must have lo < hi")
        if self.sign_lo == 0 or self.sign_hi == 0:
            raise ValueError("endpoint signs must be nonzero")


def _cauchy_bound(cs) -> int:
    lead = abs(cs[-1])
    mx = max(abs(c) for c in cs)
    return 1 + (mx + lead - 1) // lead


def _sign_at(cs, x: Fraction) -> int:
    return _sign(_eval_int_scaled(cs, x.numerator, x.denominator))


def _isolate_bisection(cs, chain) -> list[tuple[Fraction, Fraction]]:
    B = _cauchy_bound(cs)
    lo, hi = Fraction(-B), Fraction(B)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(a: Fraction, b: Fraction, va: int, vb: int) -> None:
        count = va - vb
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        if _sign_at(cs, mid) == 0:
            # exact root at the midpoint; fence it off with a clean gap
            delta = (b - a) / 4
            while True:
                l, r = mid - delta, mid + delta
                if (
                    _sign_at(cs, l) != 0
                    and _sign_at(cs, r) != 0
                    and _variations_at(chain, l.numerator, l.denominator)
                    - _variations_at(chain, r.numerator, r.denominator)
                    == 1
                ):
                    break
                delta /= 2
            out.append((l, r))
            vl = _variations_at(chain, l.numerator, l.denominator)
            vr = _variations_at(chain, r.numerator, r.denominator)
            recurse(a, l, va, vl)
            recurse(r, b, vr, vb)
            return
        vm = _variations_at(chain, mid.numerator, mid.denominator)
        recurse(a, mid, va, vm)
        recurse(mid, b, vm, vb)

    va = _variations_at(chain, lo.numerator, lo.denominator)
    vb = _variations_at(chain, hi.numerator, hi.denominator)
    recurse(lo, hi, va, vb)
    return sorted(out)


def _float_seeds(cs) -> list[float]:
    # double-precision root estimates for seeding; scaled to avoid overflow
    mx = max(abs(c) for c in cs)
    arr = np.array([c / mx for c in reversed(cs)], dtype=float)
    try:
        roots = np.roots(arr)
    except Exception:
        return []
    return sorted(float(r.real) for r in roots if abs(r.imag) < 1e-6)


def _isolate_seeded(cs, chain) -> list[tuple[Fraction, Fraction]] | None:
    # candidate brackets around double-precision seeds, certified by exact
    # sign changes; completeness confirmed by one global Sturm count
    B = _cauchy_bound(cs)
    total = _variations_at(chain, -B, 1) - _variations_at(chain, B, 1)
    if total == 0:
        return []
    seeds = [s for s in _float_seeds(cs) if -B < s < B]
    brackets: list[tuple[Fraction, Fraction]] = []
    used_hi = Fraction(-B)
    for s in seeds:
        w = Fraction(1, 1 << 24)
        a = Fraction(s).limit_denominator(1 << 40) - w
        b = a + 2 * w
        ok = False
        for _ in range(40):
            a2, b2 = max(a, used_hi), min(b, Fraction(B))
            if a2 < b2 and _sign_at(cs, a2) and _sign_at(cs, b2) and _sign_at(cs, a2) != _sign_at(cs, b2):
                a, b = a2, b2
                ok = True
                break
            w *= 2
            a -= w
            b += w
            if b - a > 1:
                break
        if ok:
            # shrink until the bracket certifies exactly one root
            va = _variations_at(chain, a.numerator, a.denominator)
            vb = _variations_at(chain, b.numerator, b.denominator)
            if va - vb != 1:
                return None
            brackets.append((a, b))
            used_hi = b
    if len(brackets) != total:
        return None
    return brackets


def isolate_real_roots(p: IntPoly) -> list[IsolatingInterval]:
    """Disjoint sign-change intervals, one per distinct real root of p.

    Multiple roots are handled by squarefree reduction first.  High-degree
    inputs are seeded from double-precision estimates and then certified
    exactly; on any mismatch the exact bisection route decides.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    cs = _squarefree_list(list(p.coeffs))
    if len(cs) <= 1:
        return []
    chain = _sturm_chain(cs)
    pairs = None
    if len(cs) - 1 > 128:
        pairs = _isolate_seeded(cs, chain)
    if pairs is None:
        pairs = _isolate_bisection(cs, chain)
    out = []
    for a, b in pairs:
        sa, sb = _sign_at(cs, a), _sign_at(cs, b)
        if sa == 0 or sb == 0 or sa == sb:
            raise AssertionError("isolating interval lost its sign change")
        out.append(IsolatingInterval(a, b, sa, sb))
    return out


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    # the rational with smallest denominator in [lo, hi] (Stern-Brocot walk)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    inner = _simplest_in(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def refine_root(p: IntPoly, iv: IsolatingInterval, digits: int) -> BigFloat:
    """Narrow a certified interval below 10^-digits by exact bisection.

    The result rounds stably at ``digits`` fractional digits.  A rational
    root is recovered exactly (error bound zero): the simplest rational in
    the shrinking interval is probed periodically and must eventually hit
    any rational root.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    cs = list(p.coeffs)  # the interval certifies p's own signs
    lo, hi, slo = iv.lo, iv.hi, iv.sign_lo
    target = Fraction(1, 10 ** digits)
    prec = max(24, int(digits * 3.33) + 16)
    step = 0
    while True:
        if step % 4 == 0:
            cand = _simplest_in(lo, hi)
            if lo < cand < hi and _sign_at(cs, cand) == 0:
                return BigFloat(cand, prec, ZERO)
        if hi - lo < target and decimal_in_interval(lo, hi, digits) is not None:
            return from_interval(lo, hi, prec)
        mid = (lo + hi) / 2
        sm = _sign_at(cs, mid)
        if sm == 0:
            return BigFloat(mid, prec, ZERO)
        if sm == slo:
            lo = mid
        else:
            hi = mid
        step += 1


# ---------------------------------------------------------------------------
# root records and coincidence scans


@dataclass(frozen=True)
class RootRecord:
    """One certified root of a named polynomial."""

    poly_id: object
    kind: str  # "real" | "complex"
    value: object  # BigFloat, or (BigFloat, BigFloat) for complex
    modulus: BigFloat
    digits: int
    residual: BigFloat
    multiplicity: int = 1


@dataclass(frozen=True)
class CoincidenceRecord:
    """All certified roots of Phi_m - Phi_n requested by a scan."""

    m: int
    n: int
    roots: tuple[RootRecord, ...]
    max_abs_real: BigFloat | None = None
    window_violations: tuple[int, ...] = ()  # indexes into roots


def _abs_interval(v: BigFloat) -> tuple[Fraction, Fraction]:
    lo, hi = v.lo, v.hi
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return ZERO, max(-lo, hi)


def _real_root_record(poly_id, p: IntPoly, iv: IsolatingInterval, digits: int, mult: int) -> RootRecord:
    # residuals are taken against the squarefree factor that carries the root
    val = refine_root(p, iv, digits)
    alo, ahi = _abs_interval(val)
    if val.error_bound == 0:
        res = abs(eval_rational(p, val.value))
    else:
        res = max(abs(eval_rational(p, val.lo)), abs(eval_rational(p, val.hi)))
    return RootRecord(
        poly_id=poly_id,
        kind="real",
        value=val,
        modulus=from_interval(alo, ahi, val.precision_bits),
        digits=digits,
        residual=BigFloat(Fraction(res), val.precision_bits, ZERO),
        multiplicity=mult,
    )


def real_coincidence_roots(m: int, n: int, digits: int = 15) -> CoincidenceRecord:
    """All real roots of Phi_m - Phi_n, refined and window-checked.

    Any nonzero root with |x| <= 1/2 or |x| >= 2 is a window violation
    unless it is the known exception (pair {2,6}, root exactly 2).
    """
    if m == n:
        raise ValueError("real_coincidence_roots requires m != n")
    a, b = min(m, n), max(m, n)
    d = difference(a, b)
    records: list[RootRecord] = []
    if d.degree >= 1:
        for factor, mult in yun_decomposition(d):
            for iv in isolate_real_roots(factor):
                records.append(_real_root_record((a, b), factor, iv, digits, mult))
    records.sort(key=lambda r: r.value.value)
    max_abs = None
    violations = []
    for idx, rec in enumerate(records):
        if rec.value.value == 0:
            continue
        if _is_window_exception(a, b, rec):
            continue
        lo, hi = _abs_interval(rec.value)
        if not (Fraction(1, 2) < lo and hi < 2):
            violations.append(idx)
        if max_abs is None or hi > max_abs.hi:
            max_abs = rec.modulus
    return CoincidenceRecord(
        m=a,
        n=b,
        roots=tuple(records),
        max_abs_real=max_abs,
        window_violations=tuple(violations),
    )


def _is_window_exception(m: int, n: int, rec: RootRecord) -> bool:
    return (
        (m, n) == KNOWN_WINDOW_EXCEPTION[0]
        and rec.value.error_bound == 0
        and rec.value.value == KNOWN_WINDOW_EXCEPTION[1]
    )


# window counting (cheap: no isolation, just chain evaluations)


def window_counts(m: int, n: int) -> tuple[tuple[int, int, int, int], bool]:
    """Exact root counts on (-inf,-2], [-1/2,0), (0,1/2], [2,inf) for Phi_m - Phi_n.

    Also reports whether a root sits exactly at 2 (the sanctioned
    exception for the pair {2,6}).
    """
    d = difference(m, n)
    if d.degree < 1:
        return (0, 0, 0, 0), False
    cs = _squarefree_list(list(d.coeffs))
    flags = {}
    for key, (a, b) in (("-2", (-2, 1)), ("-1/2", (-1, 2)), ("0", (0, 1)), ("1/2", (1, 2)), ("2", (2, 1))):
        cs, hit = _strip_root_at(cs, a, b)
        flags[key] = hit
    if len(cs) > 1:
        chain = _sturm_chain(cs)
        v_ninf = _variations_at_infinity(chain, True)
        v_pinf = _variations_at_infinity(chain, False)
        v = {key: _variations_at(chain, a, b) for key, (a, b) in
             (("-2", (-2, 1)), ("-1/2", (-1, 2)), ("0", (0, 1)), ("1/2", (1, 2)), ("2", (2, 1)))}
    else:
        v_ninf = v_pinf = 0
        v = {key: 0 for key in ("-2", "-1/2", "0", "1/2", "2")}
    counts = (
        (v_ninf - v["-2"]) + flags["-2"],
        (v["-1/2"] - v["0"]) + flags["-1/2"],
        (v["0"] - v["1/2"]) + flags["1/2"],
        (v["2"] - v_pinf) + flags["2"],
    )
    return counts, flags["2"]


@dataclass(frozen=True)
class WindowReport:
    """Outcome of the outer-window certification over all pairs up to M."""

    max_index: int
    pairs_checked: int
    violations: tuple[tuple[int, int, str, int], ...]
    exception_found: bool

    @property
    def holds(self) -> bool:
        return not self.violations


def _window_worker(pair):
    m, n = pair
    counts, at_two = window_counts(m, n)
    return m, n, counts, at_two


def effective_jobs(jobs: int | None) -> int:
    env = os.environ.get("CYCLOLAB_JOBS")
    if env:
        return max(1, int(env))
    if jobs is not None:
        return max(1, jobs)
    return os.cpu_count() or 1


def _parallel_map(fn, items, jobs: int | None):
    items = list(items)
    j = effective_jobs(jobs)
    if j <= 1 or len(items) < 8:
        return [fn(it) for it in items]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return [fn(it) for it in items]
    with ctx.Pool(j) as pool:
        chunk = max(1, len(items) // (j * 8))
        return pool.map(fn, items, chunksize=chunk)


def _warm_cyclotomic_cache(M: int) -> None:
    for i in range(1, M + 1):
        cyclotomic(i)


def verify_root_window(M: int, jobs: int | None = None) -> WindowReport:
    """Certify, pair by pair up to M, that no nonzero real coincidence
    escapes 1/2 < |x| < 2 except the known root of the pair {2,6} at 2."""
    if M < 2:
        raise ValueError("verify_root_window requires M >= 2")
    _warm_cyclotomic_cache(M)
    pairs = [(m, n) for m in range(1, M + 1) for n in range(m + 1, M + 1)]
    results = _parallel_map(_window_worker, pairs, jobs)
    violations = []
    exception_found = False
    for m, n, counts, at_two in results:
        for region, c in zip(WINDOW_REGIONS, counts):
            if c == 0:
                continue
            if region == "[2,inf)" and (m, n) == KNOWN_WINDOW_EXCEPTION[0] and at_two and c == 1:
                exception_found = True
                continue
            violations.append((m, n, region, c))
    return WindowReport(
        max_index=M,
        pairs_checked=len(pairs),
        violations=tuple(violations),
        exception_found=exception_found,
    )


@dataclass(frozen=True)
class RealScanReport:
    """Full real scan: certified roots for every pair plus window summary."""

    max_index: int
    records: tuple[CoincidenceRecord, ...]
    window: WindowReport
    max_nonzero_abs: BigFloat | None
    min_nonzero_abs: BigFloat | None


def _real_scan_worker(args):
    m, n, digits = args
    return real_coincidence_roots(m, n, digits)


def scan_real(M: int, digits: int = 15, jobs: int | None = None) -> RealScanReport:
    """Roots of every difference with indices up to M, certified and refined."""
    if M < 2:
        raise ValueError("scan_real requires M >= 2")
    _warm_cyclotomic_cache(M)
    window = verify_root_window(M, jobs)
    pairs = [(m, n, digits) for m in range(1, M + 1) for n in range(m + 1, M + 1)]
    records = tuple(_parallel_map(_real_scan_worker, pairs, jobs))
    max_abs = min_abs = None
    for rec in records:
        for root in rec.roots:
            if root.value.value == 0:
                continue
            if _is_window_exception(rec.m, rec.n, root):
                continue
            if max_abs is None or root.modulus.value > max_abs.value:
                max_abs = root.modulus
            if min_abs is None or root.modulus.value < min_abs.value:
                min_abs = root.modulus
    return RealScanReport(
        max_index=M,
        records=records,
        window=window,
        max_nonzero_abs=max_abs,
        min_nonzero_abs=min_abs,
    )


# ---------------------------------------------------------------------------
# complex roots: Aberth-Ehrlich iteration plus exact certification


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return ZERO
    v = Fraction(man) * (Fraction(1 << exp) if exp >= 0 else Fraction(1, 1 << -exp))
    return -v if sign else v


def _aberth_sweeps(cs, prec_bits: int, budget: int):
    deg = len(cs) - 1
    mx = max(abs(c) for c in cs)
    arr = np.array([c / mx for c in reversed(cs)], dtype=float)
    try:
        seeds = [complex(z) for z in np.roots(arr)]
    except Exception:
        seeds = []
    if len(seeds) != deg:
        # fall back to a circle of radius near the root bound
        R = 1.0 + max(abs(c) / abs(cs[-1]) for c in cs)
        seeds = [complex(R * np.exp(2j * np.pi * (i + 0.25) / deg)) for i in range(deg)]
    spread = []
    for z in seeds:
        while any(abs(z - w) < 1e-9 for w in spread):
            z += 1e-6 + 1e-6j
        spread.append(z)

    with mp.workprec(prec_bits):
        zs = [mp.mpc(z.real, z.imag) for z in spread]
        mcs = [mp.mpf(c) for c in cs]
        dcs = [mp.mpf(i * c) for i, c in enumerate(cs)][1:]
        tol = mp.mpf(2) ** (-(prec_bits * 3) // 4)
        for _ in range(budget):
            moved = mp.mpf(0)
            for i in range(deg):
                z = zs[i]
                pv = mcs[-1]
                for c in reversed(mcs[:-1]):
                    pv = pv * z + c
                if pv == 0:
                    continue
                dv = dcs[-1]
                for c in reversed(dcs[:-1]):
                    dv = dv * z + c
                if dv == 0:
                    zs[i] = z + tol
                    continue
                newt = pv / dv
                ssum = mp.mpc(0)
                for j in range(deg):
                    if j != i:
                        ssum += 1 / (z - zs[j])
                den = 1 - newt * ssum
                if den == 0:
                    continue
                corr = newt / den
                zs[i] = z - corr
                rel = abs(corr) / max(1, abs(z))
                if rel > moved:
                    moved = rel
            if moved < tol:
                break
        return zs


def _certified_disks(cs, precision_bits: int, budget: int = 200):
    """Aberth centers with rigorous per-root inclusion radii.

    radius_i = deg * |p(z_i)| / (|lc| * prod |z_i - z_j|): the numerator is
    evaluated exactly at the dyadic center, the denominator in floating
    point with a proven relative-error margin, so every radius is a true
    upper bound and the union-of-disks theorem applies.  With pairwise
    disjoint disks each one holds exactly one root.
    """
    deg = len(cs) - 1
    lead = abs(cs[-1])
    for mult in (2, 4):
        P = precision_bits * mult
        zs = _aberth_sweeps(cs, P, budget)
        # round centers to a uniform dyadic grid; all certification below
        # happens at the rounded points
        keep = precision_bits + 48
        pts = []
        for z in zs:
            with mp.workprec(keep):
                zr = +z.real
                zi = +z.imag
            pts.append((_mpf_to_fraction(zr), _mpf_to_fraction(zi)))
        with mp.workprec(P):
            mpts = [mp.mpc(mp.mpf(re.numerator) / mp.mpf(re.denominator),
                           mp.mpf(im.numerator) / mp.mpf(im.denominator))
                    for re, im in pts]
            margin = 1 - Fraction(1, 1 << max(32, P - 8 * deg.bit_length() - 16))
            out = []
            coincident = False
            for i, (re, im) in enumerate(pts):
                prod = mp.mpf(1)
                for j in range(deg):
                    if j != i:
                        prod *= abs(mpts[i] - mpts[j])
                if prod == 0:
                    coincident = True
                    break
                res2 = _residual_sq(cs, re, im)
                if res2 == 0:
                    rad = Fraction(0)  # exact dyadic root
                else:
                    num_hi = sqrt_interval(res2, P)[1]
                    den_lo = _mpf_to_fraction(prod) * margin * lead
                    rad = deg * num_hi / den_lo
                out.append((re, im, rad))
        if coincident:
            continue
        ok = True
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                dx = out[i][0] - out[j][0]
                dy = out[i][1] - out[j][1]
                rr = out[i][2] + out[j][2]
                if dx * dx + dy * dy <= rr * rr:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return out
    raise RootConvergenceError("simultaneous iteration failed to separate all roots")


def _residual_sq(cs, re: Fraction, im: Fraction) -> Fraction:
    vr, vi = Fraction(0), Fraction(0)
    for c in cs[::-1]:
        vr, vi = vr * re - vi * im, vr * im + vi * re
        vr += c
    return vr * vr + vi * vi


def complex_roots(p: IntPoly, precision_bits: int = 256) -> list[RootRecord]:
    """All complex roots by Aberth-Ehrlich simultaneous iteration.

    Each root carries a Weierstrass inclusion radius (every disk holds
    exactly one root), an exactly-evaluated residual, and a certified
    modulus.  Root count equals the degree, with multiplicity; multiple
    roots are resolved through the squarefree decomposition.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("complex_roots requires a nonconstant polynomial")
    records: list[RootRecord] = []
    for factor, mult in yun_decomposition(p):
        if factor.degree < 1:
            continue
        cs = list(factor.coeffs)
        for re, im, rad in _certified_disks(cs, precision_bits):
            # classify realness rigorously: a disk clear of the axis is
            # certifiably nonreal; otherwise look for a sign change (or an
            # exact hit) on the real slice through the disk
            kind = "complex"
            value: object
            if abs(im) <= rad:
                if _eval_int_scaled(cs, re.numerator, re.denominator) == 0:
                    kind = "real"
                    rad = ZERO  # the disk's unique root is exactly re
                else:
                    bracket_lo, bracket_hi = re - rad, re + rad
                    slo = _sign(_eval_int_scaled(cs, bracket_lo.numerator, bracket_lo.denominator))
                    shi = _sign(_eval_int_scaled(cs, bracket_hi.numerator, bracket_hi.denominator))
                    if slo != 0 and shi != 0 and slo != shi:
                        kind = "real"
            prec = precision_bits
            if kind == "real":
                value = from_interval(re - rad, re + rad, prec)
                m2 = re * re
            else:
                value = (
                    BigFloat(re, prec, rad),
                    BigFloat(im, prec, rad),
                )
                m2 = re * re + im * im
            mlo, mhi = sqrt_interval(m2, prec)
            modulus = from_interval(max(ZERO, mlo - rad), mhi + rad, prec)
            res2 = _residual_sq(cs, re, im)
            rlo, rhi = sqrt_interval(res2, prec)
            dg = 0
            width = 2 * rad
            while width < Fraction(1, 10 ** (dg + 1)) and dg < precision_bits:
                dg += 1
            records.append(
                RootRecord(
                    poly_id=None,
                    kind=kind,
                    value=value,
                    modulus=modulus,
                    digits=dg,
                    residual=from_interval(rlo, rhi, prec),
                    multiplicity=mult,
                )
            )
    records.sort(key=_root_sort_key)
    return records


def _root_sort_key(rec: RootRecord):
    if rec.kind == "real":
        return (rec.value.value, ZERO)
    return (rec.value[0].value, rec.value[1].value)


# ---------------------------------------------------------------------------
# complex scans


SQRT2_SQ = Fraction(2)
INV_SQRT2_SQ = Fraction(1, 2)


@dataclass(frozen=True)
class ComplexScanReport:
    """Nonreal coincidence roots for all pairs up to M, with modulus data."""

    max_index: int
    coprime_only: bool
    records: tuple[CoincidenceRecord, ...]
    histogram: tuple[tuple[str, int], ...]
    boundary_upper: tuple[tuple[int, int], ...]  # pairs attaining modulus sqrt(2) exactly
    outside: tuple[tuple[int, int, str], ...]  # certified violations of the modulus range


def _sqrt2_quadratic_roots(d: IntPoly) -> list[tuple[Fraction, Fraction]]:
    # exact roots of modulus sqrt(2): factors x^2 + a x + 2 with a^2 < 8
    out = []
    for a in (-2, -1, 0, 1, 2):
        quad = IntPoly([2, a, 1])
        try:
            d.div_exact(quad)
        except Exception:
            continue
        re = Fraction(-a, 2)
        im2 = 2 - re * re
        lo, hi = sqrt_interval(im2, 128)
        out.append((re, (lo + hi) / 2))
    return out


def _complex_scan_worker(args):
    m, n, precision_bits = args
    d = difference(m, n)
    if d.degree < 1:
        return CoincidenceRecord(m=m, n=n, roots=()), [], []
    roots = complex_roots(d, precision_bits)
    nonreal = tuple(r for r in roots if r.kind == "complex")
    boundary = []
    outside = []
    quad_roots = None
    for r in nonreal:
        m2lo = r.modulus.lo ** 2
        m2hi = r.modulus.hi ** 2
        if m2lo > INV_SQRT2_SQ and m2hi < SQRT2_SQ:
            continue
        if m2lo <= SQRT2_SQ <= m2hi:
            if quad_roots is None:
                quad_roots = _sqrt2_quadratic_roots(d)
            re, im = r.value
            hit = any(
                abs(re.value - qr) <= re.error_bound + Fraction(1, 1 << 64)
                and abs(abs(im.value) - qi) <= im.error_bound + Fraction(1, 1 << 64)
                for qr, qi in quad_roots
            )
            if hit:
                boundary.append((m, n))
                continue
        if m2hi <= INV_SQRT2_SQ:
            outside.append((m, n, "at-or-below 1/sqrt(2)"))
        elif m2lo > SQRT2_SQ:
            outside.append((m, n, "above sqrt(2)"))
        else:
            outside.append((m, n, "unresolved boundary"))
    rec = CoincidenceRecord(m=m, n=n, roots=nonreal)
    return rec, boundary, outside


def scan_complex(
    M: int,
    coprime_only: bool = False,
    precision_bits: int = 256,
    jobs: int | None = None,
) -> ComplexScanReport:
    """Nonreal roots of every difference up to M with certified moduli.

    Roots whose modulus interval touches sqrt(2) are confirmed (or not)
    by exact quadratic division; anything certifiably outside
    (1/sqrt2, sqrt2] is reported as a candidate counterexample.
    """
    if M < 2:
        raise ValueError("scan_complex requires M >= 2")
    _warm_cyclotomic_cache(M)
    pairs = [
        (m, n, precision_bits)
        for m in range(1, M + 1)
        for n in range(m + 1, M + 1)
        if not coprime_only or gcd(m, n) == 1
    ]
    results = _parallel_map(_complex_scan_worker, pairs, jobs)
    records = []
    boundary: list[tuple[int, int]] = []
    outside: list[tuple[int, int, str]] = []
    hist: dict[str, int] = {}
    for rec, b, o in results:
        records.append(rec)
        boundary.extend(b)
        outside.extend(o)
        for r in rec.roots:
            key = "%.2f" % (float(r.modulus.value) // 0.05 * 0.05)
            hist[key] = hist.get(key, 0) + 1
    return ComplexScanReport(
        max_index=M,
        coprime_only=coprime_only,
        records=tuple(records),
        histogram=tuple(sorted(hist.items())),
        boundary_upper=tuple(sorted(set(boundary))),
        outside=tuple(sorted(set(outside))),
    )


def quarter_lift_check(m: int, n: int, digits: int = 12) -> bool:
    """For odd m, n: every positive real root a of Phi_m - Phi_n lifts to
    i*sqrt(a) being a root of Phi_4m - Phi_4n, verified by a scaled
    residual below 10^-digits."""
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError("quarter_lift_check requires odd indices")
    if m == n:
        raise ValueError("quarter_lift_check requires m != n")
    d = difference(m, n)
    if d.degree < 1:
        return True
    lifted = difference(4 * m, 4 * n)
    work = digits + 8
    sf = squarefree_part(d)
    for iv in isolate_real_roots(d):
        if iv.hi <= 0:
            continue
        if iv.lo <= 0:
            # bracket straddles zero: its unique root is positive only if a
            # sign change survives on the right half
            if sf(Fraction(0)) == 0:
                continue  # the root is zero itself
            s0 = _sign_at(list(sf.coeffs), Fraction(0))
            if s0 == iv.sign_hi:
                continue  # unique root lies left of zero
            iv = IsolatingInterval(Fraction(0), iv.hi, s0, iv.sign_hi)
        val = refine_root(sf, iv, work)
        slo, shi = sqrt_interval(val.lo, int(work * 3.33) + 8)
        s = (slo + shi) / 2
        # evaluate the lifted difference at the purely imaginary point i*s
        vr, vi = Fraction(0), Fraction(0)
        for c in reversed(lifted.coeffs):
            vr, vi = -vi * s, vr * s
            vr += c
        res2 = vr * vr + vi * vi
        scale = Fraction(0)
        power = Fraction(1)
        for c in lifted.coeffs:
            scale += abs(c) * power
            power *= shi
        threshold = scale * Fraction(1, 10 ** digits)
        if res2 >= threshold * threshold:
            return False
    return True
