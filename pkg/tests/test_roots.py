from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclolab.polycore import IntPoly, cyclotomic, difference, eval_rational
from cyclolab.roots import (
    complex_roots,
    isolate_real_roots,
    quarter_lift_check,
    real_coincidence_roots,
    refine_root,
    scan_complex,
    scan_real,
    squarefree_part,
    sturm_count,
    verify_root_window,
    window_counts,
    yun_decomposition,
)

HALF = Fraction(1, 2)


def sign_sample_count(p, lo, hi, step=Fraction(1, 64)):
    # independent oracle: count sign changes on a fine grid
    prev = None
    count = 0
    x = lo
    while x <= hi:
        v = eval_rational(p, x)
        s = (v > 0) - (v < 0)
        if s != 0:
            if prev is not None and s != prev:
                count += 1
            prev = s
        x += step
    return count


class TestSturmCount:
    def test_quadratic(self):
        assert sturm_count(difference(2, 6), HALF, Fraction(5, 2)) == 1

    def test_constant_difference(self):
        assert sturm_count(difference(1, 2), Fraction(-10), Fraction(10)) == 0

    def test_fifteen_seven(self):
        d = difference(15, 7)
        expected = sign_sample_count(d, Fraction(1), Fraction(2))
        assert expected == 1
        assert sturm_count(d, Fraction(1), Fraction(2)) == 1

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(IntPoly([]), Fraction(0), Fraction(1))

    def test_endpoint_roots(self):
        p = IntPoly([0, -2, 1]) * IntPoly([-1, 1])  # roots 0, 1, 2
        assert sturm_count(p, Fraction(0), Fraction(2)) == 2  # (0, 2] holds 1 and 2
        assert sturm_count(p, Fraction(-1), Fraction(2)) == 3

    def test_multiple_roots_counted_once(self):
        p = IntPoly([-1, 1]) * IntPoly([-1, 1]) * IntPoly([0, 1])
        assert sturm_count(p, Fraction(-1), Fraction(2)) == 2

    def test_unbounded(self):
        assert sturm_count(difference(2, 6), None, None) == 2
        assert sturm_count(difference(2, 6), Fraction(2), None) == 0
        assert sturm_count(difference(2, 6), None, Fraction(0)) == 1

    @given(st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=9))
    def test_against_sampling_oracle(self, coeffs):
        p = IntPoly(coeffs)
        if p.is_zero() or p.degree < 1:
            return
        # grid sampling lower-bounds the true count; Sturm must dominate it
        lo, hi = Fraction(-3), Fraction(3)
        assert sturm_count(p, lo, hi) >= sign_sample_count(squarefree_part(p), lo, hi)


class TestIsolation:
    def test_quadratic_roots(self):
        ivs = isolate_real_roots(difference(2, 6))
        assert len(ivs) == 2
        assert ivs[0].lo < 0 < ivs[0].hi or ivs[0].lo <= 0 <= ivs[0].hi
        assert ivs[1].lo < 2 < ivs[1].hi or ivs[1].lo <= 2 <= ivs[1].hi

    def test_cubic_single_root(self):
        ivs = isolate_real_roots(IntPoly([1, 2, 1, 1]))
        assert len(ivs) == 1
        assert ivs[0].lo < Fraction(-56, 100) < ivs[0].hi

    def test_golden_pair(self):
        ivs = isolate_real_roots(IntPoly([-1, -1, 1]))
        vals = [refine_root(IntPoly([-1, -1, 1]), iv, 6).decimal(6) for iv in ivs]
        assert vals == ["-0.618034", "1.618034"]

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            isolate_real_roots(IntPoly([]))

    def test_signs_recorded(self):
        for iv in isolate_real_roots(difference(15, 7)):
            assert iv.sign_lo != iv.sign_hi

    @given(st.lists(st.integers(min_value=-5, max_value=5), min_size=2, max_size=10))
    def test_isolation_complete(self, coeffs):
        p = IntPoly(coeffs)
        if p.is_zero() or p.degree < 1:
            return
        ivs = isolate_real_roots(p)
        assert len(ivs) == sturm_count(p, None, None)
        for iv in ivs:
            assert sturm_count(p, iv.lo, iv.hi) == 1


class TestRefine:
    def test_known_near_miss(self):
        d = difference(209, 179)
        top = isolate_real_roots(d)[-1]
        assert refine_root(squarefree_part(d), top, 14).decimal(14) == "1.99975454398254"

    def test_527_479(self):
        d = difference(527, 479)
        top = isolate_real_roots(d)[-1]
        assert refine_root(squarefree_part(d), top, 14).decimal(14) == "1.99999618493891"

    def test_cubic_constant(self):
        p = IntPoly([1, 2, 1, 1])
        iv = isolate_real_roots(p)[0]
        assert refine_root(p, iv, 12).decimal(12) == "-0.569840290998"

    def test_exact_rational_root_detected(self):
        p = IntPoly([-2, 0, 1]) * IntPoly([-3, 2])  # roots +-sqrt(2), 3/2
        for iv in isolate_real_roots(p):
            v = refine_root(p, iv, 12)
            if iv.lo < Fraction(3, 2) < iv.hi:
                assert v.error_bound == 0 and v.value == Fraction(3, 2)


class TestCoincidenceRecords:
    def test_known_exception_pair(self):
        rec = real_coincidence_roots(2, 6, 12)
        vals = [(r.value.value, r.value.error_bound) for r in rec.roots]
        assert vals == [(0, 0), (2, 0)]

    def test_30_4_contains_sigma(self):
        rec = real_coincidence_roots(30, 4, 13)
        assert "0.5284555592772" in [r.value.decimal(13) for r in rec.roots]

    def test_3_9_contains_one(self):
        rec = real_coincidence_roots(3, 9, 10)
        exact = [r.value.value for r in rec.roots if r.value.error_bound == 0]
        assert 1 in exact

    def test_rejects_equal(self):
        with pytest.raises(ValueError):
            real_coincidence_roots(4, 4, 10)


class TestWindow:
    def test_exception_pair_counts(self):
        counts, at_two = window_counts(2, 6)
        assert counts == (0, 0, 0, 1) and at_two

    def test_multiple_root_pairs(self):
        assert window_counts(3, 17)[0] == (0, 0, 0, 0)
        assert window_counts(8, 16)[0] == (0, 0, 0, 0)

    def test_window_to_40(self):
        report = verify_root_window(40, jobs=2)
        assert report.holds and report.exception_found
        assert report.pairs_checked == 40 * 39 // 2

    def test_scan_real_small(self):
        rep = scan_real(10, digits=12, jobs=2)
        assert rep.window.holds
        # nothing lives in (0, 1/2]
        for rec in rep.records:
            for root in rec.roots:
                if root.value.error_bound == 0 and root.value.value == 0:
                    continue
                assert not (0 < root.value.value <= HALF)
        assert rep.max_nonzero_abs is not None and rep.max_nonzero_abs.value < 2


class TestComplexRoots:
    def test_pure_imaginary_pair(self):
        rs = complex_roots(difference(1, 3), 256)
        assert [r.kind for r in rs] == ["complex", "complex"]
        for r in rs:
            assert r.modulus.lo ** 2 <= 2 <= r.modulus.hi ** 2

    def test_quadratic_modulus_sqrt2(self):
        rs = complex_roots(difference(1, 4), 256)
        for r in rs:
            assert r.modulus.lo ** 2 <= 2 <= r.modulus.hi ** 2
        res = [float(r.value[0].value) for r in rs]
        assert res == [0.5, 0.5]

    def test_cyclotomic_four(self):
        rs = complex_roots(cyclotomic(4), 256)
        ims = sorted(float(r.value[1].value) for r in rs)
        assert ims == [-1.0, 1.0]
        assert all(r.residual.value == 0 for r in rs)  # exact dyadic roots

    def test_degree_conservation(self):
        for m, n in ((5, 6), (7, 9), (12, 15), (3, 20)):
            d = difference(m, n)
            rs = complex_roots(d, 128)
            assert sum(r.multiplicity for r in rs) == d.degree

    def test_residual_bound(self):
        bits = 192
        for m, n in ((5, 9), (8, 11)):
            d = difference(m, n)
            for r in complex_roots(d, bits):
                bound = (
                    Fraction(1, 2 ** (bits // 2))
                    * (1 + r.modulus.hi) ** d.degree
                    * d.max_abs_coeff()
                )
                assert r.residual.hi < bound

    def test_multiplicity_resolution(self):
        p = IntPoly([2, 0, 1]) * IntPoly([2, 0, 1]) * IntPoly([-1, 1])
        rs = complex_roots(p, 128)
        mults = sorted((r.kind, r.multiplicity) for r in rs)
        assert mults == [("complex", 2), ("complex", 2), ("real", 1)]

    def test_rejects_constant(self):
        with pytest.raises(ValueError):
            complex_roots(IntPoly([3]), 128)


class TestYun:
    def test_square_factor(self):
        p = IntPoly([-2, 0, 1]) * IntPoly([-2, 0, 1]) * IntPoly([-1, 1])
        decomp = {mult: f.coeffs for f, mult in yun_decomposition(p)}
        assert decomp[1] == (-1, 1)
        assert decomp[2] == (-2, 0, 1)

    def test_squarefree_passthrough(self):
        p = difference(15, 7)
        assert yun_decomposition(p) == [(squarefree_part(p), 1)]


class TestComplexScan:
    def test_tiny_scan_boundary(self):
        rep = scan_complex(5)
        assert rep.boundary_upper == ((1, 3), (1, 4), (1, 5))
        assert rep.outside == ()

    def test_no_nonreal_for_two(self):
        rep = scan_complex(2)
        assert all(not rec.roots for rec in rep.records)

    def test_lifted_pair_has_imaginary_root(self):
        # the positive real root 1 of the (3, 9) difference lifts to i
        # being a root of the (12, 36) difference
        rs = complex_roots(difference(12, 36), 192)
        hits = [
            r
            for r in rs
            if r.kind == "complex"
            and r.value[0].lo <= 0 <= r.value[0].hi
            and r.value[1].lo <= 1 <= r.value[1].hi
        ]
        assert len(hits) == 1
        assert hits[0].residual.value == 0  # i is an exact root


class TestQuarterLift:
    def test_fifteen_seven(self):
        assert quarter_lift_check(15, 7, 12)

    def test_three_nine(self):
        assert quarter_lift_check(3, 9, 12)

    def test_vacuous(self):
        assert quarter_lift_check(1, 3, 12)

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            quarter_lift_check(4, 7, 10)
