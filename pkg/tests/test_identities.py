"""The verification harness, including an unclamped reference expansion."""

import pytest

from qpl.errors import ParameterError
from qpl.figurate import ModularParams
from qpl.identities import (
    battery,
    compare_series,
    interior_grid,
    verify_berger,
    verify_boundary_half,
    verify_hermite,
    verify_specialized,
    verify_sylvester,
    verify_triple_product,
)
from qpl.series import QSeries, ZLaurentSeries, triple_pochhammer


def reference_triple_product(q_order: int, factors: int) -> ZLaurentSeries:
    """Unclamped product of the first `factors` triples via general Laurent mults."""
    acc = ZLaurentSeries.one(q_order)
    for m in range(1, factors + 1):
        one_minus = QSeries.one(q_order)
        if m <= q_order:
            one_minus = one_minus - QSeries.monomial(m, q_order)
        acc = acc * ZLaurentSeries.constant(one_minus)
        acc = acc * ZLaurentSeries.qz_binomial(1, m, -1, q_order)
        acc = acc * ZLaurentSeries.qz_binomial(1, m - 1, 1, q_order)
    return acc


class TestTripleProduct:
    def test_passes_modest_window(self):
        report = verify_triple_product(50, 8)
        assert report.passed
        assert report.order == 50
        assert report.parameters == {"z_window": 8}

    def test_prefix_property(self):
        assert verify_triple_product(50, 8).passed
        assert verify_triple_product(25, 8).passed
        assert verify_triple_product(50, 4).passed

    def test_unclamped_reference_agrees(self):
        # independent route: full-support Laurent products, no window clamping
        q_order, j_win = 16, 4
        ref = reference_triple_product(q_order, q_order + j_win + 2)
        for j in range(-j_win, j_win + 1):
            e = (j * j - j) // 2
            expected = (
                QSeries.monomial(e, q_order) if e <= q_order else QSeries.zero(q_order)
            )
            assert ref.zcoeff(j) == expected

    def test_constant_and_first_coefficients(self):
        ref = reference_triple_product(10, 14)
        assert ref.zcoeff(0)[0] == 1
        assert ref.zcoeff(1) == QSeries.monomial(0, 10)  # exponent (1-1)/2 = 0
        assert ref.zcoeff(-1) == QSeries.monomial(1, 10)

    def test_rejects_negative(self):
        with pytest.raises(ParameterError):
            verify_triple_product(-1, 3)


class TestSpecialized:
    def test_pentagonal(self):
        assert verify_specialized(ModularParams(3, 1), -1, 60).passed

    def test_boundary_zero_vanishing(self):
        for k in (2, 3, 5):
            for ell in (0, k):
                rep = verify_specialized(ModularParams(k, ell), -1, 40)
                assert rep.passed
                assert triple_pochhammer(k, ell, -1, 40).is_zero()

    def test_plus_sign_large(self):
        assert verify_specialized(ModularParams(7, 2), 1, 100).passed

    def test_reflection_produces_same_lhs(self):
        for sign in (1, -1):
            a = triple_pochhammer(5, 2, sign, 80)
            b = triple_pochhammer(5, 3, sign, 80)
            assert a == b

    def test_full_small_grid(self):
        for k in range(1, 6):
            for ell in range(k + 1):
                for sign in (1, -1):
                    assert verify_specialized(ModularParams(k, ell), sign, 60).passed


class TestBerger:
    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_passes(self, k):
        rep = verify_berger(k, 60)
        assert rep.passed
        assert rep.parameters == {"k": k}

    def test_signed_coefficients_for_pentagonal(self):
        tp = triple_pochhammer(3, 1, -1, 14)
        expected = {1: -1, 2: -1, 5: 1, 7: 1, 12: -1}
        for n in range(1, 15):
            assert tp[n] == expected.get(n, 0)

    def test_k_validation(self):
        with pytest.raises(ParameterError):
            verify_berger(0, 10)


class TestHermite:
    @pytest.mark.parametrize("s", range(7))
    def test_exact(self, s):
        assert verify_hermite(s).passed

    def test_s_zero_is_unit(self):
        # both sides are the constant 1
        rep = verify_hermite(0)
        assert rep.passed and rep.order == 0

    def test_cap(self):
        with pytest.raises(ParameterError):
            verify_hermite(7)
        with pytest.raises(ParameterError):
            verify_hermite(-1)


class TestBoundaryHalf:
    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_passes(self, k):
        assert verify_boundary_half(k, 60).passed

    def test_gauss_square_series(self):
        # the k=2 quotient is 1 + 2q + 2q^4 + 2q^9 + ...
        rep = verify_boundary_half(2, 30)
        assert rep.passed

    def test_odd_k_rejected(self):
        with pytest.raises(ParameterError):
            verify_boundary_half(3, 30)
        with pytest.raises(ParameterError):
            verify_boundary_half(0, 30)


class TestSylvester:
    @pytest.mark.parametrize("k,ell", [(3, 1), (8, 3)])
    def test_passes(self, k, ell):
        assert verify_sylvester(ModularParams(k, ell), 150).passed

    def test_boundary_rejected(self):
        with pytest.raises(ParameterError):
            verify_sylvester(ModularParams(4, 2), 50)


class TestCompare:
    def test_perturbation_detected_at_index(self):
        a = QSeries.from_coeffs([1, 2, 3, 4, 5])
        perturbed = QSeries.from_coeffs([1, 2, 3, 9, 5])
        rep = compare_series("selftest", {"case": 1}, 4, a, perturbed)
        assert not rep.passed
        assert rep.mismatch.q_exponent == 3
        assert rep.mismatch.lhs == 4 and rep.mismatch.rhs == 9
        d = rep.to_json_dict()
        assert d["outcome"] == "fail"
        assert d["location"] == {"q": 3, "z": None}
        assert d["lhs"] == "4" and d["rhs"] == "9"

    def test_pass_report_shape(self):
        a = QSeries.one(3)
        rep = compare_series("selftest", {}, 3, a, a)
        assert rep.passed and rep.mismatch is None
        assert rep.to_json_dict()["outcome"] == "pass"


class TestBattery:
    def test_small_grid_all_pass(self):
        reports = battery(3, 4, 40)
        assert reports and all(r.passed for r in reports)
        names = {r.identity for r in reports}
        assert {
            "triple_product",
            "hermite",
            "berger",
            "specialized",
            "boundary_half",
            "sylvester",
            "partition_shift",
            "bounded_mult_shift",
            "apostol",
            "kim",
        } <= names

    def test_jobs_do_not_change_output(self):
        serial = [r.to_json_dict() for r in battery(3, 4, 30)]
        threaded = [r.to_json_dict() for r in battery(3, 4, 30, jobs=4)]
        assert serial == threaded

    def test_interior_grid(self):
        grid = interior_grid(3, 8)
        assert len(grid) == 24
        assert all(p.is_interior for p in grid)
        assert interior_grid(1, 2) == []
