"""Logical-error law, code-size selection, and the non-correctable floor."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from qfeas.qec import (
    AboveThresholdError,
    CodeOptimum,
    FloorUnreachableError,
    FloorValue,
    QecCode,
    error_floor,
    logical_error_rate,
    logical_runtime,
    optimal_code_size,
    physical_resources,
    required_code_size,
)


def brute_force_optimum(eps2, code):
    """Reference scan. Any faster search must agree with this exactly."""
    best_nc, best = 1, logical_error_rate(eps2, code, 1)
    for nc in range(2, code.nc_max + 1):
        v = logical_error_rate(eps2, code, nc)
        if v < best:
            best_nc, best = nc, v
    return CodeOptimum(best_nc, best)


class TestLogicalErrorRate:
    def test_at_threshold_every_size_gives_one(self):
        code = QecCode()
        for nc in (1, 2, 7, 100, 12345):
            assert logical_error_rate(code.eps_th, code, nc) == 1.0

    def test_one_decade_below_threshold(self):
        # (0.1)^sqrt(4); the squaring leaves it one ulp above decimal 0.01
        v = logical_error_rate(1e-3, QecCode(), 4)
        assert v == pytest.approx(0.01, rel=1e-15)

    def test_floor_term_dominates_at_large_size(self):
        v = logical_error_rate(1e-3, QecCode(eps_nc=1e-4), 16)
        assert v == pytest.approx(1.7e-3, rel=1e-12)

    def test_prefactors_scale_each_term(self):
        base = QecCode(eps_nc=1e-4)
        doubled = QecCode(eps_nc=1e-4, correctable_prefactor=2.0, floor_prefactor=2.0)
        assert logical_error_rate(1e-3, doubled, 9) == pytest.approx(
            2.0 * logical_error_rate(1e-3, base, 9), rel=1e-15)

    @given(st.integers(min_value=1, max_value=400))
    def test_no_floor_means_strictly_decreasing(self, nc):
        code = QecCode()
        assert logical_error_rate(1e-3, code, nc + 1) < logical_error_rate(1e-3, code, nc)


class TestOptimalCodeSize:
    def test_worked_example(self):
        got = optimal_code_size(1e-3, QecCode(eps_nc=1e-4, nc_max=10**4))
        assert got == CodeOptimum(12, 0.0015434775724730212)
        assert got.eps_l == pytest.approx(1.5e-3, rel=3e-2)

    def test_no_floor_pushes_to_the_size_cap(self):
        # cap kept small so the correctable term stays a normal float
        got = optimal_code_size(5e-3, QecCode(nc_max=100))
        assert got.n_c == 100
        assert got.eps_l == logical_error_rate(5e-3, QecCode(), 100)

    def test_at_threshold_is_an_error(self):
        with pytest.raises(AboveThresholdError):
            optimal_code_size(0.01, QecCode())

    def test_above_threshold_is_an_error(self):
        with pytest.raises(AboveThresholdError):
            optimal_code_size(0.5, QecCode())

    @settings(max_examples=60, deadline=None)
    @given(
        st.floats(min_value=1e-4, max_value=9.9e-3),
        st.floats(min_value=1e-7, max_value=1e-2),
        st.integers(min_value=1, max_value=600),
    )
    def test_matches_reference_scan_exactly(self, eps2, eps_nc, nc_max):
        code = QecCode(eps_nc=eps_nc, nc_max=nc_max)
        assert optimal_code_size(eps2, code) == brute_force_optimum(eps2, code)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(min_value=1e-4, max_value=9.9e-3),
           st.integers(min_value=1, max_value=300))
    def test_matches_reference_scan_without_floor(self, eps2, nc_max):
        code = QecCode(nc_max=nc_max)
        assert optimal_code_size(eps2, code) == brute_force_optimum(eps2, code)


class TestErrorFloor:
    def test_floor_equals_optimum_value(self):
        code = QecCode(eps_nc=1e-4, nc_max=10**4)
        floor = error_floor(1e-3, code)
        assert float(floor) == optimal_code_size(1e-3, code).eps_l
        assert isinstance(floor, FloorValue)
        assert not floor.nc_limited

    def test_cap_limited_floor_is_flagged(self):
        floor = error_floor(5e-3, QecCode(nc_max=100))
        assert floor.nc_limited

    def test_floor_never_decreases_with_eps_nc(self):
        code_lo = QecCode(eps_nc=1e-5, nc_max=2000)
        code_hi = QecCode(eps_nc=1e-4, nc_max=2000)
        assert error_floor(1e-3, code_hi) >= error_floor(1e-3, code_lo)

    @given(st.floats(min_value=1e-6, max_value=1e-3))
    def test_floor_monotone_property(self, eps_nc):
        a = error_floor(2e-3, QecCode(eps_nc=eps_nc, nc_max=500))
        b = error_floor(2e-3, QecCode(eps_nc=2 * eps_nc, nc_max=500))
        assert b >= a


class TestRequiredCodeSize:
    def test_six_orders_of_suppression_needs_36(self):
        # sqrt(nc) >= 6 at one decade below threshold; the power evaluates
        # one ulp above the decimal target, absorbed by a relative slack
        assert required_code_size(1e-3, QecCode(), 1e-6) == 36

    def test_result_is_smallest_sufficient_size(self):
        code = QecCode()
        target = 3e-4
        nc = required_code_size(1e-3, code, target)
        assert logical_error_rate(1e-3, code, nc) <= target * (1 + 1e-9)
        assert logical_error_rate(1e-3, code, nc - 1) > target

    def test_generous_target_is_size_one(self):
        assert required_code_size(1e-3, QecCode(), 1.0) == 1
        assert required_code_size(1e-3, QecCode(), 5.0) == 1

    def test_unreachable_below_floor(self):
        with pytest.raises(FloorUnreachableError):
            required_code_size(1e-3, QecCode(eps_nc=1e-4), 1e-6)

    def test_floor_itself_is_reachable(self):
        code = QecCode(eps_nc=1e-4, nc_max=10**4)
        floor = error_floor(1e-3, code)
        nc = required_code_size(1e-3, code, float(floor))
        assert logical_error_rate(1e-3, code, nc) <= float(floor) * (1 + 1e-9)

    def test_above_threshold_is_an_error(self):
        with pytest.raises(AboveThresholdError):
            required_code_size(0.02, QecCode(), 1e-3)

    def test_cap_exhaustion_without_floor(self):
        # no floor, but the cap is too small for the target
        with pytest.raises(FloorUnreachableError):
            required_code_size(5e-3, QecCode(nc_max=4), 1e-9)


class TestResourcesAndRuntime:
    def test_plain_product(self):
        code = QecCode(factory_overhead=1)
        assert physical_resources(4000, 1000, code) == 4 * 10**6

    def test_factory_overhead_multiplies(self):
        assert physical_resources(4000, 1000, QecCode(factory_overhead=10)) == 4 * 10**7

    def test_identity_case(self):
        assert physical_resources(7, 1, QecCode(factory_overhead=1)) == 7

    def test_runtime_example_is_months(self):
        # 8.59e10 logical ops, 1e4 physical ops each, 10 ns cycles
        seconds = logical_runtime(85899345920, QecCode(), 1e-8)
        assert seconds == pytest.approx(8.59e6, rel=1e-3)
        assert seconds / 86400.0 == pytest.approx(99.4, rel=1e-2)

    def test_runtime_trivial_cases(self):
        assert logical_runtime(0, QecCode(), 1e-6) == 0.0
        assert logical_runtime(5, QecCode(ops_per_logical_gate=1), 1.0) == 5.0


class TestQecCodeValidation:
    @pytest.mark.parametrize("kwargs", [
        {"eps_th": 0.0},
        {"eps_th": 1.0},
        {"eps_nc": -1e-9},
        {"nc_max": 0},
        {"ops_per_logical_gate": 0},
        {"factory_overhead": 0.5},
    ])
    def test_bad_parameters_rejected(self, kwargs):
        with pytest.raises(ValueError):
            QecCode(**kwargs)
