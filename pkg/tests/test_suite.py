import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypq.errors import DomainError, UnknownCheckError
from hypq.kernels import Coupling, KernelFamily
from hypq.quad import QuadSpec
from hypq.special import Periods
from hypq.suite import (
    CheckResult,
    RegSchedule,
    check_beta,
    check_delta_sequence,
    check_g1_determinant_route,
    check_orthogonality_coefficient,
    check_qq_commutativity,
    check_reduction,
    q2_kernel_det_route,
    registry_names,
    run_suite,
)

HYP, GAM, REL = KernelFamily.HYPERBOLIC, KernelFamily.GAMMA, KernelFamily.RELATIVISTIC


class TestCheckResult:
    @given(
        st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False),
        st.floats(1e-12, 1e-2),
    )
    @settings(max_examples=60, deadline=None)
    def test_invariants(self, lhs, rhs, tol):
        r = CheckResult.compare("x", {}, lhs, rhs, tol)
        assert r.abs_err == abs(lhs - rhs)
        assert r.rel_err == r.abs_err / max(abs(lhs), abs(rhs), 1e-300)
        assert r.passed == (r.abs_err <= tol or r.rel_err <= tol)


class TestRegSchedule:
    def test_validation(self):
        with pytest.raises(DomainError):
            RegSchedule((1e-3, 1e-2), (10.0, 20.0))  # epsilons must descend
        with pytest.raises(DomainError):
            RegSchedule((1e-2, 1e-3), (20.0, 10.0))  # regulators must ascend
        with pytest.raises(DomainError):
            RegSchedule((1e-2, 1e-3, 1e-4), (10.0, 20.0))  # length mismatch

    def test_pairing_and_broadcast(self):
        s = RegSchedule((1e-2, 1e-3), (10.0, 20.0))
        assert s.steps() == [(1e-2, 10.0), (1e-3, 20.0)]
        s2 = RegSchedule((1e-3,), (10.0, 20.0))
        assert s2.steps() == [(1e-3, 10.0), (1e-3, 20.0)]


class TestRunner:
    def test_empty_selection(self):
        assert run_suite([]) == []

    def test_unknown_name(self):
        with pytest.raises(UnknownCheckError):
            run_suite(["not_a_check"])

    def test_single_check_passes(self):
        res = run_suite(["orthogonality_hyperbolic"])
        assert len(res) == 1 and res[0].passed

    def test_registry_nonempty_and_ordered(self):
        names = registry_names()
        assert len(names) > 30
        assert names[0] == "beta_hyperbolic"

    def test_deterministic_rerun(self):
        a = run_suite(["qq_n1_hyperbolic", "orthogonality_gamma"])
        b = run_suite(["qq_n1_hyperbolic", "orthogonality_gamma"])
        for ra, rb in zip(a, b):
            assert ra.lhs == rb.lhs and ra.rhs == rb.rhs


class TestBetaChecks:
    def test_hyperbolic_trivial(self):
        r = check_beta(HYP, 0.0, Coupling(1.0))
        assert r.passed and abs(r.lhs - math.pi) < 1e-10

    def test_hyperbolic_closed_form(self):
        r = check_beta(HYP, 0.6, Coupling(1.0))
        assert abs(r.rhs - math.pi / math.cosh(0.3 * math.pi)) < 1e-13
        assert r.passed

    def test_relativistic(self):
        r = check_beta(REL, 0.4, Coupling(0.8, Periods(1.0, math.sqrt(2.0))))
        assert r.passed and r.rel_err < 1e-7


class TestReductions:
    @pytest.mark.parametrize(
        "which,sched",
        [
            ("Kg_to_hatK", (0.2, 0.1, 0.05)),
            ("Kgstar_to_K", (0.2, 0.1, 0.05)),
            ("beta_reduction_1", (0.2, 0.1, 0.05)),
            ("beta_reduction_2", (0.2, 0.1, 0.05)),
            ("S2_to_gamma", (10.0, 20.0, 40.0)),
        ],
    )
    def test_all_kinds_decrease(self, which, sched):
        rs = check_reduction(which, sched)
        devs = [r.abs_err for r in rs]
        assert devs[2] < devs[1] < devs[0]
        assert all(r.passed for r in rs)

    def test_wrong_direction_rejected(self):
        with pytest.raises(DomainError):
            check_reduction("Kg_to_hatK", (0.05, 0.1, 0.2))
        with pytest.raises(UnknownCheckError):
            check_reduction("nope", (0.2, 0.1))


class TestDeterminantRoute:
    def test_all_steps(self):
        rs = check_g1_determinant_route()
        names = [r.check_name for r in rs]
        assert names == [
            "det_route_cauchy",
            "det_route_n1_rational",
            "det_route_andreief",
            "det_route_vs_direct",
        ]
        assert all(r.passed for r in rs)

    def test_det_route_matches_direct_kernel(self):
        from hypq.operators import OperatorSpec, qq_convolution_kernel

        q = QuadSpec()
        x, z, lam, rho = (0.1, -0.3), (0.2, -0.4), 0.3, -0.2
        direct = qq_convolution_kernel(
            OperatorSpec(HYP, 2, False, Coupling(1.0), 0.0), lam, rho, (x, z), q
        )
        viadet = q2_kernel_det_route(x, z, lam, rho, q)
        assert abs(direct - viadet) <= 1e-8 * abs(direct)


class TestOrthogonality:
    @pytest.mark.parametrize("family", [HYP, GAM, REL])
    def test_routes_agree(self, family):
        r = check_orthogonality_coefficient(family)
        assert r.passed and r.rel_err < 1e-9

    def test_hyperbolic_symmetric_under_swap(self):
        from hypq.wavefn import SpectralPoint

        a = check_orthogonality_coefficient(HYP, SpectralPoint(0.5, -0.5))
        b = check_orthogonality_coefficient(HYP, SpectralPoint(-0.5, 0.5))
        assert abs(a.lhs - b.lhs) < 1e-12 * abs(a.lhs)

    def test_relativistic_finite_positive(self):
        from hypq.wavefn import SpectralPoint

        r = check_orthogonality_coefficient(
            REL, SpectralPoint(0.4, -0.4), Coupling(0.9, Periods(1.0, math.sqrt(2.0)))
        )
        assert r.lhs.real > 0 and abs(r.lhs.imag) < 1e-10 * r.lhs.real


class TestDeltaSequences:
    def test_n1_g1(self):
        rs = check_delta_sequence(1, 1.0)
        devs = [r.abs_err for r in rs]
        assert devs[2] < devs[1] < devs[0]
        assert all(r.passed for r in rs)
        assert devs[2] < 5e-2

    def test_custom_schedule_single_point(self):
        rs = check_delta_sequence(1, 1.0, schedule=RegSchedule((1e-3,), (40.0,)))
        assert len(rs) == 1 and rs[0].passed

    def test_invalid_n(self):
        with pytest.raises(DomainError):
            check_delta_sequence(3, 1.0)


class TestQQCommutativity:
    def test_n1_families(self):
        for fam in (HYP, GAM, REL):
            r = check_qq_commutativity(fam, 1)
            assert r.passed and r.rel_err < 1e-6
