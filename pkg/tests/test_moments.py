import dataclasses
import math
import random

import numpy as np
import pytest

from zml import dirichlet, moments, sieve, zeros
from zml.errors import InputError, SimplicityError

import oracle_values as ov

PI3 = math.pi**3


@pytest.fixture(scope="module")
def poly10(sieve_10k):
    return dirichlet.mollifier(sieve_10k, 10)


@pytest.fixture(scope="module")
def poly_one():
    return dirichlet.DirichletPoly(coeffs=np.array([1.0]))


class TestJMoment:
    def test_empty_range(self, zeros_110):
        assert moments.j_moment(zeros_110, 1.0, 12.0) == 0.0

    def test_two_zero_desk_case(self, zeros_110):
        want = 1.0 / ov.Z_PRIME[0] ** 2 + 1.0 / ov.Z_PRIME[1] ** 2
        assert moments.j_moment(zeros_110, 1.0, 22.0) == pytest.approx(want, rel=1e-9)

    def test_additivity(self, zeros_1010):
        T1 = zeros.snap_to_midgap(zeros_1010, 300.0)
        T2 = zeros.snap_to_midgap(zeros_1010, 900.0)
        whole = moments.j_moment(zeros_1010, 1.0, T2)
        first = moments.j_moment(zeros_1010, 1.0, T1)
        o = zeros_1010.ordinates
        mask = (o > T1) & (o <= T2)
        tail = math.fsum(zeros_1010.zeta_prime_mods[mask] ** -2.0)
        assert whole == pytest.approx(first + tail, rel=1e-12)

    def test_permutation_invariance(self, zeros_1010):
        T = zeros.snap_to_midgap(zeros_1010, 900.0)
        direct = moments.j_moment(zeros_1010, 1.0, T)
        terms = list(zeros_1010.zeta_prime_mods[: zeros_1010.count_below(T)] ** -2.0)
        random.Random(5).shuffle(terms)
        assert math.fsum(terms) == pytest.approx(direct, rel=1e-12)

    def test_general_k(self, zeros_110):
        j2 = moments.j_moment(zeros_110, 2.0, 22.0)
        want = 1.0 / ov.Z_PRIME[0] ** 4 + 1.0 / ov.Z_PRIME[1] ** 4
        assert j2 == pytest.approx(want, rel=1e-9)

    def test_uncertified_refused(self, zeros_110):
        bad = dataclasses.replace(zeros_110, certified=False)
        with pytest.raises(InputError, match="certified"):
            moments.j_moment(bad, 1.0, 50.0)

    def test_t_beyond_list(self, zeros_110):
        with pytest.raises(InputError, match="t_max"):
            moments.j_moment(zeros_110, 1.0, 500.0)


class TestPredictions:
    def test_gonek_prediction_cancellation(self):
        assert moments.gonek_prediction(PI3) == pytest.approx(3.0, rel=1e-15)

    def test_halfbound_is_half(self):
        for T in (1.0, 123.4, 1e4):
            assert moments.halfbound_prediction(T) / moments.gonek_prediction(T) == 0.5

    def test_gonek_prediction_at_1e4(self):
        assert moments.gonek_prediction(1e4) == pytest.approx(967.55, abs=0.01)

    def test_predict_m1_value(self):
        params = moments.MollifierParams.from_theta(0.5, 5000.0)
        assert moments.predict_m1(params) == pytest.approx(
            1.5 / PI3 * 5000.0 * math.log(5000.0), rel=1e-15
        )
        assert moments.predict_m1(params) == pytest.approx(2060.4, abs=0.5)

    def test_predict_m2_theta_to_one(self):
        params = moments.MollifierParams.from_theta(1.0 - 1e-9, 5000.0)
        ratio = moments.predict_m2(params) / (5000.0 * math.log(5000.0) ** 2)
        assert ratio == pytest.approx(6.0 / PI3, abs=1e-5)
        assert ratio == pytest.approx(0.19351, abs=1e-4)

    def test_m1_m2_algebraic_identity(self):
        for th in (0.3, 0.5, 0.9):
            params = moments.MollifierParams.from_theta(th, 7777.0)
            lhs = moments.predict_m1(params) * math.log(params.T) * (1.0 + th)
            assert lhs / moments.predict_m2(params) == pytest.approx(1.0, rel=1e-12)

    def test_sweep_prediction(self):
        assert moments.sweep_prediction(0.5, 300.0) == pytest.approx(300.0 / PI3, rel=1e-14)
        vals = [moments.sweep_prediction(th, 100.0) for th in np.linspace(0.05, 0.95, 10)]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_params_validation(self):
        with pytest.raises(InputError):
            moments.MollifierParams.from_theta(1.5, 100.0)
        with pytest.raises(InputError):
            moments.MollifierParams.from_theta(0.5, 0.5)


class TestM1M2:
    def test_below_first_zero(self, zeros_110, poly10):
        assert moments.m1_sum(zeros_110, poly10, 12.0) == 0.0
        assert moments.m2_sum(zeros_110, poly10, 12.0) == 0.0

    def test_constant_poly_degenerations(self, zeros_110, poly_one):
        T = 100.0
        n = zeros_110.count_below(T)
        assert moments.m2_sum(zeros_110, poly_one, T) == pytest.approx(float(n), rel=1e-14)
        m1 = moments.m1_sum(zeros_110, poly_one, T)
        want = complex(
            math.fsum((1.0 / zeros_110.zeta_primes[:n]).real),
            math.fsum((1.0 / zeros_110.zeta_primes[:n]).imag),
        )
        assert m1 == pytest.approx(want, rel=1e-14)

    def test_two_zero_m1_from_oracle(self, zeros_110, poly_one):
        want = 1.0 / complex(*ov.ZETA_PRIME[0]) + 1.0 / complex(*ov.ZETA_PRIME[1])
        assert moments.m1_sum(zeros_110, poly_one, 22.0) == pytest.approx(want, abs=1e-8)

    def test_conjugation_consistency(self, zeros_110, poly10):
        # |M(rho)|^2 equals M(rho) * M(1-rho) through the critical-line identity
        T = 100.0
        n = zeros_110.count_below(T)
        direct = moments.m2_sum(zeros_110, poly10, T)
        via_reflection = math.fsum(
            (
                dirichlet.eval_poly(poly10, complex(0.5, g))
                * dirichlet.eval_poly(poly10, 1.0 - complex(0.5, g))
            ).real
            for g in zeros_110.ordinates[:n]
        )
        assert direct == pytest.approx(via_reflection, rel=1e-10)

    def test_complex_poly_refused_for_m1(self, zeros_110):
        poly = dirichlet.DirichletPoly(coeffs=np.array([1.0 + 1j]))
        with pytest.raises(InputError, match="real"):
            moments.m1_sum(zeros_110, poly, 50.0)

    def test_simplicity_guard_halts(self, zeros_110, poly10):
        tiny = dataclasses.replace(
            zeros_110.records[3],
            z_prime=1e-5,
            zeta_prime=complex(1e-5, 0.0),
            zeta_prime_mod=1e-5,
        )
        tampered = dataclasses.replace(
            zeros_110, records=zeros_110.records[:3] + (tiny,) + zeros_110.records[4:]
        )
        with pytest.raises(SimplicityError, match="guard"):
            moments.m1_sum(tampered, poly10, 50.0)
        with pytest.raises(SimplicityError):
            moments.m2_sum(tampered, poly10, 50.0)


class TestCauchyChain:
    def test_holds_on_desk_case(self, zeros_110, sieve_10k):
        T = zeros.snap_to_midgap(zeros_110, 22.0)
        rep = moments.moment_report(zeros_110, sieve_10k, 0.5, T)
        assert moments.cauchy_chain(rep)
        assert rep.j_minus_1 >= rep.cauchy_lb

    def test_holds_across_grid(self, zeros_1010, sieve_10k):
        for T_req in (100.0, 300.0, 1000.0):
            T = zeros.snap_to_midgap(zeros_1010, T_req)
            for th in (0.3, 0.5, 0.7):
                rep = moments.moment_report(zeros_1010, sieve_10k, th, T)
                assert moments.cauchy_chain(rep)

    def test_constant_weight_case(self, zeros_110, poly_one):
        T = 100.0
        n = zeros_110.count_below(T)
        m1 = moments.m1_sum(zeros_110, poly_one, T)
        j = moments.j_moment(zeros_110, 1.0, T)
        assert abs(m1) ** 2 / n <= j * (1 + 1e-12)


class TestThetaSweep:
    def test_rows_and_limit_error(self, zeros_1010, sieve_10k):
        T = zeros.snap_to_midgap(zeros_1010, 1000.0)
        rows = moments.theta_sweep(zeros_1010, sieve_10k, T, [0.3, 0.5, 0.99])
        assert rows[0]["cauchy_ok"] and rows[1]["cauchy_ok"]
        assert rows[0]["cauchy_lb"] > 0
        # theta = 0.99 needs xi = 1000^0.99 > sieve... fits 10^4; use tiny table
        small = sieve.build_sieve(20)
        rows = moments.theta_sweep(zeros_1010, small, T, [0.3, 0.9])
        assert "error" in rows[1] and "cauchy_lb" in rows[0]


class TestLandau:
    def test_main_terms(self, zeros_110, sieve_10k):
        T = 100.0
        rep6 = moments.landau_gonek(zeros_110, sieve_10k, 6.0, T)
        assert rep6.main_term == 0.0
        rep4 = moments.landau_gonek(zeros_110, sieve_10k, 4.0, T)
        rep2 = moments.landau_gonek(zeros_110, sieve_10k, 2.0, T)
        want = -(T / (2 * math.pi)) * math.log(2.0)
        assert rep4.main_term == pytest.approx(want, rel=1e-14)
        assert rep2.main_term == rep4.main_term

    def test_non_integer_x(self, zeros_110, sieve_10k):
        rep = moments.landau_gonek(zeros_110, sieve_10k, 2.5, 100.0)
        assert rep.main_term == 0.0
        assert rep.deviation == abs(rep.zero_sum)

    def test_zero_sum_value(self, zeros_110, sieve_10k):
        # direct two-zero evaluation
        rep = moments.landau_gonek(zeros_110, sieve_10k, 3.0, 22.0)
        want = sum(
            math.sqrt(3.0) * np.exp(1j * g * math.log(3.0)) for g in ov.ZERO_ORDINATES[:2]
        )
        assert rep.zero_sum == pytest.approx(want, rel=1e-9)

    def test_x_domain(self, zeros_110, sieve_10k):
        with pytest.raises(InputError):
            moments.landau_gonek(zeros_110, sieve_10k, 1.0, 50.0)


class TestSerialization:
    def test_report_json_keys(self, zeros_110, sieve_10k, tmp_path):
        T = zeros.snap_to_midgap(zeros_110, 50.0)
        rep = moments.moment_report(zeros_110, sieve_10k, 0.5, T)
        path = tmp_path / "r.json"
        moments.report_to_json(rep, path)
        import json

        data = json.loads(path.read_text())
        for key in ("theta_exp", "t", "xi", "j_minus_1", "m1_re", "m1_im", "m2",
                    "m1_pred", "m2_pred", "cauchy_lb", "gonek_pred",
                    "halfbound_pred", "sweep_pred"):
            assert key in data

    def test_csv_rows(self, zeros_110, sieve_10k, tmp_path):
        T = zeros.snap_to_midgap(zeros_110, 50.0)
        reps = [moments.moment_report(zeros_110, sieve_10k, th, T) for th in (0.3, 0.5)]
        path = tmp_path / "r.csv"
        moments.reports_to_csv(reps, path)
        lines = path.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0].split(",") == sorted(lines[0].split(","))
