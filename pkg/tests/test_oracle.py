import pytest

from crcselect.codec import CodeSpec
from crcselect.errors import DomainError, UnsupportedSizeError
from crcselect.metrics import p_ue
from crcselect.oracle import (
    brute_force_spectrum,
    exhaustive_pue,
    monte_carlo_pue,
)
from crcselect.spectrum import dual_weight_distribution


class TestBruteForceSpectrum:
    def test_tiny_codes(self):
        assert brute_force_spectrum(CodeSpec(0x7, 3)).counts == {0: 1, 3: 1}
        assert brute_force_spectrum(CodeSpec(0x61, 7)).counts == {0: 1, 3: 1}

    def test_total(self):
        for g, n in [(0x7, 3), (0x61, 20), (0x13, 14)]:
            dist = brute_force_spectrum(CodeSpec(g, n))
            assert dist.total() == 1 << dist.log2_total()
            assert dist.total() == 1 << (n - CodeSpec(g, n).p)

    def test_budget(self):
        with pytest.raises(UnsupportedSizeError):
            brute_force_spectrum(CodeSpec(0x1A2EB, 48))


class TestExhaustivePue:
    def test_below_distance_is_zero(self):
        assert exhaustive_pue(CodeSpec(0x61, 12), 0.1, max_weight=2) == 0.0

    def test_two_codeword_code(self):
        assert exhaustive_pue(CodeSpec(0x7, 3), 0.1, max_weight=3) == pytest.approx(
            0.1**3, rel=1e-12
        )

    def test_zero_eps(self):
        assert exhaustive_pue(CodeSpec(0x7, 3), 0.0, max_weight=3) == 0.0

    @pytest.mark.parametrize("g,n", [(0x7, 3), (0xB, 7), (0x61, 14)])
    def test_full_weight_matches_formula(self, g, n):
        spec = CodeSpec(g, n)
        for eps in (0.4, 0.1, 0.01):
            direct = exhaustive_pue(spec, eps, max_weight=n)
            formula = p_ue(brute_force_spectrum(spec), eps)
            assert direct == pytest.approx(formula, rel=1e-12)

    def test_budget(self):
        with pytest.raises(UnsupportedSizeError):
            exhaustive_pue(CodeSpec(0x61, 25), 0.1, max_weight=25, budget=1000)

    def test_domain(self):
        with pytest.raises(DomainError):
            exhaustive_pue(CodeSpec(0x7, 3), 0.7, max_weight=2)


class TestMonteCarlo:
    def test_deterministic(self):
        spec = CodeSpec(0x61, 24)
        a = monte_carlo_pue(spec, 0.05, 200_000, seed=7)
        b = monte_carlo_pue(spec, 0.05, 200_000, seed=7)
        assert a.undetected == b.undetected
        assert a == b

    def test_worker_split_deterministic(self):
        spec = CodeSpec(0x61, 24)
        a = monte_carlo_pue(spec, 0.05, 100_000, seed=3, workers=4)
        b = monte_carlo_pue(spec, 0.05, 100_000, seed=3, workers=4)
        assert a.undetected == b.undetected

    def test_zero_eps(self):
        est = monte_carlo_pue(CodeSpec(0x61, 24), 0.0, 10_000, seed=1)
        assert est.undetected == 0 and est.estimate == 0.0

    def test_half_eps_matches_closed_form(self):
        # P_ue(1/2) = 2^-p - 2^-n; generous 4 sigma to keep this stable
        spec = CodeSpec(0x13, 8)
        est = monte_carlo_pue(spec, 0.5, 400_000, seed=11)
        want = 2.0**-4 - 2.0**-8
        assert abs(est.estimate - want) <= 4 * est.stderr

    def test_matches_exact_probability(self):
        spec = CodeSpec(0x61, 24)
        exact = p_ue(dual_weight_distribution(0x61, 24), 0.03)
        est = monte_carlo_pue(spec, 0.03, 500_000, seed=5)
        assert abs(est.estimate - exact) <= 4 * est.stderr

    def test_stderr_definition(self):
        est = monte_carlo_pue(CodeSpec(0x13, 8), 0.5, 10_000, seed=2)
        assert est.estimate == est.undetected / est.trials
        assert est.stderr == pytest.approx(
            (est.estimate * (1 - est.estimate) / est.trials) ** 0.5
        )

    def test_json_payload(self):
        est = monte_carlo_pue(CodeSpec(0x13, 8), 0.25, 1_000, seed=9, workers=2)
        payload = est.to_json_dict()
        assert payload["trials"] == 1_000
        assert payload["seed"] == 9
        assert payload["workers"] == 2

    def test_domain(self):
        spec = CodeSpec(0x13, 8)
        with pytest.raises(DomainError):
            monte_carlo_pue(spec, 0.6, 100)
        with pytest.raises(DomainError):
            monte_carlo_pue(spec, 0.1, 0)
