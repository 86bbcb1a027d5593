import math

import pytest

from primroots import DomainError
from primroots.arith import log_integral
from primroots.artin import reference_artin_constant
from primroots.charsum import (
    LITERAL_LIMIT,
    ROUNDING_TOLERANCE,
    decompose_interval,
    psi_divisor_dependent,
    psi_divisor_free,
)
from primroots.factorize import euler_phi, factor
from primroots.primroot import is_primitive_root_prime, multiplicative_order
from primroots.special_primes import sieve_primes


def test_psi_examples():
    assert psi_divisor_dependent(2, 5).value == 1
    assert psi_divisor_dependent(4, 5).value == 0
    assert psi_divisor_free(3, 5).value == 1
    assert psi_divisor_free(3, 5, literal=True).value == 1
    for p in (3, 5, 7, 11, 199):
        assert psi_divisor_free(1, p).value == 0
        assert psi_divisor_dependent(1, p).value == 0


def test_psi_trivial_prime():
    # p = 2: the only unit generates the trivial group
    assert psi_divisor_dependent(1, 2).value == 1
    assert psi_divisor_free(1, 2, literal=True).value == 1


def test_psi_domain_errors():
    with pytest.raises(DomainError):
        psi_divisor_dependent(5, 5)
    with pytest.raises(DomainError):
        psi_divisor_free(0, 7)
    with pytest.raises(DomainError):
        psi_divisor_dependent(2, 10)


def test_representations_agree_with_order_to_61():
    # the full p <= 200 sweep is acceptance criterion 1
    for p in sieve_primes(61):
        for u in range(1, p):
            truth = int(multiplicative_order(u, p).order == p - 1)
            dd = psi_divisor_dependent(u, p)
            fast = psi_divisor_free(u, p)
            lit = psi_divisor_free(u, p, literal=True)
            assert dd.value == fast.value == lit.value == truth
            for ev in (dd, fast, lit):
                assert ev.residual <= ROUNDING_TOLERANCE
                assert abs(ev.raw - ev.value) == ev.residual


def test_psi_sums_to_phi():
    for p in sieve_primes(100):
        total_dd = sum(psi_divisor_dependent(u, p).value for u in range(1, p))
        total_df = sum(psi_divisor_free(u, p, literal=True).value
                       for u in range(1, p))
        expected = euler_phi(factor(p - 1)) if p > 2 else 1
        assert total_dd == total_df == expected


def test_psi_independent_of_primitive_root_choice():
    for p in sieve_primes(50):
        if p == 2:
            continue
        roots = [t for t in range(2, p) if is_primitive_root_prime(t, p)]
        for u in range(1, p):
            base_dd = psi_divisor_dependent(u, p).value
            base_df = psi_divisor_free(u, p, literal=True).value
            for tau in roots:
                assert psi_divisor_dependent(u, p, tau=tau).value == base_dd
                assert psi_divisor_free(u, p, literal=True, tau=tau).value == base_df


def test_psi_rejects_non_primitive_tau():
    with pytest.raises(DomainError):
        psi_divisor_dependent(2, 7, tau=2)  # ord_7(2) = 3


def test_literal_mode_is_capped():
    big = next(p for p in sieve_primes(LITERAL_LIMIT + 100) if p > LITERAL_LIMIT)
    with pytest.raises(DomainError):
        psi_divisor_free(2, big, literal=True)


def test_interval_example_z10():
    d = decompose_interval(10, 2)
    assert d.psi_sum == 3  # 11, 13, 19 (2 has order 8 mod 17)
    expected_trivial = 4 / 11 + 4 / 13 + 8 / 17 + 6 / 19
    assert abs(d.trivial_term - expected_trivial) < 1e-12
    assert abs(d.psi_sum - d.trivial_term - d.error_term) < 1e-12


def test_interval_no_admissible_primes():
    # [3, 6] holds primes 3 and 5 only; q = 15 kills both
    d = decompose_interval(3, 15)
    assert d.psi_sum == 0
    assert d.trivial_term == 0.0 and d.error_term == 0.0
    assert d.li_prediction > 0


def test_interval_z1000_density():
    d = decompose_interval(1000, 2)
    assert d.psi_sum == 50  # enumeration oracle
    in_range = [p for p in sieve_primes(2000) if p >= 1000]
    assert len(in_range) == 135
    assert abs(d.psi_sum / len(in_range) - 0.3739558136) <= 0.15


def test_interval_identity_and_prediction_wiring():
    a1 = reference_artin_constant()
    for z, q in ((50, 2), (123, 3), (500, 6), (800, 7)):
        d = decompose_interval(z, q)
        pi_2z = len(sieve_primes(2 * z))
        assert abs(d.psi_sum - d.trivial_term - d.error_term) <= 1e-6 * pi_2z
        expected = a1 * (log_integral(2 * z) - log_integral(z))
        assert abs(d.li_prediction - expected) < 1e-9


def test_interval_domain_errors():
    with pytest.raises(DomainError):
        decompose_interval(2, 2)
    with pytest.raises(DomainError):
        decompose_interval(10, 4)   # square base
    with pytest.raises(DomainError):
        decompose_interval(10, 1)
    with pytest.raises(DomainError):
        decompose_interval(10, 0)
