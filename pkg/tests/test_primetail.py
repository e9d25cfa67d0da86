import numpy as np
import pytest
from mpmath import mp, mpf

from zetakit.errors import DomainError
from zetakit.primes import primes_array_up_to
from zetakit.primetail import odd_nonprimepower_sum, t_closed, t_direct, tail_sum
from zetakit.zetacore import zeta_dirichlet


def brute_t(s: int, bound: int):
    """Independent float64 evaluation of the prime sum with its tail bound."""
    p = primes_array_up_to(bound).astype(np.float64)
    value = float(np.sum(1.0 / (p ** s - 1.0)))
    tail = float(mpf(bound) ** (1 - s) / ((s - 1) * (1 - mpf(bound) ** (-s))))
    return value, tail


def test_t_direct_matches_brute_enumeration_s2():
    r = t_direct(2, mpf("1e-6"))
    assert r.converged
    brute, brute_tail = brute_t(2, 2_000_000)
    # both are partial sums below their bounds of the same limit
    assert abs(r.value - brute) <= r.trunc_estimate + brute_tail + mpf("1e-9")
    assert abs(r.value - mpf("0.5516932")) < mpf("1e-6")


def test_t_direct_matches_brute_enumeration_s3():
    r = t_direct(3, mpf("1e-9"))
    brute, brute_tail = brute_t(3, 500_000)
    assert abs(r.value - brute) <= r.trunc_estimate + brute_tail + mpf("1e-12")
    assert abs(r.value - mpf("0.1941181")) < mpf("1e-6")


def test_t_direct_large_s_dominated_by_two():
    r = t_direct(30, mpf("1e-25"))
    assert abs(r.value - mpf(2) ** -30) <= 3 * mpf(3) ** -30


def test_t_direct_domain():
    with pytest.raises(DomainError):
        t_direct(1, mpf("1e-6"))
    with pytest.raises(DomainError):
        t_direct(mpf("0.5"), mpf("1e-6"))


def test_t_closed_values():
    # zeta(2)(1 - 1/4) - 1 + 1/3 evaluated directly
    expected = (mp.pi ** 2 / 6) * mpf(3) / 4 - 1 + mpf(1) / 3
    assert abs(t_closed(2) - expected) < mpf("1e-40")
    assert abs(t_closed(2) - mpf("0.5670338834")) < mpf("1e-10")
    d3 = zeta_dirichlet(3, mpf("1e-12"))
    expected3 = d3.value * mpf(7) / 8 - 1 + mpf(1) / 7
    assert abs(t_closed(3) - expected3) <= d3.trunc_estimate + mpf("1e-12")


def test_t_closed_large_s_leading_order():
    s = 40
    lead = mpf(2) ** -s + mpf(3) ** -s
    assert abs(t_closed(s) - lead) <= 3 * mpf(4) ** -s


def test_t_closed_domain():
    with pytest.raises(DomainError):
        t_closed(1)


def test_gap_positive_and_equals_missing_odd_composites():
    # the closed form over-counts by exactly sum m^-s over odd
    # non-prime-powers m >= 15
    for s, tol, limit in [(2, mpf("3e-7"), 4_000_000), (3, mpf("1e-9"), 100_000)]:
        direct = t_direct(s, tol)
        gap = t_closed(s) - direct.value
        assert gap > 0
        brute, brute_tail = odd_nonprimepower_sum(s, limit)
        assert abs(gap - brute) <= direct.trunc_estimate + brute_tail + mpf("1e-9")


@pytest.mark.parametrize("s", [4, 6, 8])
def test_gap_positive_more_arguments(s):
    ts = tail_sum(s, mpf("1e-12"))
    assert ts.gap > 0
    assert ts.direct.trunc_estimate <= mpf("1e-12")


def test_gap_ratio_decays_faster_than_eighth():
    # the gap is dominated by the m = 15 term, so one step in s shrinks it
    # by roughly 1/15 (certainly below 1/8); a few percent of relative
    # accuracy per gap is ample for that comparison
    gaps = {}
    for s in range(2, 9):
        tol = mpf(15) ** (-s) / 25
        gaps[s] = t_closed(s) - t_direct(s, tol).value
    for s in range(2, 8):
        assert gaps[s + 1] / gaps[s] < mpf(1) / 8


def test_tail_sum_bundle():
    ts = tail_sum(3, mpf("1e-9"))
    assert ts.s == 3
    assert ts.direct.converged
    assert abs(ts.closed - ts.direct.value - ts.gap) < mpf("1e-45")
