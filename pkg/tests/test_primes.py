import pytest
from hypothesis import given, settings, strategies as st

from zetakit.errors import ResourceError
from zetakit.primes import PrimeStream, next_prime, primes_up_to


def trial_division_count(n):
    count = 0
    for m in range(2, n + 1):
        if m > 2 and m % 2 == 0:
            continue
        d = 3
        is_p = m == 2 or m % 2 == 1
        while is_p and d * d <= m:
            if m % d == 0:
                is_p = False
            d += 2
        if is_p and m >= 2:
            count += 1
    return count


def test_examples():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(2) == [2]
    assert primes_up_to(1) == []
    assert primes_up_to(0) == []


@given(st.integers(min_value=0, max_value=20_000))
@settings(max_examples=100, deadline=None)
def test_count_matches_trial_division(n):
    assert len(primes_up_to(n)) == trial_division_count(n)


def test_classical_checkpoints():
    assert len(primes_up_to(10 ** 5)) == 9592
    assert len(primes_up_to(10 ** 6)) == 78498


def test_stream_first_values():
    s = PrimeStream()
    assert next_prime(s) == 2
    assert next_prime(s) == 3
    for _ in range(22):
        next_prime(s)
    assert next_prime(s) == 97  # 25th prime, cf. primes_up_to(100)
    assert primes_up_to(100)[24] == 97
    assert s.emitted == 25


def test_stream_matches_sieve_up_to_reached_bound():
    s = PrimeStream(initial_bound=64)
    got = []
    while True:
        p = s.next_prime()
        if p > 10_000:
            break
        got.append(p)
    assert got == primes_up_to(10_000)


def test_stream_growth_doubles_bound():
    s = PrimeStream(initial_bound=100)
    b0 = s.sieve_bound
    for _ in range(200):   # way past the primes below 100
        s.next_prime()
    assert s.sieve_bound >= 2 * b0


def test_stream_memory_cap():
    s = PrimeStream(initial_bound=1 << 12, memory_cap=4096)
    with pytest.raises(ResourceError):
        for _ in range(100_000):
            s.next_prime()


def test_stream_strictly_increasing():
    s = PrimeStream(initial_bound=16)
    prev = 0
    for _ in range(2000):
        p = s.next_prime()
        assert p > prev
        prev = p
