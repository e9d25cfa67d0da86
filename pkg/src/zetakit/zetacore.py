"""Classical zeta evaluators.

Independent routes to the same values: the defining Dirichlet series, the
alternating (eta) series with acceleration, the Euler product over primes,
the Bernoulli closed form at even integers, a Bernoulli-free recurrence
for even integers, exact rationals at non-positive integers, and an
Euler-Maclaurin oracle on the complex half-plane used to audit everything
else.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Union

from mpmath import mp, mpf, mpc

from .bern import BernoulliTable, Convention, bernoulli
from .errors import AccuracyError, DomainError, PoleError
from .numerics import SeriesResult, accel_order_for, accelerate_alternating
from .precision import DEFAULT_DIGITS, as_mpf, check_digits, rat_to_mpf, working
from .primes import primes_array_up_to

__all__ = [
    "BernoulliTable",
    "Convention",
    "bernoulli",
    "zeta_dirichlet",
    "zeta_eta_real",
    "euler_product",
    "zeta_even_closed",
    "zeta_negative_int",
    "zeta_even_recurrence",
    "zeta_oracle",
]

# Below this, the eta prefactor 1 - 2^(1-s) amplifies noise too much.
ETA_DEGENERACY_THRESHOLD = mpf("1e-20")

_DIRICHLET_MAX_TERMS = 2_000_000


def zeta_dirichlet(s, tol, digits: int = DEFAULT_DIGITS) -> SeriesResult:
    """Defining series ``sum n^(-s)`` for s > 1 with an integral tail bound.

    The integral of x^(-s) over the truncated tail is added to the partial
    sum; what remains is bounded by N^(-s), which becomes the truncation
    estimate and the convergence test.  If the needed N exceeds the term
    budget the partial result is returned with ``converged=False``.
    """
    digits = check_digits(digits)
    with working(digits):
        s = as_mpf(s, digits)
        tol = as_mpf(tol, digits)
        if s == 1:
            raise PoleError("zeta has a simple pole at s = 1")
        if s < 1:
            raise DomainError("the defining series diverges for s <= 1")
        # remaining error after the integral correction is <= N^(-s)
        n_need = int(mp.ceil(tol ** (-1 / s))) + 1
        n_used = min(n_need, _DIRICHLET_MAX_TERMS)
        s_int = int(s) if s == int(s) else None
        total = mpf(0)
        if s_int is not None:
            for n in range(1, n_used + 1):
                total += mpf(1) / mpf(n) ** s_int
        else:
            for n in range(1, n_used + 1):
                total += mpf(n) ** (-s)
        N = mpf(n_used)
        total += N ** (1 - s) / (s - 1)
        est = N ** (-s)
        return SeriesResult(total, n_used, est, est <= tol)


def zeta_eta_real(s, tol, digits: int = DEFAULT_DIGITS) -> SeriesResult:
    """zeta(s) from the accelerated alternating series, s > 0, s != 1."""
    digits = check_digits(digits)
    with working(digits):
        s = as_mpf(s, digits)
        tol = as_mpf(tol, digits)
        if s == 1:
            raise PoleError("zeta has a simple pole at s = 1")
        if s <= 0:
            raise DomainError("eta route requires s > 0")
        pref = 1 - mpf(2) ** (1 - s)
        if abs(pref) < ETA_DEGENERACY_THRESHOLD:
            raise PoleError("eta prefactor 1 - 2^(1-s) is degenerately small")
        order = accel_order_for(tol * abs(pref), digits)
        acc = accelerate_alternating(lambda n: mpf(n) ** (-s), order, digits=digits)
        value = acc.value / pref
        est = acc.trunc_estimate / abs(pref)
        return SeriesResult(value, acc.terms_used, est, est <= tol)


def euler_product(s, prime_bound: int, digits: int = DEFAULT_DIGITS) -> mpf:
    """Finite Euler product ``prod_{p <= bound} p^s / (p^s - 1)``, s > 1."""
    digits = check_digits(digits)
    with working(digits):
        s = as_mpf(s, digits)
        if s <= 1:
            raise DomainError("Euler product requires s > 1")
        if prime_bound < 2:
            raise DomainError("prime_bound must be >= 2")
        primes = primes_array_up_to(prime_bound)
        s_int = int(s) if s == int(s) else None
        prod = mpf(1)
        for p in primes.tolist():
            if s_int is not None:
                ps = mpf(p**s_int)
            else:
                ps = mpf(p) ** s
            prod *= ps / (ps - 1)
        return prod


def zeta_even_closed(two_n: int, digits: int = DEFAULT_DIGITS) -> mpf:
    """Closed form at positive even integers:
    zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!).

    The rational coefficient is computed exactly and only converted to a
    float (against pi^(2n)) at the working precision.
    """
    if two_n < 2 or two_n % 2 != 0:
        raise DomainError(f"argument must be a positive even integer, got {two_n}")
    digits = check_digits(digits)
    n = two_n // 2
    coeff = (
        Fraction((-1) ** (n + 1))
        * bernoulli(two_n)
        * Fraction(2**two_n, 2 * factorial(two_n))
    )
    with working(digits):
        return rat_to_mpf(coeff, digits) * mp.pi**two_n


def zeta_negative_int(n: int) -> Fraction:
    """Exact zeta(-n) = -B_{n+1}/(n+1) for n >= 0.

    Uses the B1 = +1/2 convention so that zeta(0) = -1/2; even negative
    arguments come out exactly zero because odd Bernoulli numbers vanish.
    """
    if n < 0:
        raise DomainError("zeta_negative_int takes n >= 0 (the argument is -n)")
    return -bernoulli(n + 1, Convention.B1_PLUS_HALF) / (n + 1)


def zeta_even_recurrence(two_k: int, digits: int = DEFAULT_DIGITS) -> mpf:
    """zeta(2k) built from zeta(2), ..., zeta(2k-2) without Bernoulli numbers:

        zeta(2k) = -(sum_{j=0}^{k-2} (-1/pi^2)^(j+1) zeta(2j+2)/(2k-2j-1)!
                     + k/(2k+1)!) * pi^(2k) * (-1)^k

    Pure floating arithmetic; the base case zeta(2) = pi^2/6 is built in.
    """
    if two_k < 2 or two_k % 2 != 0:
        raise DomainError(f"argument must be a positive even integer, got {two_k}")
    digits = check_digits(digits)
    k_max = two_k // 2
    with working(digits):
        pi2 = mp.pi**2
        values = [pi2 / 6]  # zeta(2)
        for k in range(2, k_max + 1):
            acc = mpf(k) / mp.factorial(2 * k + 1)
            for j in range(k - 1):
                acc += (-1 / pi2) ** (j + 1) * values[j] / mp.factorial(2 * k - 2 * j - 1)
            values.append(-acc * mp.pi ** (2 * k) * (-1) ** k)
        return values[k_max - 1]


def _em_zeta(s: mpc, N: int, K: int, digits: int) -> mpc:
    """Euler-Maclaurin partial sum + integral + Bernoulli corrections."""
    with working(digits):
        total = mpc(0)
        if s.imag == 0 and s.real == int(s.real) and s.real > 0:
            se = int(s.real)
            for n in range(1, N):
                total += mpf(1) / mpf(n) ** se
        else:
            for n in range(1, N):
                total += mpc(n) ** (-s)
        Nf = mpf(N)
        total += Nf ** (1 - s) / (s - 1) + Nf ** (-s) / 2
        rising = mpc(1)
        npow = Nf ** (-s - 1)
        for k in range(1, K + 1):
            if k == 1:
                rising = s
            else:
                rising *= (s + 2 * k - 3) * (s + 2 * k - 2)
            b2k = rat_to_mpf(bernoulli(2 * k), digits + 10)
            total += b2k / mp.factorial(2 * k) * rising * npow
            npow /= Nf * Nf
        return total


def zeta_oracle(s, tol, digits: int = DEFAULT_DIGITS) -> mpc:
    """Independent Euler-Maclaurin evaluation of zeta(s), Re(s) > -1/2.

    N starts at max(50, 10|Im s|) with 12 correction terms and doubles until
    two successive evaluations agree within ``tol``; the second of the pair
    is returned (its own error is then far below the observed difference).
    """
    digits = check_digits(digits)
    with working(digits):
        s = mpc(s)
        tol = as_mpf(tol, digits)
        if abs(s - 1) <= mpf("1e-30"):
            raise PoleError("zeta has a simple pole at s = 1")
        if s.real <= mpf("-0.5"):
            raise DomainError("oracle supports Re(s) > -1/2 only")
        N = max(50, int(10 * abs(s.imag)) + 1)
        K = 12
        prev = _em_zeta(s, N, K, digits)
        for _ in range(10):
            N *= 2
            cur = _em_zeta(s, N, K, digits)
            if abs(cur - prev) <= tol:
                return cur
            prev = cur
        raise AccuracyError(
            "Euler-Maclaurin oracle failed to stabilize", achieved=abs(cur - prev)
        )


def zeta_reference(s, digits: int = DEFAULT_DIGITS) -> Union[mpf, mpc]:
    """High-precision reference zeta for internal consumers.

    Thin wrapper over the Euler-Maclaurin oracle at ~full working accuracy;
    returns a real value for real input.
    """
    digits = check_digits(digits)
    with working(digits):
        tol = mpf(10) ** (-(digits + 2))
        z = zeta_oracle(s, tol, digits=digits)
        if mpc(s).imag == 0:
            return z.real
        return z
