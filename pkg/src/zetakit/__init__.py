"""zetakit: high-precision Riemann zeta evaluators, prime-tail odd-argument
approximations, evaluation on the line Re(s) = 1, and formula forensics."""

from .bern import BernoulliTable, Convention, bernoulli
from .errors import (
    AccuracyError,
    ConfigError,
    DegeneracyError,
    DomainError,
    EvaluationError,
    PoleError,
    ResourceError,
    UsageError,
    ZetakitError,
)
from .forensics import FORMULA_IDS, ForensicsReport, forensics
from .lineone import (
    LineOnePoint,
    NormProbe,
    digamma_gap_check,
    eta_zero_ordinate,
    eta_zero_scan,
    hurwitz_expansion_check,
    mellin_check,
    residue_probe,
    uniform_norm_probe,
    zeta_line_one,
    zeta_line_one_flat,
    zeta_line_one_integral,
)
from .numerics import (
    SeriesResult,
    accelerate_alternating,
    digamma,
    hurwitz_zeta,
    integrate_interval,
    integrate_semiaxis,
    sum_series,
)
from .oddzeta import (
    EvalRow,
    FRatioSample,
    f_ratio,
    odd_error_table,
    zeta_known_ref,
    zeta_odd_bernoulli_free,
    zeta_odd_closed,
    zeta_odd_literature,
    zeta_odd_prime,
)
from .precision import Cplx, Rat, Real
from .primes import PrimeStream, next_prime, primes_up_to
from .primetail import TailSum, odd_nonprimepower_sum, t_closed, t_direct, tail_sum
from .zetacore import (
    euler_product,
    zeta_dirichlet,
    zeta_eta_real,
    zeta_even_closed,
    zeta_even_recurrence,
    zeta_negative_int,
    zeta_oracle,
)

__version__ = "0.1.0"
