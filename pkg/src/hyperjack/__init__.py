"""Hyperdeterminants, symmetric functions and Jack polynomials in exact arithmetic."""

from .exact import as_rational, factorial, multinomial
from .hyperdet import (
    CompleteGenerator,
    HyperTensor,
    LambdaGenerator,
    OmegaLambdaGenerator,
    det,
    det_strategy_bench,
    hankel,
    toeplitz,
    umbral,
)
from .jack import (
    b_lambda,
    b_rect_closed,
    c_cprime,
    jack_J,
    jack_P,
    jack_Q,
    jack_R,
    kappa,
    scalar_prime_rect,
    skew_P,
    skew_Q,
)
from .laurent import LaurentPoly, alternant, constant_term, dyson_ct, vandermonde
from .partitions import Partition, almost_rectangle, conjugate, partitions_of, reverse_n
from .symfunc import Alphabet, SymFunc, convert, evaluate, negate_alphabet, omega_alpha, schur

__version__ = "0.1.0"
