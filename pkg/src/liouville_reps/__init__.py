"""Exact-arithmetic counting of integer representations a*x + b*y = n.

The package computes nine tuple-counting families (Gp/Hp/Ip over the
coprime-restricted solution set, Jp/Kp/Lp over the all-odd coprime set,
G/H/I over the unrestricted set) two independent ways - literal
enumeration and closed formulas - and verifies the summation identities
connecting them, all in exact integer/rational arithmetic.
"""

from .arith import (
    PrimeFactorization,
    bernoulli,
    binomial,
    divisors,
    euler_phi,
    factorize,
    mobius_power_product,
    moebius_mu,
    sigma_m,
)
from .formulas import (
    ClosedFormResult,
    closed_form,
    lemma_21a_rhs,
    theorem_22a,
    theorem_22b,
    theorem_31,
)
from .identities import (
    ErratumCheck,
    EvenFunction,
    IdentitySide,
    convolution_sigma3_sigma,
    lemma_21a,
    lemma_21b,
    odd_moment_sum,
    random_even_tables,
    theorem_1a,
    theorem_1b,
    williams_t11,
)
from .power_sums import (
    PowerSumResult,
    coprime_power_sum_bernoulli,
    coprime_power_sum_direct,
    coprime_power_sum_mobius,
)
from .rep_sets import (
    FAMILIES,
    SET_KINDS,
    RepQuadruple,
    count_definitional,
    count_reduced,
    enumerate_set,
    weighted_sum,
)

__version__ = "0.1.0"

__all__ = [
    "PrimeFactorization",
    "factorize",
    "euler_phi",
    "moebius_mu",
    "divisors",
    "sigma_m",
    "mobius_power_product",
    "bernoulli",
    "binomial",
    "PowerSumResult",
    "coprime_power_sum_direct",
    "coprime_power_sum_mobius",
    "coprime_power_sum_bernoulli",
    "RepQuadruple",
    "SET_KINDS",
    "FAMILIES",
    "enumerate_set",
    "weighted_sum",
    "count_definitional",
    "count_reduced",
    "EvenFunction",
    "IdentitySide",
    "ErratumCheck",
    "theorem_1a",
    "theorem_1b",
    "williams_t11",
    "lemma_21a",
    "lemma_21b",
    "odd_moment_sum",
    "convolution_sigma3_sigma",
    "random_even_tables",
    "ClosedFormResult",
    "theorem_22a",
    "theorem_22b",
    "theorem_31",
    "lemma_21a_rhs",
    "closed_form",
    "__version__",
]
