"""Exact / high-precision verification oracle.

Independent reference arithmetic used to generate constants, verify that
error-free transformations are exact, count significant decimal digits,
and run small-scale reference matmul / polynomial / root-finding jobs.
Built from primitive big-integer operations only.
"""

from .constants import E_100, LN2_100, PI_100, SQRT3_100, SQRT5_100
from .functions import (
    oracle_cos,
    oracle_exp,
    oracle_ln2,
    oracle_log,
    oracle_pi,
    oracle_pow,
    oracle_sin,
    oracle_sqrt,
)
from .reference import (
    DK_LIMIT,
    MATMUL_LIMIT,
    digit_cap,
    oracle_cmatmul,
    oracle_dk,
    oracle_horner,
    oracle_horner_complex,
    oracle_matmul,
    significant_digits,
    significant_digits_complex,
)
from .values import (
    PREC,
    BigFloat,
    OracleValue,
    exact_add,
    exact_div,
    exact_mul,
    float_pair_prod_exact,
    float_pair_sum_exact,
)

__all__ = [
    "PREC",
    "BigFloat",
    "OracleValue",
    "exact_add",
    "exact_mul",
    "exact_div",
    "float_pair_sum_exact",
    "float_pair_prod_exact",
    "oracle_pi",
    "oracle_ln2",
    "oracle_sqrt",
    "oracle_exp",
    "oracle_log",
    "oracle_cos",
    "oracle_sin",
    "oracle_pow",
    "significant_digits",
    "significant_digits_complex",
    "digit_cap",
    "oracle_matmul",
    "oracle_cmatmul",
    "oracle_horner",
    "oracle_horner_complex",
    "oracle_dk",
    "MATMUL_LIMIT",
    "DK_LIMIT",
    "PI_100",
    "SQRT3_100",
    "SQRT5_100",
    "E_100",
    "LN2_100",
]
