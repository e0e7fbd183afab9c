"""Multi-word multiple-precision floating-point arithmetic.

Double-word (DD, 106-bit), triple-word (TD, 159-bit) and quadruple-word
(QD, 212-bit) values built from IEEE binary64 components, with conventional
renormalizing and branch-free addition/multiplication, lane-batched layouts,
dense matrix multiplication, polynomial evaluation, Durand-Kerner root
finding, and an exact big-integer verification oracle.
"""

from .eft import assert_rounding_mode, quick_two_sum, two_prod, two_sum
from .multiword import DD, QD, TD, MultiWord, Variant

assert_rounding_mode()

__all__ = [
    "DD",
    "TD",
    "QD",
    "MultiWord",
    "Variant",
    "quick_two_sum",
    "two_sum",
    "two_prod",
    "assert_rounding_mode",
]

__version__ = "0.1.0"
