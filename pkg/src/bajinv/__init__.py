"""The ``baj - inv`` statistic on permutations, its v-code/r-code bijection,
and exact verification of the product formula for its generating function."""

from .perm import (
    Permutation, make_permutation, descent_set, inv, baj, baj_minus_inv,
    classic_stats, iterate_with_last, iterate_all,
)
from .codes import (
    VCode, RCode, v_encode, v_decode, v_decode_stages, r_encode, r_decode,
    encode, decode, weight, rank, unrank,
)
from .qpoly import QPolynomial, monomial, geometric, rhs_product, eval_at_one, is_palindromic
from .verify import (
    Distribution, VerificationReport, ResourceLimitError, distribution,
    distribution_all, parallel_distribution, verify_theorem1, verify_theorem2,
    check_bijection,
)

__version__ = "0.1.0"
