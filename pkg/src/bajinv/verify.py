"""
Exhaustive tallies of ``baj - inv`` and exact checks of the product formula.

The enumeration kernel walks prefixes depth-first and carries ``baj - inv``
incrementally, so a leaf costs O(1) instead of the O(n^2) of recomputing the
statistics. ``iterate_with_last`` + ``baj_minus_inv`` is the slow oracle.
"""

__all__ = [
    "DEFAULT_MAX_N", "ResourceLimitError", "Distribution", "VerificationReport",
    "distribution", "distribution_all", "parallel_distribution",
    "verify_theorem1", "verify_theorem2", "check_bijection",
]

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial, perm
from typing import Optional, Union

from .codes import RCode, r_decode, r_encode, v_decode, v_encode, weight
from .perm import baj_minus_inv
from .qpoly import QPolynomial, rhs_product

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 13


class ResourceLimitError(ValueError):
    """Requested enumeration is larger than the configured ceiling."""


@dataclass(frozen=True)
class Distribution:
    n: int
    k: Union[int, str]  # "all" for the whole of S_n
    counts: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_qpoly(self) -> QPolynomial:
        return QPolynomial.from_counts(self.counts)


@dataclass(frozen=True)
class VerificationReport:
    n: int
    k: Union[int, str]
    status: str  # "pass" | "fail"
    permutations_checked: int
    first_mismatch: Optional[tuple[int, int, int]] = None  # exponent, lhs, rhs
    elapsed: float = field(default=0.0, compare=False)
    what: str = "theorem2"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _check_args(n: int, k: Optional[int], max_n: int) -> None:
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range 1..{n}")
    if n > max_n:
        raise ResourceLimitError(
            f"n = {n} exceeds the enumeration ceiling {max_n} "
            f"({factorial(n - 1):,} permutations per k); raise max_n to force it")


def _tally_prefixes(n: int, k: int, prefixes) -> Counter:
    """Tally ``baj - inv`` over all permutations ending in ``k`` that start
    with one of ``prefixes`` (tuples of distinct values, none equal to k)."""
    counts: Counter = Counter()
    w = [i * (n - i) for i in range(n)]
    avail = [x for x in range(1, n + 1) if x != k]
    # placing k last adds n - k inversions; a descent at n-1 adds n - 1
    tail_inv = n - k

    def walk(pos, used, last, score):
        if pos == n - 1:
            counts[score - tail_inv + (w[pos] if last > k else 0)] += 1
            return
        for x in avail:
            bit = 1 << x
            if used & bit:
                continue
            s = score - (used >> x).bit_count()
            if last > x:
                s += w[pos]
            walk(pos + 1, used | bit, x, s)

    for prefix in prefixes:
        used, last, score = 0, 0, 0
        for pos, x in enumerate(prefix):
            score -= (used >> x).bit_count()
            if last > x:
                score += w[pos]
            used |= 1 << x
            last = x
        walk(len(prefix), used, last, score)
    return counts


def _tally_worker(args) -> dict[int, int]:
    n, k, prefixes = args
    return dict(_tally_prefixes(n, k, prefixes))


def distribution(n: int, k: int, max_n: int = DEFAULT_MAX_N) -> Distribution:
    """
    Exponent -> count of ``baj - inv`` over permutations of ``1..n`` ending in k.

    >>> distribution(4, 4).counts
    {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    """
    _check_args(n, k, max_n)
    return Distribution(n, k, dict(_tally_prefixes(n, k, [()])))


def _blocks(n: int, k: int, parts: int) -> list[tuple[tuple[int, ...], ...]]:
    """Split the prefix space into ``min(parts, #prefixes)`` contiguous chunks.

    Prefix length is the smallest that yields at least ``parts`` prefixes."""
    others = [x for x in range(1, n + 1) if x != k]
    depth = 0
    while depth < n - 1 and perm(n - 1, depth) < parts:
        depth += 1
    prefixes = list(permutations(others, depth))
    m = min(parts, len(prefixes))
    size, extra = divmod(len(prefixes), m)
    chunks, start = [], 0
    for j in range(m):
        stop = start + size + (j < extra)
        chunks.append(tuple(prefixes[start:stop]))
        start = stop
    return chunks


def parallel_distribution(n: int, k: int, parts: int,
                          max_n: int = DEFAULT_MAX_N) -> Distribution:
    """Same result as :func:`distribution`, computed by ``parts`` workers
    over disjoint prefix blocks and merged exponent-wise."""
    _check_args(n, k, max_n)
    if parts < 1:
        raise ValueError(f"parts = {parts} must be positive")
    chunks = _blocks(n, k, parts)
    jobs = [(n, k, c) for c in chunks]
    if len(jobs) == 1:
        results = [_tally_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as ex:
            results = list(ex.map(_tally_worker, jobs))
    total: Counter = Counter()
    for r in results:
        total.update(r)
    return Distribution(n, k, dict(total))


def _dist(n, k, parts, max_n):
    if parts is None or parts == 1:
        return distribution(n, k, max_n=max_n)
    return parallel_distribution(n, k, parts, max_n=max_n)


def distribution_all(n: int, parts: Optional[int] = None,
                     max_n: int = DEFAULT_MAX_N) -> Distribution:
    """Sum of the per-k distributions over all of S_n."""
    _check_args(n, None, max_n)
    total: Counter = Counter()
    for k in range(1, n + 1):
        total.update(_dist(n, k, parts, max_n).counts)
    return Distribution(n, "all", dict(total))


def _first_mismatch(lhs: QPolynomial, rhs: QPolynomial):
    for e in range(max(len(lhs.coeffs), len(rhs.coeffs))):
        if lhs[e] != rhs[e]:
            return (e, lhs[e], rhs[e])
    return None


def _report(what, n, k, lhs, rhs, checked, t0) -> VerificationReport:
    mismatch = _first_mismatch(lhs, rhs)
    report = VerificationReport(
        n=n, k=k, status="fail" if mismatch else "pass",
        permutations_checked=checked, first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0, what=what)
    log.info("%s n=%d k=%s: %s in %.3fs", what, n, k, report.status, report.elapsed)
    return report


def verify_theorem2(n: int, k: int, parts: Optional[int] = None,
                    max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Tally for fixed last value ``k`` against :func:`rhs_product`."""
    t0 = time.perf_counter()
    d = _dist(n, k, parts, max_n)
    return _report("theorem2", n, k, d.to_qpoly(), rhs_product(n), d.total, t0)


def verify_theorem1(n: int, parts: Optional[int] = None,
                    max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Tally over all of S_n against ``n * rhs_product(n)``."""
    t0 = time.perf_counter()
    d = distribution_all(n, parts=parts, max_n=max_n)
    return _report("theorem1", n, "all", d.to_qpoly(), n * rhs_product(n),
                   d.total, t0)


def check_bijection(n: int, k: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """
    Walk every digit tuple for ``(n, k)`` through r_decode and v_decode and
    check the image: last value ``k``, ``baj - inv`` equal to the weight,
    re-encoding gives the same digits, and no permutation is hit twice.

    On failure ``first_mismatch`` holds ``(position in the digit sweep,
    weight, observed baj - inv)`` of the first bad tuple; observed is -1 when
    the weight matched but another check failed.
    """
    _check_args(n, k, max_n)
    t0 = time.perf_counter()
    seen = set()
    checked = 0
    bad = None
    for idx, digits in enumerate(product(*(range(i) for i in range(1, n)))):
        rc = RCode(n=n, k=k, r=digits)
        vc = r_decode(rc)
        p = v_decode(vc)
        checked += 1
        wt = weight(rc)
        stat = baj_minus_inv(p)
        if stat != wt:
            bad = (idx, wt, stat)
            break
        if p[-1] != k or v_encode(p) != vc or r_encode(vc) != rc or p in seen:
            bad = (idx, wt, -1)
            break
        seen.add(p)
    report = VerificationReport(
        n=n, k=k, status="fail" if bad else "pass", permutations_checked=checked,
        first_mismatch=bad, elapsed=time.perf_counter() - t0, what="bijection")
    log.info("bijection n=%d k=%d: %s", n, k, report.status)
    return report
