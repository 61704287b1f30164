"""
Permutations of ``{1, ..., n}`` in one-line notation and the statistics
defined on them: descents, inversions, ``baj`` and ``baj - inv``.

Positions and values are 1-indexed everywhere a caller can see them.

>>> p = make_permutation((5, 4, 7, 2, 3, 6, 1))
>>> descent_set(p), inv(p), baj(p), baj_minus_inv(p)
((1, 3, 6), 14, 24, 10)
"""

__all__ = [
    "Permutation", "ClassicStats", "MAX_ENUMERATION_N",
    "make_permutation", "descent_set", "inv", "baj", "baj_minus_inv",
    "classic_stats", "iterate_with_last", "iterate_all",
]

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

# enumeration entry points refuse anything larger
MAX_ENUMERATION_N = 64


def _check_elements(elements: Sequence[int]) -> None:
    n = len(elements)
    if n == 0:
        raise ValueError("a permutation needs at least one value")
    seen = set()
    for x in elements:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"value {x!r} is not an integer")
        if not 1 <= x <= n:
            raise ValueError(f"value {x} out of range 1..{n}")
        if x in seen:
            raise ValueError(f"duplicate value {x}")
        seen.add(x)


@dataclass(frozen=True)
class Permutation:
    """A rearrangement of ``1..n``; construction validates."""
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        _check_elements(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.elements))
        return " ".join(map(str, self.elements))


PermLike = Union[Permutation, Sequence[int]]


def _seq(p: PermLike) -> tuple[int, ...]:
    if isinstance(p, Permutation):
        return p.elements
    return tuple(p)


def make_permutation(seq: Iterable[int]) -> Permutation:
    """
    Validate ``seq`` as a rearrangement of ``1..len(seq)``.

    >>> make_permutation([1, 1, 2])
    Traceback (most recent call last):
    ...
    ValueError: duplicate value 1
    """
    return Permutation(tuple(seq))


def descent_set(p: PermLike) -> tuple[int, ...]:
    """Positions ``i`` (1-indexed) with ``p[i] > p[i+1]``, increasing."""
    s = _seq(p)
    return tuple(i for i in range(1, len(s)) if s[i - 1] > s[i])


def inv(p: PermLike) -> int:
    """Number of pairs ``i < j`` with ``p[i] > p[j]`` (plain pair count)."""
    s = _seq(p)
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def baj(p: PermLike) -> int:
    """Sum of ``i * (n - i)`` over the descent positions ``i``."""
    n = len(_seq(p))
    return sum(i * (n - i) for i in descent_set(p))


def baj_minus_inv(p: PermLike) -> int:
    return baj(p) - inv(p)


class ClassicStats(NamedTuple):
    des: int
    maj: int


def classic_stats(p: PermLike) -> ClassicStats:
    """Descent count and major index."""
    d = descent_set(p)
    return ClassicStats(des=len(d), maj=sum(d))


def _check_enumeration_size(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n = {n} out of range 1..{MAX_ENUMERATION_N}")


def iterate_with_last(n: int, k: int) -> Iterator[Permutation]:
    """
    Every permutation of ``1..n`` ending in ``k``, lexicographic in the
    first ``n - 1`` entries.

    >>> [str(p) for p in iterate_with_last(3, 3)]
    ['123', '213']
    """
    _check_enumeration_size(n)
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range 1..{n}")
    rest = [x for x in range(1, n + 1) if x != k]
    for head in permutations(rest):
        yield Permutation(head + (k,))


def iterate_all(n: int) -> Iterator[Permutation]:
    """All of S_n, grouped by last value ``k = 1..n``."""
    _check_enumeration_size(n)
    for k in range(1, n + 1):
        yield from iterate_with_last(n, k)
