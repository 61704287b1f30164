"""
The v-code and r-code of a permutation.

The v-code records, for each position ``i``, how many of the first ``i``
entries are ``<= sigma_i``; so ``1 <= v_i <= i`` and ``v_n = sigma_n``.
The r-code turns consecutive v-values into digits ``0 <= r_i < i``; together
with ``k = v_n`` it determines the permutation, and its weight
``sum (n - i) * r_i`` equals ``baj - inv``.

>>> c = v_encode((5, 4, 7, 2, 3, 6, 1))
>>> c.v
(1, 1, 3, 1, 2, 5, 1)
>>> rc = r_encode(c)
>>> rc.k, rc.r, weight(rc), rank(rc)
(1, (0, 1, 0, 0, 2, 1), 10, 169)
"""

__all__ = [
    "VCode", "RCode",
    "v_encode", "v_decode", "v_decode_stages", "r_encode", "r_decode",
    "encode", "decode", "weight", "rank", "unrank", "num_codes",
]

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .perm import Permutation, PermLike, _seq


@dataclass(frozen=True)
class VCode:
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise ValueError("a v-code needs at least one entry")
        for i, x in enumerate(self.v, 1):
            if not 1 <= x <= i:
                raise ValueError(f"v_{i} = {x} out of range 1..{i}")

    @property
    def n(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class RCode:
    """Digits ``r_1..r_{n-1}`` plus the last value ``k``."""
    n: int
    k: int
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if self.n < 1:
            raise ValueError(f"n = {self.n} must be positive")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k = {self.k} out of range 1..{self.n}")
        if len(self.r) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} digits for n = {self.n}, got {len(self.r)}")
        for i, x in enumerate(self.r, 1):
            if not 0 <= x <= i - 1:
                raise ValueError(f"r_{i} = {x} out of range 0..{i - 1}")


def v_encode(p: PermLike) -> VCode:
    s = _seq(p)
    return VCode(tuple(
        sum(1 for j in range(i + 1) if s[j] <= s[i]) for i in range(len(s))))


def v_decode_stages(c: VCode | Sequence[int]) -> list[tuple[int, ...]]:
    """
    The intermediate permutations sigma^(1), ..., sigma^(n).

    Each stage appends ``v_m`` and bumps every earlier value ``>= v_m``.

    >>> ["".join(map(str, s)) for s in v_decode_stages((1, 1, 3, 1, 2, 5, 1))]
    ['1', '21', '213', '3241', '43512', '436125', '5472361']
    """
    if not isinstance(c, VCode):
        c = VCode(tuple(c))
    stages = []
    sigma: list[int] = []
    for x in c.v:
        sigma = [y + 1 if y >= x else y for y in sigma]
        sigma.append(x)
        stages.append(tuple(sigma))
    return stages


def v_decode(c: VCode | Sequence[int]) -> Permutation:
    return Permutation(v_decode_stages(c)[-1])


def r_encode(c: VCode) -> RCode:
    v = c.v
    n = len(v)
    r = []
    for i in range(1, n):
        a, b = v[i - 1], v[i]
        r.append(i * (b <= a) + b - a - 1)
    return RCode(n=n, k=v[-1], r=tuple(r))


def r_decode(rc: RCode) -> VCode:
    """
    Recover the v-code from the right.

    With ``c = v_{i+1} - r_i - 1``: ``c >= 1`` means no descent at ``i`` and
    ``v_i = c``; otherwise ``v_i = i + c``.

    >>> r_decode(RCode(7, 1, (0, 1, 0, 0, 2, 1))).v
    (1, 1, 3, 1, 2, 5, 1)
    """
    v = [0] * rc.n
    v[-1] = rc.k
    for i in range(rc.n - 1, 0, -1):
        c = v[i] - rc.r[i - 1] - 1
        v[i - 1] = c if c >= 1 else i + c
    return VCode(tuple(v))


def encode(p: PermLike) -> RCode:
    """Permutation -> r-code."""
    return r_encode(v_encode(p))


def decode(rc: RCode) -> Permutation:
    """r-code -> permutation."""
    return v_decode(r_decode(rc))


def weight(rc: RCode) -> int:
    n = rc.n
    return sum((n - i) * x for i, x in enumerate(rc.r, 1))


def num_codes(n: int) -> int:
    """Number of r-codes for a fixed ``(n, k)``."""
    return factorial(n - 1)


def rank(rc: RCode) -> int:
    """Factorial-base index: digit ``r_i`` has place value ``(i - 1)!``."""
    total = 0
    place = 1
    for i, x in enumerate(rc.r, 1):
        if i >= 2:
            place *= i - 1
        total += x * place
    return total


def unrank(n: int, k: int, idx: int) -> RCode:
    """
    Inverse of :func:`rank` for fixed ``(n, k)``.

    >>> unrank(7, 1, 169).r
    (0, 1, 0, 0, 2, 1)
    """
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    size = num_codes(n)
    if not 0 <= idx < size:
        raise ValueError(f"idx = {idx} out of range 0..{size - 1}")
    r = []
    for i in range(1, n):
        r.append(idx % i)
        idx //= i
    return RCode(n=n, k=k, r=tuple(r))
