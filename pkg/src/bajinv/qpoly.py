"""
Dense polynomials in ``q`` with exact integer coefficients.

Coefficients are Python ints, so nothing ever wraps.

>>> rhs_product(4)
QPolynomial((1, 1, 2, 1, 1))
>>> str(rhs_product(4))
'1 + q + 2q^2 + q^3 + q^4'
"""

__all__ = [
    "QPolynomial", "ZERO", "ONE", "JSON_SAFE_MAX",
    "monomial", "add", "mul", "geometric", "rhs_product",
    "eval_at_one", "is_palindromic", "json_coeff",
]

from functools import reduce
from typing import Iterable, Mapping

# largest integer a JSON consumer can hold exactly in a double
JSON_SAFE_MAX = 2**53 - 1


class QPolynomial:
    """Immutable; trailing zeros are stripped so ``==`` is structural."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "QPolynomial":
        """Build from an ``{exponent: coefficient}`` map."""
        if not counts:
            return cls()
        if min(counts) < 0:
            raise ValueError("negative exponent")
        cs = [0] * (max(counts) + 1)
        for e, c in counts.items():
            cs[e] += c
        return cls(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, e: int) -> int:
        return self._coeffs[e] if 0 <= e < len(self._coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self == QPolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return QPolynomial(cs)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self._coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPolynomial()
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    cs[i + j] += x * y
        return QPolynomial(cs)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QPolynomial({self._coeffs!r})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


ZERO = QPolynomial()
ONE = QPolynomial((1,))


def monomial(e: int, c: int = 1) -> QPolynomial:
    """``c * q**e``."""
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    return QPolynomial([0] * e + [c])


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a + b


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a * b


def geometric(step: int, count: int) -> QPolynomial:
    """
    ``1 + q^step + q^(2 step) + ... `` with ``count`` terms.

    >>> geometric(2, 2).coeffs
    (1, 0, 1)
    """
    if step < 1 or count < 1:
        raise ValueError(f"need step >= 1 and count >= 1, got {step}, {count}")
    cs = [0] * (step * (count - 1) + 1)
    cs[::step] = [1] * count
    return QPolynomial(cs)


def rhs_product(n: int) -> QPolynomial:
    """
    ``prod_{i=1}^{n-1} sum_{r=0}^{i-1} q^{(n-i) r}``, i.e. the product
    ``prod (1 - q^{i(n-i)}) / (1 - q^i)`` expanded without division.
    """
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    return reduce(mul, (geometric(n - i, i) for i in range(1, n)), ONE)


def eval_at_one(p: QPolynomial) -> int:
    return sum(p.coeffs)


def is_palindromic(p: QPolynomial) -> bool:
    return p.coeffs == p.coeffs[::-1]


def json_coeff(c: int):
    """Coefficient as a JSON value; strings past the double-safe range."""
    return str(c) if abs(c) > JSON_SAFE_MAX else c
