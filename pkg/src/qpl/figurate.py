"""Gnomons, modular figurate numbers, and Gaussian binomial coefficients.

A parameter pair (k, ell) with 0 <= ell <= k indexes the arithmetic
progression k(i-1) + ell; partial sums of that progression are the modular
figurate numbers M(j) = (k/2)j(j-1) + ell·j, defined for every integer j.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .errors import ParameterError
from .series import QSeries

INTERIOR_HYPOTHESIS = "k >= 3, 0 < ell < k, ell != k/2"


class BoundaryClass(Enum):
    INTERIOR = "interior"
    BOUNDARY_ZERO = "boundary-zero"  # ell = 0 or ell = k
    BOUNDARY_HALF = "boundary-half"  # k even, ell = k/2


@dataclass(frozen=True, slots=True)
class ModularParams:
    """The pair (k, ell) with k >= 1 and 0 <= ell <= k."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError("k must be a positive integer")
        if not 0 <= self.ell <= self.k:
            raise ParameterError(
                f"ell must satisfy 0 <= ell <= k, got ell={self.ell}, k={self.k}"
            )

    @property
    def boundary_class(self) -> BoundaryClass:
        if self.ell in (0, self.k):
            return BoundaryClass.BOUNDARY_ZERO
        if self.k % 2 == 0 and 2 * self.ell == self.k:
            return BoundaryClass.BOUNDARY_HALF
        # remaining cases force k >= 3 automatically
        return BoundaryClass.INTERIOR

    @property
    def is_interior(self) -> bool:
        return self.boundary_class is BoundaryClass.INTERIOR

    def reflected(self) -> "ModularParams":
        """The symmetric pair (k, k - ell)."""
        return ModularParams(self.k, self.k - self.ell)

    def scaled(self, c: int) -> "ModularParams":
        if c < 1:
            raise ParameterError("scale factor must be a positive integer")
        return ModularParams(c * self.k, c * self.ell)

    def __repr__(self) -> str:
        return f"ModularParams(k={self.k}, ell={self.ell})"


def require_interior(params: ModularParams, context: str) -> None:
    """Raise ParameterError naming the violated hypothesis for boundary parameters."""
    if not params.is_interior:
        raise ParameterError(
            f"{context} requires interior parameters ({INTERIOR_HYPOTHESIS}); "
            f"got (k={params.k}, ell={params.ell}), a "
            f"{params.boundary_class.value} case"
        )


def gnomon(params: ModularParams, i: int) -> int:
    """The i-th member k(i-1) + ell of the progression; indexing starts at 1."""
    if i < 1:
        raise IndexError("gnomon index starts at 1")
    return params.k * (i - 1) + params.ell


def figurate(params: ModularParams, j: int) -> int:
    """M(j) = (k/2)·j·(j-1) + ell·j for any integer j; j(j-1) is always even."""
    return params.k * j * (j - 1) // 2 + params.ell * j


_OMEGA = ModularParams(3, 1)


def pentagonal(j: int) -> int:
    """General pentagonal number: the (3, 1) figurate value at index j."""
    return figurate(_OMEGA, j)


def figurate_enumerate(params: ModularParams, bound: int) -> list[tuple[int, int]]:
    """All pairs (j, M(j)) with 0 <= M(j) <= bound, sorted by value then j.

    Values are strictly increasing in each direction past |j| = 1, so the
    outward scan stops after two consecutive misses per direction (margin for
    the flat prefix at the boundary classes).  Boundary parameter pairs report
    both colliding indices.
    """
    if bound < 0:
        raise ParameterError("bound must be non-negative")
    out: list[tuple[int, int]] = []
    j, misses = 0, 0
    while True:
        v = figurate(params, j)
        if v <= bound:
            out.append((j, v))
            misses = 0
        else:
            misses += 1
            if misses >= 2:
                break
        j += 1
    j, misses = -1, 0
    while True:
        v = figurate(params, j)
        if v <= bound:
            out.append((j, v))
            misses = 0
        else:
            misses += 1
            if misses >= 2:
                break
        j -= 1
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def figurate_index_map(params: ModularParams, bound: int) -> dict[int, int]:
    """Map value -> unique index j over 0..bound; interior parameters only."""
    require_interior(params, "figurate index lookup")
    table: dict[int, int] = {}
    for j, v in figurate_enumerate(params, bound):
        if v in table:
            raise ParameterError(
                f"figurate collision at {v} for (k={params.k}, ell={params.ell})"
            )
        table[v] = j
    return table


@dataclass(frozen=True, slots=True)
class QPolynomial:
    """Polynomial in q with integer coefficients; trailing zeros are kept as given."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a QPolynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def shift(self, e: int) -> "QPolynomial":
        """Multiply by q^e."""
        if e < 0:
            raise ParameterError("shift exponent must be non-negative")
        return QPolynomial((0,) * e + self.coeffs)

    def dilate(self, k: int) -> "QPolynomial":
        """Substitute q -> q^k."""
        if k < 1:
            raise ParameterError("dilation factor must be a positive integer")
        if k == 1:
            return self
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QPolynomial(tuple(out))

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        stripped = list(self.coeffs)
        while stripped and stripped[-1] == 0:
            stripped.pop()
        return stripped == stripped[::-1] if stripped else True

    def to_series(self, order: int) -> QSeries:
        return QSeries.from_coeffs(self.coeffs, order)

    def __repr__(self) -> str:
        return f"QPolynomial{self.coeffs}"


@lru_cache(maxsize=None)
def _gauss_coeffs(n: int, m: int) -> tuple[int, ...]:
    # q-Pascal rule: [n, m] = [n-1, m-1] + q^m [n-1, m]
    if m < 0 or m > n:
        return (0,)
    if m == 0 or m == n:
        return (1,)
    a = _gauss_coeffs(n - 1, m - 1)
    b = _gauss_coeffs(n - 1, m)
    out = [0] * max(len(a), m + len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[m + i] += c
    return tuple(out)


def gaussian_binomial(n: int, m: int) -> QPolynomial:
    """The q-binomial coefficient [n choose m]_q; zero polynomial outside 0 <= m <= n.

    Computed by the q-Pascal recurrence with memoization so every intermediate
    value stays integral; at q = 1 the coefficients sum to comb(n, m).
    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    return QPolynomial(_gauss_coeffs(n, int(m)))


def gaussian_binomial_value_at_one(n: int, m: int) -> int:
    """Ordinary binomial coefficient, the q = 1 specialization."""
    if m < 0 or m > n:
        return 0
    return comb(n, m)
