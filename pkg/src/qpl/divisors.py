"""Restricted divisor sums and their relations to partition counts.

f_J(n) sums the divisors of n lying in a part set J; for the
residues-with-multiples family it satisfies a finite two-branch recursion
over modular figurate shifts, a convolution equivalence against the signed
distinct counts, and a generating-function relation F = -(q·g1')·f that
unwinds to an explicit figurate-shift formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import reports
from .figurate import ModularParams, figurate_enumerate, figurate_index_map, require_interior
from .partsets import PartSet
from .partitions import SIGNED_DISTINCT, UNRESTRICTED, gf_count
from .reports import VerificationReport
from .series import QSeries


@dataclass(frozen=True)
class DivisorTable:
    """Values f(1..N); index 0 is a zero sentinel so values[n] is f(n)."""

    values: tuple[int, ...]
    part_set: PartSet

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def at(self, n: int) -> int:
        if n < 1:
            return 0
        return self.values[n]

    def to_series(self) -> QSeries:
        return QSeries(self.values)


def divisor_sum(part_set: PartSet, n: int) -> int:
    """Sum of the divisors of n that belong to the part set; 0 for n < 1.

    Divisors are scanned in pairs up to sqrt(n); exactness over speed.
    """
    if n < 1:
        return 0
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            if part_set.contains(d):
                total += d
            e = n // d
            if e != d and part_set.contains(e):
                total += e
    return total


def divisor_table(part_set: PartSet, order: int) -> DivisorTable:
    values = (0,) + tuple(divisor_sum(part_set, n) for n in range(1, order + 1))
    return DivisorTable(values, part_set)


def divisor_series(part_set: PartSet, order: int) -> QSeries:
    """Generating function of the restricted divisor sums (constant term 0)."""
    return divisor_table(part_set, order).to_series()


def recursive_divisor_sums(params: ModularParams, order: int) -> DivisorTable:
    """f(n) for the residues-with-multiples family by the finite recursion

        f(n) = sum_{j != 0} (-1)^{j-1} f(n - M(j))  [+ (-1)^{i-1} M(i) when n = M(i)]

    with f vanishing at zero and below.
    """
    require_interior(params, "the divisor-sum recursion")
    shifts = sorted(
        (v, 1 if j % 2 else -1)
        for j, v in figurate_enumerate(params, order)
        if j != 0
    )
    extra = {
        v: (v if i % 2 else -v)
        for v, i in figurate_index_map(params, order).items()
        if v >= 1
    }
    vals = [0] * (order + 1)
    for n in range(1, order + 1):
        acc = extra.get(n, 0)
        for off, w in shifts:
            if off >= n:
                break
            acc += w * vals[n - off]
        vals[n] = acc
    return DivisorTable(tuple(vals), PartSet.with_multiples(params.k, params.ell))


def apostol_convolution_check(params: ModularParams, order: int) -> VerificationReport:
    """Check n·r(n) = -f(n) - sum_{j=1}^{n-1} r(j)·f(n-j) for 1 <= n <= order,

    where r is the signed distinct count on the residues-with-multiples family
    (from its generating function) and f the restricted divisor sum (from
    direct divisor scans).
    """
    require_interior(params, "the divisor convolution check")
    parameters = {"k": params.k, "ell": params.ell}
    jbar = PartSet.with_multiples(params.k, params.ell)
    r = gf_count(jbar, SIGNED_DISTINCT, order).values
    f = divisor_table(jbar, order).values
    for n in range(1, order + 1):
        lhs = n * r[n]
        rhs = -f[n] - sum(r[j] * f[n - j] for j in range(1, n))
        if lhs != rhs:
            return reports.failed("apostol", parameters, order, n, lhs, rhs)
    return reports.passed("apostol", parameters, order)


def kim_identity_check(params: ModularParams, order: int) -> VerificationReport:
    """Check F = -(q·g1')·f as series, then the unwound divisor-sum formula.

    g1 is the signed distinct generating function, f the unrestricted one,
    F the divisor-sum generating function.  Since g1 is supported on the
    figurate numbers with signs (-1)^j, expanding -(q·g1')·f yields

        f(n) = sum_{j != 0} (-1)^{j-1} M(j) · p(n - M(j); Jbar),

    which is checked value-by-value against direct divisor scans.
    """
    require_interior(params, "the divisor-sum identity check")
    parameters = {"k": params.k, "ell": params.ell}
    jbar = PartSet.with_multiples(params.k, params.ell)

    g1 = gf_count(jbar, SIGNED_DISTINCT, order).to_series()
    f_series = gf_count(jbar, UNRESTRICTED, order).to_series()
    big_f = divisor_series(jbar, order)

    lhs = big_f
    rhs = g1.q_dq().scale(-1) * f_series
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            return reports.failed("kim", parameters, order, n, lhs[n], rhs[n])

    p = gf_count(jbar, UNRESTRICTED, order).values
    for n in range(1, order + 1):
        total = 0
        for j, v in figurate_enumerate(params, n):
            if j == 0:
                continue
            total += (v if j % 2 else -v) * p[n - v]
        scan = divisor_sum(jbar, n)
        if total != scan:
            return reports.failed("kim", parameters, order, n, scan, total)
    return reports.passed("kim", parameters, order)
