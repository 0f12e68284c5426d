"""Partition counting three independent ways.

Every counted family can be produced by (1) a brute-force dynamic program
over the actual parts, (2) expansion of the product generating function, and
(3) a two-branch recursion over modular figurate shifts.  The three routes
share no code beyond the part-set vocabulary, so exact agreement between them
is a meaningful check.

Counting modes: parts may be unrestricted, distinct, or capped at d copies;
the length-signed variant weights a partition by (-1)^length.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from . import reports
from .errors import OracleBoundError, ParameterError
from .figurate import (
    ModularParams,
    figurate_enumerate,
    figurate_index_map,
    require_interior,
)
from .partsets import PartSet
from .reports import VerificationReport
from .series import QSeries, triple_pochhammer

DEFAULT_ORACLE_BOUND = 120
ORACLE_BOUND_ENV = "QPL_ORACLE_BOUND"

ORACLE = "oracle"
GENERATING_FUNCTION = "generating-function"
RECURSION = "recursion"


@dataclass(frozen=True, slots=True)
class CountMode:
    """Multiplicity cap (None = unrestricted, 1 = distinct, d = at most d) and signing."""

    max_multiplicity: int | None = None
    length_signed: bool = False

    def __post_init__(self) -> None:
        if self.max_multiplicity is not None and self.max_multiplicity < 1:
            raise ParameterError("multiplicity cap must be >= 1")

    @property
    def gamma(self) -> int:
        """Weight per part occurrence: +1 plain, -1 length-signed."""
        return -1 if self.length_signed else 1

    def label(self) -> str:
        cap = (
            "unrestricted"
            if self.max_multiplicity is None
            else ("distinct" if self.max_multiplicity == 1 else f"atmost{self.max_multiplicity}")
        )
        return f"{cap}{'-signed' if self.length_signed else ''}"


UNRESTRICTED = CountMode()
DISTINCT = CountMode(1)
SIGNED_UNRESTRICTED = CountMode(None, True)
SIGNED_DISTINCT = CountMode(1, True)


def at_most(d: int, length_signed: bool = False) -> CountMode:
    return CountMode(d, length_signed)


@dataclass(frozen=True)
class SequenceTable:
    """A prefix of an integer sequence together with how it was computed."""

    values: tuple[int, ...]
    provenance: str
    descriptor: str

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def at(self, n: int) -> int:
        """Table value; negative indices count nothing and are 0."""
        if n < 0:
            return 0
        return self.values[n]

    def to_series(self) -> QSeries:
        return QSeries(self.values)


def oracle_bound() -> int:
    """Current cap on oracle arguments; the environment may override the default."""
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        return int(raw)
    except ValueError:
        raise OracleBoundError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}")


# --------------------------------------------------------------------------
# Route 1: brute force
# --------------------------------------------------------------------------


def oracle_count(n: int, part_set: PartSet, mode: CountMode) -> int:
    """Exact (signed) partition count by dynamic programming over the real parts.

    Deliberately simple so it stays obviously correct; refuses n beyond the
    configured bound.  Negative n counts nothing.
    """
    bound = oracle_bound()
    if n > bound:
        raise OracleBoundError(
            f"oracle refuses n={n} above its bound {bound} "
            f"(set {ORACLE_BOUND_ENV} to raise it)"
        )
    if n < 0:
        return 0
    g = mode.gamma
    cap = mode.max_multiplicity
    ways = [0] * (n + 1)
    ways[0] = 1
    for m in part_set.members_upto(n):
        if cap is None:
            for v in range(m, n + 1):
                ways[v] += g * ways[v - m]
        else:
            new = ways[:]
            weight = 1
            for t in range(1, cap + 1):
                weight *= g
                if t * m > n:
                    break
                for v in range(t * m, n + 1):
                    new[v] += weight * ways[v - t * m]
            ways = new
    return ways[n]


def oracle_table(part_set: PartSet, mode: CountMode, order: int) -> SequenceTable:
    values = tuple(oracle_count(n, part_set, mode) for n in range(order + 1))
    return SequenceTable(values, ORACLE, f"{part_set.label()};{mode.label()}")


def generate_partitions(
    n: int, part_set: PartSet, mode: CountMode
) -> Iterator[tuple[int, ...]]:
    """Literally enumerate the partitions (ascending part tuples).

    Exponential; used to validate the dynamic program on small n, giving a
    second, independent layer underneath the oracle.
    """
    members = part_set.members_upto(n)
    cap = mode.max_multiplicity

    def extend(remaining: int, idx: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for i in range(idx, len(members)):
            m = members[i]
            if m > remaining:
                break
            top = remaining // m
            if cap is not None:
                top = min(top, cap)
            for t in range(1, top + 1):
                yield from extend(remaining - t * m, i + 1, prefix + (m,) * t)

    if n == 0:
        yield ()
    elif n > 0:
        yield from extend(n, 0, ())


# --------------------------------------------------------------------------
# Route 2: generating functions
# --------------------------------------------------------------------------


def gf_count(part_set: PartSet, mode: CountMode, order: int) -> SequenceTable:
    """Expand the product generating function over members <= order.

    Per part m the factor is 1/(1 - γq^m) unrestricted, (1 + γq^m) distinct,
    and (1 - γ^{d+1} q^{(d+1)m})/(1 - γq^m) with a cap of d, where γ is the
    per-occurrence weight.
    """
    g = mode.gamma
    cap = mode.max_multiplicity
    acc = QSeries.one(order)
    for m in part_set.members_upto(order):
        if cap is None:
            acc = acc.div_binomial(-g, m)
        elif cap == 1:
            acc = acc.mul_binomial(g, m)
        else:
            top = cap + 1
            g_top = g if top % 2 else 1  # γ^{d+1}
            if top * m <= order:
                acc = acc.mul_binomial(-g_top, top * m)
            acc = acc.div_binomial(-g, m)
    return SequenceTable(acc.coeffs, GENERATING_FUNCTION, f"{part_set.label()};{mode.label()}")


def quotient_series(
    params1: ModularParams, gamma1: int, params2: ModularParams, gamma2: int, order: int
) -> QSeries:
    """Series expansion of the quotient whose numerator carries (params2, γ2)
    and denominator (params1, γ1); the generating-function route for the
    quotient-sequence recursion."""
    if gamma1 not in (1, -1) or gamma2 not in (1, -1):
        raise ParameterError("gamma values must be +1 or -1")
    num = triple_pochhammer(params2.k, params2.ell, gamma2, order)
    den = triple_pochhammer(params1.k, params1.ell, -gamma1, order)
    return num * den.reciprocal()


# --------------------------------------------------------------------------
# Route 3: two-branch recursions over figurate shifts
# --------------------------------------------------------------------------


def _shifts(params: ModularParams, order: int, weight) -> list[tuple[int, int]]:
    """(offset, weight(j)) for j != 0 with M(j) <= order, ascending offsets."""
    pairs = [
        (v, weight(j)) for j, v in figurate_enumerate(params, order) if j != 0
    ]
    pairs.sort()
    return pairs


def _run_two_branch(
    order: int, shifts: list[tuple[int, int]], extra: dict[int, int]
) -> tuple[int, ...]:
    vals = [0] * (order + 1)
    vals[0] = 1
    for n in range(1, order + 1):
        acc = extra.get(n, 0)
        for off, w in shifts:
            if off > n:
                break
            acc += w * vals[n - off]
        vals[n] = acc
    return tuple(vals)


def _alternating(j: int) -> int:
    """(-1)^(j-1): +1 for odd j, -1 for even j (any sign of j)."""
    return 1 if j % 2 else -1


def recursive_count_jbar(params: ModularParams, order: int) -> SequenceTable:
    """p(n; residues-with-multiples) by the Euler-style recursion
    p(n) = sum_{j != 0} (-1)^{j-1} p(n - M(j))."""
    require_interior(params, "the unrestricted-count recursion")
    values = _run_two_branch(order, _shifts(params, order, _alternating), {})
    return SequenceTable(
        values, RECURSION, f"Jbar:{params.k},{params.ell};unrestricted"
    )


def recursive_count_quotient(
    params1: ModularParams, gamma1: int, params2: ModularParams, gamma2: int, order: int
) -> SequenceTable:
    """The quotient sequence s(n): s(0) = 1 and for n >= 1

        s(n) = sum_{j != 0} -(-γ1)^j s(n - M1(j))  [+ γ2^i when n = M2(i)].

    The extra branch locates the unique index i, which exists because interior
    parameters index the figurate values injectively.
    """
    require_interior(params1, "the quotient recursion (denominator)")
    require_interior(params2, "the quotient recursion (numerator)")
    if gamma1 not in (1, -1) or gamma2 not in (1, -1):
        raise ParameterError("gamma values must be +1 or -1")

    def weight(j: int) -> int:
        return gamma1 if j % 2 else -1  # -(-γ1)^j

    extra = {
        v: (gamma2 if i % 2 else 1)
        for v, i in figurate_index_map(params2, order).items()
        if v >= 1
    }
    values = _run_two_branch(order, _shifts(params1, order, weight), extra)
    descriptor = (
        f"quotient:({params1.k},{params1.ell},{gamma1:+d})/"
        f"({params2.k},{params2.ell},{gamma2:+d})"
    )
    return SequenceTable(values, RECURSION, descriptor)


def recursive_count_distinct_j(
    params: ModularParams, gamma: int, order: int
) -> SequenceTable:
    """Distinct-part counts on the plus/minus family (signed when γ = -1):

        x(n) = sum_{j != 0} (-1)^{j-1} x(n - k·ω(j))  [+ γ^i when n = M(i)]

    with ω the general pentagonal numbers.
    """
    require_interior(params, "the distinct-count recursion")
    if gamma not in (1, -1):
        raise ParameterError("gamma must be +1 or -1")
    k = params.k
    shifts = [
        (k * v, _alternating(j))
        for j, v in figurate_enumerate(ModularParams(3, 1), order // k)
        if j != 0 and k * v <= order
    ]
    shifts.sort()
    extra = {
        v: (gamma if i % 2 else 1)
        for v, i in figurate_index_map(params, order).items()
        if v >= 1
    }
    values = _run_two_branch(order, shifts, extra)
    return SequenceTable(
        values, RECURSION, f"J:{params.k},{params.ell};distinct;gamma={gamma:+d}"
    )


def recursive_count_j(params: ModularParams, gamma: int, order: int) -> SequenceTable:
    """Unrestricted counts on the plus/minus family (signed when γ = -1):

        x(n) = sum_{j != 0} -(-γ)^j x(n - M(j))  [+ (-1)^i when n = k·ω(i)].
    """
    require_interior(params, "the unrestricted-J recursion")
    if gamma not in (1, -1):
        raise ParameterError("gamma must be +1 or -1")

    def weight(j: int) -> int:
        return gamma if j % 2 else -1

    k = params.k
    extra: dict[int, int] = {}
    for i, v in figurate_enumerate(ModularParams(3, 1), order // k):
        if i != 0 and 1 <= k * v <= order:
            extra[k * v] = -1 if i % 2 else 1
    values = _run_two_branch(order, _shifts(params, order, weight), extra)
    return SequenceTable(
        values, RECURSION, f"J:{params.k},{params.ell};unrestricted;gamma={gamma:+d}"
    )


def recursive_count_bounded_jbar(
    params: ModularParams, d: int, order: int
) -> SequenceTable:
    """Counts with every part used at most d times, on residues-with-multiples:

        x(n) = sum_{j != 0} (-1)^{j-1} x(n - M(j))  [+ (-1)^i when n = (d+1)·M(i)].
    """
    require_interior(params, "the bounded-multiplicity recursion")
    if d < 1:
        raise ParameterError("multiplicity cap d must be >= 1")
    extra: dict[int, int] = {}
    for v, i in figurate_index_map(params, order // (d + 1)).items():
        if (d + 1) * v >= 1:
            extra[(d + 1) * v] = -1 if i % 2 else 1
    values = _run_two_branch(order, _shifts(params, order, _alternating), extra)
    return SequenceTable(
        values, RECURSION, f"Jbar:{params.k},{params.ell};atmost{d}"
    )


# --------------------------------------------------------------------------
# Identities between partition families
# --------------------------------------------------------------------------


def _signed_figurate_indicator(params: ModularParams, sign: int, order: int) -> QSeries:
    """sum_j sign^j q^{M(j)} over all integers j with M(j) <= order."""
    coeffs = [0] * (order + 1)
    for j, v in figurate_enumerate(params, order):
        coeffs[v] += sign if j % 2 else 1
    return QSeries(tuple(coeffs))


def _scaled_pentagonal_indicator(k: int, order: int, stretch: int = 1) -> QSeries:
    """sum_j (-1)^j q^{stretch·k·ω(j)} truncated at the order."""
    coeffs = [0] * (order + 1)
    for j, v in figurate_enumerate(ModularParams(3, 1), order // (stretch * k)):
        e = stretch * k * v
        if e <= order:
            coeffs[e] += -1 if j % 2 else 1
    return QSeries(tuple(coeffs))


def _first_diff(lhs: QSeries, rhs: QSeries) -> int | None:
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return n
    return None


def partition_shift_identities(
    params: ModularParams, gamma: int, order: int
) -> VerificationReport:
    """Two convolution identities tying the plus/minus family to shifted counts:

    distinct^γ(n; J) = sum_j γ^j · p(n - M(j); multiples of k)
    p(n; J)          = sum_j (-1)^j · p(n - k·ω(j); J with multiples)

    Both sides are expanded as series and compared coefficient-wise.
    """
    require_interior(params, "the partition shift identities")
    if gamma not in (1, -1):
        raise ParameterError("gamma must be +1 or -1")
    k, ell = params.k, params.ell
    ident = "partition_shift"
    parameters = {"k": k, "ell": ell, "gamma": gamma}

    j_set = PartSet.plus_minus(k, ell)
    jbar_set = PartSet.with_multiples(k, ell)
    mult_set = PartSet.multiples(k)

    lhs1 = gf_count(j_set, CountMode(1, gamma == -1), order).to_series()
    rhs1 = _signed_figurate_indicator(params, gamma, order) * gf_count(
        mult_set, UNRESTRICTED, order
    ).to_series()
    n = _first_diff(lhs1, rhs1)
    if n is not None:
        return reports.failed(ident, parameters, order, n, lhs1[n], rhs1[n])

    lhs2 = gf_count(j_set, UNRESTRICTED, order).to_series()
    rhs2 = _scaled_pentagonal_indicator(k, order) * gf_count(
        jbar_set, UNRESTRICTED, order
    ).to_series()
    n = _first_diff(lhs2, rhs2)
    if n is not None:
        return reports.failed(ident, parameters, order, n, lhs2[n], rhs2[n])
    return reports.passed(ident, parameters, order)


def bounded_mult_shift_identity(
    params: ModularParams, d: int, order: int
) -> VerificationReport:
    """Bounded-multiplicity counts as signed shifts of the unrestricted counts:

    p_{<=d}(n; Jbar) = sum_j (-1)^j · p(n - (d+1)·M(j); Jbar).
    """
    require_interior(params, "the bounded-multiplicity shift identity")
    if d < 1:
        raise ParameterError("multiplicity cap d must be >= 1")
    parameters = {"k": params.k, "ell": params.ell, "d": d}
    jbar_set = PartSet.with_multiples(params.k, params.ell)

    lhs = gf_count(jbar_set, at_most(d), order).to_series()
    coeffs = [0] * (order + 1)
    for j, v in figurate_enumerate(params, order // (d + 1)):
        e = (d + 1) * v
        if e <= order:
            coeffs[e] += -1 if j % 2 else 1
    rhs = QSeries(tuple(coeffs)) * gf_count(jbar_set, UNRESTRICTED, order).to_series()
    n = _first_diff(lhs, rhs)
    if n is not None:
        return reports.failed("bounded_mult_shift", parameters, order, n, lhs[n], rhs[n])
    return reports.passed("bounded_mult_shift", parameters, order)
