"""Verification harness: expand both sides of each identity, compare exactly.

Every check here is an exact integer comparison at an explicit truncation
order; there is no tolerance anywhere in this module.  A report either passes
at the verified order or carries the first mismatching coefficient.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, Sequence

from . import reports
from .divisors import apostol_convolution_check, kim_identity_check
from .errors import ParameterError
from .figurate import (
    ModularParams,
    figurate,
    figurate_enumerate,
    gaussian_binomial,
)
from .partsets import PartSet
from .partitions import (
    CountMode,
    SIGNED_DISTINCT,
    bounded_mult_shift_identity,
    gf_count,
    partition_shift_identities,
)
from .reports import VerificationReport
from .series import QSeries, ZLaurentSeries, triple_pochhammer


def _first_diff(lhs: QSeries, rhs: QSeries) -> int | None:
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return n
    return None


def compare_series(
    identity: str, parameters: dict, order: int, lhs: QSeries, rhs: QSeries
) -> VerificationReport:
    """Exact coefficient comparison; a fail pinpoints the first bad exponent."""
    n = _first_diff(lhs, rhs)
    if n is None:
        return reports.passed(identity, parameters, order)
    return reports.failed(identity, parameters, order, n, lhs[n], rhs[n])


# --------------------------------------------------------------------------
# Two-variable triple product
# --------------------------------------------------------------------------


def verify_triple_product(q_order: int, z_window: int) -> VerificationReport:
    """Expand prod_m (1-q^m)(1+q^m z^{-1})(1+q^{m-1}z) and compare the
    coefficient of z^j with q^{(j^2-j)/2} for |j| <= z_window, up to q_order.

    Soundness of the finite computation:

    * factor count M = q_order + z_window + 2: a factor with m-1 > q_order
      multiplies every retained q-exponent past the order, so later factors
      are invisible;
    * the accumulation window is widened to |j| <= z_window + B where
      B(B-1)/2 > q_order: a term that leaves the widened window can only come
      back to the reported window by z-moves with distinct q-costs whose sum
      exceeds q_order, so clamping never changes a reported coefficient.
    """
    if q_order < 0 or z_window < 0:
        raise ParameterError("q_order and z_window must be non-negative")
    n_ord, j_win = q_order, z_window
    b = 2
    while b * (b - 1) // 2 <= n_ord:
        b += 1
    w = j_win + b
    size = 2 * w + 1
    rows: list[list[int]] = [[0] * (n_ord + 1) for _ in range(size)]
    rows[w][0] = 1
    lo = hi = w  # active row range
    factors = n_ord + j_win + 2
    for m in range(1, factors + 1):
        if m <= n_ord:
            for idx in range(lo, hi + 1):
                row = rows[idx]
                row[m:] = [a - c for a, c in zip(row[m:], row)]
        e_up = m - 1
        if e_up <= n_ord:
            if hi < size - 1:
                hi += 1
            # descending so each source row is still the pre-multiply value
            for idx in range(hi, lo, -1):
                row, src = rows[idx], rows[idx - 1]
                row[e_up:] = [a + c for a, c in zip(row[e_up:], src)]
        if m <= n_ord:
            if lo > 0:
                lo -= 1
            for idx in range(lo, hi):
                row, src = rows[idx], rows[idx + 1]
                row[m:] = [a + c for a, c in zip(row[m:], src)]
    product = ZLaurentSeries(-w, tuple(QSeries(tuple(r)) for r in rows))

    parameters = {"z_window": j_win}
    for j in range(-j_win, j_win + 1):
        e = (j * j - j) // 2
        expected = (
            QSeries.monomial(e, n_ord) if e <= n_ord else QSeries.zero(n_ord)
        )
        got = product.zcoeff(j)
        if got != expected:
            n = _first_diff(got, expected)
            return reports.failed(
                "triple_product", parameters, n_ord, n, got[n], expected[n], z_exponent=j
            )
    return reports.passed("triple_product", parameters, n_ord)


# --------------------------------------------------------------------------
# One-variable specializations
# --------------------------------------------------------------------------


def _signed_indicator(params: ModularParams, sign: int, order: int) -> QSeries:
    """sum over all integers j of sign^j q^{M(j)}; colliding indices add up."""
    coeffs = [0] * (order + 1)
    for j, v in figurate_enumerate(params, order):
        coeffs[v] += sign if j % 2 else 1
    return QSeries(tuple(coeffs))


def verify_specialized(
    params: ModularParams, sign: int, q_order: int
) -> VerificationReport:
    """Triple product at q -> q^k, z -> sign·q^ell against the figurate series.

    Valid for every 0 <= ell <= k including the boundary classes, where the
    colliding indices either double (sign +1) or cancel (sign -1, ell in
    {0, k}: both sides vanish identically).
    """
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    lhs = triple_pochhammer(params.k, params.ell, sign, q_order)
    rhs = _signed_indicator(params, sign, q_order)
    return compare_series(
        "specialized",
        {"k": params.k, "ell": params.ell, "sign": sign},
        q_order,
        lhs,
        rhs,
    )


def verify_berger(k: int, q_order: int) -> VerificationReport:
    """Polygonal-number identities (ell = 1, both signs; k+2 polygon sides)."""
    if k < 1:
        raise ParameterError("k must be a positive integer")
    params = ModularParams(k, 1)
    for sign in (1, -1):
        rep = verify_specialized(params, sign, q_order)
        if not rep.passed:
            return VerificationReport(
                "berger", {"k": k, "sign": sign}, q_order, False, rep.mismatch
            )
    return reports.passed("berger", {"k": k}, q_order)


# --------------------------------------------------------------------------
# Finite (Hermite-style) product
# --------------------------------------------------------------------------

_HERMITE_GRID = (ModularParams(3, 1), ModularParams(4, 1), ModularParams(5, 2))


def verify_hermite(
    s: int,
    substitution_grid: Sequence[ModularParams] = _HERMITE_GRID,
    max_s: int = 6,
) -> VerificationReport:
    """Exact check of the finite two-variable product identity

        prod_{m=1}^{s} (1+q^m z^{-1})(1+q^{m-1}z)
            = sum_{j=-s}^{s} [2s choose s+j]_q q^{(j^2-j)/2} z^j

    (both sides are polynomials of q-degree at most s^2, so order s^2 makes
    the comparison exact), followed by the substituted forms: the distinct
    (plain and signed) generating functions on each finite prefix family
    equal the matching Gaussian-coefficient sums in q^k.
    """
    if s < 0:
        raise ParameterError("s must be non-negative")
    if s > max_s:
        raise ParameterError(f"s is capped at {max_s} for the exact expansion")
    parameters = {"s": s}
    order = max(s * s, 0)

    lhs = ZLaurentSeries.one(order)
    for m in range(1, s + 1):
        lhs = lhs * ZLaurentSeries.qz_binomial(1, m, -1, order)
        lhs = lhs * ZLaurentSeries.qz_binomial(1, m - 1, 1, order)

    for j in range(-s, s + 1):
        e = (j * j - j) // 2
        poly = gaussian_binomial(2 * s, s + j)
        expected = poly.to_series(order).shift(e) if e <= order else QSeries.zero(order)
        got = lhs.zcoeff(j)
        if got != expected:
            n = _first_diff(got, expected)
            return reports.failed(
                "hermite", parameters, order, n, got[n], expected[n], z_exponent=j
            )
    # z-exponents beyond |s| must vanish on the product side
    for j in (-s - 1, s + 1):
        if not lhs.zcoeff(j).is_zero():
            series = lhs.zcoeff(j)
            n = next(i for i, c in enumerate(series.coeffs) if c)
            return reports.failed(
                "hermite", parameters, order, n, series[n], 0, z_exponent=j
            )

    if s >= 1:
        for params in substitution_grid:
            rep = _verify_hermite_substituted(params, s)
            if not rep.passed:
                return rep
    return reports.passed("hermite", parameters, order)


def _verify_hermite_substituted(params: ModularParams, s: int) -> VerificationReport:
    """Finite-prefix generating functions against Gaussian sums in q^k.

    The prefix family sums to k·s^2, so that order keeps both polynomials whole.
    """
    k, ell = params.k, params.ell
    order = k * s * s
    prefix = PartSet.finite_prefix(k, ell, s)
    for gamma in (1, -1):
        lhs = gf_count(prefix, CountMode(1, gamma == -1), order).to_series()
        rhs = QSeries.zero(order)
        for j in range(-s, s + 1):
            e = figurate(params, j)
            if e > order:
                continue
            term = gaussian_binomial(2 * s, s + j).dilate(k).to_series(order).shift(e)
            if j % 2 and gamma == -1:
                term = term.scale(-1)
            rhs = rhs + term
        n = _first_diff(lhs, rhs)
        if n is not None:
            return reports.failed(
                "hermite",
                {"s": s, "k": k, "ell": ell, "gamma": gamma},
                order,
                n,
                lhs[n],
                rhs[n],
            )
    return reports.passed("hermite", {"s": s, "k": k, "ell": ell}, order)


# --------------------------------------------------------------------------
# Boundary identities (k even, ell = k/2)
# --------------------------------------------------------------------------


def verify_boundary_half(k: int, q_order: int) -> VerificationReport:
    """The two printed identities of the half-boundary case:

    (a) prod (1-q^{km})(1+q^{km-k/2}) / ((1+q^{km})(1-q^{km-k/2}))
          = sum_j q^{(k/2)j^2}
    (b) prod (1+q^{km})(1+q^{km-k/2})(1-q^{km-k/2}) = 1

    The quotient in (a) goes through the exact series reciprocal.
    """
    if k < 2 or k % 2:
        raise ParameterError("the half-boundary identities need an even k >= 2")
    half = k // 2
    parameters = {"k": k}

    numerator = QSeries.one(q_order)
    denominator = QSeries.one(q_order)
    extra = QSeries.one(q_order)
    m = 1
    while k * m - half <= q_order:
        if k * m <= q_order:
            numerator = numerator.mul_binomial(-1, k * m)
            denominator = denominator.mul_binomial(1, k * m)
            extra = extra.mul_binomial(1, k * m)
        numerator = numerator.mul_binomial(1, k * m - half)
        denominator = denominator.mul_binomial(-1, k * m - half)
        extra = extra.mul_binomial(1, k * m - half).mul_binomial(-1, k * m - half)
        m += 1
    quotient = numerator * denominator.reciprocal()

    rhs = [0] * (q_order + 1)
    rhs[0] = 1
    j = 1
    while half * j * j <= q_order:
        rhs[half * j * j] += 2
        j += 1
    rep = compare_series("boundary_half", parameters, q_order, quotient, QSeries(tuple(rhs)))
    if not rep.passed:
        return rep
    return compare_series("boundary_half", parameters, q_order, extra, QSeries.one(q_order))


# --------------------------------------------------------------------------
# Signed distinct counts supported on figurate numbers
# --------------------------------------------------------------------------


def verify_sylvester(params: ModularParams, q_order: int) -> VerificationReport:
    """Signed distinct counts on residues-with-multiples equal the signed
    figurate indicator: (-1)^j at M(j), zero elsewhere (interior parameters)."""
    lhs = gf_count(
        PartSet.with_multiples(params.k, params.ell), SIGNED_DISTINCT, q_order
    ).to_series()
    rhs = _signed_indicator(params, -1, q_order)
    return compare_series(
        "sylvester", {"k": params.k, "ell": params.ell}, q_order, lhs, rhs
    )


# --------------------------------------------------------------------------
# Grid battery
# --------------------------------------------------------------------------


def interior_grid(k_lo: int, k_hi: int) -> list[ModularParams]:
    """All interior parameter pairs with k in [k_lo, k_hi]."""
    out = []
    for k in range(max(k_lo, 3), k_hi + 1):
        for ell in range(1, k):
            p = ModularParams(k, ell)
            if p.is_interior:
                out.append(p)
    return out


def battery(
    k_lo: int,
    k_hi: int,
    order: int,
    z_window: int = 8,
    hermite_max_s: int = 4,
    d_values: Sequence[int] = (1, 2, 3),
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run every verification over a k-grid; deterministic task order.

    Tasks are independent and may fan out over worker threads; results are
    collected in submission order so the report is reproducible byte for byte.
    """
    tasks: list[Callable[[], VerificationReport]] = []
    tasks.append(partial(verify_triple_product, order, z_window))
    for s in range(hermite_max_s + 1):
        tasks.append(partial(verify_hermite, s))
    for k in range(k_lo, k_hi + 1):
        tasks.append(partial(verify_berger, k, order))
        if k % 2 == 0:
            tasks.append(partial(verify_boundary_half, k, order))
        for ell in range(k + 1):
            for sign in (1, -1):
                tasks.append(
                    partial(verify_specialized, ModularParams(k, ell), sign, order)
                )
    for params in interior_grid(k_lo, k_hi):
        tasks.append(partial(verify_sylvester, params, order))
        for gamma in (1, -1):
            tasks.append(partial(partition_shift_identities, params, gamma, order))
        for d in d_values:
            tasks.append(partial(bounded_mult_shift_identity, params, d, order))
        tasks.append(partial(apostol_convolution_check, params, order))
        tasks.append(partial(kim_identity_check, params, order))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda t: t(), tasks))
    return [t() for t in tasks]
