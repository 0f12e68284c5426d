"""Floating-point evaluation of the theta function and its variants.

The base function is the bilateral series T(z|q) = sum_{n in Z} q^{n(n-1)/2} z^n
for |q| < 1 and z != 0.  Terms are summed in the symmetric pairs n = -m and
n = m+1, which share the q-exponent m(m+1)/2; that keeps the cancellation at
z = -1 exact and gives a clean geometric tail bound.  All fractional powers
(q^{-1/8}, q^{1/2}, z^{1/2}) take the principal branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "ThetaPoint",
    "theta_series",
    "theta_product",
    "aux_theta",
    "quasi_periodicity_residual",
    "theta_class",
]

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class ThetaPoint:
    """Evaluation point: q with |q| < 1 strictly, z nonzero.

    May carry the (nu, tau) coordinates it was converted from, in which case
    q = exp(2*pi*i*tau) and z = exp(2*pi*i*nu) with Im(tau) > 0.
    """

    q: complex
    z: complex
    nu: complex | None = None
    tau: complex | None = None

    def __post_init__(self) -> None:
        if abs(self.q) >= 1:
            raise ValueError(f"|q| must be < 1, got |q| = {abs(self.q)}")
        if self.z == 0:
            raise ValueError("z must be nonzero")

    @classmethod
    def from_qz(cls, q: complex, z: complex) -> "ThetaPoint":
        return cls(complex(q), complex(z))

    @classmethod
    def from_nu_tau(cls, nu: complex, tau: complex) -> "ThetaPoint":
        tau = complex(tau)
        nu = complex(nu)
        if tau.imag <= 0:
            raise ValueError("Im(tau) must be positive")
        return cls(
            cmath.exp(_TWO_PI_I * tau), cmath.exp(_TWO_PI_I * nu), nu=nu, tau=tau
        )


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError("tol must be positive")


def _pairs_needed(abs_q: float, big_z: float, tol: float) -> int:
    """Smallest pair count T certifying |tail beyond T| < tol.

    Pair m has magnitude at most 2·|q|^{m(m+1)/2}·Z^{m+1} with Z =
    max(|z|, 1/|z|).  Once |q|^{T+1}·Z <= 1/2 the pair magnitudes shrink at
    least geometrically with ratio 1/2, so the tail is below four times the
    first omitted bound.  The coarser published bound
    |q|^{T(T-1)/2}·Z^{T+1}/(1-|q|) < tol is enforced as well.
    """
    log_q = math.log(abs_q)
    log_z = math.log(big_z)  # >= 0
    log_tol = math.log(tol)
    t = 1
    while True:
        ratio_ok = (t + 1) * log_q + log_z <= -math.log(2)
        log_tail = math.log(4) + ((t + 1) * (t + 2) // 2) * log_q + (t + 2) * log_z
        log_doc = (t * (t - 1) // 2) * log_q + (t + 1) * log_z - math.log(1 - abs_q)
        if ratio_ok and log_tail < log_tol and log_doc < log_tol:
            return t
        t += 1


def theta_series(point: ThetaPoint, tol: float) -> complex:
    """Partial sum of the bilateral series, accurate to tol in absolute value.

    q = 0 degenerates to 1 + z exactly (only n = 0, 1 survive); z = -1 returns
    exactly 0 by the n <-> 1-n pairing.
    """
    _check_tol(tol)
    q, z = point.q, point.z
    if q == 0:
        return 1 + z
    if z == -1:
        return 0j
    t = _pairs_needed(abs(q), max(abs(z), 1 / abs(z)), tol)
    total = 0j
    for m in range(t, -1, -1):  # small terms first
        e = m * (m + 1) // 2
        total += (q**e) * (z ** (-m) + z ** (m + 1))
    return total


def theta_product(point: ThetaPoint, factors: int) -> complex:
    """Finite product prod_{m=1}^{factors} (1-q^m)(1+q^m/z)(1+q^{m-1}z)."""
    if factors < 1:
        raise ValueError("the product needs at least one factor")
    q, z = point.q, point.z
    acc = 1 + 0j
    qm = 1 + 0j
    for m in range(1, factors + 1):
        qm_prev = qm  # q^{m-1}
        qm = qm * q
        acc *= (1 - qm) * (1 + qm / z) * (1 + qm_prev * z)
    return acc


def aux_theta(variant: str, point: ThetaPoint, tol: float) -> complex:
    """The four auxiliary variants:

    a: T(z|q)          b: T(-z|q)
    c: q^{-1/8} z^{1/2} T(q^{1/2} z | q)
    d: q^{-1/8} z^{1/2} T(-q^{1/2} z | q)

    Variants c and d require q != 0 and use principal branches; the inner
    series is evaluated tightly enough that the scaled result meets tol.
    """
    _check_tol(tol)
    q, z = point.q, point.z
    if variant == "a":
        return theta_series(point, tol)
    if variant == "b":
        return theta_series(ThetaPoint.from_qz(q, -z), tol)
    if variant not in ("c", "d"):
        raise ValueError(f"unknown variant {variant!r}")
    if q == 0:
        raise ValueError("variants c and d need q != 0 (q^{-1/8} is taken)")
    prefactor = q ** (-0.125) * z**0.5
    inner_z = (q**0.5) * z
    if variant == "d":
        inner_z = -inner_z
    inner_tol = tol / max(abs(prefactor), 1e-300)
    return prefactor * theta_series(ThetaPoint.from_qz(q, inner_z), inner_tol)


def quasi_periodicity_residual(
    point: ThetaPoint, tol: float
) -> tuple[float, float]:
    """Residuals of the two functional equations at the point.

    First: |T(qz|q) - z^{-1} T(z|q)|, each side evaluated to tol.  Second: the
    shift nu -> nu + 1, which in the z-picture leaves z unchanged, so without
    stored (nu, tau) coordinates it is exactly zero; with them, the two
    exponentials are recomputed and compared.  q = 0 is excluded: the
    substitution q·z collapses and the relation is not the stated one there.
    """
    _check_tol(tol)
    q, z = point.q, point.z
    if q == 0:
        raise ValueError("the quasi-periodicity relation is checked for 0 < |q| < 1")
    lhs = theta_series(ThetaPoint.from_qz(q, q * z), tol)
    rhs = theta_series(point, tol) / z
    first = abs(lhs - rhs)
    if point.nu is None or point.tau is None:
        second = 0.0
    else:
        shifted = cmath.exp(_TWO_PI_I * (point.nu + 1))
        second = abs(
            theta_series(ThetaPoint.from_qz(q, shifted), tol)
            - theta_series(point, tol)
        )
    return (first, second)


def theta_class(
    k: int, ell: int, variant: str, point: ThetaPoint, tol: float
) -> complex:
    """Variant evaluated after the substitution q -> q^k, z -> q^ell·z.

    (k, ell) = (1, 0) is the identity substitution; (2, 1) produces the
    classical Jacobi normalization.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    q, z = point.q, point.z
    substituted = ThetaPoint.from_qz(q**k, (q**ell) * z)
    return aux_theta(variant, substituted, tol)
