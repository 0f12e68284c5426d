"""Exact truncated series arithmetic: power series in q, Laurent series in z.

Every value carries an inclusive truncation order N and stores integer
coefficients for q^0 .. q^N.  Binary operations demand equal orders and raise
OrderMismatchError otherwise; nothing is promoted or truncated silently.
Coefficients are Python integers throughout, so results are exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertibleError, OrderMismatchError, ParameterError

__all__ = ["QSeries", "ZLaurentSeries", "triple_pochhammer"]


@dataclass(frozen=True, slots=True)
class QSeries:
    """Formal power series in q, truncated after the coefficient of q^order."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ValueError("a QSeries needs at least its constant coefficient")

    # construction -----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "QSeries":
        """Build a series from an iterable, padding or truncating to ``order``."""
        c = [int(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ParameterError("order must be non-negative")
            del c[order + 1 :]
            c.extend([0] * (order + 1 - len(c)))
        return cls(tuple(c))

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "QSeries":
        if not 0 <= exponent <= order:
            raise ParameterError(f"monomial exponent {exponent} outside 0..{order}")
        c = [0] * (order + 1)
        c[exponent] = coeff
        return cls(tuple(c))

    # basic queries -----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _require_same_order(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"operand orders differ: {self.order} != {other.order}"
            )

    # ring operations ----------------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        self._require_same_order(other)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._require_same_order(other)
        return QSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        """Schoolbook Cauchy product; zero coefficients of the left factor are skipped."""
        self._require_same_order(other)
        n = self.order
        out = [0] * (n + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * b[j]
        return QSeries(tuple(out))

    def reciprocal(self) -> "QSeries":
        """Multiplicative inverse at the same order.

        Requires constant term +1 or -1 so the inverse stays integral.
        """
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise NotInvertibleError(
                f"constant term must be +1 or -1 to invert exactly, got {a0}"
            )
        n = self.order
        nz = [(i, c) for i, c in enumerate(self.coeffs) if i and c]
        inv = [0] * (n + 1)
        inv[0] = a0
        for m in range(1, n + 1):
            s = 0
            for i, c in nz:
                if i > m:
                    break
                s += c * inv[m - i]
            inv[m] = -a0 * s
        return QSeries(tuple(inv))

    def dilate(self, k: int) -> "QSeries":
        """Substitute q -> q^k, keeping the original truncation order.

        Source coefficients past order//k are dropped: they would land beyond
        the retained exponents.
        """
        if k < 1:
            raise ParameterError("dilation factor must be a positive integer")
        if k == 1:
            return self
        n = self.order
        out = [0] * (n + 1)
        for i in range(n // k + 1):
            out[k * i] = self.coeffs[i]
        return QSeries(tuple(out))

    def q_dq(self) -> "QSeries":
        """Apply q·d/dq: the coefficient of q^n becomes n times itself."""
        return QSeries(tuple(n * c for n, c in enumerate(self.coeffs)))

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^e, dropping coefficients pushed past the order."""
        if e < 0:
            raise ParameterError("shift exponent must be non-negative")
        if e == 0:
            return self
        return QSeries(((0,) * e + self.coeffs)[: self.order + 1])

    def scale(self, c: int) -> "QSeries":
        if c == 1:
            return self
        return QSeries(tuple(c * x for x in self.coeffs))

    def truncate(self, order: int) -> "QSeries":
        """Restrict to a smaller order; never extends."""
        if not 0 <= order <= self.order:
            raise ParameterError(f"cannot truncate order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    # sparse-factor kernels ------------------------------------------------------

    def mul_binomial(self, coeff: int, exp: int) -> "QSeries":
        """Multiply by (1 + coeff·q^exp) in O(order) time; exp must be >= 1.

        A factor whose exponent exceeds the order is 1 + O(q^{order+1}) and is
        skipped entirely.
        """
        if exp < 1:
            raise ParameterError("binomial factor exponent must be >= 1")
        if exp > self.order:
            return self
        head = self.coeffs[:exp]
        if coeff == 1:
            tail = tuple(a + b for a, b in zip(self.coeffs[exp:], self.coeffs))
        elif coeff == -1:
            tail = tuple(a - b for a, b in zip(self.coeffs[exp:], self.coeffs))
        else:
            tail = tuple(a + coeff * b for a, b in zip(self.coeffs[exp:], self.coeffs))
        return QSeries(head + tail)

    def div_binomial(self, coeff: int, exp: int) -> "QSeries":
        """Divide by (1 + coeff·q^exp) in O(order) time; exp must be >= 1."""
        if exp < 1:
            raise ParameterError("binomial factor exponent must be >= 1")
        n = self.order
        if exp > n:
            return self
        out = list(self.coeffs)
        if coeff == 1:
            for i in range(exp, n + 1):
                out[i] -= out[i - exp]
        elif coeff == -1:
            for i in range(exp, n + 1):
                out[i] += out[i - exp]
        else:
            for i in range(exp, n + 1):
                out[i] -= coeff * out[i - exp]
        return QSeries(tuple(out))

    # serialization ----------------------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON form with decimal-string coefficients to survive any tooling."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        order = int(data["order"])
        coeffs = tuple(int(s) for s in data["coeffs"])
        if len(coeffs) != order + 1:
            raise ValueError("coeffs length must equal order + 1")
        return cls(coeffs)

    # display ----------------------------------------------------------------------

    def terms_str(self, max_terms: int = 10) -> str:
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if len(parts) == max_terms:
                parts.append("...")
                break
            if n == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "q" if n == 1 else f"q^{n}"
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(f"{sign} {mag}{var}" if parts else f"{sign}{mag}{var}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}: {self.terms_str()})"


@dataclass(frozen=True, slots=True)
class ZLaurentSeries:
    """Laurent polynomial in z whose coefficients are QSeries of one shared q-order.

    The support is the inclusive z-exponent range [zlo, zlo + len(zcoeffs) - 1].
    """

    zlo: int
    zcoeffs: tuple[QSeries, ...]

    def __post_init__(self) -> None:
        if not self.zcoeffs:
            raise ValueError("support must contain at least one z-exponent")
        order = self.zcoeffs[0].order
        for s in self.zcoeffs[1:]:
            if s.order != order:
                raise OrderMismatchError("all z-coefficients must share one q-order")

    @classmethod
    def constant(cls, series: QSeries) -> "ZLaurentSeries":
        return cls(0, (series,))

    @classmethod
    def one(cls, order: int, zlo: int = 0, zhi: int = 0) -> "ZLaurentSeries":
        """The unit series on the window [zlo, zhi] (which must contain 0)."""
        if not zlo <= 0 <= zhi:
            raise ParameterError("unit window must contain z^0")
        coeffs = tuple(
            QSeries.one(order) if j == 0 else QSeries.zero(order)
            for j in range(zlo, zhi + 1)
        )
        return cls(zlo, coeffs)

    @classmethod
    def qz_binomial(cls, coeff: int, q_exp: int, z_exp: int, order: int) -> "ZLaurentSeries":
        """The factor 1 + coeff·q^{q_exp}·z^{z_exp}; the q-term vanishes past the order."""
        if q_exp < 0:
            raise ParameterError("q-exponent must be non-negative")
        if q_exp > order:
            term = QSeries.zero(order)
        else:
            term = QSeries.monomial(q_exp, order, coeff)
        if z_exp == 0:
            return cls(0, (QSeries.one(order) + term,))
        lo, hi = min(0, z_exp), max(0, z_exp)
        coeffs = []
        for j in range(lo, hi + 1):
            if j == 0:
                coeffs.append(QSeries.one(order))
            elif j == z_exp:
                coeffs.append(term)
            else:
                coeffs.append(QSeries.zero(order))
        return cls(lo, tuple(coeffs))

    # queries ---------------------------------------------------------------------

    @property
    def zhi(self) -> int:
        return self.zlo + len(self.zcoeffs) - 1

    @property
    def support(self) -> tuple[int, int]:
        return (self.zlo, self.zhi)

    @property
    def order(self) -> int:
        return self.zcoeffs[0].order

    def zcoeff(self, j: int) -> QSeries:
        """Coefficient of z^j; zero outside the stored support."""
        if self.zlo <= j <= self.zhi:
            return self.zcoeffs[j - self.zlo]
        return QSeries.zero(self.order)

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.zcoeffs)

    def same_series(self, other: "ZLaurentSeries") -> bool:
        """Coefficient-wise equality across the union of the two supports."""
        if self.order != other.order:
            return False
        lo = min(self.zlo, other.zlo)
        hi = max(self.zhi, other.zhi)
        return all(self.zcoeff(j) == other.zcoeff(j) for j in range(lo, hi + 1))

    # arithmetic ------------------------------------------------------------------

    def __add__(self, other: "ZLaurentSeries") -> "ZLaurentSeries":
        if self.order != other.order:
            raise OrderMismatchError("q-orders differ")
        lo = min(self.zlo, other.zlo)
        hi = max(self.zhi, other.zhi)
        return ZLaurentSeries(
            lo, tuple(self.zcoeff(j) + other.zcoeff(j) for j in range(lo, hi + 1))
        )

    def __mul__(self, other: "ZLaurentSeries") -> "ZLaurentSeries":
        """Laurent convolution in z; the support is the sum of the supports."""
        if self.order != other.order:
            raise OrderMismatchError("q-orders differ")
        lo = self.zlo + other.zlo
        width = len(self.zcoeffs) + len(other.zcoeffs) - 1
        acc: list[QSeries] = [QSeries.zero(self.order) for _ in range(width)]
        for i, a in enumerate(self.zcoeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.zcoeffs):
                if b.is_zero():
                    continue
                acc[i + j] = acc[i + j] + a * b
        return ZLaurentSeries(lo, tuple(acc))

    def __repr__(self) -> str:
        return f"ZLaurentSeries(z^{self.zlo}..z^{self.zhi}, order={self.order})"


def triple_pochhammer(k: int, ell: int, sign: int, order: int) -> QSeries:
    """Expand prod_{m>=1} (1 - q^{km})(1 + sign·q^{km-ell})(1 + sign·q^{k(m-1)+ell}).

    Only factors whose exponent is at most ``order`` are multiplied: a skipped
    factor is 1 + O(q^{order+1}) and cannot change retained coefficients.
    Exponent-zero factors (ell = 0 or ell = k at m = 1) are the constants
    (1 + sign); for sign = -1 the whole product collapses to the zero series.
    """
    if k < 1:
        raise ParameterError("k must be a positive integer")
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    if not 0 <= ell <= k:
        raise ParameterError(f"ell must satisfy 0 <= ell <= k, got ell={ell}, k={k}")
    out = QSeries.one(order)
    m = 1
    while True:
        exps = (k * m, k * m - ell, k * (m - 1) + ell)
        if min(exps) > order:
            break
        for e, c in ((exps[0], -1), (exps[1], sign), (exps[2], sign)):
            if e == 0:
                out = out.scale(1 + c)
            elif e <= order:
                out = out.mul_binomial(c, e)
        m += 1
    return out
