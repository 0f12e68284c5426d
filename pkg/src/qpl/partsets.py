"""Symbolic part sets for partition counting.

A part set is a residue rule (or a finite set) over the positive integers:

* ``residues``      -- integers congruent to ell mod k
* ``plus_minus``    -- integers congruent to +ell or -ell mod k
* ``with_multiples``-- the previous family united with the multiples of k
* ``finite_prefix`` -- the first s members of each of the two progressions
* ``multiples``     -- the multiples of k
* ``explicit``      -- a hand-given finite set

Sets are never materialized beyond a requested bound; membership is decided
from the rule.  An optional scale c turns a set J into cJ = {c·x | x in J}.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ParameterError
from .figurate import ModularParams, require_interior

__all__ = ["PartSet", "parse_part_set"]

_KINDS = ("I", "J", "Jbar", "Js", "mult", "set")


@dataclass(frozen=True, slots=True)
class PartSet:
    """Symbolic description of a set of positive integer parts."""

    kind: str
    params: ModularParams | None = None
    s: int | None = None
    parts: frozenset[int] | None = None
    scale: int = 1

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown part-set kind {self.kind!r}")
        if self.scale < 1:
            raise ParameterError("scale must be a positive integer")

    # constructors -------------------------------------------------------------

    @classmethod
    def residues(cls, k: int, ell: int) -> "PartSet":
        """Positive integers congruent to ell modulo k."""
        return cls("I", params=ModularParams(k, ell))

    @classmethod
    def plus_minus(cls, k: int, ell: int) -> "PartSet":
        """Positive integers congruent to +ell or -ell modulo k; interior only."""
        params = ModularParams(k, ell)
        require_interior(params, "the plus/minus residue family")
        return cls("J", params=params)

    @classmethod
    def with_multiples(cls, k: int, ell: int) -> "PartSet":
        """Positive integers congruent to 0, +ell or -ell modulo k; interior only."""
        params = ModularParams(k, ell)
        require_interior(params, "the residue-with-multiples family")
        return cls("Jbar", params=params)

    @classmethod
    def finite_prefix(cls, k: int, ell: int, s: int) -> "PartSet":
        """First s members of each of the two progressions; interior only."""
        if s < 1:
            raise ParameterError("prefix length s must be >= 1")
        params = ModularParams(k, ell)
        require_interior(params, "the finite prefix family")
        return cls("Js", params=params, s=s)

    @classmethod
    def multiples(cls, k: int) -> "PartSet":
        if k < 1:
            raise ParameterError("k must be a positive integer")
        return cls("mult", params=ModularParams(k, 0))

    @classmethod
    def explicit(cls, parts) -> "PartSet":
        fs = frozenset(int(p) for p in parts)
        if any(p < 1 for p in fs):
            raise ParameterError("explicit parts must be positive integers")
        return cls("set", parts=fs)

    def scaled(self, c: int) -> "PartSet":
        if c < 1:
            raise ParameterError("scale must be a positive integer")
        return replace(self, scale=self.scale * c)

    # queries ---------------------------------------------------------------------

    def contains(self, x: int) -> bool:
        """Membership under the residue or finite rule; x below 1 is never a member."""
        if x < 1:
            return False
        if self.scale != 1:
            if x % self.scale:
                return False
            x //= self.scale
            if x < 1:
                return False
        if self.kind == "set":
            return x in self.parts
        k, ell = self.params.k, self.params.ell
        r = x % k
        if self.kind == "I":
            return r == ell % k
        if self.kind == "mult":
            return r == 0
        if self.kind == "J":
            return r == ell or r == k - ell
        if self.kind == "Jbar":
            return r == 0 or r == ell or r == k - ell
        # finite prefix: the member must also sit within the first s terms
        if r == ell and (x - ell) // k + 1 <= self.s:
            return True
        return r == k - ell and (x - (k - ell)) // k + 1 <= self.s

    def members_upto(self, n: int) -> list[int]:
        """Members <= n, ascending, without duplicates."""
        inner = n // self.scale
        if inner < 1:
            return []
        k = self.params.k if self.params is not None else 0
        ell = self.params.ell if self.params is not None else 0
        if self.kind == "set":
            base = sorted(p for p in self.parts if p <= inner)
        elif self.kind == "I":
            start = ell % k or k
            base = list(range(start, inner + 1, k))
        elif self.kind == "mult":
            base = list(range(k, inner + 1, k))
        elif self.kind == "J":
            base = sorted(
                list(range(ell, inner + 1, k)) + list(range(k - ell, inner + 1, k))
            )
        elif self.kind == "Jbar":
            base = sorted(
                list(range(ell, inner + 1, k))
                + list(range(k - ell, inner + 1, k))
                + list(range(k, inner + 1, k))
            )
        else:  # Js
            base = sorted(
                [m for i in range(1, self.s + 1) if (m := k * (i - 1) + ell) <= inner]
                + [
                    m
                    for i in range(1, self.s + 1)
                    if (m := k * (i - 1) + k - ell) <= inner
                ]
            )
        if self.scale == 1:
            return base
        return [self.scale * m for m in base]

    # display -------------------------------------------------------------------------

    def label(self) -> str:
        if self.kind == "set":
            body = "set:" + ",".join(str(p) for p in sorted(self.parts))
        elif self.kind == "mult":
            body = f"mult:{self.params.k}"
        elif self.kind == "Js":
            body = f"Js:{self.params.k},{self.params.ell},{self.s}"
        else:
            body = f"{self.kind}:{self.params.k},{self.params.ell}"
        return body if self.scale == 1 else f"{self.scale}*{body}"

    def __repr__(self) -> str:
        return f"PartSet({self.label()})"


def parse_part_set(text: str) -> PartSet:
    """Parse compact set syntax: I:k,l  J:k,l  Jbar:k,l  Js:k,l,s  mult:k  set:1,3,7."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParameterError(f"malformed part-set spec {text!r}")
    try:
        nums = [int(p) for p in body.split(",")] if body else []
    except ValueError as exc:
        raise ParameterError(f"malformed part-set spec {text!r}: {exc}") from None
    if head == "I" and len(nums) == 2:
        return PartSet.residues(*nums)
    if head == "J" and len(nums) == 2:
        return PartSet.plus_minus(*nums)
    if head == "Jbar" and len(nums) == 2:
        return PartSet.with_multiples(*nums)
    if head == "Js" and len(nums) == 3:
        return PartSet.finite_prefix(*nums)
    if head == "mult" and len(nums) == 1:
        return PartSet.multiples(nums[0])
    if head == "set" and nums:
        return PartSet.explicit(nums)
    raise ParameterError(f"malformed part-set spec {text!r}")
