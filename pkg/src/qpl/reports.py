"""Pass/fail reports produced by the identity-verification operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Mismatch:
    """First differing coefficient: q-exponent, optional z-exponent, both values."""

    q_exponent: int
    lhs: int
    rhs: int
    z_exponent: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    parameters: dict
    order: int
    passed: bool
    mismatch: Mismatch | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.mismatch is None:
            raise ValueError("a failing report must carry its first mismatch")

    def to_json_dict(self) -> dict:
        out = {
            "schema": 1,
            "identity": self.identity,
            "parameters": {k: v for k, v in sorted(self.parameters.items())},
            "order": self.order,
            "outcome": "pass" if self.passed else "fail",
        }
        if self.mismatch is not None:
            out["location"] = {
                "q": self.mismatch.q_exponent,
                "z": self.mismatch.z_exponent,
            }
            # decimal strings keep arbitrary-precision values intact in JSON
            out["lhs"] = str(self.mismatch.lhs)
            out["rhs"] = str(self.mismatch.rhs)
        return out


def passed(identity: str, parameters: dict, order: int) -> VerificationReport:
    return VerificationReport(identity, parameters, order, True)


def failed(
    identity: str,
    parameters: dict,
    order: int,
    q_exponent: int,
    lhs: int,
    rhs: int,
    z_exponent: int | None = None,
) -> VerificationReport:
    return VerificationReport(
        identity,
        parameters,
        order,
        False,
        Mismatch(q_exponent, lhs, rhs, z_exponent),
    )
