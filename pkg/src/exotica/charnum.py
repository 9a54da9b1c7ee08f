"""Characteristic numbers of closed oriented 4-manifolds and their free quotients."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional, Union

from .errors import NegativeBetti, NonIntegralQuotient, SignatureExceedsRank

INFINITE = "inf"


@dataclass(frozen=True)
class ManifoldInvariants:
    euler: int
    signature: int
    b1: int = 0
    pi1_order: Union[int, str] = 1
    orientable: bool = True

    @property
    def b2(self) -> int:
        return b2_from_euler(self.euler, self.b1)


K3 = ManifoldInvariants(euler=24, signature=-16, b1=0, pi1_order=1)


class Definiteness(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"
    ZERO = "zero"


@dataclass(frozen=True)
class IntersectionFormDescriptor:
    rank: int
    signature: int
    definiteness: Definiteness
    # Diagonal form from the definite diagonalization theorem; cited, not proven here.
    diagonal_form: Optional[tuple] = None

    @property
    def b2_plus(self) -> int:
        return (self.rank + self.signature) // 2

    @property
    def b2_minus(self) -> int:
        return (self.rank - self.signature) // 2


class HitchinStatus(str, enum.Enum):
    VIOLATED = "violated"
    STRICT = "strict"
    EQUALITY = "equality"


def quotient_invariants(cover: ManifoldInvariants, group_order: int, b1: int = 0) -> ManifoldInvariants:
    """Invariants of cover/G for a free action of a group of the given order.

    Euler characteristic and signature are multiplicative over unbranched
    covers; b1 of the quotient is supplied by the caller (0 for finite pi1).
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    if cover.euler % group_order or cover.signature % group_order:
        raise NonIntegralQuotient(
            f"order {group_order} does not divide (euler, signature) = "
            f"({cover.euler}, {cover.signature})"
        )
    pi1 = cover.pi1_order
    return replace(
        cover,
        euler=cover.euler // group_order,
        signature=cover.signature // group_order,
        b1=b1,
        pi1_order=INFINITE if pi1 == INFINITE else pi1 * group_order,
    )


def b2_from_euler(euler: int, b1: int) -> int:
    # euler = 2 - 2*b1 + b2 when b0 = b4 = 1 and b3 = b1
    b2 = euler - 2 + 2 * b1
    if b1 < 0 or b2 < 0:
        raise NegativeBetti(f"euler={euler}, b1={b1} gives b2={b2}")
    return b2


def classify_form(b2: int, signature: int) -> IntersectionFormDescriptor:
    if b2 < 0:
        raise NegativeBetti(f"b2={b2}")
    if abs(signature) > b2:
        raise SignatureExceedsRank(f"|{signature}| > {b2}")
    if b2 == 0:
        return IntersectionFormDescriptor(0, 0, Definiteness.ZERO, ())
    if signature == -b2:
        return IntersectionFormDescriptor(b2, signature, Definiteness.NEGATIVE, (-1,) * b2)
    if signature == b2:
        return IntersectionFormDescriptor(b2, signature, Definiteness.POSITIVE, (1,) * b2)
    return IntersectionFormDescriptor(b2, signature, Definiteness.INDEFINITE, None)


def hitchin_check(euler: int, signature: int) -> HitchinStatus:
    """Compare |sigma| against (2/3)*chi without leaving the integers."""
    lhs, rhs = 3 * abs(signature), 2 * euler
    if lhs > rhs:
        return HitchinStatus.VIOLATED
    if lhs == rhs:
        return HitchinStatus.EQUALITY
    return HitchinStatus.STRICT
