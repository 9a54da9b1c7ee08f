"""Seiberg-Witten group-ring calculus under Fintushel-Stern knot surgery.

Everything lives in the rank-1 sublattice of H^2(K3) spanned by the torus
class. With ``torus_class = (1,)`` the generator PD(2[T]) is the lattice
vector ``(2,)``, so the SW basic classes of X_m sit at even exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import DuplicateIndex, InvalidIndex
from .groupring import (
    GroupRingElement,
    coefficient_multiset,
    distinguishable,
    lattice_vector,
    substitute,
)
from .knots import alexander, check_index

DEFAULT_TORUS_CLASS = (1,)
GENERATOR_NOTE = "generator PD(2[T]) of the rank-1 torus sublattice"


@dataclass(frozen=True)
class SWInvariant:
    element: GroupRingElement
    lattice_note: str = GENERATOR_NOTE
    flags: tuple = ()

    def coefficient(self, g) -> int:
        return self.element.coefficient(g)


@dataclass(frozen=True)
class TorusSurgerySpec:
    """r disjoint tori in one homology class, each surgered with K_m.

    ``[T]^2 = 0``, ``b2+ > 1`` and the shared class of the tori are hypotheses,
    carried here as metadata only.
    """

    r: int
    m: int
    torus_class: tuple = DEFAULT_TORUS_CLASS
    hypotheses: tuple = field(
        default=("b2+(X) > 1", "[T]^2 = 0", "all tori share one homology class"),
        compare=False,
    )

    def __post_init__(self):
        object.__setattr__(self, "torus_class", lattice_vector(self.torus_class))
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 0:
            raise InvalidIndex(f"surgery count must be a non-negative integer, got {self.r!r}")
        check_index(self.m)
        if not any(self.torus_class):
            raise InvalidIndex("torus class must be non-torsion (nonzero)")

    @property
    def generator(self) -> tuple:
        """PD(2[T]) as a lattice vector."""
        return tuple(2 * a for a in self.torus_class)


def sw_k3(rank: int = 1) -> SWInvariant:
    """SW(0) = 1 and SW(L) = 0 otherwise."""
    return SWInvariant(GroupRingElement.one(rank))


def knot_surgery_sw(base: SWInvariant, spec: TorusSurgerySpec) -> SWInvariant:
    factor = substitute(alexander(spec.m), spec.generator)
    return SWInvariant(base.element * factor**spec.r, base.lattice_note, base.flags)


def mixed_knot_surgery_sw(base: SWInvariant, ms: Sequence[int],
                          torus_class=DEFAULT_TORUS_CLASS) -> SWInvariant:
    """One surgery per entry of ``ms``; flagged when the knots differ."""
    gen = tuple(2 * a for a in lattice_vector(torus_class))
    element = base.element
    for m in ms:
        element = element * substitute(alexander(m), gen)
    flags = base.flags
    if len(set(ms)) > 1:
        flags = flags + ("mixed knots: not G-equivariant",)
    return SWInvariant(element, base.lattice_note, flags)


def sw_xm(m: int, r: int, torus_class=DEFAULT_TORUS_CLASS) -> SWInvariant:
    check_index(m)
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidIndex(f"surgery count must be >= 1, got {r!r}")
    base = sw_k3(len(lattice_vector(torus_class)))
    return knot_surgery_sw(base, TorusSurgerySpec(r=r, m=m, torus_class=torus_class))


def basic_classes(sw: SWInvariant) -> frozenset:
    return sw.element.support()


def leading_coefficient(sw: SWInvariant) -> int:
    """Coefficient at the lexicographically largest basic class."""
    terms = sw.element.sorted_terms()
    return terms[0][1] if terms else 0


@dataclass(frozen=True)
class PairVerdict:
    m1: int
    m2: int
    distinct: bool
    witness: tuple  # (leading coefficient of X_m1, leading coefficient of X_m2)


@dataclass(frozen=True)
class DistinctnessReport:
    r: int
    ms: tuple
    pairs: tuple

    @property
    def all_distinct(self) -> bool:
        return all(p.distinct for p in self.pairs)


def distinguish(ms: Sequence[int], r: int) -> DistinctnessReport:
    ms = tuple(ms)
    if not ms:
        raise InvalidIndex("need at least one knot index")
    for m in ms:
        check_index(m)
    if len(set(ms)) != len(ms):
        raise DuplicateIndex(f"repeated knot index in {ms}")
    invariants = {m: sw_xm(m, r) for m in ms}
    pairs = []
    for m1, m2 in combinations(sorted(ms), 2):
        a, b = invariants[m1], invariants[m2]
        pairs.append(
            PairVerdict(
                m1, m2,
                distinguishable(a.element, b.element),
                (leading_coefficient(a), leading_coefficient(b)),
            )
        )
    return DistinctnessReport(r, tuple(sorted(ms)), tuple(pairs))


def sw_table(sw: SWInvariant) -> list:
    """``[(basic class, coefficient), ...]`` in descending order."""
    return sw.element.sorted_terms()


def sw_multiset(sw: SWInvariant):
    return coefficient_multiset(sw.element)
