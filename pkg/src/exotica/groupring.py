"""Finite-support integer group rings Z[Z^k].

Rank-1 elements double as Laurent polynomials in one variable t, with the
lattice vector (n,) standing for t^n.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping, Sequence

from .errors import RankMismatch

LatticeVector = tuple


def lattice_vector(*components) -> LatticeVector:
    if len(components) == 1 and not isinstance(components[0], int):
        components = tuple(components[0])
    return tuple(int(c) for c in components)


def _add(g: LatticeVector, h: LatticeVector) -> LatticeVector:
    return tuple(a + b for a, b in zip(g, h))


def _scale(n: int, g: LatticeVector) -> LatticeVector:
    return tuple(n * a for a in g)


class GroupRingElement:
    """Sum of c_g * [g] over finitely many lattice vectors g of fixed rank."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], int] | None = None):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        clean: dict = {}
        for g, c in (terms or {}).items():
            g = lattice_vector(g)
            if len(g) != rank:
                raise RankMismatch(f"vector {g} has rank {len(g)}, expected {rank}")
            c = clean.get(g, 0) + int(c)
            if c:
                clean[g] = c
            else:
                clean.pop(g, None)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls, rank: int) -> "GroupRingElement":
        return cls(rank)

    @classmethod
    def delta(cls, g: Sequence[int], coeff: int = 1) -> "GroupRingElement":
        g = lattice_vector(g)
        return cls(len(g), {g: coeff})

    @classmethod
    def one(cls, rank: int) -> "GroupRingElement":
        return cls.delta((0,) * rank)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, g: Sequence[int]) -> int:
        return self._terms.get(lattice_vector(g), 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "GroupRingElement"):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        self._check(other)
        merged = dict(self._terms)
        for g, c in other._terms.items():
            merged[g] = merged.get(g, 0) + c
        return GroupRingElement(self.rank, merged)

    def __neg__(self):
        return GroupRingElement(self.rank, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.rank, {g: other * c for g, c in self._terms.items()})
        self._check(other)
        out: dict = {}
        for g, a in self._terms.items():
            for h, b in other._terms.items():
                k = _add(g, h)
                out[k] = out.get(k, 0) + a * b
        return GroupRingElement(self.rank, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, r: int):
        if not isinstance(r, int) or r < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GroupRingElement.one(self.rank)
        base = self
        while r:
            if r & 1:
                result = result * base
            base = base * base
            r >>= 1
        return result

    def mirror(self) -> "GroupRingElement":
        """Apply g -> -g (t -> 1/t in rank 1)."""
        return GroupRingElement(self.rank, {_scale(-1, g): c for g, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def sorted_terms(self) -> list:
        """Terms ordered by descending lattice vector."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for g, c in self.sorted_terms():
            if self.rank == 1:
                n = g[0]
                mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            else:
                mono = "[" + ",".join(map(str, g)) + "]"
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}{'' if self.rank == 1 else '*'}{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"GroupRingElement(rank={self.rank}, {str(self)!r})"


def laurent(coeffs: Mapping[int, int]) -> GroupRingElement:
    """Rank-1 element from ``{exponent: coefficient}``."""
    return GroupRingElement(1, {(n,): c for n, c in coeffs.items()})


def laurent_from_array(coeffs: Sequence[int], top: int) -> GroupRingElement:
    """``coeffs[0]`` sits at exponent ``top``, descending from there."""
    return laurent({top - k: c for k, c in enumerate(coeffs)})


def laurent_array(a: GroupRingElement) -> tuple:
    """Dense coefficients of a rank-1 element, highest exponent first.

    Returns ``(top_exponent, [coefficients...])``; the zero element gives ``(0, [])``.
    """
    if a.rank != 1:
        raise RankMismatch("laurent_array needs a rank-1 element")
    if a.is_zero():
        return 0, []
    exps = [g[0] for g in a.support()]
    hi, lo = max(exps), min(exps)
    return hi, [a.coefficient((n,)) for n in range(hi, lo - 1, -1)]


def augmentation(a: GroupRingElement) -> int:
    """Sum of coefficients; the ring map Z[H] -> Z sending every [g] to 1."""
    return sum(a._terms.values())


def substitute(poly: GroupRingElement, g: Sequence[int]) -> GroupRingElement:
    """Evaluate a Laurent polynomial at the group element g: t^n -> [n*g]."""
    if poly.rank != 1:
        raise RankMismatch("only rank-1 elements can be substituted")
    g = lattice_vector(g)
    out: dict = {}
    for (n,), c in poly._terms.items():
        k = _scale(n, g)
        out[k] = out.get(k, 0) + c
    return GroupRingElement(len(g), out)


def coefficient_multiset(a: GroupRingElement) -> Counter:
    return Counter(a._terms.values())


def multisets_match(a: GroupRingElement, b: GroupRingElement) -> bool:
    """Whether the coefficient multisets agree, allowing one global sign flip."""
    ma = coefficient_multiset(a)
    mb = coefficient_multiset(b)
    return ma == mb or ma == coefficient_multiset(-b)


def distinguishable(a: GroupRingElement, b: GroupRingElement) -> bool:
    return not multisets_match(a, b)


def minkowski_sum(s: Iterable[LatticeVector], t: Iterable[LatticeVector]) -> set:
    t = list(t)
    return {_add(g, h) for g in s for h in t}


def gr_add(a, b):
    return a + b


def gr_mul(a, b):
    return a * b


def gr_pow(a, r):
    return a**r
