"""Involutions of CP^1 x CP^1 and the (4,4) line configuration they preserve.

On CP^1 the maps are s(u:v) = (-u:v) and c(u:v) = (conj v: conj u); they
commute, so together with the identity they form a Klein four-group whose
elements are tagged ``id``, ``s``, ``c``, ``sc``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidConfig
from .exactalg import GaussianRational, MultivariatePolynomial, ProjectivePoint, gq, proj_equal


class SphereMap(str, enum.Enum):
    ID = "id"
    S = "s"
    C = "c"
    SC = "sc"

    @property
    def bits(self) -> tuple:
        return _BITS[self]

    def compose(self, other: "SphereMap") -> "SphereMap":
        """self after other."""
        a, b = self.bits, other.bits
        return _FROM_BITS[(a[0] ^ b[0], a[1] ^ b[1])]

    @property
    def holomorphic(self) -> bool:
        return self.bits[1] == 0


# (power of s, power of c)
_BITS = {SphereMap.ID: (0, 0), SphereMap.S: (1, 0), SphereMap.C: (0, 1), SphereMap.SC: (1, 1)}
_FROM_BITS = {v: k for k, v in _BITS.items()}


def _pt(p) -> ProjectivePoint:
    if not isinstance(p, ProjectivePoint):
        p = ProjectivePoint(*p)
    if p.dim != 1:
        raise ValueError(f"expected a point of CP^1, got CP^{p.dim}")
    return p


def apply_sphere(f: SphereMap, p) -> ProjectivePoint:
    u, v = _pt(p).coords
    f = SphereMap(f)
    if f is SphereMap.ID:
        return ProjectivePoint(u, v)
    if f is SphereMap.S:
        return ProjectivePoint(-u, v)
    if f is SphereMap.C:
        return ProjectivePoint(v.conj(), u.conj())
    return ProjectivePoint(-v.conj(), u.conj())


@dataclass(frozen=True)
class ProductInvolution:
    first: SphereMap
    second: SphereMap
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "first", SphereMap(self.first))
        object.__setattr__(self, "second", SphereMap(self.second))

    def __call__(self, point: tuple) -> tuple:
        a, b = point
        return apply_sphere(self.first, a), apply_sphere(self.second, b)

    def compose(self, other: "ProductInvolution", name: str = "") -> "ProductInvolution":
        """self after other, composed factorwise."""
        return ProductInvolution(self.first.compose(other.first),
                                 self.second.compose(other.second), name)

    @property
    def holomorphic(self) -> bool:
        return self.first.holomorphic and self.second.holomorphic


R = ProductInvolution(SphereMap.S, SphereMap.S, "r")
J = ProductInvolution(SphereMap.C, SphereMap.SC, "j")
RJ = R.compose(J, "r∘j")
PRODUCT_MAPS = (R, J, RJ)


# --- fixed loci ---------------------------------------------------------------

_SYM_VARS = ("u", "ubar", "v", "vbar")


def _symbolic_image(f: SphereMap) -> tuple:
    """Image of the generic point (u:v), with conj acting by u <-> ubar."""
    sym = {n: MultivariatePolynomial.var(n, _SYM_VARS) for n in _SYM_VARS}
    u, ub, v, vb = sym["u"], sym["ubar"], sym["v"], sym["vbar"]
    return {
        SphereMap.ID: (u, v),
        SphereMap.S: (-u, v),
        SphereMap.C: (vb, ub),
        SphereMap.SC: (-vb, ub),
    }[f]


def fixed_point_minor(f: SphereMap) -> MultivariatePolynomial:
    """The minor u*f(p)_1 - v*f(p)_0, which vanishes exactly at fixed points."""
    sym = {n: MultivariatePolynomial.var(n, _SYM_VARS) for n in _SYM_VARS}
    a, b = _symbolic_image(SphereMap(f))
    return sym["u"] * b - sym["v"] * a


class LocusKind(str, enum.Enum):
    ALL = "all"
    FINITE = "finite"
    CIRCLE = "circle"
    INFINITE = "infinite"
    EMPTY = "empty"


@dataclass(frozen=True)
class FixedReport:
    name: str
    kind: LocusKind
    points: tuple = ()
    characterization: str = ""
    witness: Optional[object] = None
    certificate: str = ""

    @property
    def empty(self) -> bool:
        return self.kind is LocusKind.EMPTY

    @property
    def count(self):
        if self.kind is LocusKind.FINITE:
            return len(self.points)
        return 0 if self.empty else float("inf")


def _require(ok: bool, what) -> None:
    if not ok:
        raise RuntimeError(f"fixed-locus derivation failed at {what}")


def sphere_fixed_report(f: SphereMap) -> FixedReport:
    f = SphereMap(f)
    minor = fixed_point_minor(f)
    sym = {n: MultivariatePolynomial.var(n, _SYM_VARS) for n in _SYM_VARS}
    u, ub, v, vb = sym["u"], sym["ubar"], sym["v"], sym["vbar"]
    if f is SphereMap.ID:
        return FixedReport("id", LocusKind.ALL, characterization="every point",
                           certificate=f"minor = {minor}")
    if f is SphereMap.S:
        # minor = 2uv: fixed iff u = 0 or v = 0
        _require(minor == (u * v).scale(2), minor)
        pts = (ProjectivePoint(1, 0), ProjectivePoint(0, 1))
        _require(all(proj_equal(apply_sphere(f, p), p) for p in pts), pts)
        return FixedReport("s", LocusKind.FINITE, pts, "u*v = 0",
                           certificate=f"minor = {minor}")
    if f is SphereMap.C:
        # minor = |u|^2 - |v|^2: the circle |u| = |v|
        _require(minor == u * ub - v * vb, minor)
        w = ProjectivePoint(1, 1)
        _require(proj_equal(apply_sphere(f, w), w), w)
        return FixedReport("c", LocusKind.CIRCLE, (), "|u| = |v|", witness=w,
                           certificate=f"minor = {minor}")
    # minor = |u|^2 + |v|^2 > 0 on nonzero vectors
    _require(minor == u * ub + v * vb, minor)
    return FixedReport("sc", LocusKind.EMPTY, (), "|u|^2 + |v|^2 = 0",
                       certificate=f"minor = {minor}, positive on nonzero (u,v)")


def is_sphere_fixed(f: SphereMap, p) -> bool:
    p = _pt(p)
    return proj_equal(apply_sphere(f, p), p)


def product_fixed_report(inv: ProductInvolution) -> FixedReport:
    """fix(f x g) = fix(f) x fix(g)."""
    a = sphere_fixed_report(inv.first)
    b = sphere_fixed_report(inv.second)
    name = inv.name or f"{inv.first.value}x{inv.second.value}"
    cert = f"first: {a.certificate}; second: {b.certificate}"
    if a.empty or b.empty:
        which = "first" if a.empty else "second"
        return FixedReport(name, LocusKind.EMPTY, (), f"{which} factor is fixed-point free",
                           certificate=cert)
    if a.kind is LocusKind.FINITE and b.kind is LocusKind.FINITE:
        pts = tuple((x, y) for x in a.points for y in b.points)
        return FixedReport(name, LocusKind.FINITE, pts, "product of factor fixed sets",
                           certificate=cert)
    return FixedReport(name, LocusKind.INFINITE, (),
                       f"({a.characterization}) x ({b.characterization})", certificate=cert)


# --- line configurations --------------------------------------------------------


@dataclass(frozen=True)
class LineConfig:
    """Horizontal lines CP^1 x {p} for p in p_points, vertical {q} x CP^1 for q in q_points."""

    p_points: tuple
    q_points: tuple

    def __post_init__(self):
        ps = tuple(_pt(p) for p in self.p_points)
        qs = tuple(_pt(q) for q in self.q_points)
        for label, pts in (("p", ps), ("q", qs)):
            if len(set(pts)) != len(pts):
                raise InvalidConfig(f"repeated {label}-point in {[str(x) for x in pts]}")
        object.__setattr__(self, "p_points", ps)
        object.__setattr__(self, "q_points", qs)

    def to_json_obj(self) -> dict:
        return {
            "p_points": [[str(c) for c in p] for p in self.p_points],
            "q_points": [[str(c) for c in q] for q in self.q_points],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LineConfig":
        try:
            return cls(
                tuple(ProjectivePoint(*(gq(str(c)) for c in p)) for p in obj["p_points"]),
                tuple(ProjectivePoint(*(gq(str(c)) for c in q)) for q in obj["q_points"]),
            )
        except InvalidConfig:
            raise
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidConfig(f"malformed line configuration: {exc}") from exc

    @classmethod
    def load(cls, path) -> "LineConfig":
        with open(path) as fh:
            return cls.from_json_obj(json.load(fh))


I = GaussianRational(0, 1)
EXAMPLE_POINTS = (
    ProjectivePoint(1, 1 + I),
    ProjectivePoint(-1, 1 + I),
    ProjectivePoint(1 - I, 1),
    ProjectivePoint(-1 + I, 1),
)
EXAMPLE_CONFIG = LineConfig(EXAMPLE_POINTS, EXAMPLE_POINTS)


def _closed(points: Sequence[ProjectivePoint], f: SphereMap) -> bool:
    return all(any(proj_equal(apply_sphere(f, p), q) for q in points) for p in points)


def config_invariance(cfg: LineConfig, inv: ProductInvolution) -> bool:
    return _closed(cfg.p_points, inv.second) and _closed(cfg.q_points, inv.first)


def config_intersections(cfg: LineConfig) -> list:
    """Every crossing (q_j, p_i) of a vertical with a horizontal line."""
    return [(q, p) for q in cfg.q_points for p in cfg.p_points]


def config_avoids_fix(cfg: LineConfig, inv: ProductInvolution) -> bool:
    """Whether C misses fix(inv) = fix(first) x fix(second).

    CP^1 x {p} meets it iff fix(first) is nonempty and p is fixed by second;
    {q} x CP^1 symmetrically.
    """
    first_nonempty = not sphere_fixed_report(inv.first).empty
    second_nonempty = not sphere_fixed_report(inv.second).empty
    if first_nonempty and any(is_sphere_fixed(inv.second, p) for p in cfg.p_points):
        return False
    if second_nonempty and any(is_sphere_fixed(inv.first, q) for q in cfg.q_points):
        return False
    return True


def sphere_orbit(p, maps: Iterable[SphereMap] = tuple(SphereMap)) -> list:
    p = _pt(p)
    out = []
    for f in maps:
        q = apply_sphere(f, p)
        if not any(proj_equal(q, o) for o in out):
            out.append(q)
    return out
