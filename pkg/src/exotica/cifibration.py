"""The complete intersection of three diagonal quadrics in CP^5 with its free
Z/2 x Z/2 action and an invariant elliptic fibration over CP^1.

Coordinates are (x1:x2:x3:y1:y2:y3); sigma is complex conjugation and tau
negates y. A point lies on the fiber over (lam:mu) when it satisfies the first
two quadrics and the linear forms

    L1 = lam*(x1 + y1) - mu*(x2 - y2)
    L2 = mu*(x1 - y1) - lam*(x2 + y2)
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    ArityMismatch,
    ConditionsNotMet,
    DegenerateParam,
    DimensionMismatch,
    InconsistentRatios,
)
from .exactalg import (
    DEFAULT_VARIABLES,
    GaussianRational,
    MultivariatePolynomial,
    ProjectivePoint,
    RationalMatrix3,
    gq,
    matrix_rank,
    polynomial_variables,
    proj_equal,
)

EXAMPLE_A = RationalMatrix3.from_rows([[1, 2, 1], [1, 1, 1], [1, -1, 0]])
EXAMPLE_B = RationalMatrix3.from_rows([[1, 2, 1], [-1, -1, -1], [-1, 1, 0]])


@dataclass(frozen=True)
class QuadricPair:
    A: RationalMatrix3
    B: RationalMatrix3

    def to_json_obj(self) -> dict:
        return {"A": self.A.to_strings(), "B": self.B.to_strings()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QuadricPair":
        try:
            return cls(
                RationalMatrix3.from_rows([[Fraction(str(x)) for x in row] for row in obj["A"]]),
                RationalMatrix3.from_rows([[Fraction(str(x)) for x in row] for row in obj["B"]]),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed quadric pair: {exc}") from exc

    @classmethod
    def load(cls, path) -> "QuadricPair":
        with open(path) as fh:
            return cls.from_json_obj(json.load(fh))


EXAMPLE_PAIR = QuadricPair(EXAMPLE_A, EXAMPLE_B)


class GroupElement(str, enum.Enum):
    IDENTITY = "identity"
    SIGMA = "sigma"
    TAU = "tau"
    TAU_SIGMA = "tau_sigma"

    @property
    def bits(self) -> tuple:
        return _BITS[self]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b = self.bits, other.bits
        return _FROM_BITS[(a[0] ^ b[0], a[1] ^ b[1])]


# (sigma exponent, tau exponent)
_BITS = {
    GroupElement.IDENTITY: (0, 0),
    GroupElement.SIGMA: (1, 0),
    GroupElement.TAU: (0, 1),
    GroupElement.TAU_SIGMA: (1, 1),
}
_FROM_BITS = {v: k for k, v in _BITS.items()}
NONTRIVIAL = (GroupElement.SIGMA, GroupElement.TAU, GroupElement.TAU_SIGMA)


# --- conditions and freeness -------------------------------------------------


@dataclass(frozen=True)
class ConditionItem:
    key: str
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ConditionReport:
    det_A: Fraction
    det_B: Fraction
    items: tuple

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def item(self, key: str) -> ConditionItem:
        return next(i for i in self.items if i.key == key)


def _row(m: RationalMatrix3, i: int) -> str:
    return "[" + ", ".join(str(x) for x in m[i]) + "]"


def check_conditions(pair: QuadricPair) -> ConditionReport:
    A, B = pair.A, pair.B
    det_a, det_b = A.det(), B.det()
    items = (
        ConditionItem("det_A", "det(A) != 0", det_a != 0, f"det(A) = {det_a}"),
        ConditionItem("det_B", "det(B) != 0", det_b != 0, f"det(B) = {det_b}"),
        ConditionItem("A_row1_positive", "A row 1 positive", all(x > 0 for x in A[0]), _row(A, 0)),
        ConditionItem("B_row1_positive", "B row 1 positive", all(x > 0 for x in B[0]), _row(B, 0)),
        ConditionItem("A_row2_positive", "A row 2 positive", all(x > 0 for x in A[1]), _row(A, 1)),
        ConditionItem("negB_row2_positive", "-B row 2 positive", all(x < 0 for x in B[1]), _row(B, 1)),
        ConditionItem(
            "third_rows", "third rows give x1^2 - x2^2 - y1^2 + y2^2",
            tuple(A[2]) == (1, -1, 0) and tuple(B[2]) == (-1, 1, 0),
            f"A: {_row(A, 2)}, B: {_row(B, 2)}",
        ),
    )
    return ConditionReport(det_a, det_b, items)


@dataclass(frozen=True)
class ElementCertificate:
    element: GroupElement
    free: bool
    reason: str
    argument: str


@dataclass(frozen=True)
class FreenessReport:
    certificates: tuple

    @property
    def all_free(self) -> bool:
        return all(c.free for c in self.certificates)

    def __getitem__(self, g: GroupElement) -> ElementCertificate:
        return next(c for c in self.certificates if c.element == g)


_SIGMA_ARG = (
    "a conjugation-fixed point of CP^5 has a real representative; row 1 is a "
    "positive combination of real squares, which vanishes only at 0"
)
_TAU_ARG = (
    "(x:-y) = c(x:y) forces y = 0 (c = 1) or x = 0 (c = -1); then A resp. B "
    "applied to the squared coordinates vanishes, so invertibility gives the zero vector"
)
_TAU_SIGMA_ARG = (
    "a fixed point of (x,y) -> (conj x, -conj y) has x real and y purely imaginary "
    "after rescaling; row 2 then reads sum A2j*xj^2 + sum (-B2j)*wj^2 = 0 with "
    "positive weights, forcing 0"
)


def freeness_certificate(pair: QuadricPair, strict: bool = False) -> FreenessReport:
    """Certify freeness of each nontrivial element from its sign/invertibility hypothesis.

    With ``strict=True`` a withheld certificate raises ConditionsNotMet;
    otherwise the report records which element lost its hypothesis.
    """
    cond = check_conditions(pair)
    ok = {i.key: i.passed for i in cond.items}
    certs = []

    if ok["A_row1_positive"] and ok["B_row1_positive"]:
        certs.append(ElementCertificate(GroupElement.SIGMA, True, "SIGMA_NO_REAL_POINTS", _SIGMA_ARG))
    else:
        certs.append(ElementCertificate(GroupElement.SIGMA, False, "SIGMA_WITHHELD_ROW1_SIGNS",
                                        "row-1 positivity fails"))

    if ok["det_A"] and ok["det_B"]:
        certs.append(ElementCertificate(GroupElement.TAU, True, "TAU_INVERTIBLE_BLOCKS", _TAU_ARG))
    else:
        certs.append(ElementCertificate(GroupElement.TAU, False, "TAU_WITHHELD_SINGULAR",
                                        f"det(A) = {cond.det_A}, det(B) = {cond.det_B}"))

    if ok["A_row2_positive"] and ok["negB_row2_positive"]:
        certs.append(ElementCertificate(GroupElement.TAU_SIGMA, True, "TAU_SIGMA_ROW2_SIGNS",
                                        _TAU_SIGMA_ARG))
    else:
        certs.append(ElementCertificate(GroupElement.TAU_SIGMA, False,
                                        "TAU_SIGMA_WITHHELD_ROW2_SIGNS", "row-2 sign pattern fails"))

    report = FreenessReport(tuple(certs))
    if strict and not report.all_free:
        withheld = [c.reason for c in report.certificates if not c.free]
        raise ConditionsNotMet(f"freeness not certified: {withheld}")
    return report


# --- genus -------------------------------------------------------------------


def genus_ci(n: int, degrees) -> tuple:
    """Genus of a generic complete intersection curve in CP^n.

    Returns ``(genus, is_integral)``; the genus is an exact Fraction.
    """
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != n - 1:
        raise ArityMismatch(f"CP^{n} needs {n - 1} degrees, got {len(degrees)}")
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    prod = 1
    for d in degrees:
        prod *= d
    g = 1 - Fraction(prod * (n + 1 - sum(degrees)), 2)
    return g, g.denominator == 1


# --- action on the fibration base ---------------------------------------------


def _param(p) -> ProjectivePoint:
    if not isinstance(p, ProjectivePoint):
        p = ProjectivePoint(*p)
    if p.dim != 1:
        raise DimensionMismatch(f"fiber parameters live in CP^1, got CP^{p.dim}")
    return p


def fiber_action(g: GroupElement, p) -> ProjectivePoint:
    p = _param(p)
    lam, mu = p.coords
    g = GroupElement(g)
    if g is GroupElement.IDENTITY:
        return p
    if g is GroupElement.SIGMA:
        return ProjectivePoint(lam.conj(), mu.conj())
    if g is GroupElement.TAU:
        return ProjectivePoint(mu, lam)
    return ProjectivePoint(mu.conj(), lam.conj())


def is_exceptional(g: GroupElement, p) -> bool:
    """Closed-form test for the fiber over p being mapped to itself."""
    p = _param(p)
    lam, mu = p.coords
    g = GroupElement(g)
    if g is GroupElement.IDENTITY:
        raise ValueError("the identity fixes every fiber")
    if g is GroupElement.SIGMA:
        return (lam * mu.conj()).im == 0
    if g is GroupElement.TAU:
        return proj_equal(p, ProjectivePoint(1, 1)) or proj_equal(p, ProjectivePoint(1, -1))
    return lam.norm() == mu.norm()


def is_fixed_param(g: GroupElement, p) -> bool:
    p = _param(p)
    return proj_equal(fiber_action(g, p), p)


def fiber_orbit(p) -> list:
    """Distinct images of p under the group, in group order."""
    p = _param(p)
    orbit = []
    for g in GroupElement:
        q = fiber_action(g, p)
        if not any(proj_equal(q, o) for o in orbit):
            orbit.append(q)
    return orbit


def coefficient_matrix(p) -> list:
    """The 2x6 coefficient matrix of L1, L2 in (x1,x2,x3,y1,y2,y3)."""
    lam, mu = _param(p).coords
    z = GaussianRational(0)
    return [[lam, -mu, z, lam, mu, z], [mu, -lam, z, -mu, -lam, z]]


def verify_rank2(p) -> int:
    return matrix_rank(coefficient_matrix(p))


# --- polynomial identities -----------------------------------------------------


def quadric_forms(pair: QuadricPair) -> tuple:
    v = polynomial_variables(DEFAULT_VARIABLES)
    xs = (v["x1"], v["x2"], v["x3"])
    ys = (v["y1"], v["y2"], v["y3"])
    forms = []
    for i in range(3):
        q = MultivariatePolynomial(variables=DEFAULT_VARIABLES)
        for j in range(3):
            q = q + xs[j] * xs[j] * gq(pair.A[i][j]) + ys[j] * ys[j] * gq(pair.B[i][j])
        forms.append(q)
    return tuple(forms)


def q4_polynomial() -> MultivariatePolynomial:
    v = polynomial_variables(DEFAULT_VARIABLES)
    x1, x2, y1, y2 = v["x1"], v["x2"], v["y1"], v["y2"]
    return (x1 + y1) * (x1 - y1) - (x2 + y2) * (x2 - y2)


def linear_forms() -> tuple:
    v = polynomial_variables(DEFAULT_VARIABLES)
    x1, x2, y1, y2, lam, mu = (v[k] for k in ("x1", "x2", "y1", "y2", "lam", "mu"))
    L1 = lam * (x1 + y1) - mu * (x2 - y2)
    L2 = mu * (x1 - y1) - lam * (x2 + y2)
    return L1, L2


def q4_identities(L1: Optional[MultivariatePolynomial] = None,
                  L2: Optional[MultivariatePolynomial] = None) -> tuple:
    """Check (x1-y1)L1 + (x2-y2)L2 = lam*q4 and (x2+y2)L1 + (x1+y1)L2 = mu*q4."""
    d1, d2 = linear_forms()
    L1 = d1 if L1 is None else L1
    L2 = d2 if L2 is None else L2
    v = polynomial_variables(DEFAULT_VARIABLES)
    x1, x2, y1, y2, lam, mu = (v[k] for k in ("x1", "x2", "y1", "y2", "lam", "mu"))
    q4 = q4_polynomial()
    first = (x1 - y1) * L1 + (x2 - y2) * L2 == lam * q4
    second = (x2 + y2) * L1 + (x1 + y1) * L2 == mu * q4
    return first, second


def verify_q4_identities(L1=None, L2=None) -> bool:
    return all(q4_identities(L1, L2))


# --- points on fibers ----------------------------------------------------------


def _assignment(pt: ProjectivePoint, p: Optional[ProjectivePoint] = None) -> dict:
    if pt.dim != 5:
        raise DimensionMismatch(f"points of X live in CP^5, got CP^{pt.dim}")
    names = ("x1", "x2", "x3", "y1", "y2", "y3")
    a = dict(zip(names, pt.coords))
    if p is not None:
        a["lam"], a["mu"] = p.coords
    return a


def point_on_fiber(pair: QuadricPair, p, pt: ProjectivePoint) -> bool:
    p = _param(p)
    a = _assignment(pt, p)
    q1, q2, _ = quadric_forms(pair)
    L1, L2 = linear_forms()
    return all(f.evaluate(a) == 0 for f in (q1, q2, L1, L2))


def point_on_surface(pair: QuadricPair, pt: ProjectivePoint) -> bool:
    a = _assignment(pt)
    return all(q.evaluate(a) == 0 for q in quadric_forms(pair))


def compute_fiber_param(pt: ProjectivePoint) -> ProjectivePoint:
    """The unique (lam:mu) whose linear forms vanish at pt."""
    a = _assignment(pt)
    x1, x2, y1, y2 = a["x1"], a["x2"], a["y1"], a["y2"]
    candidates = []
    # lam*(x1+y1) = mu*(x2-y2)
    if x1 + y1 or x2 - y2:
        candidates.append(ProjectivePoint(x2 - y2, x1 + y1))
    # mu*(x1-y1) = lam*(x2+y2)
    if x1 - y1 or x2 + y2:
        candidates.append(ProjectivePoint(x1 - y1, x2 + y2))
    if not candidates:
        raise DegenerateParam("x1+y1 = x2-y2 = x1-y1 = x2+y2 = 0: every (lam:mu) fits")
    if len(candidates) == 2 and not proj_equal(*candidates):
        raise InconsistentRatios(
            f"{candidates[0]} vs {candidates[1]}: the point violates x1^2-x2^2-y1^2+y2^2 = 0"
        )
    return candidates[0]


def solve_linear_fiber(p, x1, x2, x3, y3) -> Optional[ProjectivePoint]:
    """A point with given x1, x2, x3, y3 on both linear forms of the fiber over p.

    Solves for y1, y2; returns None when lam^2 = mu^2 (system singular in y)
    or the resulting vector is zero. Quadrics are not imposed.
    """
    lam, mu = _param(p).coords
    x1, x2, x3, y3 = (gq(c) for c in (x1, x2, x3, y3))
    # lam*y1 + mu*y2 = -lam*x1 + mu*x2 ;  -mu*y1 - lam*y2 = -mu*x1 + lam*x2
    det = mu * mu - lam * lam
    if det == 0:
        return None
    r1 = -lam * x1 + mu * x2
    r2 = -mu * x1 + lam * x2
    y1 = (r1 * (-lam) - mu * r2) / det
    y2 = (lam * r2 - (-mu) * r1) / det
    coords = (x1, x2, x3, y1, y2, y3)
    if not any(coords):
        return None
    return ProjectivePoint(*coords)
