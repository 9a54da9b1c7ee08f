"""Exact arithmetic kernel: Q, Q(i), projective points, 3x3 rational matrices and
canonical multivariate polynomials over Q(i).

Rationals are :class:`fractions.Fraction` throughout. No floating point is used
anywhere in this package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    MissingVariable,
    VariableMismatch,
    ZeroVector,
)

Rational = Fraction
Scalar = Union[int, Fraction, "GaussianRational"]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        # both parts already Fractions
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(as_rational(value), 0)

    # "a/b+c/d i", "i", "-3/4i", "2", "1-i"
    _PURE_IM = re.compile(r"^(?P<im>[+-]?(?:\d+(?:/\d+)?)?)i$")
    _GENERAL = re.compile(
        r"^(?P<re>[+-]?\d+(?:/\d+)?)(?:(?P<im>[+-](?:\d+(?:/\d+)?)?)i)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        s = text.replace(" ", "").replace("*", "")
        m = cls._PURE_IM.match(s)
        if m:
            return cls(0, _imag_part(m.group("im")))
        m = cls._GENERAL.match(s)
        if m:
            im = m.group("im")
            return cls(Fraction(m.group("re")), 0 if im is None else _imag_part(im))
        raise ValueError(f"not a Gaussian rational: {text!r}")

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        if self.re == 0:
            return imag if self.im > 0 else "-" + imag
        return f"{self.re}{'+' if self.im > 0 else '-'}{imag}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """z * conj(z), as a non-negative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def is_real(self) -> bool:
        return self.im == 0


def _imag_part(token: str) -> Fraction:
    if token in ("", "+"):
        return Fraction(1)
    if token == "-":
        return Fraction(-1)
    return Fraction(token)


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gq(value) -> GaussianRational:
    """Shorthand coercion: ints, Fractions and strings like ``"1/2-i"``."""
    return GaussianRational.coerce(value)


def gq_arith(op: str, a, b=None):
    """Dispatch table over the field operations (``norm`` returns a Fraction)."""
    a = gq(a)
    if op == "conj":
        return a.conj()
    if op == "norm":
        return a.norm()
    b = gq(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


class ProjectivePoint:
    """A point of CP^n with Gaussian-rational homogeneous coordinates.

    Equality is scale equivalence (all 2x2 minors vanish). The hash uses the
    representative whose first nonzero coordinate is 1.
    """

    __slots__ = ("coords", "_normal")

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str, GaussianRational)):
            coords = tuple(coords[0])
        cs = tuple(gq(c) for c in coords)
        if len(cs) < 2:
            raise DimensionMismatch("a projective point needs at least two coordinates")
        if not any(cs):
            raise ZeroVector("all homogeneous coordinates are zero")
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "_normal", None)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def normalized(self) -> tuple:
        if self._normal is None:
            lead = next(c for c in self.coords if c)
            object.__setattr__(self, "_normal", tuple(c / lead for c in self.coords))
        return self._normal

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return _minors_vanish(self.coords, other.coords)

    def __hash__(self):
        return hash(self.normalized())

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjectivePoint{str(self)}"

    def sort_key(self):
        return tuple((c.re, c.im) for c in self.normalized())


def _minors_vanish(a: Sequence[GaussianRational], b: Sequence[GaussianRational]) -> bool:
    return all(a[i] * b[j] - a[j] * b[i] == 0 for i, j in combinations(range(len(a)), 2))


def proj_equal(p: ProjectivePoint, q: ProjectivePoint) -> bool:
    if p.dim != q.dim:
        raise DimensionMismatch(f"CP^{p.dim} vs CP^{q.dim}")
    return _minors_vanish(p.coords, q.coords)


@dataclass(frozen=True)
class RationalMatrix3:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise DimensionMismatch("expected a 3x3 matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix3":
        return cls(tuple(tuple(r) for r in rows))

    def __getitem__(self, idx):
        return self.entries[idx]

    def det(self) -> Fraction:
        return mat3_det(self)

    def replace(self, i: int, j: int, value) -> "RationalMatrix3":
        rows = [list(r) for r in self.entries]
        rows[i][j] = as_rational(value)
        return RationalMatrix3.from_rows(rows)

    def to_strings(self) -> list:
        return [[str(x) for x in row] for row in self.entries]


def mat3_det(m: RationalMatrix3) -> Fraction:
    (a, b, c), (d, e, f), (g, h, k) = m.entries
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q(i) by exact Gaussian elimination."""
    work = [[gq(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col] * inv
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


# Fixed lexicographic variable order used for canonical printing.
DEFAULT_VARIABLES = ("x1", "x2", "x3", "y1", "y2", "y3", "lam", "mu")


class MultivariatePolynomial:
    """Polynomial over Q(i) in a fixed, named variable list.

    Terms map exponent tuples to nonzero coefficients, so structural equality
    is polynomial equality.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, terms: Mapping | None = None, variables: Sequence[str] = DEFAULT_VARIABLES):
        variables = tuple(variables)
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables) or any(e < 0 for e in exps):
                raise DimensionMismatch(f"bad exponent vector {exps}")
            c = clean.get(exps, ZERO) + gq(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultivariatePolynomial is immutable")

    @classmethod
    def var(cls, name: str, variables: Sequence[str] = DEFAULT_VARIABLES):
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"{name!r} not in {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls({exps: ONE}, variables)

    @classmethod
    def const(cls, value, variables: Sequence[str] = DEFAULT_VARIABLES):
        variables = tuple(variables)
        return cls({(0,) * len(variables): gq(value)}, variables)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _lift(self, other) -> "MultivariatePolynomial":
        if isinstance(other, MultivariatePolynomial):
            if other.variables != self.variables:
                raise VariableMismatch(f"{self.variables} vs {other.variables}")
            return other
        return MultivariatePolynomial.const(other, self.variables)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        merged = dict(self._terms)
        for k, c in o._terms.items():
            merged[k] = merged.get(k, ZERO) + c
        return MultivariatePolynomial(merged, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial({k: -c for k, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in o._terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, ZERO) + ca * cb
        return MultivariatePolynomial(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultivariatePolynomial.const(1, self.variables)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "MultivariatePolynomial":
        c = gq(c)
        return MultivariatePolynomial({k: c * v for k, v in self._terms.items()}, self.variables)

    def __eq__(self, other):
        if isinstance(other, MultivariatePolynomial):
            return self.variables == other.variables and self._terms == other._terms
        try:
            return self == MultivariatePolynomial.const(other, self.variables)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def occurring_variables(self) -> tuple:
        return tuple(
            v for i, v in enumerate(self.variables) if any(k[i] for k in self._terms)
        )

    def evaluate(self, assignment: Mapping[str, object]) -> GaussianRational:
        missing = [v for v in self.occurring_variables() if v not in assignment]
        if missing:
            raise MissingVariable(f"no value for {missing}")
        values = [gq(assignment[v]) if v in assignment else ZERO for v in self.variables]
        total = ZERO
        for exps, c in self._terms.items():
            term = c
            for val, e in zip(values, exps):
                if e:
                    term = term * val**e
            total = total + term
        return total

    def sorted_terms(self) -> list:
        """Terms in descending lex order over the variable list."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            negative = c.im == 0 and c.re < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.im == 0:
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultivariatePolynomial({str(self)!r})"


def mpoly_arith(op: str, p: MultivariatePolynomial, q) -> MultivariatePolynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def mpoly_eval(p: MultivariatePolynomial, assignment: Mapping[str, object]) -> GaussianRational:
    return p.evaluate(assignment)


def polynomial_variables(names: Iterable[str] = DEFAULT_VARIABLES) -> dict:
    """``{name: MultivariatePolynomial.var(name)}`` over a shared variable list."""
    names = tuple(names)
    return {n: MultivariatePolynomial.var(n, names) for n in names}


def random_gaussian_rational(rng, bound: int = 3, max_den: int = 2) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)),
        Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)),
    )


def random_projective_point(rng, dim: int = 1, bound: int = 3, max_den: int = 2) -> ProjectivePoint:
    while True:
        cs = [random_gaussian_rational(rng, bound, max_den) for _ in range(dim + 1)]
        if any(cs):
            return ProjectivePoint(*cs)
