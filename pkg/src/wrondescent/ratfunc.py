"""Rational functions on the projective line over a finite field.

A rational function is stored as a coprime pair g/h with h monic; that
canonical pair makes equality and caching cheap without conflating it with
equivalence of functions, which is equality of standard forms.  Two
rational functions are equivalent when one is a fractional linear
transformation post-composed with the other; every equivalence class
contains exactly one standard form (g, h monic, deg g > deg h, and no
x^(deg h) term in g), so equivalence testing and subfield descent both
reduce to inspecting that representative.

Ramification is read off the Wronskian h*g' - g*h': its roots are the
affine ramification points, each with differential length equal to the
root multiplicity, and the point at infinity carries length
2d - 2 - deg(Wr).  The differential length of a tame point is its
ramification index minus one; a wild point has strictly larger length.
Ramification indices themselves are computed independently of the
Wronskian, as orders of vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import poly
from .errors import (
    ConstantFunctionError,
    DegenerateTransformationError,
    FieldMismatchError,
    InseparableError,
    NotASubfieldError,
    ZeroDenominatorError,
)
from .gf import FieldElement, FiniteField, embed, make_field
from .poly import Polynomial


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^1: an affine field element, or the point at infinity."""

    value: FieldElement | None = None

    @classmethod
    def affine(cls, value: FieldElement) -> "ProjectivePoint":
        return cls(value)

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def embedded(self, target: FiniteField) -> "ProjectivePoint":
        if self.value is None:
            return self
        return ProjectivePoint(embed(self.value, target))

    def sort_key(self):
        if self.value is None:
            return (1, 0)
        return (0, self.value.index())

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return "ProjectivePoint(%s)" % self


INFINITY = ProjectivePoint(None)


@dataclass(frozen=True)
class MobiusTransformation:
    """x -> (a*x + b)/(c*x + d) with nonzero determinant."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        field = self.a.field
        for v in (self.b, self.c, self.d):
            if v.field != field:
                raise FieldMismatchError("transformation entries from mixed fields")
        if not self.a * self.d - self.b * self.c:
            raise DegenerateTransformationError("determinant is zero")

    @property
    def field(self) -> FiniteField:
        return self.a.field

    @property
    def determinant(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    @classmethod
    def from_ints(cls, field: FiniteField, a, b, c, d) -> "MobiusTransformation":
        return cls(field.element(a), field.element(b), field.element(c), field.element(d))

    @classmethod
    def identity(cls, field: FiniteField) -> "MobiusTransformation":
        return cls.from_ints(field, 1, 0, 0, 1)

    @classmethod
    def inversion(cls, field: FiniteField) -> "MobiusTransformation":
        """x -> 1/x."""
        return cls.from_ints(field, 0, 1, 1, 0)

    @classmethod
    def translation(cls, by: FieldElement) -> "MobiusTransformation":
        """x -> x + by."""
        field = by.field
        return cls(field.one, by, field.zero, field.one)

    @classmethod
    def scaling(cls, by: FieldElement) -> "MobiusTransformation":
        """x -> by * x."""
        field = by.field
        return cls(by, field.zero, field.zero, field.one)

    @classmethod
    def sending_infinity_to(cls, point: ProjectivePoint, field: FiniteField) -> "MobiusTransformation":
        """A transformation with sigma(inf) = point, for moving points by pre-composition."""
        if point.is_infinity:
            return cls.identity(field)
        return cls(point.value, field.one, field.one, field.zero)

    def inverse(self) -> "MobiusTransformation":
        return MobiusTransformation(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MobiusTransformation") -> "MobiusTransformation":
        """self after other."""
        return MobiusTransformation(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, point: ProjectivePoint) -> ProjectivePoint:
        if point.is_infinity:
            if not self.c:
                return INFINITY
            return ProjectivePoint(self.a / self.c)
        num = self.a * point.value + self.b
        den = self.c * point.value + self.d
        if not den:
            return INFINITY
        return ProjectivePoint(num / den)

    def embedded(self, target: FiniteField) -> "MobiusTransformation":
        return MobiusTransformation(
            embed(self.a, target), embed(self.b, target),
            embed(self.c, target), embed(self.d, target),
        )

    def __str__(self):
        return "(%s)/(%s)" % (
            poly.render(Polynomial(self.field, [self.b, self.a])),
            poly.render(Polynomial(self.field, [self.d, self.c])),
        )


@dataclass(frozen=True)
class RamificationProfile:
    """Ramification points with differential lengths, over a splitting field.

    Affine entries are sorted in enumeration order with infinity last; the
    lengths always sum to 2d - 2.
    """

    entries: tuple[tuple[ProjectivePoint, int], ...]
    degree: int
    field: FiniteField

    def __post_init__(self):
        total = sum(l for _, l in self.entries)
        if total != 2 * self.degree - 2:
            raise ValueError(
                "differential lengths sum to %d, expected %d" % (total, 2 * self.degree - 2)
            )

    @property
    def is_simple(self) -> bool:
        return all(l == 1 for _, l in self.entries)

    @property
    def type_tuple(self) -> tuple[int, ...]:
        return tuple(sorted((l for _, l in self.entries), reverse=True))

    def support(self) -> tuple[ProjectivePoint, ...]:
        return tuple(pt for pt, _ in self.entries)

    def length_at(self, point: ProjectivePoint) -> int:
        for pt, l in self.entries:
            if pt == point:
                return l
        return 0

    def __str__(self):
        return "(%s)" % ", ".join("%s:%d" % (pt, l) for pt, l in self.entries)


@dataclass(frozen=True)
class StandardForm:
    """The unique equivalence-class representative g/h.

    g and h are monic, deg g > deg h, g has no x^(deg h) term, gcd(g, h) = 1.
    """

    g: Polynomial
    h: Polynomial

    def __post_init__(self):
        if not (self.g.is_monic() and self.h.is_monic()):
            raise ValueError("standard form parts must be monic")
        if self.g.degree <= self.h.degree:
            raise ValueError("standard form requires deg g > deg h")
        if self.g.coefficient(self.h.degree):
            raise ValueError("standard form requires no x^(deg h) term in g")
        if poly.gcd(self.g, self.h).degree != 0:
            raise ValueError("standard form requires coprime parts")

    @property
    def field(self) -> FiniteField:
        return self.g.field

    @property
    def degree(self) -> int:
        return self.g.degree

    def as_ratfunc(self) -> "RationalFunction":
        return RationalFunction(self.g, self.h)

    def coefficients(self):
        yield from self.g.coeffs
        yield from self.h.coeffs

    def __str__(self):
        if self.h.degree == 0:
            return poly.render(self.g)
        return "(%s)/(%s)" % (poly.render(self.g), poly.render(self.h))


class RationalFunction:
    """A non-constant rational function g/h, stored coprime with h monic."""

    __slots__ = ("field", "g", "h", "degree", "_wronskian", "_profile", "_std")

    def __init__(self, g: Polynomial, h: Polynomial):
        if g.field != h.field:
            raise FieldMismatchError("numerator and denominator over different fields")
        if h.is_zero():
            raise ZeroDenominatorError("denominator is the zero polynomial")
        if g.is_zero():
            raise ConstantFunctionError("the zero function is constant")
        common = poly.gcd(g, h)
        if common.degree > 0:
            g, h = g // common, h // common
        if not h.is_monic():
            scale = h.leading.inverse()
            g, h = g * scale, h * scale
        degree = max(g.degree, h.degree)
        if degree < 1:
            raise ConstantFunctionError("rational function reduces to a constant")
        self.field = g.field
        self.g = g
        self.h = h
        self.degree = degree
        self._wronskian = None
        self._profile = None
        self._std = None

    # -- basic queries ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.g == other.g and self.h == other.h
        return NotImplemented

    def __hash__(self):
        return hash((self.g, self.h))

    def __str__(self):
        if self.h.degree == 0:
            return poly.render(self.g)
        return "(%s)/(%s)" % (poly.render(self.g), poly.render(self.h))

    def __repr__(self):
        return "RationalFunction(%s over %s)" % (self, self.field)

    def __call__(self, point) -> ProjectivePoint:
        if isinstance(point, ProjectivePoint):
            if point.is_infinity:
                if self.g.degree > self.h.degree:
                    return INFINITY
                if self.g.degree < self.h.degree:
                    return ProjectivePoint(self.field.zero)
                return ProjectivePoint(self.g.leading)
            point = point.value
        num = self.g(point)
        den = self.h(point)
        if not den:
            return INFINITY
        return ProjectivePoint(num / den)

    # -- Wronskian and ramification ----------------------------------------

    def _raw_wronskian(self) -> Polynomial:
        if self._wronskian is None:
            self._wronskian = self.h * self.g.derivative() - self.g * self.h.derivative()
        return self._wronskian

    @property
    def is_separable(self) -> bool:
        return not self._raw_wronskian().is_zero()

    def wronskian(self) -> Polynomial:
        """h*g' - g*h' of the stored pair; raises if identically zero."""
        w = self._raw_wronskian()
        if w.is_zero():
            raise InseparableError("%s is inseparable" % self)
        return w

    def wronskian_monic(self) -> tuple[Polynomial, FieldElement]:
        w = self.wronskian()
        return w.monic(), w.leading

    def ramification_profile(self) -> RamificationProfile:
        """Points with differential lengths, over a minimal splitting field."""
        if self._profile is not None:
            return self._profile
        w, _ = self.wronskian_monic()
        entries = []
        if w.degree > 0:
            factors = poly.factor(w).factors
            ext = lcm(*(base.degree for base, _ in factors))
            if ext == 1:
                split = self.field
                for base, mult in factors:
                    entries.append((ProjectivePoint(-base.coefficient(0)), mult))
            else:
                split = make_field(self.field.p, self.field.n * ext)
                for base, mult in factors:
                    lifted = base.map_coefficients(lambda c: embed(c, split), split)
                    for root in set(poly.roots_in_field(lifted)):
                        entries.append((ProjectivePoint(root), mult))
        else:
            split = self.field
        l_inf = 2 * self.degree - 2 - w.degree
        if l_inf > 0:
            entries.append((INFINITY, l_inf))
        entries.sort(key=lambda item: item[0].sort_key())
        self._profile = RamificationProfile(tuple(entries), self.degree, split)
        return self._profile

    def ramification_index(self, point: ProjectivePoint) -> int:
        """Order of vanishing of f - f(P) at P (pole order when f(P) = inf).

        Computed by moving P to 0 and reading valuations; independent of
        the Wronskian.
        """
        field = self.field
        if point.is_infinity:
            moved = self.pre_compose(MobiusTransformation.inversion(field))
        elif point.value:
            moved = self.pre_compose(MobiusTransformation.translation(point.value))
        else:
            moved = self
        if not moved.h.coefficient(0):
            return _valuation_at_zero(moved.h)
        value = moved.g.coefficient(0) / moved.h.coefficient(0)
        return _valuation_at_zero(moved.g - moved.h * value)

    def is_simply_ramified(self) -> bool:
        """True iff every differential length is 1 (no coalescing, no wildness)."""
        w = self.wronskian()
        if 2 * self.degree - 2 - w.degree > 1:
            return False
        return w.degree == 0 or poly.gcd(w, w.derivative()).degree == 0

    # -- composition and equivalence ----------------------------------------

    def post_compose(self, sigma: MobiusTransformation) -> "RationalFunction":
        """sigma(f): acts on values; preserves ramification, changes the class rep."""
        if sigma.field != self.field:
            raise FieldMismatchError("transformation over a different field")
        num = sigma.a * self.g + sigma.b * self.h
        den = sigma.c * self.g + sigma.d * self.h
        return RationalFunction(num, den)

    def pre_compose(self, sigma: MobiusTransformation) -> "RationalFunction":
        """f(sigma(x)): moves ramification points by sigma^(-1)."""
        if sigma.field != self.field:
            raise FieldMismatchError("transformation over a different field")
        field = self.field
        d = self.degree
        top = Polynomial(field, [sigma.b, sigma.a])
        bot = Polynomial(field, [sigma.d, sigma.c])
        tops = [poly.constant(field, 1)]
        bots = [poly.constant(field, 1)]
        for _ in range(d):
            tops.append(tops[-1] * top)
            bots.append(bots[-1] * bot)
        num = Polynomial(field)
        den = Polynomial(field)
        for i in range(d + 1):
            gi = self.g.coefficient(i)
            if gi:
                num = num + tops[i] * bots[d - i] * gi
            hi = self.h.coefficient(i)
            if hi:
                den = den + tops[i] * bots[d - i] * hi
        return RationalFunction(num, den)

    def standard_form(self) -> StandardForm:
        """The unique representative of the post-composition class; idempotent."""
        if self._std is not None:
            return self._std
        g, h = self.g, self.h
        if g.degree < h.degree:
            # send f(inf) = 0 to inf via w -> 1/w
            g, h = h, g
        elif g.degree == h.degree:
            # f(inf) = lc(g); send it to inf via w -> 1/(w - lc(g))
            g, h = h, g - h * g.leading
        if not h.is_monic():
            scale = h.leading.inverse()
            g, h = g * scale, h * scale
        g = g * g.leading.inverse()
        g = g - h * g.coefficient(h.degree)
        self._std = StandardForm(g, h)
        return self._std

    def is_equivalent(self, other: "RationalFunction") -> bool:
        """Whether some fractional linear transformation maps one to the other."""
        if not isinstance(other, RationalFunction):
            raise TypeError("expected a rational function")
        if other.field != self.field:
            raise FieldMismatchError("cannot compare functions over different fields")
        return self.standard_form() == other.standard_form()

    # -- rationality and descent ---------------------------------------------

    def descends_to(self, m: int) -> bool:
        """True iff the class has a representative with coefficients in F_{p^m}."""
        if self.field.n % m != 0:
            raise NotASubfieldError("degree %d is not a subfield degree" % m)
        std = self.standard_form()
        return all(c.in_subfield(m) for c in std.coefficients())

    def ramification_points_rational_over(self, m: int) -> bool:
        """True iff every ramification point is F_{p^m}-rational (inf counts)."""
        if self.field.n % m != 0:
            raise NotASubfieldError("degree %d is not a subfield degree" % m)
        w, _ = self.wronskian_monic()
        if w.degree == 0:
            return True
        radical = poly.constant(self.field, 1)
        for part, _ in poly.squarefree_decomposition(w):
            radical = radical * part
        power = poly.powmod(poly.x(self.field), self.field.p**m, radical)
        return power == poly.x(self.field) % radical


def _valuation_at_zero(a: Polynomial) -> int:
    for k, c in enumerate(a.coeffs):
        if c:
            return k
    raise ValueError("valuation of the zero polynomial")


def make_ratfunc(g: Polynomial, h: Polynomial) -> RationalFunction:
    """Build g/h: divides out the gcd, makes h monic, computes the degree."""
    return RationalFunction(g, h)


def embed_ratfunc(f: RationalFunction, target: FiniteField) -> RationalFunction:
    """Coefficientwise image of f in an extension field."""
    g = f.g.map_coefficients(lambda c: embed(c, target), target)
    h = f.h.map_coefficients(lambda c: embed(c, target), target)
    return RationalFunction(g, h)
