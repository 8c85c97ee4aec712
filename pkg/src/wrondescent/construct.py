"""Constructive sources of descent counterexamples.

Two mechanisms are implemented.  The first is a one-parameter family of
degree-3 rational functions ramified at 0, 1, infinity and a fourth point
that depends algebraically on the parameter; solving for a parameter whose
fourth point is rational but which is itself irrational produces, over any
finite base field of characteristic > 3, a simply ramified function with
rational ramification that does not descend.  The second shifts a function
by t*x^p, which leaves the Wronskian untouched whenever the ramification
index at infinity is at least p; sweeping t through an extension field
yields arbitrarily many inequivalent classes sharing one Wronskian, all
non-descending for t outside the base field.

The degree-3 family is also constructible in characteristics 2 and 5+
(in characteristic 2 it always degenerates); in characteristic 3 the
formulas remain evaluable but none of the classification properties are
claimed there, so treat char-3 output as exploratory.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import (
    DegenerateParameterError,
    HypothesisNotMetError,
    SearchExhaustedError,
    UnsupportedCharacteristicError,
)
from .gf import FieldElement, FiniteField, embed, make_field
from .poly import Polynomial
from .ratfunc import (
    INFINITY,
    ProjectivePoint,
    RamificationProfile,
    RationalFunction,
    embed_ratfunc,
)


def cubic_family(u: FieldElement) -> RationalFunction:
    """The degree-3 function (x^3 + u*x^2) / ((2u+3)x - (u+2)).

    Away from the degenerate parameters u = -1, -2 (where numerator and
    denominator share a factor and the degree drops) it is ramified at
    0, 1, infinity and at :func:`fourth_ramification_point` of u.
    """
    field = u.field
    if u == -1 or u == -2:
        raise DegenerateParameterError("parameter %s degenerates the family" % u)
    g = Polynomial(field, [field.zero, field.zero, u, field.one])
    h = Polynomial(field, [-(u + 2), 2 * u + 3])
    f = RationalFunction(g, h)
    if f.degree != 3:
        raise DegenerateParameterError(
            "family member at %s collapses to degree %d" % (u, f.degree)
        )
    return f


def fourth_ramification_point(u: FieldElement) -> ProjectivePoint:
    """-(u^2 + 2u)/(2u + 3); the pole of the formula is reported as infinity."""
    den = 2 * u + 3
    if not den:
        return INFINITY
    return ProjectivePoint(-(u * u + 2 * u) / den)


def fourth_point_image(field: FiniteField) -> set[FieldElement]:
    """All affine fourth points as u sweeps the field; never the whole field."""
    if field.p <= 3:
        raise UnsupportedCharacteristicError(
            "the fourth-point map needs characteristic > 3"
        )
    out = set()
    for u in field:
        point = fourth_ramification_point(u)
        if not point.is_infinity:
            out.add(point.value)
    return out


@dataclass(frozen=True)
class CounterexampleWitness:
    """A simply ramified degree-3 function over F_{q^2} with ramification in
    P^1(F_q) whose class has no representative over F_q."""

    base_field: FiniteField
    extension_field: FiniteField
    fourth_point: FieldElement       # the chosen rational value c, in the base field
    quadratic: Polynomial            # u^2 + (2+2c)u + 3c over the base field
    parameter: FieldElement          # a root u in the extension, not in the base
    function: RationalFunction
    profile: RamificationProfile
    descends: bool                   # always False


def search_counterexample(field: FiniteField, seed: int = 0) -> CounterexampleWitness:
    """Find the first non-descending simply-ramified witness over `field`.

    Walks candidate fourth points c in enumeration order, skipping 0 and 1
    (they would coalesce ramification) and everything the fourth-point map
    already reaches; for the first miss, the parameter solving for c is
    quadratic-irrational, and the enumeration-least root in the quadratic
    extension gives the witness.  Deterministic; `seed` only reaches the
    polynomial factorization, whose output is canonical anyway.
    """
    if field.p <= 3:
        raise UnsupportedCharacteristicError(
            "the counterexample search needs characteristic > 3"
        )
    image = fourth_point_image(field)
    extension = make_field(field.p, 2 * field.n)
    for c in field:
        if c == 0 or c == 1 or c in image:
            continue
        # clearing denominators in fourth_point(u) = c
        quadratic = Polynomial(field, [3 * c, 2 + 2 * c, field.one])
        if poly.roots_in_field(quadratic):
            continue  # fourth point reachable after all; keep scanning
        lifted = quadratic.map_coefficients(lambda v: embed(v, extension), extension)
        roots = poly.roots_in_field(lifted)
        assert len(set(roots)) == 2
        u = min(set(roots), key=lambda r: r.index())
        function = cubic_family(u)
        profile = function.ramification_profile()
        witness = CounterexampleWitness(
            base_field=field,
            extension_field=extension,
            fourth_point=c,
            quadratic=quadratic,
            parameter=u,
            function=function,
            profile=profile,
            descends=function.descends_to(field.n),
        )
        _check_counterexample(witness)
        return witness
    raise SearchExhaustedError("no usable fourth point over %r" % field)


def _check_counterexample(w: CounterexampleWitness):
    ext, base = w.extension_field, w.base_field
    assert not w.parameter.in_subfield(base.n)
    assert fourth_ramification_point(w.parameter) == ProjectivePoint(
        embed(w.fourth_point, ext)
    )
    expected = {
        ProjectivePoint(ext.zero),
        ProjectivePoint(ext.one),
        ProjectivePoint(embed(w.fourth_point, ext)),
        INFINITY,
    }
    assert w.profile.field == ext
    assert {pt for pt, _ in w.profile.entries} == expected
    assert w.profile.is_simple
    assert w.function.is_simply_ramified()
    assert w.function.ramification_points_rational_over(base.n)
    assert w.descends is False


@dataclass(frozen=True)
class FamilyWitness:
    """One member f + t*x^p of a constant-Wronskian family."""

    base: RationalFunction           # the standard form the family is built on
    parameter: FieldElement          # t, possibly in an extension of the base's field
    member: RationalFunction
    wronskian: Polynomial            # monic; shared by every member
    base_subfield_degree: int        # n with F_{p^n} the field the sweep started from
    descends: bool                   # whether the member descends to that subfield


def constant_wronskian_member(f: RationalFunction, t: FieldElement) -> FamilyWitness:
    """The family member (g + t*x^p*h)/h for f = g/h in standard form.

    Requires ramification index at least p at infinity, i.e. the standard
    form must satisfy deg g - deg h >= p.  Adding t*x^p does not move the
    Wronskian because (x^p)' vanishes; the degree is preserved except at
    the single cancelling parameter (t = -1 when deg h = deg g - p), which
    is rejected.
    """
    base_degree = f.field.n
    if t.field != f.field:
        f = embed_ratfunc(f, t.field)
    field = t.field
    std = f.standard_form()
    p = field.p
    d = std.g.degree
    if d - std.h.degree < p:
        raise HypothesisNotMetError(
            "ramification index %d at infinity is below the characteristic %d"
            % (d - std.h.degree, p)
        )
    shift = poly.x(field) ** p * std.h * t
    num = std.g + shift
    if num.degree < d:
        raise DegenerateParameterError("parameter %s cancels the leading term" % t)
    member = RationalFunction(num, std.h)
    base = std.as_ratfunc()
    w_base, _ = base.wronskian_monic()
    w_member, _ = member.wronskian_monic()
    assert member.degree == d
    assert base.wronskian() == member.wronskian()
    assert w_base == w_member
    return FamilyWitness(
        base=base,
        parameter=t,
        member=member,
        wronskian=w_member,
        base_subfield_degree=base_degree,
        descends=member.descends_to(base_degree),
    )


def constant_wronskian_batch(
    f: RationalFunction,
    extension_degree: int,
    count: int | None = None,
    seed: int = 0,
) -> list[FamilyWitness]:
    """Members for the first `count` valid parameters t in F_{q^r}.

    Parameters are swept in enumeration order (starting at t = 0, which
    reproduces the base class); the lone degenerate parameter, when it
    exists, is skipped.  With count=None the whole extension is swept.
    All members provably share one monic Wronskian and are pairwise
    inequivalent; both facts are asserted.  `seed` is accepted for
    interface symmetry; the sweep is deterministic.
    """
    del seed
    big = make_field(f.field.p, f.field.n * extension_degree)
    out = []
    for t in big:
        if count is not None and len(out) >= count:
            break
        try:
            out.append(constant_wronskian_member(f, t))
        except DegenerateParameterError:
            continue
    if count is not None and len(out) < count:
        raise ValueError(
            "only %d usable parameters in %r, %d requested" % (len(out), big, count)
        )
    forms = {w.member.standard_form() for w in out}
    assert len(forms) == len(out)
    assert len({w.wronskian for w in out}) <= 1
    return out
