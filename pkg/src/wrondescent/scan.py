"""Brute-force enumeration of equivalence classes and verification harnesses.

Classes are enumerated directly by standard form: for each denominator
degree e < d, the candidates are pairs (g, h) with g monic of degree d and
zero x^e coefficient, h monic of degree e, gcd(g, h) = 1, Wronskian
nonzero.  Every separable post-composition class over the field appears
exactly once, and the candidate space is a factor q^3 smaller than scanning
arbitrary pairs.  A hard budget of 10^7 candidates guards each scan.

Two scanning routes exist and are kept interchangeable: a plain object
loop, and the vectorized kernel of kernel.py for the hot Wronskian-match
scans.  The verification harnesses use the kernel to locate survivors and
then re-verify each one honestly through the ramification machinery, so a
kernel bug cannot silently produce a wrong verdict, only a missed one; the
two routes are compared outright on small fields in the test suite.

Verification modes:

* ``verify_char3_simple`` checks, over F_{3^n}, that every simply ramified
  class with F_{3^m}-rational ramification descends to F_{3^m}.  Being
  simply ramified with rational ramification is equivalent to the monic
  Wronskian being a product of 2d-2 or 2d-3 distinct linear factors with
  roots in F_{3^m}, so the scan matches Wronskians against that explicit
  (small) list of divisors.

* ``verify_low_char_negative`` drives the constant-Wronskian family: each
  qualifying base class gets a point of ramification index >= p moved to
  infinity by a rational change of coordinate, and the full parameter
  sweep over F_{q^r} must produce exactly q^r - q pairwise-inequivalent
  non-descending members (the members with parameters in F_q, and only
  those, descend).

* ``classify_degree3`` checks the bijection between field parameters of
  the cubic family and degree-3 classes ramified at 0, 1 and infinity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from . import kernel, poly
from .construct import constant_wronskian_batch, cubic_family
from .errors import (
    BudgetExceededError,
    HypothesisNotMetError,
    InvalidDivisorError,
    UnsupportedCharacteristicError,
)
from .gf import FiniteField, embed, make_field, project_to_subfield
from .poly import Polynomial
from .ratfunc import (
    INFINITY,
    MobiusTransformation,
    ProjectivePoint,
    RamificationProfile,
    RationalFunction,
    StandardForm,
    embed_ratfunc,
)

#: Hard cap on candidates per scan.
CANDIDATE_BUDGET = 10**7

#: Below this many candidates the object path is used even when the kernel
#: could run; keeps tiny scans allocation-free and easy to debug.
KERNEL_THRESHOLD = 4096


@dataclass(frozen=True)
class ClassRecord:
    form: StandardForm
    rep: RationalFunction  # the representative; caches Wronskian and profile

    @property
    def profile(self) -> RamificationProfile:
        return self.rep.ramification_profile()


@dataclass(frozen=True)
class Violation:
    form: StandardForm
    diagnostic: str


@dataclass
class EnumerationReport:
    field: FiniteField
    degree: int
    filter_description: str
    scanned: int
    classes: list[ClassRecord] = dataclass_field(default_factory=list)
    violations: list[Violation] = dataclass_field(default_factory=list)
    counts: dict[str, int] = dataclass_field(default_factory=dict)

    def class_forms(self) -> list[StandardForm]:
        return [record.form for record in self.classes]

    def __str__(self):
        return (
            "%r degree %d [%s]: %d candidates, %d classes, %d violations"
            % (self.field, self.degree, self.filter_description,
               self.scanned, len(self.classes), len(self.violations))
        )


def candidate_count(field: FiniteField, degree: int) -> int:
    return kernel.candidate_count(field.order, degree)


def _check_budget(field: FiniteField, degree: int):
    total = candidate_count(field, degree)
    if total > CANDIDATE_BUDGET:
        raise BudgetExceededError(
            "%d candidates for degree %d over %r exceeds the %d budget"
            % (total, degree, field, CANDIDATE_BUDGET)
        )
    return total


def _candidate_pair(field: FiniteField, degree: int, e: int, cid: int):
    g_idx, h_idx = kernel.decode_candidate(field.order, degree, e, cid)
    g = Polynomial(field, [field.from_index(i) for i in g_idx])
    h = Polynomial(field, [field.from_index(i) for i in h_idx])
    return g, h


def iter_standard_pairs(field: FiniteField, degree: int):
    """All standard-form candidate pairs, in scan order (stratum, then id)."""
    q = field.order
    for e in range(degree):
        for cid in range(q ** (degree - 1 + e)):
            yield _candidate_pair(field, degree, e, cid)


def enumerate_classes(field: FiniteField, degree: int, predicate=None,
                      description: str = "all separable classes") -> EnumerationReport:
    """Every separable class over the field, once, as its standard form.

    The optional predicate receives the class representative and decides
    which classes are reported; filtering does not change what is scanned.
    """
    total = _check_budget(field, degree)
    report = EnumerationReport(field, degree, description, total)
    for g, h in iter_standard_pairs(field, degree):
        if poly.gcd(g, h).degree != 0:
            continue
        f = RationalFunction(g, h)
        if not f.is_separable:
            continue
        if predicate is not None and not predicate(f):
            continue
        form = StandardForm(g, h)  # validates every standard-form invariant
        report.classes.append(ClassRecord(form, f))
    report.counts["classes"] = len(report.classes)
    return report


def _normalize_divisor(field: FiniteField, degree: int, divisor):
    entries = []
    seen = set()
    for item in divisor:
        point, length = item if isinstance(item, tuple) else (item, 1)
        if not isinstance(point, ProjectivePoint):
            point = ProjectivePoint(field.element(point))
        if not point.is_infinity and point.value.field != field:
            raise InvalidDivisorError("divisor point %s is not over %r" % (point, field))
        if length < 1:
            raise InvalidDivisorError("divisor lengths must be positive")
        if point in seen:
            raise InvalidDivisorError("divisor points must be distinct")
        seen.add(point)
        entries.append((point, length))
    total = sum(l for _, l in entries)
    if total != 2 * degree - 2:
        raise InvalidDivisorError(
            "divisor lengths sum to %d, expected %d" % (total, 2 * degree - 2)
        )
    entries.sort(key=lambda item: item[0].sort_key())
    return tuple(entries)


def divisor_string(divisor) -> str:
    return ", ".join("%s:%d" % (pt, l) for pt, l in divisor)


def _divisor_target(field: FiniteField, divisor) -> Polynomial:
    return poly.from_roots(
        field, [(pt.value, l) for pt, l in divisor if not pt.is_infinity]
    )


def _is_squarefree(w: Polynomial) -> bool:
    return w.degree <= 0 or poly.gcd(w, w.derivative()).degree == 0


def _match_classes(field: FiniteField, degree: int, targets: list[Polynomial],
                   use_kernel: bool | None = None) -> list[list[tuple[Polynomial, Polynomial]]]:
    """Candidate pairs whose monic Wronskian equals each target polynomial.

    Chooses the kernel for large squarefree scans, the object loop
    otherwise; results are identical either way (tested).
    """
    total = _check_budget(field, degree)
    if use_kernel is None:
        use_kernel = total > KERNEL_THRESHOLD and all(_is_squarefree(w) for w in targets)
    hits: list[list[tuple[Polynomial, Polynomial]]] = [[] for _ in targets]
    if use_kernel:
        found = [[] for _ in targets]
        for pos, e, cid in kernel.scan_wronskian_targets(field, degree, targets):
            found[pos].append((e, cid))
        for pos, items in enumerate(found):
            for e, cid in sorted(items):
                hits[pos].append(_candidate_pair(field, degree, e, cid))
        return hits
    lookup = {w.coeffs: pos for pos, w in enumerate(targets)}
    for g, h in iter_standard_pairs(field, degree):
        if poly.gcd(g, h).degree != 0:
            continue
        w = h * g.derivative() - g * h.derivative()
        if w.is_zero():
            continue
        pos = lookup.get(w.monic().coeffs)
        if pos is not None:
            hits[pos].append((g, h))
    return hits


def wronskian_fiber(field: FiniteField, degree: int, divisor,
                    use_kernel: bool | None = None) -> EnumerationReport:
    """All classes whose ramification profile equals the given divisor.

    The divisor is a list of (point, length) pairs (bare points mean
    length 1) with distinct points and lengths summing to 2d - 2; points
    must be over `field`, with infinity allowed.
    """
    entries = _normalize_divisor(field, degree, divisor)
    target = _divisor_target(field, entries)
    report = EnumerationReport(
        field, degree, "monic Wronskian = %s" % poly.render(target),
        candidate_count(field, degree),
    )
    for g, h in _match_classes(field, degree, [target], use_kernel)[0]:
        f = RationalFunction(g, h)
        profile = f.ramification_profile()
        assert profile.field == field and tuple(profile.entries) == entries
        report.classes.append(ClassRecord(StandardForm(g, h), f))
    report.counts[divisor_string(entries)] = len(report.classes)
    return report


def _rational_split_divisors(field: FiniteField, degree: int, m: int):
    """Monic squarefree polynomials of degree 2d-2 or 2d-3 with all roots in
    the subfield F_{p^m}: the possible Wronskians of simply ramified classes
    with F_{p^m}-rational ramification."""
    rationals = [embed(a, field) for a in make_field(field.p, m)]
    targets = []
    for w in (2 * degree - 2, 2 * degree - 3):
        if w < 0 or w > len(rationals):
            continue
        for combo in itertools.combinations(rationals, w):
            targets.append(poly.from_roots(field, combo))
    return targets


def verify_char3_simple(field: FiniteField, degree: int, subfield_degree: int,
                        use_kernel: bool | None = None) -> EnumerationReport:
    """Check descent of every simply ramified class with rational ramification.

    Over F_{3^n}, scans all separable degree-d classes whose ramification
    is simple and lies in P^1(F_{3^m}); each must descend to F_{3^m}.
    Violations are reported, and none are expected.
    """
    if field.p != 3:
        raise UnsupportedCharacteristicError("this verification is specific to characteristic 3")
    if field.n % subfield_degree != 0:
        raise InvalidDivisorError("subfield degree %d does not divide %d"
                                  % (subfield_degree, field.n))
    targets = _rational_split_divisors(field, degree, subfield_degree)
    report = EnumerationReport(
        field, degree,
        "simply ramified, ramification rational over F_%d^%d" % (field.p, subfield_degree),
        candidate_count(field, degree),
    )
    for target, matches in zip(targets, _match_classes(field, degree, targets, use_kernel)):
        for g, h in matches:
            f = RationalFunction(g, h)
            assert f.is_simply_ramified()
            assert f.ramification_points_rational_over(subfield_degree)
            form = StandardForm(g, h)
            report.classes.append(ClassRecord(form, f))
            if not f.descends_to(subfield_degree):
                report.violations.append(Violation(
                    form, "does not descend to F_%d^%d" % (field.p, subfield_degree)
                ))
    report.counts["classes"] = len(report.classes)
    report.counts["violations"] = len(report.violations)
    return report


def _movable_point(f: RationalFunction):
    """A ramification point of index >= p that is rational over f's field,
    preferring infinity; None when no such point exists."""
    p = f.field.p
    profile = f.ramification_profile()
    big = profile.field
    lifted = embed_ratfunc(f, big) if big != f.field else f
    best = None
    for point, _ in profile.entries:
        if point.is_infinity:
            if lifted.ramification_index(point) >= p:
                return INFINITY
            continue
        if not point.value.in_subfield(f.field.n):
            continue
        if lifted.ramification_index(point) >= p:
            candidate = ProjectivePoint(project_to_subfield(point.value, f.field.n))
            if best is None or candidate.sort_key() < best.sort_key():
                best = candidate
    return best


def verify_low_char_negative(kind: str, field: FiniteField, degree: int,
                             extension_degree: int,
                             base: RationalFunction | None = None) -> EnumerationReport:
    """Drive constant-Wronskian families over every qualifying base class.

    kind "char2-all" (p = 2): every separable class qualifies, since every
    ramified point has index >= 2.  kind "char3-nonsimple" (p = 3): classes
    with coalesced ramification qualify; they always carry a point of
    index >= 3, and it is moved to infinity when rational.  For each base,
    the full parameter sweep over F_{q^r} must yield exactly q^r - q
    pairwise-inequivalent non-descending members sharing one Wronskian.

    With an explicit `base`, only that function is processed and a base
    not matching the mode raises HypothesisNotMetError; otherwise all
    classes over `field` are enumerated and non-matching ones skipped.
    """
    if kind == "char2-all":
        if field.p != 2:
            raise UnsupportedCharacteristicError("char2-all needs characteristic 2")
    elif kind == "char3-nonsimple":
        if field.p != 3:
            raise UnsupportedCharacteristicError("char3-nonsimple needs characteristic 3")
    else:
        raise ValueError("unknown mode %r" % kind)
    explicit = base is not None
    if explicit:
        bases = [base.standard_form()]
        scanned = 0
    else:
        enumerated = enumerate_classes(field, degree)
        bases = [record.form for record in enumerated.classes]
        scanned = enumerated.scanned
    expected = field.order**extension_degree - field.order
    report = EnumerationReport(
        field, degree,
        "%s family sweep over degree-%d extension" % (kind, extension_degree),
        scanned,
    )
    skipped = 0
    for form in bases:
        f = form.as_ratfunc()
        if kind == "char3-nonsimple" and f.is_simply_ramified():
            if explicit:
                raise HypothesisNotMetError("base %s is simply ramified" % form)
            skipped += 1
            continue
        point = _movable_point(f)
        if point is None:
            if explicit:
                raise HypothesisNotMetError(
                    "base %s has no rational point of index >= %d" % (form, field.p)
                )
            skipped += 1
            continue
        if point.is_infinity:
            moved = f
        else:
            sigma = MobiusTransformation.sending_infinity_to(point, field)
            moved = f.pre_compose(sigma)
        batch = constant_wronskian_batch(moved, extension_degree)
        non_descending = [w for w in batch if not w.descends]
        report.classes.append(ClassRecord(form, f))
        report.counts[str(form)] = len(non_descending)
        scanned += len(batch)
        if len(non_descending) != expected:
            report.violations.append(Violation(
                form,
                "%d non-descending members, expected %d"
                % (len(non_descending), expected),
            ))
        for w in non_descending:
            if w.parameter.in_subfield(field.n):
                report.violations.append(Violation(
                    form, "rational parameter %s failed to descend" % w.parameter
                ))
    report.scanned = scanned
    report.counts["bases"] = len(report.classes)
    report.counts["skipped"] = skipped
    report.counts["violations"] = len(report.violations)
    return report


def classify_degree3(field: FiniteField) -> EnumerationReport:
    """Match degree-3 classes ramified at 0, 1, infinity with family parameters.

    Over F_q with q = p^n, p > 3, the classes whose ramification contains
    {0, 1, inf} are in bijection with the q - 2 non-degenerate parameters
    of the cubic family; both directions are checked exhaustively.
    """
    if field.p <= 3:
        raise UnsupportedCharacteristicError("the classification needs characteristic > 3")
    by_form: dict[StandardForm, object] = {}
    report = EnumerationReport(
        field, 3, "degree-3 classes ramified at 0, 1 and infinity",
        candidate_count(field, 3),
    )
    for u in field:
        if u == -1 or u == -2:
            continue
        form = cubic_family(u).standard_form()
        if form in by_form:
            report.violations.append(Violation(
                form, "parameters %s and %s give one class" % (by_form[form], u)
            ))
        by_form[form] = u

    zero, one = field.zero, field.one

    def ramified_at_0_1_inf(f: RationalFunction) -> bool:
        w, _ = f.wronskian_monic()
        return w.degree <= 2 * f.degree - 3 and not w(zero) and not w(one)

    enumerated = enumerate_classes(field, 3, predicate=ramified_at_0_1_inf,
                                   description="ramified at 0, 1, inf")
    for record in enumerated.classes:
        if record.form not in by_form:
            report.violations.append(Violation(
                record.form, "class matches no family parameter"
            ))
        report.classes.append(record)
    matched = {record.form for record in enumerated.classes}
    for form, u in by_form.items():
        if form not in matched:
            report.violations.append(Violation(
                form, "family member at %s not found by enumeration" % u
            ))
    report.counts["parameters"] = len(by_form)
    report.counts["classes"] = len(report.classes)
    report.counts["violations"] = len(report.violations)
    return report
