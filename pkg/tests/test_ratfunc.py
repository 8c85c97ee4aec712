import random

import pytest

from wrondescent.errors import (
    ConstantFunctionError,
    DegenerateTransformationError,
    FieldMismatchError,
    InseparableError,
    NotASubfieldError,
    ZeroDenominatorError,
)
from wrondescent.gf import embed, make_field
from wrondescent.poly import Polynomial, from_roots, x
from wrondescent.ratfunc import (
    INFINITY,
    MobiusTransformation,
    ProjectivePoint,
    RationalFunction,
    embed_ratfunc,
    make_ratfunc,
)

F2 = make_field(2)
F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)


def rf(field, num, den=(1,)):
    return make_ratfunc(Polynomial(field, num), Polynomial(field, den))


def pt(field, v):
    return ProjectivePoint(field.element(v))


def random_mobius(field, rng):
    while True:
        a, b, c, d = (field.from_index(rng.randrange(field.order)) for _ in range(4))
        if a * d - b * c:
            return MobiusTransformation(a, b, c, d)


def random_ratfunc(field, degree, rng):
    while True:
        g = Polynomial(field, [field.from_index(rng.randrange(field.order))
                               for _ in range(degree + 1)])
        h = Polynomial(field, [field.from_index(rng.randrange(field.order))
                               for _ in range(degree + 1)])
        if g.is_zero() or h.is_zero():
            continue
        try:
            f = make_ratfunc(g, h)
        except (ConstantFunctionError, ZeroDenominatorError):
            continue
        if f.degree == degree:
            return f


# -- construction -----------------------------------------------------------


def test_make_ratfunc_reduces():
    f = rf(F2, [0, 0, 1, 1], [1, 1])  # (x^3+x^2)/(x+1)
    assert f.g == x(F2) ** 2 and f.h == Polynomial(F2, [1])
    assert f.degree == 2


def test_make_ratfunc_normalizes_denominator():
    f = rf(F7, [0, 0, 0, 1], [3, 5])  # x^3/(5x+3)
    assert f.h.is_monic()
    assert f.degree == 3


def test_make_ratfunc_errors():
    with pytest.raises(ZeroDenominatorError):
        rf(F3, [1], [0])
    with pytest.raises(ConstantFunctionError):
        rf(F3, [2], [1])
    with pytest.raises(ConstantFunctionError):
        rf(F3, [0, 2], [0, 1])  # 2x/x


def test_evaluation():
    f = rf(F5, [1, 0, 1], [0, 1])  # (x^2+1)/x
    assert f(F5.element(2)) == pt(F5, 0)
    assert f(F5.zero) == INFINITY
    assert f(INFINITY) == INFINITY
    g = rf(F5, [1, 3], [1, 1])  # (3x+1)/(x+1)
    assert g(INFINITY) == pt(F5, 3)


# -- Wronskian --------------------------------------------------------------


def test_wronskian_examples():
    assert rf(F3, [0, 0, 1]).wronskian() == Polynomial(F3, [0, 2])  # x^2 -> 2x
    w, alpha = rf(F7, [0, 0, 1, 1], [-3, 5]).wronskian_monic()
    assert w == Polynomial(F7, [0, 5, 1, 1])  # x^3+x^2+5x = x(x-1)(x-5)
    assert w == from_roots(F7, [0, 1, 5])
    with pytest.raises(InseparableError):
        rf(F3, [0, 0, 0, 1]).wronskian()
    assert not rf(F3, [0, 0, 0, 1]).is_separable


def test_wronskian_monic_invariant_under_pair_scaling():
    # stored pair is canonical, so scaling the inputs cannot change anything
    f1 = rf(F7, [0, 0, 1, 1], [-3, 5])
    f2 = rf(F7, [0, 0, 3, 3], [-9, 15])
    assert f1 == f2


# -- profiles ----------------------------------------------------------------


def profile_dict(f):
    prof = f.ramification_profile()
    return {pt_: l for pt_, l in prof.entries}


def test_profile_examples():
    f = rf(F2, [0, 1, 1])  # x^2+x
    assert profile_dict(f) == {INFINITY: 2}
    f = rf(F2, [0, 0, 1, 1])  # x^3+x^2
    assert profile_dict(f) == {pt(F2, 0): 2, INFINITY: 2}
    f = rf(F5, [0, 0, 0, 1], [-2, 3])  # x^3/(3x-2)
    assert profile_dict(f) == {pt(F5, 0): 2, pt(F5, 1): 1, INFINITY: 1}


def test_profile_with_irrational_points():
    # Wr = x^2+1 over F_3 is irreducible: points live in F_9
    f = rf(F3, [0, 1, 0, 1])  # x^3 + x, Wr = 3x^2+1... actually 1; pick another
    g = rf(F3, [2, 0, 1], [0, 1])  # (x^2+2)/x: Wr = x*2x - (x^2+2) = x^2 - 2 = x^2+1
    w, _ = g.wronskian_monic()
    assert w == Polynomial(F3, [1, 0, 1])
    prof = g.ramification_profile()
    assert prof.field.order == 9
    assert len(prof.entries) == 2
    assert all(l == 1 for _, l in prof.entries)
    assert prof.type_tuple == (1, 1)
    assert not g.ramification_points_rational_over(1)


def test_profile_degree_one_is_empty():
    f = rf(F5, [1, 2], [1, 1])
    assert f.ramification_profile().entries == ()


def test_riemann_hurwitz_sum():
    rng = random.Random(17)
    for field in (F2, F3, F5, make_field(2, 2), make_field(3, 2)):
        for _ in range(40):
            f = random_ratfunc(field, rng.choice([2, 3]), rng)
            if not f.is_separable:
                continue
            prof = f.ramification_profile()
            assert sum(l for _, l in prof.entries) == 2 * f.degree - 2


# -- ramification index -------------------------------------------------------


def test_ramification_index_examples():
    assert rf(F2, [0, 1, 1]).ramification_index(INFINITY) == 2
    assert rf(F2, [0, 0, 1, 1]).ramification_index(pt(F2, 0)) == 2
    assert rf(F3, [0, 0, 1]).ramification_index(pt(F3, 1)) == 1
    # wild point: x^3/(3x-2) over F_5 is tame everywhere, check e = l + 1
    f = rf(F5, [0, 0, 0, 1], [-2, 3])
    assert f.ramification_index(pt(F5, 0)) == 3
    assert f.ramification_index(pt(F5, 1)) == 2
    assert f.ramification_index(INFINITY) == 2


def test_simply_ramified():
    assert rf(F3, [0, 0, 1]).is_simply_ramified()
    assert not rf(F2, [0, 1, 1]).is_simply_ramified()
    assert not rf(F5, [0, 0, 0, 1], [-2, 3]).is_simply_ramified()


def test_simply_ramified_matches_profile():
    rng = random.Random(23)
    for field in (F2, F3, F5, make_field(2, 2), make_field(3, 2)):
        for _ in range(30):
            f = random_ratfunc(field, rng.choice([2, 3]), rng)
            if not f.is_separable:
                continue
            assert f.is_simply_ramified() == f.ramification_profile().is_simple


# -- composition --------------------------------------------------------------


def test_post_compose_identity_and_inversion():
    f = rf(F5, [0, 0, 1])
    assert f.post_compose(MobiusTransformation.identity(F5)) == f
    inv = MobiusTransformation.inversion(F5)
    one_over_x = rf(F5, [1], [0, 1])
    assert one_over_x.post_compose(inv) == rf(F5, [0, 1])


def test_pre_compose_moves_points():
    f = rf(F3, [0, 0, 1])  # x^2
    shifted = f.pre_compose(MobiusTransformation.translation(F3.one))
    assert shifted == rf(F3, [1, 2, 1])  # (x+1)^2
    assert profile_dict(shifted) == {pt(F3, -1): 1, INFINITY: 1}


def test_pre_compose_equivariance():
    rng = random.Random(31)
    for field in (F3, F5, make_field(2, 2)):
        for _ in range(25):
            f = random_ratfunc(field, rng.choice([2, 3]), rng)
            if not f.is_separable:
                continue
            sigma = random_mobius(field, rng)
            moved = f.pre_compose(sigma)
            prof = f.ramification_profile()
            moved_prof = moved.ramification_profile()
            assert prof.field == moved_prof.field
            inv = sigma.inverse().embedded(prof.field)
            expected = sorted(
                ((inv.apply(p.embedded(prof.field) if not p.is_infinity else p), l)
                 for p, l in prof.entries),
                key=lambda item: item[0].sort_key(),
            )
            assert list(moved_prof.entries) == expected


def test_degenerate_transformation_rejected():
    with pytest.raises(DegenerateTransformationError):
        MobiusTransformation.from_ints(F5, 1, 2, 2, 4)


# -- standard form -------------------------------------------------------------


def test_standard_form_examples():
    assert str(rf(F5, [1], [0, 1]).standard_form()) == "x"
    f = rf(F7, [6, 4, 2])  # 2x^2+4x+6
    std = f.standard_form()
    assert std.g == Polynomial(F7, [0, 2, 1]) and std.h == Polynomial(F7, [1])
    assert str(rf(F5, [1, 3], [0, 1]).standard_form()) == "x"


def test_standard_form_invariance_and_idempotence():
    rng = random.Random(41)
    for field in (F2, F3, F5, F7, make_field(2, 2), make_field(3, 2)):
        for _ in range(50):
            f = random_ratfunc(field, rng.choice([1, 2, 3]), rng)
            sigma = random_mobius(field, rng)
            std = f.standard_form()
            assert f.post_compose(sigma).standard_form() == std
            again = std.as_ratfunc().standard_form()
            assert again == std


def test_monic_wronskian_is_class_invariant():
    rng = random.Random(43)
    for field in (F3, F5, make_field(2, 2)):
        for _ in range(40):
            f = random_ratfunc(field, rng.choice([2, 3]), rng)
            if not f.is_separable:
                continue
            sigma = random_mobius(field, rng)
            w1, _ = f.wronskian_monic()
            w2, _ = f.post_compose(sigma).wronskian_monic()
            assert w1 == w2


def test_is_equivalent():
    f = rf(F3, [0, 0, 1])
    g = rf(F3, [0, 1, 1])
    assert not f.is_equivalent(g)
    sigma = MobiusTransformation.from_ints(F3, 1, 2, 1, 1)
    assert f.is_equivalent(f.post_compose(sigma))
    with pytest.raises(FieldMismatchError):
        f.is_equivalent(rf(F5, [0, 0, 1]))


def test_equivalence_classes_over_f2_degree2():
    # exactly three separable classes: x^2+x, (x^2+1)/x, x^2/(x+1)
    forms = set()
    for g_bits in range(16):
        for h_bits in range(4):
            g = Polynomial(F2, [(g_bits >> i) & 1 for i in range(4)])
            h = Polynomial(F2, [(h_bits >> i) & 1 for i in range(2)])
            if h.is_zero() or g.is_zero():
                continue
            try:
                f = make_ratfunc(g, h)
            except (ConstantFunctionError, ZeroDenominatorError):
                continue
            if f.degree != 2 or not f.is_separable:
                continue
            forms.add(f.standard_form())
    expected = {
        rf(F2, [0, 1, 1]).standard_form(),
        rf(F2, [1, 0, 1], [0, 1]).standard_form(),
        rf(F2, [0, 0, 1], [1, 1]).standard_form(),
    }
    assert forms == expected
    assert len(forms) == 3


# -- descent and rationality -----------------------------------------------------


def test_descends_to():
    F4 = make_field(2, 2)
    t = F4.gen()
    f = make_ratfunc(Polynomial(F4, [F4.zero, t, F4.one]), Polynomial(F4, [1]))
    assert not f.descends_to(1)
    assert f.descends_to(2)
    g = embed_ratfunc(rf(F3, [0, 1, 1]), make_field(3, 2))
    assert g.descends_to(1)
    with pytest.raises(NotASubfieldError):
        rf(F3, [0, 0, 1]).descends_to(2)


def test_ramification_points_rational_over():
    F9 = make_field(3, 2)
    f = embed_ratfunc(rf(F3, [0, 0, 1]), F9)
    assert f.ramification_points_rational_over(1)
    g = rf(F3, [2, 0, 1], [0, 1])  # Wr = x^2+1, irreducible over F_3
    assert not g.ramification_points_rational_over(1)


def test_tame_wild_dichotomy_exhaustive_small():
    # all separable classes with d <= 3 over F_2, F_3, F_4: l = e-1 tame, l >= e wild
    for field in (F2, F3, make_field(2, 2)):
        p = field.p
        for d in (2, 3):
            for f in _all_separable_classes(field, d):
                prof = f.ramification_profile()
                big = prof.field
                lifted = embed_ratfunc(f, big) if big != field else f
                for point, l in prof.entries:
                    e = lifted.ramification_index(point)
                    if e % p:
                        assert l == e - 1
                    else:
                        assert l >= e


def _all_separable_classes(field, d):
    out = []
    for e in range(d):
        for h_idx in range(field.order**e):
            h_coeffs = [field.from_index((h_idx // field.order**i) % field.order)
                        for i in range(e)] + [field.one]
            h = Polynomial(field, h_coeffs)
            for g_idx in range(field.order ** (d - 1)):
                digits = []
                rest = g_idx
                for pos in range(d):
                    if pos == e:
                        digits.append(field.zero)
                        continue
                    digits.append(field.from_index(rest % field.order))
                    rest //= field.order
                g = Polynomial(field, digits + [field.one])
                from wrondescent.poly import gcd as pgcd

                if pgcd(g, h).degree != 0:
                    continue
                f = make_ratfunc(g, h)
                if f.is_separable:
                    out.append(f)
    return out


def test_char3_degree2_always_simple():
    # in char 3 a separable degree-2 class cannot have a coalesced Wronskian;
    # the double-root locus coincides with the non-coprime locus
    F9 = make_field(3, 2)
    for field in (F3, F9):
        for f in _all_separable_classes(field, 2):
            assert f.is_simply_ramified()


def test_embed_ratfunc_preserves_structure():
    F9 = make_field(3, 2)
    f = rf(F3, [0, 0, 0, 1], [1, 1])
    lifted = embed_ratfunc(f, F9)
    assert lifted.degree == f.degree
    assert lifted.descends_to(1)
    w_small, _ = f.wronskian_monic()
    w_big, _ = lifted.wronskian_monic()
    assert w_big == w_small.map_coefficients(lambda c: embed(c, F9), F9)
