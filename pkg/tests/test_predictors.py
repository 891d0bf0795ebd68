from fractions import Fraction

import pytest

from taufact.engine import elasticity
from taufact.errors import NotOrderFour
from taufact.poly import Poly
from taufact.predictors import (
    Atomicity,
    Census,
    build_iso_map,
    class_census,
    predict_f4,
    predict_z4,
    predict_zx_x2p1,
    predict_zx_x2px,
    prediction_context,
    sequence_element,
)
from taufact.quotient import Ideal, IsoClass, reduce, unit_classes
from taufact.rings import Element, Ring, build_factored, expand

I4 = Ideal(Ring.Z, 4)
I4X = Ideal(Ring.ZX, 4, Poly.x())
IX2P1 = Ideal(Ring.ZX, 2, Poly((1, 0, 1)))
IX2PX1 = Ideal(Ring.ZX, 2, Poly((1, 1, 1)))
IX2PX = Ideal(Ring.ZX, 2, Poly((0, 1, 1)))
X = Element.polynomial(Poly.x())
XP1 = Element.polynomial(Poly((1, 1)))


def zx(coeffs):
    return Element.polynomial(Poly(coeffs))


def test_iso_map_identity_cases():
    iso = build_iso_map(IX2PX)
    assert iso.iso_class is IsoClass.Z2X_X2PX
    assert iso.role_of(reduce(X, IX2PX)) == "x"
    assert iso.role_of(reduce(XP1, IX2PX)) == "x+1"

    iso = build_iso_map(I4X)
    assert iso.role_of(reduce(zx((2,)), I4X)) == "2"

    iso = build_iso_map(IX2P1)
    assert iso.role_of(reduce(XP1, IX2P1)) == "x+1"  # the nilpotent class


def test_iso_map_nonidentity_quotient():
    # F2[x]/(x^2): x is the nilpotent, so it must land in the x+1 role of
    # the model ring F2[x]/(x^2+1)
    ideal = Ideal(Ring.ZX, 2, Poly((0, 0, 1)))
    iso = build_iso_map(ideal)
    assert iso.iso_class is IsoClass.Z2X_X2P1
    assert iso.role_of(reduce(X, ideal)) == "x+1"
    assert iso.role_of(reduce(XP1, ideal)) == "x"


def test_iso_map_rejects_non_order4():
    with pytest.raises(NotOrderFour):
        build_iso_map(Ideal(Ring.Z, 5))


def test_census_examples():
    iso = build_iso_map(IX2PX)
    fe = build_factored(Ring.ZX, 1, [(X, 3), (XP1, 3)])
    assert class_census(fe, IX2PX, iso) == Census(0, 3, 3, 0)

    iso = build_iso_map(I4)
    fe = build_factored(Ring.Z, 1, [(Element.integer(2), 2), (Element.integer(5), 1)])
    assert class_census(fe, I4, iso) == Census(1, 2, 0, 0)

    iso = build_iso_map(I4X)
    fe = build_factored(Ring.ZX, 1, [(zx((2,)), 1), (zx((2, 1)), 1), (X, 1)])
    assert class_census(fe, I4X, iso) == Census(0, 2, 0, 1)


def test_predict_z4():
    profile = predict_z4(Census(1, 2, 0, 0), "0")
    assert profile.atomicity is Atomicity.ATOMIC and profile.lengths == {2}

    profile = predict_z4(Census(0, 2, 0, 1), "0")
    assert profile.atomicity is Atomicity.NOT_ATOMIC

    profile = predict_z4(Census(3, 0, 2, 0), "1")
    assert profile.lengths == {5}

    profile = predict_z4(Census(2, 1, 3, 0), "2")
    assert profile.lengths == {1}

    profile = predict_z4(Census(0, 1, 0, 2), "0")
    assert profile.atomicity is Atomicity.ATOMIC and profile.lengths == {2}


def test_predict_zx_x2p1():
    profile = predict_zx_x2p1(Census(2, 1, 0, 0), unit_in_x_class=False)
    assert profile.lengths == {1}

    profile = predict_zx_x2p1(Census(1, 1, 0, 0), unit_in_x_class=True)
    assert profile.lengths == {2}

    profile = predict_zx_x2p1(Census(0, 0, 2, 1), unit_in_x_class=False)
    assert profile.atomicity is Atomicity.NOT_ATOMIC

    profile = predict_zx_x2p1(Census(1, 2, 0, 3), unit_in_x_class=False)
    assert profile.lengths == {3}

    profile = predict_zx_x2p1(Census(4, 0, 0, 0), unit_in_x_class=False)
    assert profile.lengths == {4}


def test_predict_f4():
    profile = predict_f4(Census(0, 0, 2, 2), 1, True)
    assert profile.lengths == {2}

    profile = predict_f4(Census(0, 3, 2, 1), 1, True)
    assert profile.atomicity is Atomicity.NOT_ATOMIC

    profile = predict_f4(Census(2, 1, 1, 0), 1, True)
    assert profile.lengths == {2}

    # identity-class primes stand alone next to the x/x+1 pairs
    profile = predict_f4(Census(0, 1, 1, 1), 1, True)
    assert profile.lengths == {2}

    # one-sided censuses are atomic even though m != n
    profile = predict_f4(Census(0, 1, 1, 0), 1, True)
    assert profile.atomicity is Atomicity.ATOMIC and profile.lengths == {1}

    profile = predict_f4(Census(0, 0, 3, 0), 1, False)
    assert profile.lengths == {3}

    profile = predict_f4(Census(1, 2, 2, 2), 3, True)
    assert profile.lengths == {7}


def test_predict_zx_x2px():
    profile = predict_zx_x2px(Census(0, 3, 3, 0))
    assert profile.lengths == {2, 3}
    assert profile.elasticity == Fraction(3, 2)
    assert "length-interval" in profile.derived

    profile = predict_zx_x2px(Census(0, 2, 2, 0))
    assert profile.lengths == {2} and profile.elasticity == 1

    profile = predict_zx_x2px(Census(0, 1, 4, 0))
    assert profile.lengths == {1}

    profile = predict_zx_x2px(Census(2, 3, 0, 0))
    assert profile.lengths == {3}

    profile = predict_zx_x2px(Census(0, 1, 1, 1))
    assert profile.atomicity is Atomicity.NO_CLOSED_FORM


def test_sequence_element():
    fe = sequence_element(4)
    assert expand(fe) == expand(build_factored(Ring.ZX, 1, [(X, 4), (XP1, 4)]))
    report = elasticity(fe, IX2PX)
    assert report.elasticity == Fraction(2)

    assert elasticity(sequence_element(1), IX2PX).elasticity == 1
    with pytest.raises(ValueError):
        sequence_element(0)


def test_prediction_context_facts():
    ctx = prediction_context(IX2PX)
    assert ctx.unit_roles == frozenset({"1"})
    assert ctx.primes_in_both_xr

    ctx = prediction_context(IX2PX1)
    assert len(ctx.unit_roles) == 1
    assert ctx.primes_in_both_xr


def test_context_predicts_sequence_profile():
    ctx = prediction_context(IX2PX)
    profile = ctx.predict(sequence_element(5))
    assert profile.lengths == frozenset(range(2, 6))
    assert profile.elasticity == Fraction(5, 2)


def test_predict_profile_convenience():
    from taufact.predictors import predict_profile

    fe = build_factored(Ring.Z, 1, [(Element.integer(2), 2), (Element.integer(5), 1)])
    profile = predict_profile(fe, I4)
    assert profile.atomicity is Atomicity.ATOMIC and profile.lengths == {2}


@pytest.mark.parametrize(
    "ideal",
    [I4, I4X, IX2P1, IX2PX1, IX2PX, Ideal(Ring.ZX, 2, Poly((0, 0, 1)))],
)
def test_unit_classes_map_into_roles(ideal):
    iso = build_iso_map(ideal)
    for u in unit_classes(ideal):
        assert iso.role_of(u) in iso.roles


@pytest.mark.parametrize("ideal", [I4X, IX2P1, IX2PX1, IX2PX])
def test_predictor_agrees_with_oracle_exhaustively_small(ideal):
    """Every census with at most 6 primes, one witness prime per role."""
    import itertools

    from taufact.quotient import find_prime_in_class

    ctx = prediction_context(ideal)
    witnesses = {
        role: find_prime_in_class(ideal, ctx.iso.residue_of(role), 50)
        for role in ctx.iso.roles
    }
    assert all(w is not None for w in witnesses.values())
    roles = list(ctx.iso.roles)
    for counts in itertools.product(range(7), repeat=4):
        if not 1 <= sum(counts) <= 6:
            continue
        parts = [
            (witnesses[role], count)
            for role, count in zip(roles, counts)
            if count
        ]
        fe = build_factored(Ring.ZX, 1, parts)
        profile = ctx.predict(fe)
        report = elasticity(fe, ideal)
        if profile.atomicity is Atomicity.NO_CLOSED_FORM:
            # no length claim, but the oracle must still be sound
            from taufact.engine import enumerate_tau_factorizations

            from naive_oracle import assert_factorization_sound

            for tf in enumerate_tau_factorizations(fe, ideal):
                assert_factorization_sound(tf, fe, ideal)
            continue
        assert (profile.atomicity is Atomicity.ATOMIC) == report.is_atomic, (
            counts,
            profile,
            report,
        )
        if report.is_atomic:
            assert profile.lengths == report.atomic_lengths, (counts, profile, report)
            assert profile.elasticity == report.elasticity
