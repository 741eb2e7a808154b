import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from popkit.alternating import (AlternatingSpec, FamilyError, apply_steering,
                                build, canonical_example, format_sigma,
                                format_vector, parse_sigma, parse_vector,
                                phase_offset, pop_sign, recover_spec,
                                steering_sequence)
from popkit.geom import Point
from popkit.polygon import (Polygon, hairpin_indices, is_simple,
                            scalene_flags)
from popkit.transforms import pop

from helpers import random_spec

FIG2_SPEC = AlternatingSpec((2, 3, 1), (3, 2, 1), (1, 1, -1, -1, -1, 1))


def specs(max_k=5):
    positive = st.fractions(min_value="1/4", max_value=20, max_denominator=8)

    def make(k, xs, ys, bits):
        return AlternatingSpec(tuple(xs[:k]), tuple(ys[:k]),
                               tuple(1 if b else -1 for b in bits[:2 * k]))

    return st.integers(min_value=2, max_value=max_k).flatmap(
        lambda k: st.builds(
            make,
            st.just(k),
            st.lists(positive, min_size=k, max_size=k, unique=True),
            st.lists(positive, min_size=k, max_size=k, unique=True),
            st.lists(st.booleans(), min_size=2 * k, max_size=2 * k),
        ))


# -- spec validation -----------------------------------------------------------

def test_spec_validates_duplicates():
    with pytest.raises(FamilyError, match="x values must be distinct"):
        AlternatingSpec((2, 2, 1), (3, 2, 1), (1,) * 6)


def test_spec_validates_positivity():
    with pytest.raises(FamilyError, match="positive"):
        AlternatingSpec((2, -3), (3, 2), (1,) * 4)
    with pytest.raises(FamilyError, match="positive"):
        AlternatingSpec((2, 1), (0, 2), (1,) * 4)


def test_spec_validates_lengths():
    with pytest.raises(FamilyError, match="k must be at least 2"):
        AlternatingSpec((2,), (3,), (1, 1))
    with pytest.raises(FamilyError, match="sigma"):
        AlternatingSpec((2, 1), (3, 1), (1, 1, 1))
    with pytest.raises(FamilyError, match="equal length"):
        AlternatingSpec((2, 1), (3, 1, 4), (1,) * 4)


def test_spec_validates_sign_values():
    with pytest.raises(FamilyError, match="\\+1 or -1"):
        AlternatingSpec((2, 1), (3, 1), (1, 0, 1, 1))


def test_spec_coerces_strings():
    s = AlternatingSpec(("1/2", "3"), ("2", "1/4"), (1, -1, 1, -1))
    assert s.x == (Fraction(1, 2), 3)
    assert s.k == 2 and s.n == 4


# -- build -----------------------------------------------------------------------

def test_build_fig1_left():
    assert build(FIG2_SPEC).vertices == (
        Point(2, 0), Point(0, 3), Point(-3, 0),
        Point(0, -2), Point(-1, 0), Point(0, 1))


def test_build_k2_witness():
    P = build(AlternatingSpec((2, 1), (2, 1), (1, 1, -1, -1)))
    assert P.vertices == (Point(2, 0), Point(0, 2), Point(-1, 0), Point(0, -1))


# -- recover_spec ----------------------------------------------------------------

@settings(max_examples=60)
@given(specs())
def test_recover_roundtrip(s):
    assert recover_spec(build(s)) == s


def test_recover_rotated_phase():
    P = build(FIG2_SPEC)
    rotated = Polygon(P.vertices[1:] + P.vertices[:1])
    assert phase_offset(rotated) == 1
    s = recover_spec(rotated)
    assert s is not None
    # normalized to the x-axis-first phase: build(s) is the input shifted
    # by the phase offset, i.e. spec index j is polygon index (j + 1) % n
    assert build(s) == Polygon(rotated.vertices[1:] + rotated.vertices[:1])
    assert s.x == (3, 1, 2) and s.y == (2, 1, 3)
    assert s.sigma == (-1, -1, -1, 1, 1, 1)


def test_recover_rejects_duplicate_magnitudes():
    square = Polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert recover_spec(square) is None


def test_recover_rejects_off_axis_vertex():
    assert recover_spec(Polygon([(2, 0), (0, 3), (-3, 1), (0, -2)])) is None


def test_recover_rejects_odd_or_tiny():
    assert recover_spec(Polygon([(1, 0), (0, 1), (-2, 0)])) is None


def test_recover_rejects_origin_vertex():
    # a vertex at the origin sits on both axes; x_i > 0 fails either way
    assert recover_spec(Polygon([(0, 0), (0, 1), (-2, 0), (0, -2)])) is None


# -- canonical examples ------------------------------------------------------------

def test_p1_k4_matches_fig1_right():
    s = canonical_example("P1", 4)
    assert s.x == s.y == (4, 3, 2, 1)
    assert s.sigma == (1, 1, -1, -1, -1, -1, -1, -1)
    assert is_simple(build(s))


def test_p2_k3_matches_fig1_middle():
    s = canonical_example("P2", 3)
    assert s.x == s.y == (3, 2, 1)
    assert s.sigma == (1,) * 6
    assert not is_simple(build(s))


def test_p1_k3_simple():
    s = canonical_example("P1", 3)
    assert s.x == (3, 2, 1) and s.sigma == (1, 1, -1, -1, -1, -1)
    assert is_simple(build(s))


def test_canonical_example_validation():
    with pytest.raises(FamilyError):
        canonical_example("P1", 1)
    with pytest.raises(ValueError):
        canonical_example("P9", 3)


# -- pop_sign ------------------------------------------------------------------------

def test_pop_sign_fig2_chain():
    s = FIG2_SPEC
    s = pop_sign(s, 1)  # figure label p2
    assert s.sigma == (1, -1, -1, -1, -1, 1)
    s = pop_sign(s, 0)  # p1
    assert s.sigma == (-1, -1, -1, -1, -1, 1)
    s = pop_sign(s, 5)  # p6
    assert s.sigma == (-1, -1, -1, -1, -1, -1)


def test_pop_sign_involution_and_commutativity():
    s = FIG2_SPEC
    assert pop_sign(pop_sign(s, 2), 2) == s
    assert pop_sign(pop_sign(s, 1), 4) == pop_sign(pop_sign(s, 4), 1)


def test_pop_sign_matches_pop():
    rng = random.Random(41)
    for _ in range(60):
        s = random_spec(rng, rng.randint(2, 5))
        i = rng.randrange(s.n)
        assert pop(build(s), i) == build(pop_sign(s, i))
        assert recover_spec(pop(build(s), i)) == pop_sign(s, i)


# -- steering --------------------------------------------------------------------------

def test_steering_empty_for_equal_sigma():
    assert steering_sequence(FIG2_SPEC, FIG2_SPEC.sigma) == ()


def test_steering_fig2_target():
    seq = steering_sequence(FIG2_SPEC, (-1, -1, -1, -1, -1, -1))
    assert seq == (0, 1, 5)  # figure labels p1, p2, p6
    target = apply_steering(build(FIG2_SPEC), seq)
    assert target == build(AlternatingSpec(FIG2_SPEC.x, FIG2_SPEC.y, (-1,) * 6))


def test_steering_full_negation_uses_all_indices():
    negated = tuple(-s for s in FIG2_SPEC.sigma)
    assert steering_sequence(FIG2_SPEC, negated) == (0, 1, 2, 3, 4, 5)


def test_steering_validates_target():
    with pytest.raises(FamilyError, match="length"):
        steering_sequence(FIG2_SPEC, (1, 1))
    with pytest.raises(FamilyError):
        steering_sequence(FIG2_SPEC, (1, 1, 1, 1, 1, 2))


@settings(max_examples=60)
@given(specs(max_k=4), st.data())
def test_steering_reaches_target(s, data):
    target = tuple(data.draw(st.sampled_from((-1, 1))) for _ in range(s.n))
    seq = steering_sequence(s, target)
    assert len(seq) <= s.n
    result = apply_steering(build(s), seq)
    assert result == build(AlternatingSpec(s.x, s.y, target))


# -- family properties -------------------------------------------------------------------

@settings(max_examples=60)
@given(specs())
def test_family_member_properties(s):
    P = build(s)
    assert len(set(P.vertices)) == s.n          # 2k distinct vertices
    assert scalene_flags(P)[1]                  # weakly scalene
    assert hairpin_indices(P) == set()          # pops total on the family


# -- serialization ------------------------------------------------------------------------

def test_vector_roundtrip():
    assert parse_vector("2,3,1") == (2, 3, 1)
    assert parse_vector("1/2, 5/3") == (Fraction(1, 2), Fraction(5, 3))
    assert format_vector((Fraction(1, 2), 3)) == "1/2,3"
    with pytest.raises(FamilyError):
        parse_vector("1,zap")


def test_sigma_roundtrip():
    assert parse_sigma("++---+") == (1, 1, -1, -1, -1, 1)
    assert format_sigma((1, 1, -1, -1, -1, 1)) == "++---+"
    with pytest.raises(FamilyError):
        parse_sigma("+*")
