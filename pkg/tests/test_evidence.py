import random

import pytest

from innofuse import (
    FULL_FRAME,
    Assessment,
    BodyOfEvidence,
    ExpertGroup,
    FocalElement,
    Interval,
    InvalidAssessmentError,
    InvalidBodyError,
    InvalidIntervalError,
    LinguisticRating,
    RatingScale,
    belief,
    build_evidence_table,
    discount,
    expectation_bounds,
    mass_of,
    plausibility,
)
from helpers import make_body, oracle_belief, oracle_plausibility, random_body

# Group A's thirteen masses, four-decimal display values.
GROUP_A_MASSES = [0.0833, 0.0417, 0.0833, 0.1667, 0.0417, 0.125, 0.125,
                  0.0417, 0.125, 0.0417, 0.0417, 0.0417, 0.0417]


def rating(term, lower, upper):
    return LinguisticRating(term, Interval(lower, upper))


class TestInterval:
    def test_point_interval_allowed(self):
        point = Interval(0.0, 0.0)
        assert point.width == 0.0

    @pytest.mark.parametrize("lower,upper", [(-0.1, 0.5), (0.5, 1.1), (0.6, 0.4)])
    def test_invalid_bounds_rejected(self, lower, upper):
        with pytest.raises(InvalidIntervalError):
            Interval(lower, upper)

    def test_touching_endpoints_overlap(self):
        assert Interval(0.0, 0.0).overlaps(Interval(0.0, 0.33))
        assert Interval(0.2, 0.4).overlaps(Interval(0.4, 0.6))
        assert not Interval(0.0, 0.33).overlaps(Interval(0.34, 0.66))

    def test_envelope_is_union_of_bounds(self):
        assert Interval(0.2, 0.5).envelope(Interval(0.4, 0.9)) == Interval(0.2, 0.9)
        assert Interval(0.0, 0.0).envelope(Interval(0.0, 0.33)) == Interval(0.0, 0.33)

    def test_intersection_of_overlapping(self):
        assert Interval(0.2, 0.5).intersection(Interval(0.4, 0.9)) == Interval(0.4, 0.5)
        with pytest.raises(InvalidIntervalError):
            Interval(0.0, 0.1).intersection(Interval(0.5, 0.6))

    def test_containment_is_closed(self):
        assert Interval(0.0, 1.0).contains_interval(Interval(0.0, 1.0))
        assert Interval(0.3, 0.7).contains_interval(Interval(0.3, 0.5))
        assert not Interval(0.3, 0.7).contains_interval(Interval(0.2, 0.5))


class TestRatingScale:
    def test_duplicate_terms_rejected(self):
        with pytest.raises(Exception):
            RatingScale((rating("a", 0, 0.5), rating("a", 0.5, 1)))

    def test_term_for_exact_interval(self):
        scale = RatingScale((rating("low", 0.0, 0.5), rating("high", 0.5, 1.0)))
        assert scale.term_for(Interval(0.5, 1.0)) == "high"
        assert scale.term_for(Interval(0.4, 1.0)) is None


class TestMassOf:
    def test_worked_first_cell(self):
        assert mass_of(10, 120) == 10 / 120
        assert abs(mass_of(10, 120) - 0.0833) < 5e-5

    def test_unanimous_group(self):
        assert mass_of(120, 120) == 1.0

    def test_quarter(self):
        assert mass_of(20, 80) == 0.25

    def test_voters_exceeding_group_rejected(self):
        with pytest.raises(InvalidAssessmentError):
            mass_of(121, 120)


class TestBuildEvidenceTable:
    def test_group_a_masses(self, demo_bodies):
        body_a = demo_bodies[0]
        assert len(body_a.focal_elements) == 13
        for element, expected in zip(body_a.focal_elements, GROUP_A_MASSES):
            assert element.mass == pytest.approx(expected, abs=5e-5)

    def test_single_full_assessment(self):
        group = ExpertGroup("G", 20)
        body = build_evidence_table([Assessment(rating("x", 0.3, 0.6), 20)], group)
        assert len(body.focal_elements) == 1
        assert body.focal_elements[0].mass == 1.0

    def test_identical_intervals_merge(self):
        group = ExpertGroup("G", 20)
        body = build_evidence_table(
            [Assessment(rating("x", 0.34, 0.66), 5),
             Assessment(rating("y", 0.34, 0.66), 15)],
            group,
        )
        assert len(body.focal_elements) == 1
        assert body.focal_elements[0].interval == Interval(0.34, 0.66)
        assert body.focal_elements[0].mass == 1.0

    def test_nonresponders_become_vacuous_mass(self):
        group = ExpertGroup("G", 10)
        body = build_evidence_table([Assessment(rating("x", 0.2, 0.4), 6)], group)
        by_interval = {e.interval: e.mass for e in body.focal_elements}
        assert by_interval[Interval(0.2, 0.4)] == 0.6
        assert by_interval[FULL_FRAME] == 0.4

    def test_overallocation_rejected(self):
        group = ExpertGroup("G", 10)
        with pytest.raises(InvalidAssessmentError):
            build_evidence_table(
                [Assessment(rating("x", 0.2, 0.4), 6),
                 Assessment(rating("y", 0.5, 0.6), 5)],
                group,
            )

    def test_order_insensitive(self):
        group = ExpertGroup("G", 30)
        assessments = [
            Assessment(rating("a", 0.0, 0.2), 5),
            Assessment(rating("b", 0.3, 0.5), 10),
            Assessment(rating("c", 0.6, 0.9), 15),
        ]
        reference = build_evidence_table(assessments, group)
        shuffled = build_evidence_table(list(reversed(assessments)), group)
        as_set = lambda body: {
            (e.interval.lower, e.interval.upper, round(e.mass, 12))
            for e in body.focal_elements
        }
        assert as_set(reference) == as_set(shuffled)


class TestBodyInvariants:
    def test_masses_must_sum_to_one(self):
        with pytest.raises(InvalidBodyError):
            make_body("bad", [(0.0, 0.5, 0.4), (0.5, 1.0, 0.4)])

    def test_duplicate_intervals_rejected(self):
        with pytest.raises(InvalidBodyError):
            make_body("bad", [(0.0, 0.5, 0.5), (0.0, 0.5, 0.5)])

    def test_zero_mass_rejected(self):
        with pytest.raises(InvalidBodyError):
            FocalElement(Interval(0.0, 0.5), 0.0)

    def test_empty_body_rejected(self):
        with pytest.raises(InvalidBodyError):
            BodyOfEvidence("empty", ())


class TestBeliefPlausibility:
    def test_belief_of_frame_is_one(self, demo_bodies):
        for body in demo_bodies:
            assert belief(body, FULL_FRAME) == pytest.approx(1.0, abs=1e-9)
            assert plausibility(body, FULL_FRAME) == pytest.approx(1.0, abs=1e-9)

    def test_disjoint_query_has_zero_belief(self):
        body = make_body("b", [(0.2, 0.4, 1.0)])
        assert belief(body, Interval(0.0, 0.1)) == 0.0
        assert plausibility(body, Interval(0.0, 0.1)) == 0.0

    def test_belief_never_exceeds_plausibility(self, demo_bodies):
        queries = [Interval(0.0, 0.33), Interval(0.4, 0.6), Interval(0.89, 1.0),
                   Interval(0.0, 0.0), Interval(0.5, 0.5)]
        for body in demo_bodies:
            for query in queries:
                assert belief(body, query) <= plausibility(body, query) + 1e-12

    def test_matches_bruteforce_oracle(self):
        rng = random.Random(1234)
        for _ in range(300):
            body = random_body(rng, "r", max_elements=6)
            lower_int = rng.randint(0, 100)
            upper_int = rng.randint(lower_int, 100)
            query = Interval(lower_int / 100.0, upper_int / 100.0)
            assert belief(body, query) == pytest.approx(
                oracle_belief(body, (query.lower, query.upper)), abs=1e-9)
            assert plausibility(body, query) == pytest.approx(
                oracle_plausibility(body, (query.lower, query.upper)), abs=1e-9)


class TestExpectationBounds:
    def test_single_element(self):
        body = make_body("b", [(0.2, 0.6, 1.0)])
        assert expectation_bounds(body) == (0.2, 0.6)

    def test_two_halves(self):
        body = make_body("b", [(0.0, 0.5, 0.5), (0.5, 1.0, 0.5)])
        lower, upper = expectation_bounds(body)
        assert lower == pytest.approx(0.25, abs=1e-12)
        assert upper == pytest.approx(0.75, abs=1e-12)

    def test_point_interval(self):
        body = make_body("b", [(0.3, 0.3, 1.0)])
        assert expectation_bounds(body) == (0.3, 0.3)

    def test_lower_never_exceeds_upper(self, demo_bodies):
        for body in demo_bodies:
            lower, upper = expectation_bounds(body)
            assert lower <= upper


class TestDiscount:
    def test_full_reliability_is_identity(self):
        body = make_body("b", [(0.2, 0.4, 0.5), (0.6, 0.8, 0.5)])
        assert discount(body, 1.0) is body

    def test_zero_reliability_is_vacuous(self):
        body = make_body("b", [(0.2, 0.4, 1.0)])
        weakened = discount(body, 0.0)
        assert len(weakened.focal_elements) == 1
        assert weakened.focal_elements[0].interval == FULL_FRAME
        assert weakened.focal_elements[0].mass == 1.0

    def test_deficit_moves_to_frame(self):
        body = make_body("b", [(0.2, 0.4, 0.5), (0.6, 0.8, 0.5)])
        weakened = discount(body, 0.8)
        by_interval = {e.interval: e.mass for e in weakened.focal_elements}
        assert by_interval[Interval(0.2, 0.4)] == pytest.approx(0.4)
        assert by_interval[Interval(0.6, 0.8)] == pytest.approx(0.4)
        assert by_interval[FULL_FRAME] == pytest.approx(0.2)

    def test_existing_frame_mass_merges(self):
        body = make_body("b", [(0.2, 0.4, 0.5), (0.0, 1.0, 0.5)])
        weakened = discount(body, 0.5)
        by_interval = {e.interval: e.mass for e in weakened.focal_elements}
        assert by_interval[FULL_FRAME] == pytest.approx(0.75)

    def test_reliability_out_of_range_rejected(self):
        body = make_body("b", [(0.2, 0.4, 1.0)])
        with pytest.raises(ValueError):
            discount(body, 1.5)
