"""Property-based invariants over randomized inputs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innofuse import (
    FULL_FRAME,
    Assessment,
    BodyOfEvidence,
    ExpertGroup,
    FocalElement,
    Interval,
    LinguisticRating,
    NormalizationMode,
    ObservationSet,
    RatingScale,
    TimeSeries,
    TotalConflictError,
    belief,
    build_evidence_table,
    combine_pair,
    implementability,
    normalize,
    novelty,
    plausibility,
    relevance,
)
from helpers import oracle_belief, oracle_combine, oracle_plausibility

# --- strategies -----------------------------------------------------------

interval_bounds = st.tuples(
    st.integers(0, 100), st.integers(0, 100),
).map(lambda pair: (min(pair) / 100.0, max(pair) / 100.0))


@st.composite
def bodies(draw, max_elements=5, name="body"):
    bounds = draw(st.sets(interval_bounds, min_size=1, max_size=max_elements))
    weights = [draw(st.integers(1, 9)) for _ in bounds]
    total = sum(weights)
    return BodyOfEvidence(name, tuple(
        FocalElement(Interval(lower, upper), weight / total)
        for (lower, upper), weight in zip(sorted(bounds), weights)
    ))


@st.composite
def queries(draw):
    lower, upper = draw(interval_bounds)
    return Interval(lower, upper)


observation_sets = st.lists(
    st.integers(0, 10_000), min_size=1, max_size=20,
).map(lambda values: ObservationSet(tuple(float(v) for v in values)))


@st.composite
def pinned_growth(draw):
    """Values whose min and max are pinned by dedicated elements, plus a copy
    in which one interior element grew without crossing the max."""
    lo = draw(st.integers(0, 100))
    hi = draw(st.integers(lo + 1, 1000))
    middle = draw(st.lists(st.integers(lo, hi), min_size=1, max_size=8))
    index = draw(st.integers(0, len(middle) - 1))
    grown_value = draw(st.integers(middle[index], hi))
    values = [lo, hi] + middle
    grown = list(values)
    grown[2 + index] = grown_value
    return ObservationSet(tuple(map(float, values))), \
        ObservationSet(tuple(map(float, grown)))


@st.composite
def series_pairs(draw):
    size = draw(st.integers(2, 25))
    times = sorted(draw(st.sets(st.integers(0, 1000),
                                min_size=size, max_size=size)))
    def values():
        return [draw(st.integers(0, 100)) / 100.0 for _ in range(size)]
    return (TimeSeries(tuple(zip(map(float, times), values()))),
            TimeSeries(tuple(zip(map(float, times), values()))))


# --- evidence-core properties ----------------------------------------------

@given(bodies(max_elements=6), queries())
def test_belief_le_plausibility(body, query):
    assert belief(body, query) <= plausibility(body, query) + 1e-12


@given(bodies(max_elements=6))
def test_frame_has_unit_belief(body):
    assert belief(body, FULL_FRAME) == pytest.approx(1.0, abs=1e-9)
    assert plausibility(body, FULL_FRAME) == pytest.approx(1.0, abs=1e-9)


@given(bodies(max_elements=6))
def test_masses_sum_to_one(body):
    total = sum(e.mass for e in body.focal_elements)
    assert total == pytest.approx(1.0, abs=1e-9)


@given(bodies(max_elements=6), queries())
def test_belief_matches_oracle(body, query):
    bounds = (query.lower, query.upper)
    assert belief(body, query) == pytest.approx(
        oracle_belief(body, bounds), abs=1e-9)
    assert plausibility(body, query) == pytest.approx(
        oracle_plausibility(body, bounds), abs=1e-9)


@st.composite
def assessment_lists(draw):
    size = draw(st.integers(1, 8))
    rows = []
    votes = 0
    for position in range(size):
        lower, upper = draw(interval_bounds)
        count = draw(st.integers(1, 10))
        votes += count
        rows.append(Assessment(
            LinguisticRating(f"t{position}", Interval(lower, upper)), count))
    spare = draw(st.integers(0, 10))
    return rows, ExpertGroup("G", votes + spare)


@given(assessment_lists(), st.randoms(use_true_random=False))
def test_evidence_table_order_insensitive(pair, rng):
    rows, group = pair
    reference = build_evidence_table(rows, group)
    shuffled_rows = list(rows)
    rng.shuffle(shuffled_rows)
    shuffled = build_evidence_table(shuffled_rows, group)
    as_set = lambda body: {
        (e.interval.lower, e.interval.upper, round(e.mass, 12))
        for e in body.focal_elements
    }
    assert as_set(reference) == as_set(shuffled)
    total = sum(e.mass for e in reference.focal_elements)
    assert total == pytest.approx(1.0, abs=1e-9)


# --- combination properties -------------------------------------------------

@given(bodies(max_elements=4, name="a"), bodies(max_elements=4, name="b"))
def test_combination_invariants(body_a, body_b):
    try:
        forward = combine_pair(body_a, body_b)
    except TotalConflictError:
        with pytest.raises(TotalConflictError):
            combine_pair(body_b, body_a)
        return
    backward = combine_pair(body_b, body_a)
    # commutativity
    as_masses = lambda result: {
        (e.interval.lower, e.interval.upper): e.mass
        for e in result.combined.focal_elements
    }
    assert as_masses(forward) == as_masses(backward)
    assert forward.conflict_mass == backward.conflict_mass
    # conflict + agreement account for all probability
    assert forward.conflict_mass + forward.agreement_mass == pytest.approx(
        1.0, abs=1e-9)
    assert forward.k_constant >= 1.0
    if forward.conflict_mass == 0.0:
        assert forward.k_constant == 1.0
    total = sum(e.mass for e in forward.combined.focal_elements)
    assert total == pytest.approx(1.0, abs=1e-9)


@given(bodies(max_elements=4, name="a"), bodies(max_elements=4, name="b"))
def test_combination_matches_oracle(body_a, body_b):
    expected = oracle_combine(body_a, body_b)
    if expected is None:
        with pytest.raises(TotalConflictError):
            combine_pair(body_a, body_b)
        return
    masses, conflict, k = expected
    result = combine_pair(body_a, body_b)
    assert result.conflict_mass == pytest.approx(conflict, abs=1e-9)
    assert result.k_constant == pytest.approx(k, abs=1e-9)
    actual = {(e.interval.lower, e.interval.upper): e.mass
              for e in result.combined.focal_elements}
    assert set(actual) == set(masses)
    for interval, mass in masses.items():
        assert actual[interval] == pytest.approx(mass, abs=1e-9)


@given(bodies(max_elements=4))
def test_self_combination_single_element_fixed_point(body):
    result = combine_pair(body, body)
    if len(body.focal_elements) == 1:
        assert result.conflict_mass == 0.0
        assert result.combined.focal_elements[0].interval == \
            body.focal_elements[0].interval


# --- indicator properties ----------------------------------------------------

@given(observation_sets, st.sampled_from(list(NormalizationMode)))
def test_indicators_lie_in_unit_range(values, mode):
    assert 0.0 <= novelty(values, mode) <= 1.0
    assert 0.0 <= relevance(values, mode) <= 1.0
    for x in normalize(values, mode):
        assert 0.0 <= x <= 1.0


@given(observation_sets)
def test_linear_normalization_contains_endpoints(values):
    if max(values.values) > min(values.values):
        normalized = normalize(values, NormalizationMode.LINEAR)
        assert 0.0 in normalized
        assert 1.0 in normalized


@given(observation_sets)
def test_exponential_is_zero_at_minimum(values):
    normalized = normalize(values, NormalizationMode.EXPONENTIAL)
    position = values.values.index(min(values.values))
    assert normalized[position] == 0.0


@given(pinned_growth())
def test_novelty_antitone_under_linear(pair):
    before, after = pair
    assert novelty(after) <= novelty(before) + 1e-12


@given(pinned_growth())
def test_relevance_monotone_under_linear(pair):
    before, after = pair
    assert relevance(after) + 1e-12 >= relevance(before)


@settings(max_examples=50)
@given(series_pairs())
def test_implementability_in_unit_range(pair):
    nov_series, rel_series = pair
    assert 0.0 <= implementability(nov_series, rel_series) <= 1.0


# --- measurement mapping -------------------------------------------------------

@st.composite
def scales_and_covered_values(draw):
    count = draw(st.integers(1, 8))
    rows = []
    for position in range(count):
        lower, upper = draw(interval_bounds)
        rows.append(LinguisticRating(f"t{position}", Interval(lower, upper)))
    scale = RatingScale(tuple(rows))
    chosen = draw(st.integers(0, count - 1)).__index__()
    interval = rows[chosen].interval
    fraction = draw(st.floats(0.0, 1.0, allow_nan=False))
    value = interval.lower + fraction * (interval.upper - interval.lower)
    return scale, min(max(value, 0.0), 1.0)


@given(scales_and_covered_values())
def test_measurement_mapping_total_over_union(pair):
    from innofuse import map_measurement_to_rating

    scale, value = pair
    chosen = map_measurement_to_rating(value, scale)
    assert chosen.interval.contains(value)
    # deterministic
    assert map_measurement_to_rating(value, scale) == chosen
    # narrowest containing interval
    for rating in scale.ratings:
        if rating.interval.contains(value):
            assert chosen.interval.width <= rating.interval.width
