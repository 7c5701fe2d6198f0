import pytest

import pysurgflow as sf

S, K = "Suturing", "Knot Tying"


def observer(name, phase=(), step=()):
    return sf.ObserverTimeline(
        name,
        sf.IntervalAnnotation.from_segments(
            {sf.Column.phase: list(phase), sf.Column.step: list(step)}
        ),
    )


def test_close_boundaries_take_the_mean():
    result = sf.auto_merge(observer("A", [(S, 0, 1000)]), observer("B", [(S, 0, 1400)]))
    assert result.merged[sf.Column.phase].segments == [sf.MergedSegment(S, 0, 1200)]
    assert result.uncertain == []
    assert sf.ResolvedBoundary(sf.Column.phase, 0, "end", 1000, 1400, 1200) in result.resolved


def test_distant_boundaries_are_uncertain():
    merged, uncertain, _, _ = sf.auto_merge(
        observer("A", [(S, 0, 1000)]), observer("B", [(S, 0, 2400)])
    )
    assert merged[sf.Column.phase].segments == [sf.MergedSegment(S, 0, None)]
    assert uncertain == [
        sf.UncertainTransition(sf.Column.phase, 0, "end", 1000, 2400, S, sf.IDLE)
    ]
    assert not merged[sf.Column.phase].is_complete

    with pytest.raises(sf.WorkflowValidationError):
        merged[sf.Column.phase].to_timeline()


def test_threshold_is_strict():
    cfg = sf.MergeConfig(threshold_ms=1000)
    result = sf.auto_merge(observer("A", [(S, 0, 1000)]), observer("B", [(S, 0, 2000)]), cfg)
    assert len(result.uncertain) == 1


def test_mean_rounds_half_away_from_zero():
    result = sf.auto_merge(observer("A", [(S, 0, 1001)]), observer("B", [(S, 0, 1002)]))
    assert result.merged[sf.Column.phase][0].end_ms == 1002


def test_neighbour_labels_of_uncertain_transition():
    a = observer("A", [(S, 0, 1000), (K, 1000, 3000)])
    b = observer("B", [(S, 0, 2500), (K, 2500, 3000)])
    result = sf.auto_merge(a, b)
    assert [(u.side, u.label_before, u.label_after) for u in result.uncertain] == [
        ("end", S, K),
        ("begin", S, K),
    ]


def test_identical_annotations():
    x = observer(
        "A",
        [(S, 0, 1000), (K, 1500, 3000)],
        [("Needle holding", 0, 400), ("1° knot", 1600, 2000)],
    )
    result = sf.auto_merge(x, x)
    assert result.uncertain == []
    assert result.disagreements == []
    assert result.annotation() == x.annotation


def test_swapping_observers():
    a = observer("A", [(S, 0, 1000), (K, 1000, 5000)], [("Needle holding", 10, 20)])
    b = observer("B", [(S, 0, 2500), (K, 2500, 5300)])
    forward = sf.auto_merge(a, b)
    backward = sf.auto_merge(b, a)
    assert forward.merged == backward.merged
    assert backward.uncertain == [u.swapped() for u in forward.uncertain]
    assert {(d.column, d.segment) for d in forward.disagreements} == {
        (d.column, d.segment) for d in backward.disagreements
    }


def test_merged_boundaries_lie_between_observers():
    a = observer("A", [(S, 0, 1000), (K, 1000, 5000)])
    b = observer("B", [(S, 300, 1777), (K, 1777, 4100)])
    for boundary in sf.auto_merge(a, b).resolved:
        low, high = sorted([boundary.time_a, boundary.time_b])
        assert low <= boundary.merged <= high


def test_unmatched_segments_become_disagreements():
    a = observer("A", [(S, 0, 1000), (K, 1000, 2000)])
    b = observer("B", [(S, 0, 1000)])
    result = sf.auto_merge(a, b)
    assert result.disagreements == [
        sf.StructuralDisagreement(sf.Column.phase, "A", sf.Segment(K, 1000, 2000))
    ]
    assert result.merged[sf.Column.phase].segments == [sf.MergedSegment(S, 0, 1000)]


def test_crossing_boundaries_are_violations():
    timeline = sf.MergedTimeline(
        sf.Column.phase, [sf.MergedSegment(S, 0, 1200), sf.MergedSegment(K, 1000, 2000)]
    )
    violations = timeline.violations()
    assert [(v.column, v.segment) for v in violations] == [(sf.Column.phase, 1)]

    with pytest.raises(sf.WorkflowValidationError):
        timeline.to_timeline()


def test_with_boundary():
    timeline = sf.MergedTimeline(sf.Column.phase, [sf.MergedSegment(S, 0, None)])
    filled = timeline.with_boundary(0, "end", 900)
    assert filled.is_complete
    assert filled.to_timeline() == sf.IntervalTimeline(sf.Column.phase, [(S, 0, 900)])
    assert not timeline.is_complete

    with pytest.raises(sf.WorkflowInputError):
        timeline.with_boundary(0, "middle", 900)


def test_merge_config():
    assert sf.MergeConfig().threshold_ms == 1000

    with pytest.raises(sf.WorkflowInputError):
        sf.MergeConfig(threshold_ms=0)


def random_observer(seed, name="A"):
    rng = sf.SplitMix64(seed)
    labels = sf.vocabulary_for(sf.Column.phase).labels[1:]
    segments, t = [], 0
    for _ in range(rng.randint(0, 8)):
        t += rng.choice([0, 0, rng.randint(1, 2000)])
        length = rng.randint(1, 5000)
        segments.append((rng.choice(labels), t, t + length))
        t += length
    return observer(name, segments)


@pytest.mark.parametrize("seed", range(100))
def test_self_merge_is_identity(seed):
    x = random_observer(seed)
    result = sf.auto_merge(x, x)
    assert result.uncertain == []
    assert result.disagreements == []
    assert result.violations() == []
    assert result.annotation() == x.annotation


@pytest.mark.parametrize("seed", range(100))
def test_merge_is_symmetric(seed):
    a = random_observer(seed, "A")
    b = random_observer(seed + 1000, "B")
    forward = sf.auto_merge(a, b)
    backward = sf.auto_merge(b, a)
    assert forward.merged == backward.merged
    assert backward.uncertain == [u.swapped() for u in forward.uncertain]
    assert sorted((str(d.column), d.segment) for d in forward.disagreements) == sorted(
        (str(d.column), d.segment) for d in backward.disagreements
    )
    for boundary in forward.resolved:
        low, high = sorted([boundary.time_a, boundary.time_b])
        assert low <= boundary.merged <= high
