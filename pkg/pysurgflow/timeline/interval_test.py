import pytest

import pysurgflow as sf


def test_segments_sorted_and_normalized():
    timeline = sf.IntervalTimeline(
        sf.Column.phase, [("Knot Tying", 500, 900), (" Suturing ", 0, 500)]
    )
    assert timeline.segments == (
        sf.Segment("Suturing", 0, 500),
        sf.Segment("Knot Tying", 500, 900),
    )
    assert timeline.labels() == ["Suturing", "Knot Tying"]
    assert timeline.max_end_ms() == 900


def test_overlap_names_column_and_pair():
    with pytest.raises(sf.WorkflowValidationError) as e:
        sf.IntervalTimeline(
            sf.Column.step, [("Needle holding", 0, 500), ("Suture making", 400, 800)]
        )
    assert "step" in str(e.value)
    assert "(Needle holding, 0, 500)" in str(e.value)
    assert "(Suture making, 400, 800)" in str(e.value)


def test_empty_segment():
    with pytest.raises(sf.WorkflowValidationError):
        sf.IntervalTimeline(sf.Column.phase, [("Suturing", 100, 100)])


def test_negative_begin():
    with pytest.raises(sf.WorkflowValidationError) as e:
        sf.IntervalTimeline(sf.Column.phase, [("Suturing", -100, 50)])
    assert "0 <= begin < end" in str(e.value)

    with pytest.raises(sf.WorkflowValidationError):
        sf.IntervalAnnotation.from_segments({sf.Column.phase: [("Suturing", -100, 50)]})


def test_unknown_label():
    with pytest.raises(sf.VocabularyError):
        sf.IntervalTimeline(sf.Column.phase, [("Sewing", 0, 100)])


def test_non_integer_boundaries():
    with pytest.raises(sf.WorkflowInputError):
        sf.IntervalTimeline(sf.Column.phase, [("Suturing", 0.5, 100)])


def test_annotation_missing_columns_are_empty():
    annotation = sf.IntervalAnnotation.from_segments(
        {sf.Column.phase: [("Suturing", 0, 100)], "step": [("Needle holding", 0, 250)]}
    )
    assert len(annotation[sf.Column.verb_left]) == 0
    assert annotation.max_end_ms() == 250
    assert annotation == sf.IntervalAnnotation.from_segments(
        {sf.Column.step: [("Needle holding", 0, 250)], "phase": [("Suturing", 0, 100)]}
    )


def test_annotation_rejects_misfiled_timeline():
    with pytest.raises(sf.WorkflowInputError):
        sf.IntervalAnnotation(
            {sf.Column.step: sf.IntervalTimeline(sf.Column.phase, [("Suturing", 0, 1)])}
        )
