import pytest

import pysurgflow as sf
from tests import oracles

PHASES = sf.vocabulary_for(sf.Column.phase)
A, B, C = "Suturing", "Knot Tying", "Idle"


def test_half_width():
    assert sf.ADConfig().half_width == 7
    assert sf.ADConfig(acceptable_delay_ms=0).half_width == 0
    assert sf.ADConfig(acceptable_delay_ms=1000, rate_hz=5).half_width == 2
    assert sf.ADConfig(acceptable_delay_ms=66, rate_hz=30).half_width == 0


def test_config_checks():
    with pytest.raises(sf.WorkflowInputError):
        sf.ADConfig(acceptable_delay_ms=-1)

    with pytest.raises(sf.WorkflowInputError):
        sf.ADConfig(rate_hz=0)


def test_late_transition_is_absorbed():
    gt = [A] * 15 + [B] * 15
    pred = [A] * 18 + [B] * 12
    assert sf.ad_relabel(gt, pred) == gt

    assert sf.frame_scores(gt, pred, PHASES).accuracy == pytest.approx(90.0)
    assert sf.ad_scores(gt, pred, PHASES).accuracy == pytest.approx(100.0)


def test_wrong_transition_is_untouched():
    gt = [A] * 15 + [B] * 15
    pred = [A] * 15 + [C] * 15
    assert sf.ad_relabel(gt, pred) == pred


def test_transition_outside_window_is_untouched():
    gt = [A] * 15 + [B] * 15
    pred = [A] * 23 + [B] * 7
    assert sf.ad_relabel(gt, pred) == pred
    assert sf.ad_scores(gt, pred, PHASES) == sf.frame_scores(gt, pred, PHASES)


def test_window_edge():
    gt = [A] * 15 + [B] * 15
    # boundary at 22 is exactly w = 7 frames late
    pred = [A] * 22 + [B] * 8
    assert sf.ad_relabel(gt, pred) == gt


def test_zero_delay_is_identity():
    gt = [A] * 10 + [B] * 10 + [C] * 10
    pred = [A] * 12 + [B] * 6 + [C] * 12
    cfg = sf.ADConfig(acceptable_delay_ms=0)
    assert sf.ad_relabel(gt, pred, cfg) == pred
    assert sf.ad_scores(gt, pred, PHASES, cfg) == sf.frame_scores(gt, pred, PHASES)


def test_window_clipped_to_sequence():
    gt = [A] * 3 + [B] * 3
    pred = [A] * 2 + [B] * 4
    assert sf.ad_relabel(gt, pred) == gt


def test_overlapping_windows_reach_a_fixed_point():
    gt = [A] * 10 + [B] * 3 + [C] * 10
    # only the rewritten first window exposes the B -> C boundary
    pred = [A] * 11 + [B] + [A] * 11
    once = sf.ad_relabel(gt, pred)
    assert once == [A] * 10 + [B] * 3 + [C] * 8 + [A] * 2
    assert sf.ad_relabel(gt, once) == once
    assert once == oracles.window_scan_relabel(gt, pred, 7)


def test_absorbed_transitions():
    gt = [A] * 10 + [B] * 3 + [C] * 10
    pred = [A] * 11 + [B] + [A] * 11
    # 13 is only matched once the window around 10 is rewritten
    assert sf.absorbed_transitions(gt, pred) == [10, 13]

    late = [A] * 23 + [B] * 7
    assert sf.absorbed_transitions([A] * 15 + [B] * 15, late) == []

    with pytest.raises(sf.WorkflowValidationError):
        sf.absorbed_transitions([A, B], [A])


def test_length_mismatch():
    with pytest.raises(sf.WorkflowValidationError):
        sf.ad_relabel([A, B], [A])


def test_ad_scores_match_oracle():
    gt = [A] * 20 + [B] * 5 + [C] * 30 + [A] * 3 + [B] * 20
    pred = [A] * 25 + [C] * 25 + [B] * 5 + [A] * 23
    expected = oracles.ad_scores(gt, pred, list(PHASES), 7)
    assert tuple(sf.ad_scores(gt, pred, PHASES)) == pytest.approx(expected, abs=1e-9)
