import numpy as np
import pytest

import pysurgflow as sf

PHASES = sf.vocabulary_for(sf.Column.phase)


def test_confusion_tally():
    cm = sf.confusion(
        ["Suturing", "Suturing", "Knot Tying"],
        ["Suturing", "Knot Tying", "Knot Tying"],
        PHASES,
    )
    assert cm.count("Suturing", "Suturing") == 1
    assert cm.count("Suturing", "Knot Tying") == 1
    assert cm.count("Knot Tying", "Knot Tying") == 1
    assert cm.total == 3
    assert cm.classes == ("Idle", "Suturing", "Knot Tying")


def test_confusion_identity_is_diagonal():
    labels = ["Idle", "Suturing", "Suturing", "Knot Tying", "Idle"]
    cm = sf.confusion(labels, labels, PHASES)
    assert np.array_equal(cm.counts, np.diag(np.diag(cm.counts)))
    assert cm.total == len(labels)


def test_confusion_empty():
    cm = sf.confusion([], [], PHASES)
    assert cm.total == 0
    assert cm.counts.shape == (3, 3)


def test_confusion_length_mismatch():
    with pytest.raises(sf.WorkflowValidationError):
        sf.confusion(["Idle"], [], PHASES)


def test_confusion_unknown_label():
    with pytest.raises(sf.VocabularyError):
        sf.confusion(["Idle"], ["Sewing"], PHASES)


def test_confusion_matrix_checks():
    with pytest.raises(sf.WorkflowValidationError):
        sf.ConfusionMatrix(["a", "b"], np.zeros((3, 3)))

    with pytest.raises(sf.WorkflowValidationError):
        sf.ConfusionMatrix(["a"], np.array([[-1]]))
