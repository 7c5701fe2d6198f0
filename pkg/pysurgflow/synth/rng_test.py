import pytest

import pysurgflow as sf


def test_reference_outputs():
    rng = sf.SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_same_seed_same_stream():
    a, b = sf.SplitMix64(1234), sf.SplitMix64(1234)
    assert [a.next_u64() for _ in range(20)] == [b.next_u64() for _ in range(20)]


def test_seed_is_reduced_to_64_bits():
    a, b = sf.SplitMix64(-1), sf.SplitMix64((1 << 64) - 1)
    assert a.next_u64() == b.next_u64()


def test_randint_range():
    rng = sf.SplitMix64(99)
    draws = [rng.randint(-3, 3) for _ in range(2000)]
    assert set(draws) == set(range(-3, 4))
    assert rng.randint(5, 5) == 5

    with pytest.raises(sf.WorkflowInputError):
        rng.randint(2, 1)


def test_random_and_chance():
    rng = sf.SplitMix64(5)
    values = [rng.random() for _ in range(1000)]
    assert all(0.0 <= v < 1.0 for v in values)
    assert not any(rng.chance(0.0) for _ in range(100))
    assert all(rng.chance(1.0) for _ in range(100))


def test_choice():
    rng = sf.SplitMix64(3)
    assert rng.choice(["only"]) == "only"

    with pytest.raises(sf.WorkflowInputError):
        rng.choice([])


@pytest.mark.parametrize("seed", [1.0, "1", None])
def test_seed_must_be_int(seed):
    with pytest.raises(sf.WorkflowInputError):
        sf.SplitMix64(seed)
