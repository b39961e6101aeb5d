import pytest

from chh import (
    InvalidParameterError,
    ResourceLimitError,
    UnsupportedSourceError,
    exact_chh_from_counts,
    exact_chh_multipass,
    exact_chh_naive,
    exact_counts_naive,
)
from conftest import random_tuple_stream


def test_multipass_worked_example():
    stream = [(b"a", b"b")] * 3 + [(b"c", b"d")]
    result = exact_chh_multipass(stream, "0.5", "0.5")
    assert result.n == 4
    assert result.primaries == {b"a": 3}
    assert result.pairs == {(b"a", b"b"): 3}
    assert result.sorted_pairs() == [(b"a", b"b", 3)]


def test_uniform_stream_has_no_heavy_primaries():
    stream = [(str(i).encode(), b"y") for i in range(10) for _ in range(10)]
    result = exact_chh_multipass(stream, "0.2", "0.5")
    assert result.primaries == {}
    assert result.pairs == {}


def test_extreme_threshold_yields_empty_set():
    stream = random_tuple_stream(3, 500, primaries=5, secondaries=5)
    result = exact_chh_multipass(stream, "0.999", "0.5")
    assert result.pairs == {}


def test_thresholds_are_strict():
    # f_a = 2 = phi1 * n exactly: not heavy under the strict definition
    stream = [(b"a", b"p"), (b"a", b"q"), (b"b", b"p"), (b"c", b"p")]
    result = exact_chh_naive(stream, "0.5", "0.5")
    assert result.primaries == {}


def test_naive_counts_example():
    counts = exact_counts_naive([(b"a", b"p"), (b"a", b"p"), (b"b", b"q")])
    assert counts.n == 3
    assert counts.primary == {b"a": 2, b"b": 1}
    assert counts.pairs == {(b"a", b"p"): 2, (b"b", b"q"): 1}
    assert sum(counts.primary.values()) == counts.n


def test_empty_stream():
    counts = exact_counts_naive([])
    assert counts.n == 0
    assert counts.primary == {}
    result = exact_chh_from_counts(counts, "0.5", "0.5")
    assert result.pairs == {}
    assert exact_chh_multipass([], "0.5", "0.5").pairs == {}


def test_naive_cap_enforced():
    stream = [(b"a", b"b")] * 10
    with pytest.raises(ResourceLimitError):
        exact_counts_naive(stream, max_tuples=5)


def test_one_shot_iterator_rejected():
    stream = iter([(b"a", b"b")])
    with pytest.raises(UnsupportedSourceError):
        exact_chh_multipass(stream, "0.5", "0.5")


def test_phi_range_validated():
    with pytest.raises(InvalidParameterError):
        exact_chh_multipass([], "0", "0.5")
    with pytest.raises(InvalidParameterError):
        exact_chh_multipass([], "0.5", "1")


@pytest.mark.parametrize("seed", range(8))
def test_multipass_agrees_with_naive(seed):
    stream = random_tuple_stream(seed, 2000, primaries=40, secondaries=15)
    multipass = exact_chh_multipass(stream, "0.05", "0.1")
    naive = exact_chh_naive(stream, "0.05", "0.1")
    assert multipass.n == naive.n
    assert multipass.primaries == naive.primaries
    assert multipass.pairs == naive.pairs


def test_candidate_pass_never_sheds_a_heavy_primary():
    for seed in range(5):
        stream = random_tuple_stream(seed, 1500, primaries=25, secondaries=5)
        result = exact_chh_multipass(stream, "0.08", "0.5")
        naive = exact_chh_naive(stream, "0.08", "0.5")
        # every exact heavy primary made it through the candidate pass
        assert set(naive.primaries) <= set(result.counts.primary)


def test_multipass_pair_counts_bounded_by_primary_counts():
    stream = random_tuple_stream(11, 3000, primaries=20, secondaries=10)
    result = exact_chh_multipass(stream, "0.05", "0.05")
    for (d, _), count in result.counts.pairs.items():
        assert count <= result.counts.primary[d]
