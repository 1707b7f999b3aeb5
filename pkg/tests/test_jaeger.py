import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpoly import (
    BraidWord,
    CircuitPartition,
    enumerate_admissible,
    enumerate_leaves,
    homfly,
    homfly_jaeger,
    is_admissible,
    natural_traversal,
    parse_braid,
    verify_bijection,
)
from braidpoly.jaeger import DUAL, STANDARD
from braidpoly.resolver import ASCENDING, DESCENDING

EXAMPLE_WORD = "-1 3 -2 -4 -4 -4 1 -3"


def words(max_len=6, max_gap=3):
    token = st.integers(1, max_gap).flatmap(lambda g: st.sampled_from([g, -g]))
    return st.lists(token, max_size=max_len).map(BraidWord.from_tokens)


class TestAdmissibility:
    @pytest.mark.parametrize("text", ["1 1 1", "-1", EXAMPLE_WORD, "1 -2 1 -2"])
    def test_nothing_smoothed_is_always_admissible(self, text):
        partition = CircuitPartition(parse_braid(text), frozenset())
        assert is_admissible(partition, STANDARD)
        assert is_admissible(partition, DUAL)

    def test_fully_smoothed_positive_triple(self):
        partition = CircuitPartition(parse_braid("1 1 1"), frozenset({0, 1, 2}))
        assert is_admissible(partition, STANDARD)

    def test_smoothed_negative_crossing_fails_standard(self):
        partition = CircuitPartition(parse_braid("-1"), frozenset({0}))
        assert not is_admissible(partition, STANDARD)
        assert is_admissible(partition, DUAL)

    def test_out_of_range_index_rejected(self):
        with pytest.raises(ValueError):
            CircuitPartition(parse_braid("1"), frozenset({3}))

    @given(words(max_len=5))
    @settings(max_examples=50, deadline=None)
    def test_admissibility_is_first_arrival_from_under_arm(self, word):
        # pointwise agreement between the tangence-side predicate and the
        # under-arm arrival rule, across all single-crossing smoothings
        for i in range(len(word)):
            partition = CircuitPartition(word, frozenset({i}))
            events = natural_traversal(partition.as_diagram()).events
            first = next(e for e in events if e.index == i and e.ordinal == 1)
            assert is_admissible(partition, STANDARD) == (first.role == "under")
            assert is_admissible(partition, DUAL) == (first.role == "over")


class TestEnumeration:
    def test_descending_word_has_only_trivial_partition(self):
        parts = list(enumerate_admissible(parse_braid("-1"), STANDARD))
        assert [sorted(p.smoothed) for p in parts] == [[]]

    def test_single_positive_crossing(self):
        parts = {frozenset(p.smoothed) for p in enumerate_admissible(parse_braid("1"), STANDARD)}
        assert parts == {frozenset(), frozenset({0})}

    def test_empty_word(self):
        parts = list(enumerate_admissible(parse_braid("", strands=3), STANDARD))
        assert len(parts) == 1
        assert parts[0].gamma == 3

    @given(words(max_len=6))
    @settings(max_examples=50, deadline=None)
    def test_every_emitted_partition_is_admissible(self, word):
        for variant in (STANDARD, DUAL):
            emitted = list(enumerate_admissible(word, variant))
            assert len({p.smoothed for p in emitted}) == len(emitted)
            for p in emitted:
                assert is_admissible(p, variant)

    @given(words(max_len=4, max_gap=2))
    @settings(max_examples=30, deadline=None)
    def test_enumeration_matches_exhaustive_filter(self, word):
        import itertools

        for variant in (STANDARD, DUAL):
            emitted = {p.smoothed for p in enumerate_admissible(word, variant)}
            brute = {
                frozenset(subset)
                for r in range(len(word) + 1)
                for subset in itertools.combinations(range(len(word)), r)
                if is_admissible(CircuitPartition(word, frozenset(subset)), variant)
            }
            assert emitted == brute


class TestJaegerPolynomial:
    def test_unknot(self):
        assert homfly_jaeger(parse_braid("1"), STANDARD).to_text() == "1"
        assert homfly_jaeger(parse_braid("1"), DUAL).to_text() == "1"

    def test_trefoil(self):
        assert (
            homfly_jaeger(parse_braid("1 1 1"), STANDARD).to_text()
            == "a^-2*z^2 + 2*a^-2 - a^-4"
        )

    def test_trivial_links(self):
        from braidpoly import LaurentPoly2

        for n in range(1, 6):
            expected = LaurentPoly2.from_text("a*z^-1 - a^-1*z^-1") ** (n - 1)
            assert homfly_jaeger(parse_braid("", strands=n), STANDARD) == expected
            assert homfly_jaeger(parse_braid("", strands=n), DUAL) == expected

    @given(words(max_len=6))
    @settings(max_examples=60, deadline=None)
    def test_matches_tree_formulas_termwise(self, word):
        assert homfly_jaeger(word, STANDARD) == homfly(word, DESCENDING)
        assert homfly_jaeger(word, DUAL) == homfly(word, ASCENDING)


class TestBijection:
    @pytest.mark.parametrize("text,strands", [("1", None), (EXAMPLE_WORD, None), ("", 4)])
    def test_examples(self, text, strands):
        word = parse_braid(text, strands)
        assert verify_bijection(word, STANDARD)
        assert verify_bijection(word, DUAL)

    @given(words(max_len=6))
    @settings(max_examples=60, deadline=None)
    def test_bijection_on_random_words(self, word):
        assert verify_bijection(word, STANDARD)
        assert verify_bijection(word, DUAL)

    @given(words(max_len=6))
    @settings(max_examples=40, deadline=None)
    def test_partition_count_equals_leaf_count(self, word):
        assert sum(1 for _ in enumerate_admissible(word, STANDARD)) == sum(
            1 for _ in enumerate_leaves(word, DESCENDING)
        )
        assert sum(1 for _ in enumerate_admissible(word, DUAL)) == sum(
            1 for _ in enumerate_leaves(word, ASCENDING)
        )
