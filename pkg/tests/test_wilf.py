import pytest

from invseq import canonical_patterns, classify, count_vector, first_divergence
from invseq.core import Pattern


class TestCanonicalPatterns:
    def test_counts(self):
        # ordered set partitions of {1..n} (Fubini numbers)
        assert len(canonical_patterns(1)) == 1
        assert len(canonical_patterns(2)) == 3
        assert len(canonical_patterns(3)) == 13
        assert len(canonical_patterns(4)) == 75

    def test_sorted_and_canonical(self):
        pats = canonical_patterns(3)
        entries = [p.entries for p in pats]
        assert entries == sorted(entries)
        for p in pats:
            assert set(p.entries) == set(range(max(p.entries) + 1))


class TestCountVector:
    def test_000_is_euler(self):
        assert count_vector((0, 0, 0), 8).counts == (1, 2, 5, 16, 61, 272, 1385, 7936)

    def test_0000(self):
        assert count_vector((0, 0, 0, 0), 6).counts == (1, 2, 6, 23, 108, 601)

    def test_0021(self):
        assert count_vector((0, 0, 2, 1), 8).counts == (
            1, 2, 6, 23, 101, 480, 2400, 12434,
        )


class TestClassify:
    def test_length_two(self):
        classes = classify(2, 5)
        # 00 and 01 share the all-ones vector; 10 is Catalan
        as_sets = {
            frozenset(str(p) for p in c.patterns): c.counts for c in classes
        }
        assert as_sets == {
            frozenset({"00", "01"}): (1, 1, 1, 1, 1),
            frozenset({"10"}): (1, 2, 5, 14, 42),
        }

    def test_length_three_class_count(self):
        assert len(classify(3, 7)) == 11

    def test_threads_do_not_change_partition(self):
        a = classify(3, 6, threads=1)
        b = classify(3, 6, threads=2)
        assert a == b

    def test_patterns_partitioned(self):
        classes = classify(3, 6)
        seen = [p for c in classes for p in c.patterns]
        assert sorted(seen, key=lambda p: p.entries) == canonical_patterns(3)
        assert len(seen) == len(set(seen))


class TestFirstDivergence:
    def test_known_pair(self):
        assert first_divergence((1, 0, 2), (1, 2, 0), 6) == 4

    def test_equal_within_range(self):
        assert first_divergence((2, 0, 1, 1), (2, 1, 1, 0), 8) is None

    def test_accepts_pattern_objects(self):
        assert first_divergence(Pattern((1, 0)), Pattern((0, 1)), 5) == 2
