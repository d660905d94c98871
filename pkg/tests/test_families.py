import pytest

from mexpart import (
    ColoredPartition,
    Family,
    Overpartition,
    Partition,
    count_family,
    enumerate_family,
    is_member,
    mex_sequence,
)


def canonical_key(obj):
    """Documented enumeration order, restated independently of the library:
    part sizes descending-lex, then the overline/color pattern."""
    if isinstance(obj, Partition):
        return tuple(-x for x in obj.parts), ()
    if isinstance(obj, Overpartition):
        tokens = obj.tokens()
        return tuple(-s for s, _ in tokens), tuple(int(over) for _, over in tokens)
    return tuple(-s for s, _ in obj.parts), tuple(c for _, c in obj.parts)


class TestOverpartitionType:
    def test_normalizes(self):
        op = Overpartition([1, 3], [2, 5, 2])
        assert op.overlined == (3, 1)
        assert op.plain == (5, 2, 2)
        assert op.weight == 13

    def test_rejects_repeated_overlined(self):
        with pytest.raises(ValueError):
            Overpartition([3, 3], [])

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            Overpartition([0], [])
        with pytest.raises(ValueError):
            Overpartition([], [-2])

    def test_text_forms(self):
        assert Overpartition([6, 4, 3, 2, 1], [3, 3]).text() == "~6 ~4 ~3 3 3 ~2 ~1"
        assert Overpartition([2], [2]).text() == "~2 2"
        assert Overpartition().text() == "-"

    def test_from_text_round_trip(self):
        for text in ("-", "7", "~7", "~6 ~4 ~3 3 3 ~2 ~1", "~2 2", "5 ~2"):
            assert Overpartition.from_text(text).text() == text

    @pytest.mark.parametrize(
        "bad", ["1 2", "2 ~2", "~x", "~0", "3 ~3 ~3", "", "~"]
    )
    def test_from_text_rejects(self, bad):
        with pytest.raises(ValueError):
            Overpartition.from_text(bad)


class TestColoredPartitionType:
    def test_normalizes(self):
        c = ColoredPartition([(3, 2), (3, 1), (5, 2)], 2)
        assert c.parts == ((5, 2), (3, 1), (3, 2))
        assert c.weight == 11

    def test_rejects_even_size_and_bad_color(self):
        with pytest.raises(ValueError):
            ColoredPartition([(4, 1)], 2)
        with pytest.raises(ValueError):
            ColoredPartition([(3, 3)], 2)

    def test_second_color_needs_large_size(self):
        with pytest.raises(ValueError):
            ColoredPartition([(1, 2)], 2)
        ColoredPartition([(3, 2)], 2)

    def test_context_must_be_even(self):
        with pytest.raises(ValueError):
            ColoredPartition([], 3)

    def test_text_forms(self):
        assert ColoredPartition([(1, 1), (5, 2)], 2).text() == "5_2 1_1"
        assert ColoredPartition((), 2).text() == "-"
        assert ColoredPartition.from_text("5_2 1_1", 2).parts == ((5, 2), (1, 1))
        assert ColoredPartition.from_text("-", 4) == ColoredPartition((), 4)

    @pytest.mark.parametrize("bad", ["5_3", "4_1", "1_2", "3_2 3_1", "1_1 3_1", "x_1"])
    def test_from_text_rejects(self, bad):
        with pytest.raises(ValueError):
            ColoredPartition.from_text(bad, 2)


class TestFamilyId:
    def test_parametrized_families_need_r(self):
        for kind in ("pmex", "obar", "pe", "po2"):
            with pytest.raises(ValueError):
                Family(kind)
        with pytest.raises(ValueError):
            Family("pmex", 0)

    def test_parity_constraints(self):
        with pytest.raises(ValueError):
            Family("pe", 2)
        with pytest.raises(ValueError):
            Family("po2", 3)
        Family("pe", 1)
        Family("po2", 2)

    def test_unparametrized_families_reject_r(self):
        with pytest.raises(ValueError):
            Family("p", 1)
        with pytest.raises(ValueError):
            Family("pbar", 2)
        with pytest.raises(ValueError):
            Family("nope")


class TestEnumerate:
    def test_p4_exact(self):
        got = [p.parts for p in enumerate_family(Family("p"), 4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_pbar4_exact(self):
        expected = {
            Overpartition([], [4]),
            Overpartition([4], []),
            Overpartition([], [3, 1]),
            Overpartition([1], [3]),
            Overpartition([3], [1]),
            Overpartition([3, 1], []),
            Overpartition([], [2, 2]),
            Overpartition([2], [2]),
            Overpartition([], [2, 1, 1]),
            Overpartition([1], [2, 1]),
            Overpartition([2], [1, 1]),
            Overpartition([2, 1], [1]),
            Overpartition([], [1, 1, 1, 1]),
            Overpartition([1], [1, 1, 1]),
        }
        got = enumerate_family(Family("pbar"), 4)
        assert len(got) == 14
        assert set(got) == expected

    def test_pmex_2_7_exact(self):
        got = [p.text() for p in enumerate_family(Family("pmex", 2), 7)]
        assert got == [
            "7",
            "6 1",
            "5 1 1",
            "4 3",
            "4 1 1 1",
            "3 2 1 1",
            "2 2 2 1",
            "2 2 1 1 1",
            "2 1 1 1 1 1",
            "1 1 1 1 1 1 1",
        ]

    def test_obar_3_7_exact(self):
        got = [o.text() for o in enumerate_family(Family("obar", 3), 7)]
        assert got == ["~7", "6 ~1", "~6 ~1", "~5 ~2", "4 ~3", "~4 ~3", "4 ~2 ~1", "~4 ~2 ~1"]

    def test_po2_2_6_exact(self):
        got = [c.text() for c in enumerate_family(Family("po2", 2), 6)]
        assert got == [
            "5_1 1_1",
            "5_2 1_1",
            "3_1 3_1",
            "3_1 3_2",
            "3_2 3_2",
            "3_1 1_1 1_1 1_1",
            "3_2 1_1 1_1 1_1",
            "1_1 1_1 1_1 1_1 1_1 1_1",
        ]

    @pytest.mark.parametrize(
        "family,n,expected",
        [
            (Family("p"), 4, 5),
            (Family("pbar"), 4, 14),
            (Family("pe", 3), 8, 11),
            (Family("obar", 3), 7, 8),
            (Family("po2", 2), 6, 8),
            (Family("pmex", 1), 0, 1),
            (Family("pmex", 7), 0, 1),
        ],
    )
    def test_counts(self, family, n, expected):
        assert count_family(family, n) == expected

    def test_weight_zero_is_the_empty_object(self):
        assert enumerate_family(Family("p"), 0) == (Partition(),)
        assert enumerate_family(Family("pbar"), 0) == (Overpartition(),)
        assert enumerate_family(Family("obar", 3), 0) == (Overpartition(),)
        assert enumerate_family(Family("po2", 2), 0) == (ColoredPartition((), 2),)

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            enumerate_family(Family("p"), -1)

    def test_pmex_1_equals_p(self):
        for n in range(26):
            assert enumerate_family(Family("pmex", 1), n) == enumerate_family(Family("p"), n)

    def test_pmex_nesting(self):
        for n in range(26):
            for r in range(1, 7):
                smaller = set(enumerate_family(Family("pmex", r + 1), n))
                assert smaller <= set(enumerate_family(Family("pmex", r), n))

    def test_membership_soundness(self):
        for n in range(13):
            for r in (1, 2, 3, 4):
                for p in enumerate_family(Family("pmex", r), n):
                    assert mex_sequence(p).at_least(r)
                for op in enumerate_family(Family("obar", r), n):
                    assert all(x > r and (x - r - 1) % 2 == 0 for x in op.plain)
            for r in (1, 3):
                for p in enumerate_family(Family("pe", r), n):
                    assert not any(x % 2 == 0 and x < r for x in p.parts)
            for r in (2, 4):
                for c in enumerate_family(Family("po2", r), n):
                    assert all(s % 2 == 1 for s, _ in c.parts)
                    assert all(col == 1 or s > r for s, col in c.parts)

    def test_each_member_exactly_once(self):
        for family in (Family("p"), Family("pbar"), Family("obar", 2), Family("po2", 2)):
            members = enumerate_family(family, 8)
            assert len(set(members)) == len(members)

    def test_documented_order(self):
        for family in (
            Family("p"),
            Family("pbar"),
            Family("pmex", 2),
            Family("obar", 2),
            Family("pe", 3),
            Family("po2", 2),
        ):
            members = enumerate_family(family, 9)
            assert list(members) == sorted(members, key=canonical_key)

    def test_deterministic(self):
        for family in (Family("pbar"), Family("po2", 4), Family("obar", 3)):
            assert enumerate_family(family, 10) == enumerate_family(family, 10)


class TestIsMember:
    def test_type_mismatch_is_not_membership(self):
        assert not is_member(Family("p"), Overpartition([1], []))
        assert not is_member(Family("obar", 2), Partition([3]))

    def test_obar_predicate(self):
        assert is_member(Family("obar", 2), Overpartition([5, 2], [3, 3]))
        assert not is_member(Family("obar", 2), Overpartition([], [4]))
        assert not is_member(Family("obar", 2), Overpartition([], [1]))
        assert is_member(Family("obar", 1), Overpartition([], [2]))

    def test_pe_predicate(self):
        assert is_member(Family("pe", 3), Partition([6, 1, 1]))
        assert not is_member(Family("pe", 3), Partition([2, 1]))
        assert is_member(Family("pe", 1), Partition([2, 1]))

    def test_po2_predicate(self):
        assert is_member(Family("po2", 2), ColoredPartition([(3, 2)], 2))
        assert not is_member(Family("po2", 4), ColoredPartition([(3, 2)], 2))
