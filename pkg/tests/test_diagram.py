"""Tests for plat diagrams, orientations, crossing signs, and A-smoothing."""

import pytest
from hypothesis import given, strategies as st

from twobridge import diagram as D
from twobridge import words as W

# Published (c_plus, s_A, sigma) columns for all words with c = 5, 6, and
# the two base-case diagrams.
METRIC_ROWS = {
    "+--+--+": (0, 5, 4),
    "+--++-+": (0, 3, 2),
    "+-++--+": (0, 3, 2),
    "+-+-++-": (4, 3, -2),
    "+-+--+-": (4, 5, 0),
    "+--++--++-": (3, 4, 0),
    "+-++-+-": (2, 3, 0),
    "+--+-+-": (2, 5, 2),
    "+--+": (0, 3, 2),
    "+-+-": (2, 3, 0),
}


# ------------------------------------------------------------------- building


def test_build_diagram_rows():
    d = D.diagram_for_word("+--+")
    assert d.letters == "aaa"
    assert all(D.CROSSING_PAIR[l] == (2, 3) for l in d.letters)
    d = D.diagram_for_word("+-+-")
    assert d.letters == "abab"
    assert [D.CROSSING_PAIR[l] for l in d.letters] == [(2, 3), (1, 2)] * 2


def test_closure_follows_last_crossing_row():
    assert D.diagram_for_word("+--+").closure == "A"  # odd c ends in 'a'
    assert D.diagram_for_word("+-+-").closure == "B"
    for c in (5, 6, 7, 8):
        for w in W.enumerate_words(c):
            assert D.diagram_for_word(w).closure == ("A" if c % 2 else "B")


def test_single_crossing_closes_to_unknot_with_two_A_circles():
    d = D.build_diagram("a")
    assert D.plat_component_count(d) == 1
    assert D.all_A_components(d) == 2


def test_build_diagram_rejects_bad_input():
    with pytest.raises(ValueError):
        D.build_diagram("")
    with pytest.raises(ValueError):
        D.build_diagram("ax")
    with pytest.raises(ValueError):
        D.build_diagram("ab", closure="C")


def test_every_word_diagram_is_a_knot():
    for c in range(3, 11):
        for w in W.enumerate_words(c):
            assert D.plat_component_count(D.diagram_for_word(w)) == 1


# ---------------------------------------------------------------- orientation


def test_orient_rejects_links():
    # 'ab' with closure B closes to a 2-component link.
    d = D.build_diagram("ab")
    assert D.plat_component_count(d) == 2
    with pytest.raises(ValueError):
        D.orient_diagram(d)


def test_all_signs_negative_on_torus_words():
    signs, _ = D.orient_diagram(D.diagram_for_word("+--+"))
    assert signs == [-1, -1, -1]


def test_c_plus_table_rows():
    for word, (c_plus, _, _) in METRIC_ROWS.items():
        signs, _ = D.orient_diagram(D.diagram_for_word(word))
        assert sum(1 for s in signs if s > 0) == c_plus, word


def test_state_right_of_first_crossing_is_o1():
    for c in range(3, 11):
        for w in W.enumerate_words(c):
            _, states = D.orient_diagram(D.diagram_for_word(w))
            assert states[1] == 1


def test_orientation_after_examples():
    assert D.orientation_after(1, "aab") == 2
    assert D.orientation_after(2, "aba") == 2
    assert D.orientation_after(2, "") == 2


def test_orientation_after_matches_cut_states():
    for c in (7, 8):
        for w in W.enumerate_words(c):
            d = D.diagram_for_word(w)
            _, states = D.orient_diagram(d)
            for s in (1, 2, 3):
                k = 1
                while 1 + k * s <= c:
                    j = 1 + k * s
                    assert states[j] == D.orientation_after(
                        states[1], d.letters[1:j]
                    )
                    k += 1


@given(st.text(alphabet="ab", max_size=30), st.sampled_from([1, 2, 3]))
def test_orientation_after_is_a_group_action(z, o):
    mid = len(z) // 2
    assert D.orientation_after(o, z) == D.orientation_after(
        D.orientation_after(o, z[:mid]), z[mid:]
    )
    assert D.strand_permutation(z)[o - 1] == D.orientation_after(o, z)


def test_strand_permutation_is_a_permutation():
    for z in ("", "a", "b", "ab", "ba", "aab", "bba", "abab"):
        assert sorted(D.strand_permutation(z)) == [1, 2, 3]


# ----------------------------------------------------------------- smoothings


def test_all_A_components_table_rows():
    for word, (_, s_a, _) in METRIC_ROWS.items():
        assert D.all_A_components(D.diagram_for_word(word)) == s_a, word


def test_all_A_closure_dependence():
    # The same braid word smooths differently under the two closures; the
    # word pipeline must pick the closure matching the final crossing row.
    assert D.all_A_components(D.build_diagram("aaa", "A")) == 3
    assert D.all_A_components(D.build_diagram("aaa", "B")) == 4


# ------------------------------------------------------------------ signature


def test_signature_examples():
    assert D.signature("+--+") == 2
    assert D.signature("+-+-") == 0
    assert D.signature("+-+-++-") == -2


def test_metric_rows_exact():
    for word, expect in METRIC_ROWS.items():
        m = D.metrics_for_word(word)
        assert (m.c_plus, m.s_A, m.signature) == expect, word


def test_signature_even_and_bounded():
    for c in range(3, 13):
        for w in W.enumerate_words(c):
            s = D.signature(w)
            assert s % 2 == 0
            assert abs(s) <= c - 1


def test_metrics_invariant_enforced():
    with pytest.raises(AssertionError):
        D.DiagramMetrics(c_plus=1, s_A=3, signature=0)
