import pytest

from tord import permutations as perms
from tord.tableaux import Tableau, enumerate_tableaux, parse_tableau, tau, transpose
from tord.vogan import (
    AdjacentPair,
    adjacent_pairs,
    in_domain,
    in_domain_word,
    t_ab_reachable,
    t_ab_tableau,
    t_ab_word,
    _t_ab_word_pattern,
)


def test_pair_parsing_and_roots():
    pair = AdjacentPair.parse("3,+")
    assert (pair.alpha, pair.beta) == (3, 4)
    rev = pair.reversed()
    assert (rev.alpha, rev.beta) == (4, 3)
    assert AdjacentPair.parse(str(rev)) == rev
    with pytest.raises(ValueError):
        AdjacentPair.parse("3,x")


def test_domain_examples():
    assert in_domain(parse_tableau("1,2,4;3,5,6"), AdjacentPair(3))
    both = parse_tableau("1,3;2,4")  # 1 and 3 both descents
    assert not in_domain(both, AdjacentPair(1))
    for text in ("1,3;2,4", "1,3;2;4"):
        assert in_domain(parse_tableau(text), AdjacentPair(2))


def test_t_ab_tableau_displayed_examples():
    assert t_ab_tableau(parse_tableau("1,3;2,4"), AdjacentPair(2)) == parse_tableau("1,2;3,4")
    assert t_ab_tableau(parse_tableau("1,3;2;4"), AdjacentPair(2)) == parse_tableau("1,4;2;3")
    assert t_ab_tableau(parse_tableau("1,2,4;3,5,6"), AdjacentPair(3)) == parse_tableau(
        "1,2,3;4,5,6"
    )
    with pytest.raises(ValueError):
        t_ab_tableau(parse_tableau("1,2,3"), AdjacentPair(1))


def test_word_operator_cases_and_involution():
    w = (1, 3, 2)  # pattern [i, i+2, i+1] at i=1
    img = t_ab_word(w, AdjacentPair(1))
    assert img == (2, 3, 1)
    w2 = (3, 1, 2)  # pattern [i+2, i, i+1]
    assert t_ab_word(w2, AdjacentPair(1)) == (2, 1, 3)
    for n in range(3, 8):
        for word in perms.all_words(n):
            for pair in adjacent_pairs(n):
                if not in_domain_word(word, pair):
                    continue
                image = t_ab_word(word, pair)
                assert image == _t_ab_word_pattern(word, pair)
                assert in_domain_word(image, pair.reversed())
                assert t_ab_word(image, pair.reversed()) == word


def test_word_and_tableau_operators_agree_through_6():
    for n in range(3, 7):
        for word in perms.all_words(n):
            p = perms.rs(word)[0]
            for pair in adjacent_pairs(n):
                assert in_domain_word(word, pair) == in_domain(p, pair)
                if in_domain_word(word, pair):
                    assert perms.rs(t_ab_word(word, pair))[0] == t_ab_tableau(p, pair)


def test_tableau_operator_moves_two_entries_through_8():
    for n in range(3, 9):
        for t in enumerate_tableaux(n):
            for pair in adjacent_pairs(n):
                if not in_domain(t, pair):
                    continue
                img = t_ab_tableau(t, pair)
                assert img.shape == t.shape
                moved = [
                    e for e, (a, b) in enumerate(zip(t.row_of_vec, img.row_of_vec), start=1)
                    if a != b
                ]
                assert len(moved) == 2
                assert in_domain(img, pair.reversed())
                assert t_ab_tableau(img, pair.reversed()) == t


def test_reachable_diagonal_and_transpose_closure():
    t = parse_tableau("1,2,4;3,5,6")
    orbit = t_ab_reachable([(t, t)])
    assert orbit and all(a == b for a, b in orbit)
    s = parse_tableau("1,2,4;3,6;5")
    closed = t_ab_reachable([(t, s)], include_transpose=True)
    for a, b in closed:
        assert (transpose(b), transpose(a)) in closed
    assert closed == t_ab_reachable(list(closed), include_transpose=True)


def test_reachable_level_10_witness_orbit():
    t10 = parse_tableau("1,2,5,6;3,4,9;7,8;10")
    s10 = parse_tableau("1,2,6;3,4,8;5,9;7,10")
    plain = t_ab_reachable([(t10, s10)])
    closed = t_ab_reachable([(t10, s10)], include_transpose=True)
    assert plain <= closed and len(closed) == 8
    for a, b in closed:
        assert (transpose(b), transpose(a)) in closed
