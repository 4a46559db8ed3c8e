import random

import pytest

from tord import permutations as perms
from tord.partitions import validate
from tord.spaltenstein import (
    DEFAULT_PRIME,
    MatrixFp,
    SupportSet,
    jordan_type,
    sample_generic,
    steinberg_support,
    verify_double_chain,
    _matmul_mod,
    _rank_mod,
)
from tord.tableaux import Tableau, enumerate_tableaux, parse_tableau

P = DEFAULT_PRIME


def test_support_extremes():
    n = 5
    full = steinberg_support(tuple(range(1, n + 1)))
    assert len(full.positions) == n * (n - 1) // 2
    empty = steinberg_support(perms.longest_word(n))
    assert empty.positions == frozenset()


def test_support_direct_evaluation():
    w = (3, 5, 6, 1, 2, 4)
    inv = perms.inverse(w)
    expect = {
        (i, j)
        for i in range(1, 7)
        for j in range(i + 1, 7)
        if inv[i - 1] < inv[j - 1]
    }
    assert steinberg_support(w).positions == expect
    assert (1, 2) in expect


def test_support_validation():
    with pytest.raises(ValueError):
        SupportSet(3, frozenset({(2, 2)}))


def zero_matrix(n):
    return MatrixFp(n, P, tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def test_jordan_type_trivia():
    assert jordan_type(zero_matrix(5)) == (1, 1, 1, 1, 1)
    block = tuple(
        tuple(1 if j == i + 1 else 0 for j in range(5)) for i in range(5)
    )
    assert jordan_type(MatrixFp(5, P, block)) == (5,)


def test_jordan_type_displayed_matrix():
    ones = ((1, 5), (2, 3), (3, 6), (5, 6))
    rows = [[0] * 6 for _ in range(6)]
    for i, j in ones:
        rows[i - 1][j - 1] = 1
    chain = ((3, 2, 1), (2, 2, 1), (2, 1, 1), (2, 1), (1, 1), (1,))
    for k in range(6, 0, -1):
        window = MatrixFp(k, P, tuple(tuple(r[:k]) for r in rows[:k]))
        assert jordan_type(window) == chain[6 - k]


def test_jordan_type_is_partition():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randrange(2, 8)
        rows = [
            [rng.randrange(P) if j > i else 0 for j in range(n)] for i in range(n)
        ]
        lam = jordan_type(MatrixFp(n, P, tuple(tuple(r) for r in rows)))
        assert validate(lam) == lam and sum(lam) == n


def test_rank_invariant_under_triangular_conjugation():
    rng = random.Random(9)
    n = 6
    sup = steinberg_support((3, 5, 6, 1, 2, 4))
    mat = sample_generic(sup, P, 4)
    # unit upper-triangular conjugator and its inverse via back substitution
    u = [[1 if i == j else (rng.randrange(P) if j > i else 0) for j in range(n)] for i in range(n)]
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        for i in range(col - 1, -1, -1):
            s = sum(u[i][k] * inv[k][col] for k in range(i + 1, col + 1)) % P
            inv[i][col] = (-s) % P
    conj = _matmul_mod(_matmul_mod(u, [list(r) for r in mat.entries], P), inv, P)
    assert jordan_type(mat) == jordan_type(MatrixFp(n, P, tuple(tuple(r) for r in conj)))


def test_sample_generic_deterministic():
    sup = steinberg_support((2, 1, 4, 3))
    a = sample_generic(sup, P, 7)
    b = sample_generic(sup, P, 7)
    c = sample_generic(sup, P, 8)
    assert a == b and a != c
    assert all(x for row, ii in zip(a.entries, range(4)) for jj, x in enumerate(row) if (ii + 1, jj + 1) in sup.positions)
    empty = sample_generic(steinberg_support((2, 1)), P, 0)
    assert empty.entries == ((0, 0), (0, 0))


def test_verify_double_chain_row_tableau():
    report = verify_double_chain(Tableau.from_rows([range(1, 6)]), trials=2)
    assert report["status"] == "ok"
    assert report["w_T"] == "[1,2,3,4,5]"
    assert report["trials_used"] == 1


def test_verify_double_chain_staircase_example():
    t = parse_tableau("1,3,6;2,5;4")
    report = verify_double_chain(t, trials=5)
    assert report["status"] == "ok"
    assert report["mismatches"] == []


def test_verify_double_chain_exhaustive_small():
    for n in range(1, 6):
        for t in enumerate_tableaux(n):
            report = verify_double_chain(t, trials=5)
            assert report["status"] == "ok", report
