import numpy as np
import pytest

from tord import kl, orders
from tord import permutations as perms
from tord.tableaux import enumerate_tableaux


def test_budget():
    with pytest.raises(ValueError, match="budget"):
        kl.kl_table(8)


def test_s3_polynomials_all_one():
    table = kl.kl_table(3)
    for x in perms.all_words(3):
        assert table.poly(x, (3, 2, 1)) == (1,)
    assert table.poly((3, 2, 1), (1, 2, 3)) == ()


def test_short_intervals_are_constant():
    table = kl.kl_table(4)
    for (x, w), p in table.polys.items():
        if table.lengths[w] - table.lengths[x] <= 2:
            assert p == (1,)


def test_s4_attains_one_plus_q():
    table = kl.kl_table(4)
    assert (1, 1) in set(table.polys.values())


def test_inverse_symmetry_through_5():
    for n in range(2, 6):
        table = kl.kl_table(n)
        for x in perms.all_words(n):
            for w in perms.all_words(n):
                assert table.poly(x, w) == table.poly(perms.inverse(x), perms.inverse(w))


def brute_bruhat(n):
    words = list(perms.all_words(n))
    wid = {w: k for k, w in enumerate(words)}
    edges = np.eye(len(words), dtype=bool)
    for w in words:
        lw = perms.length(w)
        for i in range(n):
            for j in range(i + 1, n):
                v = list(w)
                v[i], v[j] = v[j], v[i]
                v = tuple(v)
                if perms.length(v) == lw + 1:
                    edges[wid[w], wid[v]] = True
    return orders._closure(edges)


def test_bruhat_matrix_against_transposition_closure():
    for n in (3, 4, 5):
        table = kl.kl_table(n)
        assert np.array_equal(table.bruhat, brute_bruhat(n))


def test_mu_values():
    table = kl.kl_table(3)
    e = (1, 2, 3)
    assert table.mu(e, (2, 1, 3)) == 1
    assert table.mu(e, (2, 3, 1)) == 0  # even length difference


def test_cells_are_recording_fibers():
    for n in range(1, 6):
        table = kl.kl_table(n)
        cells = set(kl.left_cells(table))
        fibers = {}
        for w in perms.all_words(n):
            fibers.setdefault(perms.rs(w)[1].row_of_vec, set()).add(w)
        assert cells == {frozenset(v) for v in fibers.values()}
        assert len(cells) == len(enumerate_tableaux(n))


def test_cell_order_matches_weak_closure_small():
    for n in range(1, 6):
        table = kl.kl_table(n)
        assert kl.cell_preorder(table).equals(orders.duflo_vogan(n)[-1])


def test_cell_order_properties():
    for n in range(2, 7):
        rel = kl.cell_preorder(kl.kl_table(n))
        assert rel.is_antisymmetric()
        assert rel.is_transitive()
        assert orders.tau_monotone_violations(rel) == 0
        assert orders.transpose_dual_violations(rel) == 0


def test_cell_order_sandwich_at_7():
    rel = kl.cell_preorder(kl.kl_table(7))
    assert orders.is_extension(orders.duflo_vogan(7)[-1], rel)
    assert orders.is_extension(rel, orders.vogan_chain(7)[-1])


def test_orientation_rederivation_matches_frozen_constant():
    assert kl.derive_orientation(kl.kl_table(4)) == kl.CELL_ORIENTATION


def test_csv_round_trip(tmp_path):
    table = kl.kl_table(4)
    path = str(tmp_path / "kl_4.csv")
    kl.save_csv(table, path)
    back = kl.load_csv(path)
    assert back.n == 4
    assert back.polys == table.polys
    assert {w: sorted(m) for w, m in back.mu_lists.items() if m} == {
        w: sorted(m) for w, m in table.mu_lists.items() if m
    }
