import logging
import os

import numpy as np
import pytest

from tord import orders
from tord.orders import (
    OrderRelation,
    chain_pair,
    chain_relation,
    diff,
    duflo_vogan,
    hasse_covers,
    induced_duflo,
    is_extension,
    load_or_build,
    tau_monotone_violations,
    transitive_closure,
    transpose_dual_violations,
    vch_pair,
    vogan_chain,
)
from tord.tableaux import (
    Tableau,
    enumerate_tableaux,
    parse_tableau,
    taquin_project,
    standardize,
    varphi_grid,
)

T = Tableau.from_rows


def rel3(pairs):
    """Custom reflexive relation on the 4 level-3 tableaux."""
    bits = np.eye(4, dtype=bool)
    for a, b in pairs:
        bits[a, b] = True
    return OrderRelation(3, "custom", bits)


def test_closure_trivia():
    ident = rel3([])
    assert transitive_closure(ident).equals(ident)
    chain = rel3([(0, 1), (1, 2)])
    closed = transitive_closure(chain)
    assert closed.bits[0, 2]
    assert transitive_closure(closed).equals(closed)


def test_closure_rejects_cycles():
    with pytest.raises(ValueError, match="antisymmetry"):
        transitive_closure(rel3([(0, 1), (1, 0)]))


def test_hasse_covers_trivia():
    total = rel3([(a, b) for a in range(4) for b in range(a, 4)])
    cov = hasse_covers(total)
    strict = cov.bits & ~np.eye(4, dtype=bool)
    assert sorted(zip(*np.nonzero(strict))) == [(0, 1), (1, 2), (2, 3)]
    assert transitive_closure(cov).equals(total)


def test_extension_and_diff_trivia():
    small = rel3([(0, 1)])
    big = transitive_closure(rel3([(0, 1), (1, 2)]))
    assert is_extension(small, big)
    assert not is_extension(big, small)
    assert diff(big, big) == []
    entries = diff(small, big)
    assert {(e["t"], e["s"]) for e in entries} == {("1,2;3", "1,3;2"), ("1,2,3", "1,3;2")}
    for e in entries:
        assert set(e) == {"t", "s", "tau_t", "tau_s", "shape_t", "shape_s"}


def test_chain_pair_examples():
    t7 = parse_tableau("1,2,6;3,5;4,7")
    s7 = parse_tableau("1,2,6;3,7;4;5")
    assert chain_pair(t7, s7)
    t6 = parse_tableau("1,3,4;2,6;5")
    s6 = parse_tableau("1,3,6;2,4;5")
    assert not chain_pair(t6, s6)
    assert chain_pair(t6, s6, equality_propagation=False)
    assert chain_pair(t7, t7)
    with pytest.raises(ValueError):
        chain_pair(t7, t6)


def test_chain_relation_matches_pairwise_route():
    for n in range(1, 7):
        rel = chain_relation(n)
        tabs = enumerate_tableaux(n)
        grids = [varphi_grid(t) for t in tabs]
        for a in range(len(tabs)):
            for b in range(len(tabs)):
                assert rel.bits[a, b] == orders._chain_pair_grids(grids[a], grids[b]), (
                    n, tabs[a], tabs[b],
                )


def test_chain_transpose_duality_through_8():
    for n in range(1, 9):
        assert transpose_dual_violations(chain_relation(n)) == 0


def test_weak_order_transpose_duality_through_7():
    for n in range(1, 8):
        assert transpose_dual_violations(induced_duflo(n)) == 0
        # reported for the refinements, never silently fixed
        transpose_dual_violations(duflo_vogan(n)[-1])
        transpose_dual_violations(vogan_chain(n)[-1])


def test_chain_projection_monotone_through_7():
    for n in range(2, 8):
        rel = chain_relation(n).bits
        prev = chain_relation(n - 1).bits
        lvl = orders._level(n)
        assert not (rel & ~prev[np.ix_(lvl.p1, lvl.p1)]).any()
        assert not (rel & ~prev[np.ix_(lvl.p2, lvl.p2)]).any()


def test_induced_duflo_examples():
    for n in range(1, 6):
        assert induced_duflo(n).equals(chain_relation(n))
    d6 = induced_duflo(6)
    assert d6.contains(parse_tableau("1,2,4;3,5,6"), parse_tableau("1,2,4;3,6;5"))
    assert not d6.contains(parse_tableau("1,2,3;4,5,6"), parse_tableau("1,2,5;3,6;4"))
    with pytest.raises(ValueError, match="budget"):
        induced_duflo(11)


def test_duflo_vogan_examples():
    levels = duflo_vogan(6)
    assert levels[5].contains(parse_tableau("1,2,3;4,5,6"), parse_tableau("1,2,5;3,6;4"))
    for n in range(1, 7):
        assert is_extension(induced_duflo(n), levels[n - 1])


def test_insertion_lift_variant_agrees_through_7():
    plain = duflo_vogan(7)
    lifted = duflo_vogan(7, insertion_lifts=True)
    for a, b in zip(plain, lifted):
        assert a.equals(b)


def test_vogan_chain_examples():
    levels = vogan_chain(7)
    t7 = parse_tableau("1,2,6;3,5;4,7")
    s7 = parse_tableau("1,2,6;3,7;4;5")
    assert chain_relation(7).contains(t7, s7)
    assert not levels[6].contains(t7, s7)
    for n in range(1, 8):
        assert duflo_vogan(n)[-1].equals(levels[n - 1])
        assert levels[n - 1].is_transitive()


def test_vch_pair_matches_relation_at_6():
    vch5 = vogan_chain(5)[-1]
    vch6 = vogan_chain(6)[-1]
    tabs = enumerate_tableaux(6)
    for a, t in enumerate(tabs):
        for b, s in enumerate(tabs):
            assert vch_pair(t, s, vch5) == bool(vch6.bits[a, b])


def test_tau_monotonicity():
    for n in range(1, 8):
        assert tau_monotone_violations(induced_duflo(n)) == 0
        assert tau_monotone_violations(duflo_vogan(n)[-1]) == 0
        assert tau_monotone_violations(vogan_chain(n)[-1]) == 0
        chain_relation(n)  # chain is reported, not asserted


def test_order_relation_file_round_trip(tmp_path):
    rel = duflo_vogan(5)[-1]
    blob = rel.to_bytes()
    assert blob[:4] == b"TORD"
    back = OrderRelation.from_bytes(blob)
    assert back.equals(rel) and back.order_id == rel.order_id and back.n == rel.n
    path = os.path.join(tmp_path, "dv_5.tord")
    rel.save(path)
    assert OrderRelation.load(path).equals(rel)


def test_load_or_build_cache_and_corruption(tmp_path, caplog):
    cache = str(tmp_path)
    rel = load_or_build("ch", 4, cache_dir=cache)
    path = orders.cache_path(cache, "ch", 4)
    assert os.path.exists(path)
    orders._MEMO.pop(("ch", 4), None)
    again = load_or_build("ch", 4, cache_dir=cache)
    assert again.equals(rel)
    with open(path, "wb") as fh:
        fh.write(b"garbage")
    orders._MEMO.pop(("ch", 4), None)
    with caplog.at_level(logging.WARNING):
        rebuilt = load_or_build("ch", 4, cache_dir=cache)
    assert rebuilt.equals(rel)
    assert any("rebuilding" in r.message for r in caplog.records)


def test_sweep_independent_of_worker_count():
    import numpy as np

    assert np.array_equal(orders._p_index_sweep(8, threads=1),
                          orders._p_index_sweep(8, threads=2))


def test_insertion_probe_reports_only():
    report = orders.insertion_probe("dv", 6)
    assert report["violations"] == 0
    assert report["lifted_pairs"] == 12 * orders.duflo_vogan(5)[-1].pair_count()


def test_exporters():
    rel = chain_relation(3)
    dot = orders.to_dot(rel)
    assert dot.startswith("digraph") and "->" in dot
    csv = orders.to_csv_edges(rel)
    assert csv.splitlines()[0] == "t,s"
    info = orders.summary(rel)
    assert info == {
        "n": 3,
        "order": "ch",
        "pairs": rel.pair_count(),
        "covers": info["covers"],
        "strict_pairs": rel.pair_count() - 4,
    }
