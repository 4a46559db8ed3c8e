"""Acceptance gate: one test per catalog claim, each printing its pass line.

The full level-10 sweep comparison only runs with TORD_HEAVY=1, mirroring the
claims runbook's --include-heavy flag; everything else runs unconditionally.
"""

import os
import time

import pytest

from tord import claims

HEAVY = os.environ.get("TORD_HEAVY") == "1"
THREADS = os.cpu_count()


def run_claim(claim_id, **ctx_kwargs):
    ctx = claims.ClaimContext(threads=THREADS, **ctx_kwargs)
    fn = dict((cid, f) for cid, _, f in claims.CLAIMS)[claim_id]
    start = time.perf_counter()
    ok, details = fn(ctx)
    elapsed = time.perf_counter() - start
    status = "skip" if ok is None else ("pass" if ok else "FAIL")
    print(f"{claim_id}: {status} ({elapsed:.2f}s) {details}")
    assert ok is not None, f"{claim_id} skipped unexpectedly: {details}"
    assert ok, f"{claim_id}: {details}"


def test_criterion_01_small_levels_coincide():
    start = time.perf_counter()
    run_claim("small-n-coincidence", max_n=5)
    assert time.perf_counter() - start < 60


def test_criterion_02_weak_order_breakage_at_6():
    run_claim("weak-order-breakage-n6", max_n=6)


def test_criterion_03_chain_equality_clause_at_6():
    run_claim("chain-equality-clause-n6", max_n=6)


def test_criterion_04_chain_insertion_breakage_at_7():
    run_claim("chain-insertion-breakage-n7", max_n=7)


def test_criterion_05_dv_vch_coincide_through_9():
    start = time.perf_counter()
    run_claim("dv-vch-coincide-n9", max_n=9)
    assert time.perf_counter() - start < 900


def test_criterion_06_divergence_at_10_targeted():
    run_claim("divergence-n10", max_n=10, include_heavy=False)


@pytest.mark.heavy
@pytest.mark.skipif(not HEAVY, reason="full level-10 sweep: set TORD_HEAVY=1")
def test_criterion_06_divergence_at_10_full_sweep():
    # Faithful to the stated criterion: the dv/vch gap must be exactly the
    # witness pair's simultaneous orbit.  The computed gap is that orbit plus
    # one disjoint companion orbit of insertion-lifted pairs, so this records
    # an honest failure; the claim details describe the structure.
    run_claim("divergence-n10", max_n=10, include_heavy=True)


def test_criterion_07_rs_identities_through_7():
    run_claim("rs-window-identities", max_n=7)


def test_criterion_08_wall_crossing_compat_through_7():
    run_claim("wall-crossing-compat", max_n=7)


def test_criterion_09_kl_cells_through_6():
    start = time.perf_counter()
    run_claim("kl-cells", max_n=6)
    assert time.perf_counter() - start < 120


def test_criterion_10_generic_double_chains_through_6():
    run_claim("generic-double-chains", max_n=6)


def test_criterion_11_cover_phenomena_through_8():
    run_claim("cover-phenomena", max_n=8)


def test_criterion_12_counts_and_involutions():
    run_claim("tableau-counts", max_n=8)
