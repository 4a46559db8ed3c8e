"""Numerical check that generic strictly-upper matrices attached to a tableau
realize its window shape grid as Jordan types.

A tableau picks the involution word with equal insertion and recording
tableaux; the word carves out a coordinate subspace of the strictly upper
triangular matrices; random points of that subspace over a large prime field
should show, window by window, exactly the shapes of the tableau's window
grid.  Genericity is probabilistic, so the harness retries with fresh seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import permutations as perms, tableaux
from .partitions import Partition, conjugate
from .tableaux import Tableau

DEFAULT_PRIME = 1_000_000_007


@dataclass(frozen=True)
class SupportSet:
    """Strictly-upper coordinate positions, 1-based, inside an n x n frame."""

    n: int
    positions: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.positions:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"position {(i, j)} not strictly upper in n={self.n}")


@dataclass(frozen=True)
class MatrixFp:
    """Strictly upper triangular matrix over F_p, entries as residue rows."""

    n: int
    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if j <= i and x:
                    raise ValueError("matrix must be strictly upper triangular")
                if not (0 <= x < self.p):
                    raise ValueError("entries must be reduced residues")


def steinberg_support(w: perms.Word) -> SupportSet:
    """Positions (i, j), i < j, whose values stay in order under w inverse."""
    inv = perms.inverse(w)
    n = len(w)
    pos = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if inv[i - 1] < inv[j - 1]
    )
    return SupportSet(n, pos)


def sample_generic(support: SupportSet, p: int, seed: int) -> MatrixFp:
    """Uniform nonzero residues on the support, zero elsewhere; deterministic
    in (support, p, seed)."""
    rng = random.Random(seed)
    rows = [[0] * support.n for _ in range(support.n)]
    for i, j in sorted(support.positions):
        rows[i - 1][j - 1] = rng.randrange(1, p)
    return MatrixFp(support.n, p, tuple(tuple(r) for r in rows))


def _rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Gaussian elimination over F_p."""
    mat = [list(r) for r in rows]
    m = len(mat)
    rank = 0
    col = 0
    width = len(mat[0]) if mat else 0
    while rank < m and col < width:
        pivot = next((r for r in range(rank, m) if mat[r][col] % p), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def _matmul_mod(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def jordan_type(mat: MatrixFp) -> Partition:
    """Block sizes from the rank sequence of the powers.

    The count of blocks of size >= k is rank(M^{k-1}) - rank(M^k); those
    counts form the conjugate of the block-size partition.
    """
    n, p = mat.n, mat.p
    ranks = [n]
    power = [list(r) for r in mat.entries]
    while ranks[-1] > 0:
        ranks.append(_rank_mod(power, p))
        if ranks[-1] == 0:
            break
        power = _matmul_mod(power, mat.entries, p)
    lam_conj = tuple(
        ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1) if ranks[k] > ranks[k + 1]
    )
    return conjugate(lam_conj)


def _window(mat: MatrixFp, i: int, j: int) -> MatrixFp:
    rows = tuple(tuple(r[i - 1 : j]) for r in mat.entries[i - 1 : j])
    return MatrixFp(j - i + 1, mat.p, rows)


def verify_double_chain(
    t: Tableau,
    trials: int = 5,
    p: int = DEFAULT_PRIME,
    seed: int = 0,
) -> dict:
    """Sample generic matrices for ``t`` until one realizes the full window
    grid; report the first success or the closest failure."""
    w_t = perms.rs_inverse(t, t)
    support = steinberg_support(w_t)
    expected = tableaux.varphi_grid(t)
    report = {
        "tableau": tableaux.format_tableau(t),
        "w_T": perms.format_word(w_t),
        "p": p,
        "trials_used": 0,
        "status": "failed",
        "mismatches": [],
    }
    best: list[dict] | None = None
    for trial in range(trials):
        mat = sample_generic(support, p, seed + trial)
        mismatches = []
        for (i, j), shape in expected.items():
            if i == j:
                continue
            found = jordan_type(_window(mat, i, j))
            if found != shape:
                mismatches.append(
                    {"i": i, "j": j, "expected": list(shape), "found": list(found)}
                )
        if not mismatches:
            report["trials_used"] = trial + 1
            report["status"] = "ok"
            report["mismatches"] = []
            return report
        if best is None or len(mismatches) < len(best):
            best = mismatches
    report["trials_used"] = trials
    report["mismatches"] = best or []
    return report
