"""Words of the symmetric group and the two-way row-bumping correspondence.

A word is a tuple ``(a_1, ..., a_n)`` meaning ``w(i) = a_i``.  Everything is
1-based to match the tableau entries.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import permutations as _permutations
from typing import Iterator, Sequence

from .tableaux import Tableau

Word = tuple[int, ...]


def validate_word(letters: Sequence[int]) -> Word:
    w = tuple(int(x) for x in letters)
    if sorted(w) != list(range(min(w), min(w) + len(w))):
        raise ValueError(f"not a permutation of a contiguous range: {w}")
    return w


def parse_word(text: str) -> Word:
    return validate_word(int(x) for x in text.strip().strip("[]").split(","))


def format_word(w: Word) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def inverse(w: Word) -> Word:
    lo = min(w)
    inv = [0] * len(w)
    for pos, a in enumerate(w):
        inv[a - lo] = pos + lo
    return tuple(inv)


def longest_word(n: int) -> Word:
    return tuple(range(n, 0, -1))


def all_words(n: int) -> Iterator[Word]:
    """S_n in lexicographic order."""
    return _permutations(range(1, n + 1))


def rs(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-bumping correspondence: ``w`` -> (insertion tableau, recording tableau).

    P holds the letters of ``w``; Q is standard on 1..n and records where each
    new box appeared.
    """
    p_grid: list[list[int]] = []
    q_grid: list[list[int]] = []
    for step, a in enumerate(w, start=1):
        r = _bump_row(p_grid, a)
        if r == len(q_grid):
            q_grid.append([step])
        else:
            q_grid[r].append(step)
    return Tableau.from_rows(p_grid), Tableau.from_rows(q_grid)


def _bump_row(grid: list[list[int]], a: int) -> int:
    for r, row in enumerate(grid):
        k = bisect_left(row, a)
        if k == len(row):
            row.append(a)
            return r
        a, row[k] = row[k], a
    grid.append([a])
    return len(grid) - 1


def rs_inverse(p: Tableau, q: Tableau) -> Word:
    """The unique word with insertion tableau ``p`` and recording tableau ``q``."""
    if p.shape != q.shape:
        raise ValueError(f"shape mismatch: {p.shape} != {q.shape}")
    grid = [list(row) for row in p.rows()]
    order = sorted(((e, q.row_of(e)) for e in q.entries), reverse=True)
    out: list[int] = []
    for _, r in order:
        a = grid[r - 1].pop()
        if not grid[r - 1]:
            grid.pop()
        for row in reversed(grid[: r - 1]):
            k = bisect_left(row, a) - 1
            a, row[k] = row[k], a
        out.append(a)
    out.reverse()
    return tuple(out)


def tau_word(w: Word) -> frozenset[int]:
    """Descents by value: i such that i appears to the right of i+1."""
    inv = inverse(w)
    lo = min(w)
    return frozenset(
        i for i in range(lo, lo + len(w) - 1) if inv[i - lo] > inv[i - lo + 1]
    )


def duflo_leq(w: Word, y: Word) -> bool:
    """Inversion-set containment: every inversion of ``w`` is one of ``y``."""
    if len(w) != len(y):
        raise ValueError(f"size mismatch: {len(w)} != {len(y)}")
    wi, yi = inverse(w), inverse(y)
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if wi[i] > wi[j] and yi[i] <= yi[j]:
                return False
    return True


def length(w: Word) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_cover_successors(w: Word) -> frozenset[Word]:
    """All w·s_i with one more inversion (swap an ascent of the word)."""
    out = []
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            out.append(tuple(v))
    return frozenset(out)


def project_word(w: Word, i: int, j: int) -> Word:
    """Subword on the letters i..j, a word of the symmetric group on i..j."""
    if not (min(w) <= i <= j <= max(w)):
        raise ValueError(f"invalid window ({i},{j})")
    return tuple(a for a in w if i <= a <= j)
