"""Standard Young tableaux and the moves the order engine needs.

A tableau is stored as its entry set together with the row index of every
entry (rows are 1-based).  The grid is recoverable: placing the entries in
increasing order, each at the leftmost free cell of its row, is the unique
standard filling with those row indices.  Entries are usually ``1..n`` but
any strictly increasing set works, which is what entry shifting produces.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, validate as _validate_partition

ENUM_LIMIT = 11

DiagramChain = tuple[Partition, ...]
DiagramGrid = dict[tuple[int, int], Partition]


class Tableau:
    """Immutable standard Young tableau on a set of distinct integer entries."""

    __slots__ = ("entries", "row_of_vec", "_shape", "_grid")

    def __init__(self, row_indices: Sequence[int], entries: Sequence[int] | None = None):
        rows = tuple(row_indices)
        if entries is None:
            ents = tuple(range(1, len(rows) + 1))
        else:
            ents = tuple(entries)
        if len(ents) != len(rows) or not rows:
            raise ValueError("entries and row indices must align and be nonempty")
        if any(ents[k] >= ents[k + 1] for k in range(len(ents) - 1)):
            raise ValueError(f"entries must be strictly increasing: {ents}")
        counts: list[int] = []
        for r in rows:
            ri = r - 1
            if ri < 0 or ri > len(counts):
                raise ValueError(f"row vector {rows} leaves a gap at row {r}")
            if ri == len(counts):
                counts.append(0)
            elif ri > 0 and counts[ri] >= counts[ri - 1]:
                raise ValueError(f"row vector {rows} is not standard")
            counts[ri] += 1
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "row_of_vec", rows)
        object.__setattr__(self, "_shape", tuple(counts))
        object.__setattr__(self, "_grid", None)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def lo(self) -> int:
        return self.entries[0]

    @property
    def hi(self) -> int:
        return self.entries[-1]

    @property
    def shape(self) -> Partition:
        return self._shape

    def row_of(self, entry: int) -> int:
        """Row index (1-based) of ``entry``."""
        k = _bisect(self.entries, entry)
        if k < 0:
            raise KeyError(f"{entry} is not an entry of {self}")
        return self.row_of_vec[k]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """The grid, row by row."""
        if self._grid is None:
            grid: list[list[int]] = [[] for _ in range(len(self._shape))]
            for e, r in zip(self.entries, self.row_of_vec):
                grid[r - 1].append(e)
            object.__setattr__(self, "_grid", tuple(tuple(r) for r in grid))
        return self._grid

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        cells = sorted((e, r + 1) for r, row in enumerate(rows) for e in row)
        return cls([r for _, r in cells], [e for e, _ in cells])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Tableau)
            and self.entries == other.entries
            and self.row_of_vec == other.row_of_vec
        )

    def __hash__(self) -> int:
        return hash((self.entries, self.row_of_vec))

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"

    def __str__(self) -> str:
        return format_tableau(self)


def _bisect(seq: Sequence[int], x: int) -> int:
    k = bisect_left(seq, x)
    return k if k < len(seq) and seq[k] == x else -1


def parse_tableau(text: str) -> Tableau:
    """Parse the text form ``"1,2,4;3,5,6"`` (rows joined by ';')."""
    rows = [[int(x) for x in row.split(",")] for row in text.strip().split(";")]
    return Tableau.from_rows(rows)


def format_tableau(t: Tableau) -> str:
    return ";".join(",".join(str(e) for e in row) for row in t.rows())


def tableau_to_json(t: Tableau) -> dict:
    return {"rows": [list(row) for row in t.rows()]}


def tableau_from_json(obj: dict) -> Tableau:
    return Tableau.from_rows(obj["rows"])


def tau(t: Tableau) -> frozenset[int]:
    """Descent set: indices i with i+1 strictly below i.

    For a tableau on 1..n this lands in {1..n-1}; consecutive entries are
    compared even when the entry set has holes (only used on 1..n).
    """
    rows = t.row_of_vec
    ents = t.entries
    return frozenset(
        ents[k] for k in range(len(ents) - 1)
        if ents[k + 1] == ents[k] + 1 and rows[k + 1] > rows[k]
    )


def transpose(t: Tableau) -> Tableau:
    """Interchange rows and columns."""
    cols: dict[int, list[int]] = {}
    for row in t.rows():
        for c, e in enumerate(row):
            cols.setdefault(c, []).append(e)
    return Tableau.from_rows(cols[c] for c in sorted(cols))


def shift_entries(t: Tableau, a: int) -> Tableau:
    """Bump every entry >= ``a`` up by one, freeing the value ``a``."""
    if not (t.lo <= a <= t.hi + 1):
        raise ValueError(f"shift point {a} out of range for entries {t.lo}..{t.hi}")
    return Tableau(t.row_of_vec, tuple(e if e < a else e + 1 for e in t.entries))


def insertion_tableau(word: Sequence[int]) -> Tableau:
    """Row-bump the letters of ``word`` left to right into an empty tableau."""
    grid: list[list[int]] = []
    for a in word:
        _bump(grid, a)
    return Tableau.from_rows(grid)


def _bump(grid: list[list[int]], a: int) -> int:
    """Row-insert ``a``, returning the row index where the new box appeared."""
    for r, row in enumerate(grid):
        k = bisect_left(row, a)
        if k == len(row):
            row.append(a)
            return r
        a, row[k] = row[k], a
    grid.append([a])
    return len(grid) - 1


def row_insert(t: Tableau, a: int) -> Tableau:
    """Row-bumping insertion of a fresh entry ``a`` (one more box)."""
    if _bisect(t.entries, a) >= 0:
        raise ValueError(f"duplicate entry {a}")
    grid = [list(row) for row in t.rows()]
    _bump(grid, a)
    return Tableau.from_rows(grid)


def col_insert(a: int, t: Tableau) -> Tableau:
    """Column insertion of ``a``: row-bump the word ``[a, reading word of t]``."""
    if _bisect(t.entries, a) >= 0:
        raise ValueError(f"duplicate entry {a}")
    return insertion_tableau((a,) + reading_word(t))


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Bottom row to top row, left to right inside each row."""
    out: list[int] = []
    for row in reversed(t.rows()):
        out.extend(row)
    return tuple(out)


def taquin_project(t: Tableau, i: int, j: int) -> Tableau:
    """Restrict ``t`` to the entries i..j.

    Entries above ``j`` are removed largest first; each sits at an outer
    corner, so removal is a plain pop.  Entries below ``i`` are removed
    smallest first: the minimal entry sits at the top-left cell, and the
    vacated hole is slid outward, at each step pulling in the smaller of the
    neighbors to the right and below (entries are distinct, so no ties),
    until it reaches an outer corner.
    """
    if not (t.lo <= i <= j <= t.hi):
        raise ValueError(f"invalid window ({i},{j}) for entries {t.lo}..{t.hi}")
    grid = [list(row) for row in t.rows()]
    for e, r in zip(reversed(t.entries), reversed(t.row_of_vec)):
        if e <= j:
            break
        grid[r - 1].pop()
        if not grid[r - 1]:
            grid.pop()
    for e in t.entries:
        if e >= i:
            break
        assert grid[0][0] == e
        r = c = 0
        while True:
            right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
            below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                grid[r][c] = right
                c += 1
            else:
                grid[r][c] = below
                r += 1
        grid[r].pop()
        if not grid[r]:
            grid.pop()
    if not grid:
        raise ValueError(f"window ({i},{j}) holds no entries")
    return Tableau.from_rows(grid)


def standardize(t: Tableau) -> Tableau:
    """Relabel the entries to 1..n, preserving every row index."""
    return Tableau(t.row_of_vec)


def phi_chain(t: Tableau) -> DiagramChain:
    """Shapes of the truncations of ``t``: full shape down to a single box."""
    counts = list(t.shape)
    chain = [tuple(counts)]
    for r in reversed(t.row_of_vec[1:]):
        counts[r - 1] -= 1
        if counts[r - 1] == 0:
            counts.pop()
        chain.append(tuple(counts))
    return tuple(chain)


def from_chain(chain: Sequence[Partition]) -> Tableau:
    """Rebuild the tableau whose truncation shapes are ``chain`` (inverse of
    :func:`phi_chain`): entry k goes into the unique box added at step k."""
    shapes = [_validate_partition(p) for p in chain]
    shapes.reverse()
    if [sum(p) for p in shapes] != list(range(1, len(shapes) + 1)):
        raise ValueError("chain must grow one box at a time")
    rows = []
    prev: Partition = ()
    for p in shapes:
        grown = [r for r in range(max(len(p), len(prev)))
                 if (p[r] if r < len(p) else 0) != (prev[r] if r < len(prev) else 0)]
        if len(grown) != 1:
            raise ValueError(f"consecutive shapes {prev} -> {p} differ by != 1 box")
        rows.append(grown[0] + 1)
        prev = p
    return Tableau(rows)


def varphi_grid(t: Tableau) -> DiagramGrid:
    """Shapes of every window i..j of ``t`` (including the single-entry ones)."""
    grid: DiagramGrid = {}
    hi = t.hi
    for i in t.entries:
        window = taquin_project(t, i, hi)
        for k, shape in enumerate(phi_chain(window)):
            grid[(i, hi - k)] = shape
    return grid


@lru_cache(maxsize=None)
def enumerate_tableaux(n: int, limit: int = ENUM_LIMIT) -> tuple[Tableau, ...]:
    """All standard tableaux on 1..n, ordered lexicographically by row vector."""
    if not (1 <= n <= limit):
        raise ValueError(f"n={n} outside 1..{limit}")
    out: list[Tableau] = []
    rows = [0] * n

    def grow(k: int, counts: list[int]) -> None:
        if k == n:
            out.append(Tableau(tuple(rows)))
            return
        for ri in range(len(counts) + 1):
            if ri == 0 or (ri < len(counts) and counts[ri] < counts[ri - 1]) \
                    or (ri == len(counts) and counts[ri - 1] >= 1):
                rows[k] = ri + 1
                if ri == len(counts):
                    counts.append(1)
                    grow(k + 1, counts)
                    counts.pop()
                else:
                    counts[ri] += 1
                    grow(k + 1, counts)
                    counts[ri] -= 1

    grow(0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def tableau_index(n: int) -> dict[tuple[int, ...], int]:
    """Row vector -> position in :func:`enumerate_tableaux`."""
    return {t.row_of_vec: k for k, t in enumerate(enumerate_tableaux(n))}


def index_of(t: Tableau) -> int:
    """Canonical index of a tableau on 1..n."""
    if t.lo != 1 or t.entries != tuple(range(1, t.n + 1)):
        raise ValueError("canonical index is defined for tableaux on 1..n")
    return tableau_index(t.n)[t.row_of_vec]


def iter_windows(n: int) -> Iterator[tuple[int, int]]:
    """All (i, j) with 1 <= i <= j <= n."""
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield (i, j)
