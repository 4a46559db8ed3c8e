"""Integer partitions and the diagram order driving every tableau comparison.

A partition is a plain tuple of weakly decreasing positive ints.  The order
used throughout the package is oriented so that the one-row shape ``(n,)`` is
the least element and the one-column shape ``(1,)*n`` the greatest:
``shape_geq(lam, mu)`` holds when ``lam`` dominates ``mu`` prefix-sum-wise,
and we then consider ``lam`` to sit *below* ``mu``.  A bigger element means a
flatter diagram, i.e. a more degenerate nilpotent matrix.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def validate(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a tuple, raising ValueError if it is no partition."""
    p = tuple(int(x) for x in parts)
    for k, x in enumerate(p):
        if x < 1:
            raise ValueError(f"parts must be positive: {p}")
        if k and p[k - 1] < x:
            raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def shape_geq(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of ``lam`` is >= the matching one of ``mu``.

    Both arguments must partition the same total (missing parts count as 0);
    otherwise the shapes are incomparable and we raise.  ``shape_geq(lam, mu)``
    places ``lam`` weakly below ``mu`` in the diagram order.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"incomparable totals: {sum(lam)} != {sum(mu)}")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def shape_gt(lam: Partition, mu: Partition) -> bool:
    """Strict version of :func:`shape_geq`."""
    return lam != mu and shape_geq(lam, mu)


def conjugate(lam: Partition) -> Partition:
    """Column-lengths partition (transpose of the diagram)."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def partition_covers(lam: Partition) -> frozenset[Partition]:
    """Immediate successors of ``lam`` in the diagram order.

    Two moves produce them: (i) if row i is at least two longer than row i+1,
    drop one box from row i onto row i+1; (ii) if rows i+1..i+k-1 all have
    length ``lam[i]-1`` and row i+k has length ``lam[i]-2`` (k >= 2, one
    virtual empty row allowed at the bottom), drop a box from row i straight
    to row i+k.  Both produce partitions strictly above ``lam`` with nothing
    in between; the brute-force Hasse reduction test pins completeness.
    """
    lam = validate(lam)
    padded = lam + (0,)
    out = set()
    for i in range(len(lam)):
        if padded[i] >= padded[i + 1] + 2:
            mu = list(padded)
            mu[i] -= 1
            mu[i + 1] += 1
            out.add(tuple(x for x in mu if x))
        v = lam[i]
        m = i + 1
        while m < len(padded) and padded[m] == v - 1:
            m += 1
        if m - i >= 2 and m < len(padded) and padded[m] == v - 2:
            mu = list(padded)
            mu[i] -= 1
            mu[m] += 1
            out.add(tuple(x for x in mu if x))
    return frozenset(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n,)`` first."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(total: int, cap: int) -> Iterator[Partition]:
        if total == 0:
            yield ()
            return
        for head in range(min(total, cap), 0, -1):
            for tail in gen(total - head, head):
                yield (head,) + tail

    return tuple(gen(n, n))


def parse_partition(text: str) -> Partition:
    """Parse the text form ``"3,2,1"``."""
    return validate(int(x) for x in text.strip().split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)
