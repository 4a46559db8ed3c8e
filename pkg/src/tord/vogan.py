"""The wall-crossing involution between adjacent descent domains.

For adjacent simple roots (alpha, beta) the domain D_{alpha,beta} holds the
tableaux (or words) whose descent set contains beta but not alpha; the
operator swaps two entries and lands in D_{beta,alpha}, where the reversed
operator undoes it.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from . import permutations as perms
from .permutations import Word
from .tableaux import Tableau, tau, transpose


class AdjacentPair(NamedTuple):
    """The ordered root pair (alpha_i, alpha_{i+1}) or, reversed, (alpha_{i+1}, alpha_i)."""

    i: int
    rev: bool = False

    @property
    def alpha(self) -> int:
        return self.i + 1 if self.rev else self.i

    @property
    def beta(self) -> int:
        return self.i if self.rev else self.i + 1

    def reversed(self) -> "AdjacentPair":
        return AdjacentPair(self.i, not self.rev)

    def __str__(self) -> str:
        return f"{self.i},{'-' if self.rev else '+'}"

    @classmethod
    def parse(cls, text: str) -> "AdjacentPair":
        i, _, d = text.partition(",")
        if d not in ("+", "-"):
            raise ValueError(f"direction must be '+' or '-': {text!r}")
        return cls(int(i), d == "-")


def adjacent_pairs(n: int) -> list[AdjacentPair]:
    """All 2(n-2) ordered adjacent pairs available at level n."""
    return [AdjacentPair(i, rev) for i in range(1, n - 1) for rev in (False, True)]


def _check_range(pair: AdjacentPair, n: int) -> None:
    if not (1 <= pair.i <= n - 2):
        raise ValueError(f"pair {pair} out of range for n={n}")


def in_domain(t: Tableau, pair: AdjacentPair) -> bool:
    """alpha not a descent, beta a descent."""
    _check_range(pair, t.n)
    ts = tau(t)
    return pair.alpha not in ts and pair.beta in ts


def in_domain_word(w: Word, pair: AdjacentPair) -> bool:
    _check_range(pair, len(w))
    ts = perms.tau_word(w)
    return pair.alpha not in ts and pair.beta in ts


def t_ab_tableau(t: Tableau, pair: AdjacentPair) -> Tableau:
    """Swap two of the entries i, i+1, i+2, moving the tableau to the
    reversed domain.

    Writing r(.) for row indices: in the forward direction (alpha_i first)
    the swap is (i+1, i+2) when r(i) < r(i+2) and (i, i+1) otherwise; the
    reversed direction inverts that map, which works out to the same two
    swaps selected by r(i) >= r(i+2) instead.
    """
    if not in_domain(t, pair):
        raise ValueError(f"{t} is not in the domain of {pair}")
    i = pair.i
    r_i, r_k = t.row_of(i), t.row_of(i + 2)
    swap_high = (r_i < r_k) if not pair.rev else (r_i >= r_k)
    u, v = (i + 1, i + 2) if swap_high else (i, i + 1)
    rows = list(t.row_of_vec)
    ku, kv = u - t.lo, v - t.lo
    rows[ku], rows[kv] = rows[kv], rows[ku]
    return Tableau(rows, t.entries)


def t_ab_word(w: Word, pair: AdjacentPair) -> Word:
    """Left-multiply by s_alpha, falling back to s_beta when the first
    product fails to land in the reversed domain."""
    if not in_domain_word(w, pair):
        raise ValueError(f"{w} is not in the domain of {pair}")
    cand = _swap_values(w, pair.alpha)
    if pair.beta not in perms.tau_word(cand):
        return cand
    return _swap_values(w, pair.beta)


def _swap_values(w: Word, k: int) -> Word:
    return tuple(k + 1 if a == k else k if a == k + 1 else a for a in w)


def _t_ab_word_pattern(w: Word, pair: AdjacentPair) -> Word:
    """Pattern-matching route to the same word, kept as a cross-check.

    Forward direction: the subword on i, i+1, i+2 reads [i, i+2, i+1] or
    [i+2, i, i+1]; the first becomes [i+1, i+2, i], the second [i+1, i, i+2].
    The reversed direction is the inverse relabelling.
    """
    if not in_domain_word(w, pair):
        raise ValueError(f"{w} is not in the domain of {pair}")
    i = pair.i
    sub = tuple(a for a in w if i <= a <= i + 2)
    if not pair.rev:
        table = {(i, i + 2, i + 1): (i + 1, i + 2, i), (i + 2, i, i + 1): (i + 1, i, i + 2)}
    else:
        table = {(i + 1, i + 2, i): (i, i + 2, i + 1), (i + 1, i, i + 2): (i + 2, i, i + 1)}
    image = table[sub]
    repl = dict(zip(sub, image))
    return tuple(repl.get(a, a) for a in w)


def t_ab_reachable(
    pairs: Iterable[tuple[Tableau, Tableau]], include_transpose: bool = False
) -> frozenset[tuple[Tableau, Tableau]]:
    """Close a set of tableau pairs under simultaneous wall-crossing steps
    (both components must share a domain), optionally also under the
    order-reversing transpose (T, S) -> (S^t, T^t)."""
    seen = set(tuple(p) for p in pairs)
    frontier = list(seen)
    if not frontier:
        return frozenset()
    n = frontier[0][0].n
    moves = adjacent_pairs(n)
    while frontier:
        t, s = frontier.pop()
        images = []
        for pair in moves:
            if in_domain(t, pair) and in_domain(s, pair):
                images.append((t_ab_tableau(t, pair), t_ab_tableau(s, pair)))
        if include_transpose:
            images.append((transpose(s), transpose(t)))
        for img in images:
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return frozenset(seen)
