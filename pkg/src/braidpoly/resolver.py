"""Descending and ascending resolving trees of a closed braid.

The descending tree of a word is built by repeatedly travelling the diagram
naturally up to the first ascending crossing and splitting there into a
sign-flipped child and a smoothed child, until every leaf is a descending
braid (whose closure is a trivial link).  The ascending tree swaps the roles.

Each leaf contributes one exactly-computable term, and the whole polynomial is

* descending:  ``a^(1-n-w) * sum (-1)^t' z^t ((a^2-1) z^-1)^(gamma-1)``
* ascending:   ``a^(n-1-w) * sum (-1)^t' z^t ((1-a^-2) z^-1)^(gamma-1)``

over the respective leaf sets, where ``t`` counts smoothed crossings, ``t'``
those smoothed crossings that were negative in the original word, ``gamma``
is the leaf's closure component count, ``n`` the strand count and ``w`` the
writhe of the original word.  Both expressions equal the HOMFLY polynomial of
the closure; computing them independently is the engine's main self-check.

The tree is never materialized: an explicit-stack DFS walks state vectors and
re-runs the natural traversal from scratch at every node.  Descending leaves
satisfy ``gamma - writhe = n`` and ascending leaves ``gamma + writhe = n``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal, Optional

from .braid import (
    FLIPPED,
    KEPT,
    SMOOTHED,
    BraidWord,
    CrossingState,
    ResolvedDiagram,
    natural_traversal,
    writhe,
)
from .polynomial import LaurentPoly2

Mode = Literal["descending", "ascending"]

DESCENDING: Mode = "descending"
ASCENDING: Mode = "ascending"

_STATE_INT = {KEPT: 0, FLIPPED: 1, SMOOTHED: 2}
_INT_STATE = (KEPT, FLIPPED, SMOOTHED)


def _check_mode(mode: str) -> bool:
    if mode == DESCENDING:
        return True
    if mode == ASCENDING:
        return False
    raise ValueError(f"mode must be 'descending' or 'ascending', got {mode!r}")


def _scan(n, gaps, signs, states, adj, want_descending):
    """One natural traversal over integer state codes (0 kept/1 flipped/2 smoothed).

    Returns ``(violation_index, -1)`` at the first crossing breaking the
    requested monotonicity (first visits in traversal-time order), or
    ``(-1, gamma)`` when the diagram already has the requested form.  With
    ``want_descending=None`` no crossing checks run and only gamma is counted.
    """
    seen = 0
    visited = 0
    gamma = 0
    for pivot in range(1, n + 1):
        if (visited >> pivot) & 1:
            continue
        visited |= 1 << pivot
        col = pivot
        while True:
            pos = -1
            while True:
                lst = adj[col]
                k = bisect_right(lst, pos)
                if k == len(lst):
                    break
                i = lst[k]
                st = states[i]
                if st != 2:
                    if want_descending is not None and not (seen >> i) & 1:
                        # first arrival on the under-arm of the live sign
                        # means the crossing is ascending, and vice versa
                        under = (col == gaps[i]) == ((signs[i] > 0) ^ (st == 1))
                        if under == want_descending:
                            return i, -1
                    col = 2 * gaps[i] + 1 - col
                seen |= 1 << i
                pos = i
            if col == pivot:
                break
            visited |= 1 << col
        gamma += 1
    return -1, gamma


@dataclass(frozen=True)
class LeafSummary:
    """Statistics of one resolving-tree leaf.

    ``t`` counts smoothed crossings, ``t_neg`` those that were negative in
    the original word (flips never change ``t_neg``), and ``writhe`` is the
    leaf's own writhe with smoothed crossings excluded.
    """

    states: tuple[CrossingState, ...]
    gamma: int
    t: int
    t_neg: int
    writhe: int

    @property
    def smoothed(self) -> frozenset[int]:
        return frozenset(i for i, st in enumerate(self.states) if st is SMOOTHED)


def first_violation(diagram: ResolvedDiagram, mode: Mode = DESCENDING) -> Optional[int]:
    """Index of the first crossing breaking the requested form, if any.

    Travelling the resolved diagram naturally, the first non-smoothed crossing
    that is ascending (``mode="descending"``) or descending
    (``mode="ascending"``) in the diagram's own return order is reported;
    ``None`` means the diagram already has the requested form.
    """
    want_desc = _check_mode(mode)
    word = diagram.word
    states = tuple(_STATE_INT[s] for s in diagram.states)
    i, _ = _scan(
        word.strands, word.gaps, word.signs, states, word.column_index, want_desc
    )
    return None if i < 0 else i


def split_at(diagram: ResolvedDiagram, i: int) -> tuple[ResolvedDiagram, ResolvedDiagram]:
    """Split at letter ``i``: the flipped child and the smoothed child.

    Flipping toggles kept/flipped; smoothing is terminal, so splitting an
    already-smoothed letter is an error.
    """
    if not 0 <= i < len(diagram.states):
        raise ValueError(f"letter index {i} out of range")
    if diagram.states[i] is SMOOTHED:
        raise ValueError(f"letter {i} is already smoothed and cannot be split")
    toggled = KEPT if diagram.states[i] is FLIPPED else FLIPPED
    return diagram.with_state(i, toggled), diagram.with_state(i, SMOOTHED)


def _dfs_leaves(word: BraidWord, want_descending: bool):
    """Yield raw leaf tuples ``(states, gamma)`` of the requested tree.

    Iterative DFS over integer state vectors; the flipped child is emitted
    before the smoothed child, so the order is deterministic.
    """
    n = word.strands
    gaps = word.gaps
    signs = word.signs
    adj = word.column_index
    stack = [(0,) * len(gaps)]
    while stack:
        states = stack.pop()
        i, gamma = _scan(n, gaps, signs, states, adj, want_descending)
        if i < 0:
            yield states, gamma
            continue
        flipped = list(states)
        flipped[i] = 1 - flipped[i]
        smoothed = list(states)
        smoothed[i] = 2
        stack.append(tuple(smoothed))
        stack.append(tuple(flipped))


def _summary(word: BraidWord, states, gamma: int) -> LeafSummary:
    t = 0
    t_neg = 0
    w = 0
    for st, s in zip(states, word.signs):
        if st == 2:
            t += 1
            if s < 0:
                t_neg += 1
        else:
            w += -s if st == 1 else s
    return LeafSummary(
        states=tuple(_INT_STATE[st] for st in states),
        gamma=gamma,
        t=t,
        t_neg=t_neg,
        writhe=w,
    )


def enumerate_leaves(word: BraidWord, mode: Mode = DESCENDING) -> Iterator[LeafSummary]:
    """Stream every leaf of the descending (or ascending) tree exactly once."""
    want_desc = _check_mode(mode)
    for states, gamma in _dfs_leaves(word, want_desc):
        yield _summary(word, states, gamma)


def leaf_membership_test(
    word: BraidWord,
    states: tuple[CrossingState, ...],
    mode: Mode = DESCENDING,
) -> bool:
    """Decide membership of a resolved diagram in the requested leaf set.

    Travel the candidate naturally and test each letter at its first visit:
    a smoothed letter must be reached on the under-arm of its original
    crossing, a kept or flipped letter on the over-arm of the crossing as it
    stands in the candidate.  Passing all checks is equivalent to being a
    leaf of the descending tree (``mode="ascending"`` swaps both arm tests
    and characterizes ascending-tree leaves).
    """
    want_desc = _check_mode(mode)
    diagram = ResolvedDiagram(word, tuple(states))
    for event in natural_traversal(diagram).events:
        if event.ordinal != 1:
            continue
        arrived_original_under = event.role == "under"
        if event.state is SMOOTHED:
            ok = arrived_original_under == want_desc
        else:
            arrived_live_under = arrived_original_under ^ (event.state is FLIPPED)
            ok = arrived_live_under != want_desc
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# Polynomial assembly
# ---------------------------------------------------------------------------


def _base_powers(strands: int, ascending: bool) -> list[list[tuple[int, int, int]]]:
    """Expansions of ``((a^2-1) z^-1)^k`` or ``((1-a^-2) z^-1)^k`` for k < n.

    Each entry is a term list ``(dz, da, coeff)``; component counts never
    exceed the strand count, so k stays below n.
    """
    powers = []
    for k in range(strands):
        terms = []
        for j in range(k + 1):
            if ascending:
                terms.append((-k, -2 * j, comb(k, j) * (-1) ** j))
            else:
                terms.append((-k, 2 * j, comb(k, j) * (-1) ** (k - j)))
        powers.append(terms)
    return powers


def assemble_tree_sum(
    counts: dict[tuple[int, int], int],
    strands: int,
    total_writhe: int,
    ascending: bool,
) -> LaurentPoly2:
    """Turn signed ``(gamma, t)`` leaf counts into the HOMFLY polynomial.

    ``counts`` maps ``(gamma, t)`` to the signed multiplicity
    ``sum (-1)^t'`` of leaves (or circuit partitions) with those statistics.
    Addition is commutative, so any accumulation order gives identical output.
    """
    powers = _base_powers(strands, ascending)
    prefactor = (strands - 1 - total_writhe) if ascending else (1 - strands - total_writhe)
    acc: dict[tuple[int, int], int] = {}
    for (gamma, t), mult in counts.items():
        if mult == 0:
            continue
        for dz, da, c in powers[gamma - 1]:
            key = (dz + t, da + prefactor)
            v = acc.get(key, 0) + mult * c
            if v:
                acc[key] = v
            else:
                del acc[key]
    return LaurentPoly2(acc)


def _leaf_counts(word: BraidWord, want_descending: bool) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    signs = word.signs
    for states, gamma in _dfs_leaves(word, want_descending):
        t = 0
        neg = False
        for st, s in zip(states, signs):
            if st == 2:
                t += 1
                if s < 0:
                    neg = not neg
        key = (gamma, t)
        counts[key] = counts.get(key, 0) + (-1 if neg else 1)
    return counts


def homfly(word: BraidWord, mode: Mode = DESCENDING) -> LaurentPoly2:
    """The HOMFLY polynomial of the closure, by the requested tree formula.

    The two modes sum over different leaf sets with different edge weights but
    always agree; the empty word on ``n`` strands gives the trivial-link value
    ``((a - a^-1) z^-1)^(n-1)`` and a single positive crossing closes to the
    unknot with value 1.
    """
    want_desc = _check_mode(mode)
    counts = _leaf_counts(word, want_desc)
    return assemble_tree_sum(counts, word.strands, writhe(word), not want_desc)


@dataclass(frozen=True)
class LeafStatistics:
    count: int
    max_gamma: int
    max_t: int
    histogram: dict[tuple[int, int], int]


def leaf_statistics(word: BraidWord, mode: Mode = DESCENDING) -> LeafStatistics:
    """Aggregate counts over the leaf stream (unsigned, unlike the formula)."""
    want_desc = _check_mode(mode)
    hist: dict[tuple[int, int], int] = {}
    signs = word.signs
    for states, gamma in _dfs_leaves(word, want_desc):
        t = sum(1 for st in states if st == 2)
        hist[(gamma, t)] = hist.get((gamma, t), 0) + 1
    if not hist:  # cannot happen: every tree has at least one leaf
        return LeafStatistics(0, 0, 0, {})
    return LeafStatistics(
        count=sum(hist.values()),
        max_gamma=max(g for g, _ in hist),
        max_t=max(t for _, t in hist),
        histogram=hist,
    )
