"""Itemset algebra for the bidirectional search.

An itemset is a strictly increasing tuple of vocabulary indices.  The
bottom-up side grows candidates by prefix joins; the top-down side keeps
a :class:`BorderState`: ``mfcs`` is the antichain of largest sets that
could still be frequent given every infrequent set seen so far, and
``mfs`` is the antichain of sets already certified frequent and maximal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Collection, FrozenSet, Iterable

from .errors import MixedSizes

Itemset = tuple[int, ...]


def itemset(items: Iterable[int]) -> Itemset:
    """Normalize an iterable of indices into a sorted duplicate-free tuple."""
    return tuple(sorted(set(items)))


def _is_subset(small: Itemset, big: Itemset) -> bool:
    return set(small) <= set(big)


def _uniform_size(sets: Collection[Itemset], label: str) -> int:
    sizes = {len(s) for s in sets}
    if len(sizes) > 1:
        raise MixedSizes(f"{label} mixes itemset sizes {sorted(sizes)}")
    return sizes.pop() if sizes else 0


def join(frequent_k: Collection[Itemset]) -> set[Itemset]:
    """Merge pairs of k-itemsets sharing their first k-1 items.

    Produces the classic (k+1)-candidate pool; for k = 1 the shared
    prefix is empty, so every pair of items joins.
    """
    size = _uniform_size(frequent_k, "join input")
    if size == 0:
        return set()
    by_prefix: dict[Itemset, list[Itemset]] = {}
    for s in frequent_k:
        by_prefix.setdefault(s[:-1], []).append(s)
    out: set[Itemset] = set()
    for group in by_prefix.values():
        group.sort()
        for a, b in combinations(group, 2):
            out.add(a + (b[-1],))
    return out


def apriori_prune(
    candidates: Collection[Itemset], frequent_k: Collection[Itemset]
) -> set[Itemset]:
    """Drop candidates with any k-subset missing from ``frequent_k``."""
    cand_size = _uniform_size(candidates, "candidates")
    freq_size = _uniform_size(frequent_k, "frequent sets")
    if candidates and frequent_k and cand_size != freq_size + 1:
        raise MixedSizes(
            f"candidates of size {cand_size} cannot be pruned against "
            f"frequent sets of size {freq_size}"
        )
    known = set(frequent_k)
    out: set[Itemset] = set()
    for c in candidates:
        if all(c[:i] + c[i + 1 :] in known for i in range(len(c))):
            out.add(c)
    return out


@dataclass(frozen=True)
class BorderState:
    """The two antichains bounding the unresolved search region."""

    mfcs: FrozenSet[Itemset]
    mfs: FrozenSet[Itemset]


def mfcs_gen(state: BorderState, infrequent: Collection[Itemset]) -> BorderState:
    """Splinter the candidate border around newly found infrequent sets.

    Every border member containing an infrequent set ``s`` is replaced
    by the members minus one item of ``s`` each, so the result is the
    antichain of maximal subsets of the old members that avoid every set
    in ``infrequent``.  Splinters already covered by another member are
    dropped, as is anything that ends up inside a certified maximal
    frequent set — its support is no longer in question.
    """
    members: list[Itemset] = sorted(state.mfcs)
    mfs = state.mfs
    for s in sorted(infrequent):
        s_set = set(s)
        survivors: list[Itemset] = []
        split: list[Itemset] = []
        for m in members:
            (split if s_set <= set(m) else survivors).append(m)
        for m in split:
            for e in s:
                piece = tuple(x for x in m if x != e)
                if not piece:
                    continue
                if any(_is_subset(piece, other) for other in survivors):
                    continue
                if any(_is_subset(piece, f) for f in mfs):
                    continue
                survivors.append(piece)
        members = survivors
    unique = set(members)
    maximal = frozenset(
        m
        for m in unique
        if not any(m != other and _is_subset(m, other) for other in unique)
        and not any(_is_subset(m, f) for f in mfs)
    )
    return BorderState(maximal, mfs)


def recover(
    candidates: Collection[Itemset],
    frequent_k: Collection[Itemset],
    mfs: Collection[Itemset],
) -> set[Itemset]:
    """Re-add join candidates hidden inside certified maximal sets.

    For each frequent k-set lying inside a maximal frequent set, every
    one-item extension drawn from that maximal set (beyond the k-set's
    last item) is restored to the candidate pool.
    """
    out = set(candidates)
    for l in frequent_k:
        l_set = set(l)
        for m in mfs:
            if l_set <= set(m):
                for e in m:
                    if e > l[-1]:
                        out.add(l + (e,))
    return out


def pincer_prune(candidates: Collection[Itemset], state: BorderState) -> set[Itemset]:
    """Keep only candidates whose support is still genuinely unknown.

    A candidate outside every ``mfcs`` member is provably infrequent; a
    candidate inside some ``mfs`` member is provably frequent.  Neither
    needs counting.
    """
    out: set[Itemset] = set()
    for c in candidates:
        if not any(_is_subset(c, m) for m in state.mfcs):
            continue
        if any(_is_subset(c, f) for f in state.mfs):
            continue
        out.add(c)
    return out
