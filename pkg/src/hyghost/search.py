"""Recursive top-down forest traversal with subtree pruning.

The traversal descends from the nearest common ancestor of a rank's local
leaves, splitting the (sorted) leaf window among children by binary search
and skipping any subtree for which the match callback returned false.
"""

import bisect
from dataclasses import dataclass, field

from . import elements as el


@dataclass
class SearchStats:
    visited: int = 0         # elements on which the callback ran
    visited_leaves: int = 0  # callbacks with is_leaf set
    pruned: int = 0          # nonempty subtrees skipped by a false verdict


class LeafView:
    """Non-copying window into a tree's ascending leaf array."""

    __slots__ = ("elems", "lids", "lo", "hi")

    def __init__(self, elems, lids, lo, hi):
        self.elems = elems
        self.lids = lids
        self.lo = lo
        self.hi = hi

    def __len__(self):
        return self.hi - self.lo

    def __getitem__(self, i):
        if not 0 <= i < self.hi - self.lo:
            raise IndexError(i)
        return self.elems[self.lo + i]

    def first(self):
        return self.elems[self.lo]

    def last(self):
        return self.elems[self.hi - 1]


def split_array(view, E, max_level=None):
    """Partition a window of descendants of E among E's children.

    Returns n sub-windows whose concatenation is the input window; window i
    holds exactly the leaves lying in child i (found by binary search on
    the max-level SFC index).
    """
    L = el.DEFAULT_MAX_LEVEL if max_level is None else max_level
    n = el.NUM_CHILDREN[E.shape]
    step = n ** (L - E.level - 1)
    base = el.linear_id(E, L)
    out = []
    lo = view.lo
    for i in range(1, n + 1):
        hi = view.hi if i == n else \
            bisect.bisect_left(view.lids, base + i * step, lo, view.hi)
        out.append(LeafView(view.elems, view.lids, lo, hi))
        lo = hi
    return out


def element_recursion(K, E, view, match, ctx, stats, max_level, depth=0,
                      debug=False):
    """Depth-first traversal of E's subtree restricted to the leaf window."""
    stats.visited += 1
    is_leaf = len(view) == 1 and view.first() == E
    if is_leaf:
        stats.visited_leaves += 1
    keep = match(K, E, is_leaf, view, ctx, depth)
    if is_leaf:
        return
    if not keep:
        if len(view):
            stats.pruned += 1
        return
    children_views = split_array(view, E, max_level)
    if debug:
        assert children_views[0].lo == view.lo
        assert children_views[-1].hi == view.hi
    ch = el.children(E, max_level)
    for C, cv in zip(ch, children_views):
        if len(cv):
            element_recursion(K, C, cv, match, ctx, stats, max_level,
                              depth + 1, debug)


def forest_search(F, p, match, ctx, debug=False):
    """Run the pruned traversal over every local tree of rank p.

    match(K, E, is_leaf, view, ctx, depth) -> bool decides descent.
    Returns the instrumentation counters.
    """
    stats = SearchStats()
    for K, lo, hi in F.iter_rank_trees(p):
        view = LeafView(F.tree_leaves[K], F.tree_lids[K], lo, hi)
        E0 = el.nearest_common_ancestor(view.first(), view.last(), F.max_level)
        element_recursion(K, E0, view, match, ctx, stats, F.max_level,
                          debug=debug)
    return stats
