"""Pruned top-down traversal over the stored leaves."""

from hyghost import elements as el
from hyghost.search import LeafView, split_array, forest_search

from conftest import small_forest, refine_random


def _tree_view(F, K):
    return LeafView(F.tree_leaves[K], F.tree_lids[K], 0, len(F.tree_leaves[K]))


def test_split_array_partitions_by_child(rng):
    F = refine_random(small_forest("hybrid_cube", level=1, P=1), 2, rng)
    L = F.max_level
    for K in range(F.cmesh.num_trees):
        view = _tree_view(F, K)
        root = el.root_element(F.cmesh.shapes[K])
        subs = split_array(view, root, L)
        assert subs[0].lo == view.lo and subs[-1].hi == view.hi
        for C, sv in zip(el.children(root, L), subs):
            for i in range(len(sv)):
                assert el.is_ancestor(C, sv[i], L)


def test_full_search_visits_every_leaf_once(rng):
    F = refine_random(small_forest("tet_cube", level=1, P=3), 1, rng)
    for p in range(F.P):
        seen = []

        def match(K, E, is_leaf, view, ctx, depth):
            if is_leaf:
                seen.append((K, E.key()))
            return True

        stats = forest_search(F, p, match, None, debug=True)
        lo, hi = F.rank_slice(p)
        want = [(K, E.key()) for gi in range(lo, hi)
                for K, E in [F.global_leaf(gi)]]
        assert seen == want
        assert stats.visited_leaves == hi - lo


def test_reject_all_prunes_everything(rng):
    F = refine_random(small_forest("hex_cube", level=2, P=2), 1, rng)
    stats = forest_search(F, 0, lambda *a: False, None)
    assert stats.visited_leaves <= stats.visited <= 2  # at most one per tree
    assert stats.pruned >= 0


def test_depth_zero_root_is_common_ancestor(rng):
    F = small_forest("hex_cube", level=3, P=8)
    depths = []
    forest_search(F, 3, lambda K, E, il, v, c, d: depths.append(d) or False,
                  None)
    # an eighth of a level-3 tree shares a level-0/1 ancestor, never deeper
    assert depths == [0]
