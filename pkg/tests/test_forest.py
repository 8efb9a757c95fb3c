"""Distributed leaf storage: owners, adaptation, partitioning."""

import random

import pytest

from hyghost import elements as el
from hyghost import forest as ft
from hyghost.cmesh import builtin_cmesh

from conftest import small_forest, refine_random, face_owner_set


def test_uniform_counts():
    F = small_forest("tet_cube", level=2, P=4)
    assert F.num_leaves == 6 * 8 ** 2
    assert sum(len(lv) for lv in F.tree_leaves) == F.num_leaves
    covered = [F.rank_slice(p) for p in range(F.P)]
    assert covered[0][0] == 0 and covered[-1][1] == F.num_leaves
    for (a, b), (c, d) in zip(covered, covered[1:]):
        assert b == c and b - a >= d - c - 1  # even split, larger ranks first


def test_leaves_are_sfc_sorted():
    F = small_forest("hybrid_cube", level=2, P=1)
    for K in range(F.cmesh.num_trees):
        lids = [el.linear_id(E, F.max_level) for E in F.tree_leaves[K]]
        assert lids == sorted(lids)
        assert F.tree_lids[K] == lids


def test_owner_of_agrees_with_global_index(rng):
    F = refine_random(small_forest("hex_cube", level=2, P=5), 2, rng)
    for gi in range(F.num_leaves):
        K, E = F.global_leaf(gi)
        assert F.owner_of(K, E) == F.leaf_owner_by_index(gi)


def test_owner_of_nonleaf_descends_to_first_leaf(rng):
    F = refine_random(small_forest("tet_cube", level=1, P=3), 2, rng)
    for K in range(F.cmesh.num_trees):
        E = F.tree_leaves[K][0]
        while E.level > 0:
            E = el.parent(E, F.max_level)
            first = el.first_descendant(E, F.max_level, F.max_level)
            assert F.owner_of(K, E) == F.owner_of(K, first)


def test_adapt_refine_then_coarsen_roundtrip(rng):
    F = small_forest("hybrid_cube", level=1, P=2)
    before = [[E.key() for E in lv] for lv in F.tree_leaves]
    marks = {(K, E.key()) for K in range(F.cmesh.num_trees)
             for E in F.tree_leaves[K] if rng.random() < 0.5}
    ft.adapt(F, lambda K, E: 1 if (K, E.key()) in marks else 0)
    assert F.num_leaves > sum(len(b) for b in before)
    # coarsening everything deeper than the base level undoes the sweep
    ft.adapt(F, lambda K, E: -1 if E.level > 1 else 0)
    after = [[E.key() for E in lv] for lv in F.tree_leaves]
    assert after == before


def test_coarsen_needs_complete_local_family():
    F = small_forest("hex_cube", level=1, P=8)  # one leaf per rank
    n = F.num_leaves
    ft.adapt(F, lambda K, E: -1)
    assert F.num_leaves == n  # families straddle rank boundaries


def test_repartition_restores_even_split(rng):
    F = refine_random(small_forest("hex_cube", level=2, P=7), 1, rng)
    sizes = [F.rank_slice(p)[1] - F.rank_slice(p)[0] for p in range(F.P)]
    assert max(sizes) - min(sizes) <= 1


def test_balance_naive(rng):
    F = small_forest("hex_cube", level=1, P=2)
    # refine the origin leaf, then its innermost child: the level-3 leaves
    # touch level-1 neighbors across the 1/4 planes, a 2-level jump
    for gi in (0, 7):
        K0, E0 = F.global_leaf(gi)
        ft.adapt(F, lambda K, E: 1 if (K, E) == (K0, E0) else 0)
    assert not ft.is_balanced(F)
    ft.balance_naive(F)
    assert ft.is_balanced(F)


def test_markers_with_empty_ranks():
    F = small_forest("quad_unit", level=1, P=16)  # only 4 leaves
    for gi in range(F.num_leaves):
        K, E = F.global_leaf(gi)
        assert F.owner_of(K, E) == F.leaf_owner_by_index(gi)
    sizes = [F.rank_slice(p)[1] - F.rank_slice(p)[0] for p in range(16)]
    assert sum(sizes) == 4 and max(sizes) == 1


def test_owners_at_face_brute_force_small(rng):
    F = refine_random(small_forest("tet_cube", level=1, P=5), 2, rng)
    L = F.max_level
    for _ in range(50):
        gi = rng.randrange(F.num_leaves)
        K, E = F.global_leaf(gi)
        for _ in range(rng.randrange(0, E.level + 1)):
            E = el.parent(E, L)
        f = rng.randrange(el.num_faces(E))
        got = set(F.owners_at_face(K, E, f, 0, F.P - 1))
        assert got == face_owner_set(F, K, E, f)


def test_forest_dump_format(tmp_path):
    F = small_forest("tri_unit", level=1, P=1)
    out = tmp_path / "f.txt"
    with open(out, "w") as fh:
        F.dump(fh)
    lines = out.read_text().splitlines()
    assert len(lines) == F.num_leaves
    assert all(ln.startswith("leaf ") and len(ln.split()) == 7 for ln in lines)
