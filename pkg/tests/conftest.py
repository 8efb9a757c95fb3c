import random

import pytest

from hyghost import elements as el
from hyghost import forest as ft
from hyghost.cmesh import builtin_cmesh, FACE_CORNERS


@pytest.fixture
def rng():
    return random.Random(1234)


def small_forest(name="hex_cube", level=2, P=3, max_level=None):
    return ft.new_uniform(builtin_cmesh(name), level, P, max_level)


def refine_random(F, rounds, rng, frac=0.3):
    """Refine a random subset of leaves `rounds` times (unbalanced in general)."""
    for _ in range(rounds):
        marks = set()
        for K in range(F.cmesh.num_trees):
            for E in F.tree_leaves[K]:
                if rng.random() < frac:
                    marks.add((K, E.key()))
        ft.adapt(F, lambda K, E: 1 if (K, E.key()) in marks else 0)
    ft.repartition(F)
    return F


# -- geometric face-ownership brute force (shared by forest + acceptance) ----

def face_plane(pts):
    """(normal, offset) of the plane/line/point spanned by lattice points."""
    p0 = pts[0]
    if len(pts) == 1:
        return (1, 0, 0), p0[0]
    if len(pts) == 2:
        d = (pts[1][0] - p0[0], pts[1][1] - p0[1])
        n = (d[1], -d[0], 0)
    else:
        u = tuple(pts[1][i] - p0[i] for i in range(3))
        v = tuple(pts[2][i] - p0[i] for i in range(3))
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
             u[0] * v[1] - u[1] * v[0])
    return n, sum(n[i] * p0[i] for i in range(3))


def on_plane(plane, v):
    n, off = plane
    return sum(n[i] * v[i] for i in range(3)) == off


def face_owner_set(F, K, E, f):
    """Owners of all leaf descendants of E with a full sub-face on face f,
    found by scanning the tree geometrically (no SFC shortcuts)."""
    L = F.max_level
    verts = el.vertices(E, L)
    plane = face_plane([verts[i] for i in FACE_CORNERS[E.shape][f]])
    lo, hi = F.tree_starts[K], F.tree_starts[K] + len(F.tree_leaves[K])
    owners = set()
    for gi in range(lo, hi):
        _, D = F.global_leaf(gi)
        if not el.is_ancestor(E, D, L):
            continue
        dverts = el.vertices(D, L)
        for g in range(el.num_faces(D)):
            if all(on_plane(plane, dverts[j])
                   for j in FACE_CORNERS[D.shape][g]):
                owners.add(F.leaf_owner_by_index(gi))
                break
    return owners
