"""Element kernel round trips and ordering invariants."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from hyghost import elements as el
from hyghost import _tables as tb

L = 10  # small max level keeps the lattice coordinates readable
SHAPES = (el.LINE, el.TRI, el.QUAD, el.TET, el.HEX, el.PRISM)


def random_element(rng, shape, level=None):
    """Uniform random element: descend from the root by random children."""
    if level is None:
        level = rng.randrange(0, 6)
    E = el.root_element(shape)
    for _ in range(level):
        E = rng.choice(el.children(E, L))
    return E


@pytest.mark.parametrize("shape", SHAPES)
def test_parent_child_roundtrip(shape):
    rng = random.Random(7)
    for _ in range(200):
        E = random_element(rng, shape, level=rng.randrange(0, 5))
        for i, C in enumerate(el.children(E, L)):
            assert el.parent(C, L) == E
            assert el.child_id(C, L) == i
            assert el.is_inside_root(C, L)


@pytest.mark.parametrize("shape", SHAPES)
def test_linear_id_matches_dfs_order(shape):
    order = []

    def dfs(E, depth):
        if depth == 0:
            order.append(E)
            return
        for C in el.children(E, L):
            dfs(C, depth - 1)

    dfs(el.root_element(shape), 3)
    ids = [el.linear_id(E, L) for E in order]
    assert ids == sorted(ids)
    step = el.NUM_CHILDREN[shape] ** (L - 3)
    assert ids == [i * step for i in range(len(order))]


@pytest.mark.parametrize("shape", SHAPES)
def test_descendants_closed_form(shape):
    rng = random.Random(11)
    for _ in range(100):
        E = random_element(rng, shape, level=rng.randrange(0, 4))
        at = rng.randrange(E.level, E.level + 3)
        D = E
        while D.level < at:
            D = el.children(D, L)[0]
        assert el.first_descendant(E, at, L) == D
        D = E
        while D.level < at:
            D = el.children(D, L)[-1]
        assert el.last_descendant(E, at, L) == D


@pytest.mark.parametrize("shape", SHAPES)
def test_face_descendants_brute_force(shape):
    rng = random.Random(13)
    for _ in range(60):
        E = random_element(rng, shape, level=rng.randrange(0, 3))
        at = E.level + rng.randrange(1, 3)
        for f in range(el.num_faces(E)):
            touch = [E]
            for _ in range(at - E.level):
                touch = [el.children(P, L)[i] for P in touch
                         for i in el.children_at_face(P, f, L)]
            ids = [el.linear_id(D, L) for D in touch]
            assert el.first_face_descendant(E, f, at, L) == touch[ids.index(min(ids))]
            assert el.last_face_descendant(E, f, at, L) == touch[ids.index(max(ids))]


@pytest.mark.parametrize("shape", SHAPES)
def test_children_at_face_are_the_face_touching_children(shape):
    """children_at_face lists exactly the children owning a sub-face of f,
    and child_face maps them back to the matching child face index."""
    rng = random.Random(17)
    for _ in range(40):
        E = random_element(rng, shape, level=rng.randrange(0, 4))
        verts = el.vertices(E, L)
        for f in range(el.num_faces(E)):
            from hyghost.cmesh import FACE_CORNERS
            plane = _face_plane([verts[i] for i in FACE_CORNERS[E.shape][f]])
            on_face = {}
            for i, C in enumerate(el.children(E, L)):
                cf = [g for g in range(el.num_faces(C))
                      if all(_on_plane(plane, v) for v in
                             [el.vertices(C, L)[j]
                              for j in FACE_CORNERS[C.shape][g]])]
                if cf:
                    on_face[i] = cf
            ids = list(el.children_at_face(E, f, L))
            assert sorted(ids) == sorted(on_face)
            for pos, i in enumerate(ids):
                assert el.child_face(E, pos, f) in on_face[i]


def _face_plane(pts):
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


def _on_plane(plane, v):
    n, off = plane
    return sum(n[i] * v[i] for i in range(3)) == off


@pytest.mark.parametrize("shape", SHAPES)
def test_inner_face_neighbor_involution(shape):
    rng = random.Random(19)
    for _ in range(200):
        E = random_element(rng, shape)
        for f in range(el.num_faces(E)):
            if not el.neighbor_is_inside_root(E, f, L):
                continue
            N, dual = el.face_neighbor_inside(E, f, L)
            assert el.is_inside_root(N, L)
            back, f_back = el.face_neighbor_inside(N, dual, L)
            assert back == E and f_back == f


@pytest.mark.parametrize("fshape", (el.LINE, el.QUAD, el.TRI))
def test_transform_inverse_undoes_transform(fshape):
    rng = random.Random(23)
    if fshape == el.LINE:
        for _ in range(50):
            F = random_element(rng, fshape)
            for o in (0, 1):
                assert el.transform_face(el.transform_face(F, o, 1, L),
                                         o, 1, L) == F
        return
    inv = tb.TRANSFORM_INVERSE["quad" if fshape == el.QUAD else "tri"]
    for _ in range(50):
        F = random_element(rng, fshape)
        for (o, s), o_inv in inv.items():
            G = el.transform_face(F, o, s, L)
            assert el.transform_face(G, o_inv, s, L) == F


@pytest.mark.parametrize("shape", (el.QUAD, el.HEX, el.TRI, el.TET, el.PRISM))
def test_boundary_then_extrude_is_identity(shape):
    rng = random.Random(29)
    for _ in range(150):
        E = random_element(rng, shape)
        for f in range(el.num_faces(E)):
            if el.neighbor_is_inside_root(E, f, L):
                continue
            g = el.tree_face(E, f, L)
            B = el.boundary_face(E, f, L)
            back, dual = el.extrude_face(B, shape, g, L)
            assert back == E and dual == f


@given(st.integers(0, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_ancestor_iff_id_range_containment(level, data):
    shape = data.draw(st.sampled_from(SHAPES))
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    A = random_element(rng, shape, level)
    B = random_element(rng, shape, data.draw(st.integers(0, 5)))
    lo_a, hi_a = el.descendant_id_range(A, L)
    lo_b, hi_b = el.descendant_id_range(B, L)
    contained = lo_a <= lo_b and hi_b <= hi_a and A.level <= B.level
    assert el.is_ancestor(A, B, L) == contained
    nca = el.nearest_common_ancestor(A, B, L)
    assert el.is_ancestor(nca, A, L) and el.is_ancestor(nca, B, L)
    if nca.level < min(A.level, B.level):
        # no deeper common ancestor: the children of nca separate A and B
        kids = [C for C in el.children(nca, L)
                if el.is_ancestor(C, A, L) and el.is_ancestor(C, B, L)]
        assert not kids


def test_max_level_env_override(monkeypatch):
    import importlib
    monkeypatch.setenv("HYGHOST_LMAX", "12")
    mod = importlib.reload(el)
    try:
        assert mod.DEFAULT_MAX_LEVEL == 12
    finally:
        monkeypatch.delenv("HYGHOST_LMAX")
        importlib.reload(el)
