#!/usr/bin/env python3
"""Derive the simplex/prism refinement lookup tables from reference geometry.

All combinatorial tables used by the element kernels (child placement,
parent types, within-tree face neighbors, children touching a face,
root-face identification, boundary projections, extrusions, and the
corner-permutation signs of tree-to-tree face connections) are computed
here by brute-force geometric matching on exact integer coordinates.

Running this script regenerates ``src/hyghost/_tables.py``.  The test
suite re-runs the derivation and compares against the frozen module, so
the generated file must be committed.

Conventions
-----------
Cube corners c_0..c_7 are numbered in zyx bit order: c_i = (i&1, i>>1&1, i>>2&1).
The six reference tetrahedra all share the c_0--c_7 diagonal.  A tet of
type ``t`` with anchor ``a`` and edge length ``h`` has vertices

    v0 = a,   v1 = v0 + h*e_i,   v2 = v1 + h*e_j,   v3 = a + (h,h,h)

with i = t//2 and j = (i+2)%3 for even t, (i+1)%3 for odd t.  Triangles
are the 2D analogue (type 0: lower-right, type 1: upper-left).  Face k
of a simplex is the face opposite vertex k.
"""

import sys
from fractions import Fraction
from itertools import permutations, product
from math import gcd

E3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(s, a):
    return tuple(s * x for x in a)


def tri_verts(t, a, h):
    x, y = a
    if t == 0:
        return [(x, y), (x + h, y), (x + h, y + h)]
    return [(x, y), (x, y + h), (x + h, y + h)]


def tet_verts(t, a, h):
    ei = t // 2
    ej = (ei + 2) % 3 if t % 2 == 0 else (ei + 1) % 3
    v0 = a
    v1 = vadd(v0, vscale(h, E3[ei]))
    v2 = vadd(v1, vscale(h, E3[ej]))
    v3 = vadd(a, (h, h, h))
    return [v0, v1, v2, v3]


def simplex_verts(dim, t, a, h):
    return tri_verts(t, a, h) if dim == 2 else tet_verts(t, a, h)


def det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def signed_vol(verts):
    if len(verts) == 3:
        return det2(vsub(verts[1], verts[0]), vsub(verts[2], verts[0]))
    return det3(vsub(verts[1], verts[0]), vsub(verts[2], verts[0]),
                vsub(verts[3], verts[0]))


def point_in_simplex(p, verts):
    """Inclusive containment test via same-sign sub-volumes."""
    n = len(verts)
    total = signed_vol(verts)
    ref = 1 if total > 0 else -1
    for i in range(n):
        sub = list(verts)
        sub[i] = p
        s = signed_vol(sub)
        if s * ref < 0:
            return False
    return True


def simplex_contains(outer, inner):
    return all(point_in_simplex(v, outer) for v in inner)


# ---------------------------------------------------------------------------
# Children in SFC order
# ---------------------------------------------------------------------------

def derive_children(dim):
    """Children of a type-t simplex as (offset in h/2 units, child type).

    Candidates are all half-size simplices anchored on the half-grid whose
    vertices lie inside the parent; since the volumes add up exactly, the
    resulting 2^dim simplices tile the parent.  SFC order is ascending
    (cube_id, type) where cube_id is the zyx bit code of the anchor offset.
    """
    ntypes = 2 if dim == 2 else 6
    out = {}
    for t in range(ntypes):
        parent = simplex_verts(dim, t, (0,) * dim, 2)
        found = []
        for off in product((0, 1), repeat=dim):
            for ct in range(ntypes):
                cand = simplex_verts(dim, ct, off, 1)
                if simplex_contains(parent, cand):
                    found.append((off, ct))
        assert len(found) == 2 ** dim, (t, found)
        vol = sum(abs(signed_vol(simplex_verts(dim, ct, off, 1)))
                  for off, ct in found)
        assert vol == abs(signed_vol(parent))
        found.sort(key=lambda oc: (cube_id(oc[0]), oc[1]))
        out[t] = found
    return out


def cube_id(off):
    return sum(b << i for i, b in enumerate(off))


def derive_parent_type(children):
    """parent_type[child_type][cube_id] -> parent type (must be unique)."""
    table = {}
    for pt, kids in children.items():
        for off, ct in kids:
            key = (ct, cube_id(off))
            assert table.setdefault(key, pt) == pt, key
    return table


def derive_child_index(children):
    """child_index[parent_type][(cube_id, child_type)] -> SFC child position."""
    return {pt: {(cube_id(off), ct): i for i, (off, ct) in enumerate(kids)}
            for pt, kids in children.items()}


# ---------------------------------------------------------------------------
# Within-tree face neighbors
# ---------------------------------------------------------------------------

def face_vert_ids(dim, f):
    """Vertex indices of face f (the face opposite vertex f), ascending."""
    return tuple(i for i in range(dim + 1) if i != f)


def face_verts(dim, t, a, h, f):
    verts = simplex_verts(dim, t, a, h)
    return frozenset(verts[i] for i in face_vert_ids(dim, f))


def derive_face_neighbors(dim):
    """neighbor[(type, face)] -> (anchor offset in h units, type', dual face).

    The neighbor of a same-level simplex across a face is found by matching
    face vertex sets over all simplices anchored within one cell distance.
    Verified to be translation invariant.
    """
    ntypes = 2 if dim == 2 else 6
    rules = {}
    for base in [(0,) * dim, tuple(range(2, 2 + dim))]:
        for t in range(ntypes):
            for f in range(dim + 1):
                fv = face_verts(dim, t, base, 1, f)
                hits = []
                for delta in product((-1, 0, 1), repeat=dim):
                    a2 = vadd(base, delta)
                    for t2 in range(ntypes):
                        if a2 == base and t2 == t:
                            continue
                        for f2 in range(dim + 1):
                            if face_verts(dim, t2, a2, 1, f2) == fv:
                                hits.append((delta, t2, f2))
                assert len(hits) == 1, (t, f, hits)
                key = (t, f)
                if key in rules:
                    assert rules[key] == hits[0], key
                else:
                    rules[key] = hits[0]
    # involution check
    for (t, f), (delta, t2, f2) in rules.items():
        back = rules[(t2, f2)]
        assert back == (vscale(-1, delta), t, f), (t, f)
    return rules


# ---------------------------------------------------------------------------
# Children touching a face
# ---------------------------------------------------------------------------

def plane_of(fverts):
    """Exact (normal, offset) of the plane/line through a face vertex set."""
    pts = sorted(fverts)
    if len(pts[0]) == 2:
        n = (-(pts[1][1] - pts[0][1]), pts[1][0] - pts[0][0])
    else:
        d1, d2 = vsub(pts[1], pts[0]), vsub(pts[2], pts[0])
        n = (d1[1] * d2[2] - d1[2] * d2[1],
             d1[2] * d2[0] - d1[0] * d2[2],
             d1[0] * d2[1] - d1[1] * d2[0])
    g = 0
    for c in n:
        g = gcd(g, abs(c))
    n = tuple(c // g for c in n)
    if n < vscale(-1, n):
        n = vscale(-1, n)
    off = sum(a * b for a, b in zip(n, pts[0]))
    return n, off


def on_plane(p, plane):
    n, off = plane
    return sum(a * b for a, b in zip(n, p)) == off


def derive_children_at_face(dim, children):
    """at_face[(type, face)] -> [child indices]; child_face[...] -> [faces]."""
    at_face, child_face = {}, {}
    ntypes = 2 if dim == 2 else 6
    for t in range(ntypes):
        pverts = simplex_verts(dim, t, (0,) * dim, 2)
        for f in range(dim + 1):
            plane = plane_of(frozenset(pverts[i] for i in face_vert_ids(dim, f)))
            ids, faces = [], []
            for i, (off, ct) in enumerate(children[t]):
                cverts = simplex_verts(dim, ct, off, 1)
                hits = [cf for cf in range(dim + 1)
                        if all(on_plane(cverts[j], plane)
                               for j in face_vert_ids(dim, cf))]
                if hits:
                    assert len(hits) == 1
                    ids.append(i)
                    faces.append(hits[0])
            assert len(ids) == 2 ** (dim - 1), (t, f, ids)
            at_face[(t, f)] = ids
            child_face[(t, f)] = faces
    return at_face, child_face


# ---------------------------------------------------------------------------
# Root faces: identification, boundary projection, extrusion
# ---------------------------------------------------------------------------
# Face parametrizations Phi_g(u, v) -> reference coordinates, scaled so the
# root is [0, S]^d.  The (u, v) system of each root face is chosen so the
# ascending face corners land on the standard 2D corner positions.

TET_FACE_PARAM = {
    0: lambda u, v, S: (S, v, u),       # x = S
    1: lambda u, v, S: (u, v, u),       # x = z
    2: lambda u, v, S: (u, v, v),       # y = z
    3: lambda u, v, S: (u, 0, v),       # y = 0
}
TRI_FACE_PARAM = {
    0: lambda u, S: (S, u),             # x = S
    1: lambda u, S: (u, u),             # x = y
    2: lambda u, S: (u, 0),             # y = 0
}
QUAD_FACE_PARAM = {
    0: lambda u, S: (0, u),
    1: lambda u, S: (S, u),
    2: lambda u, S: (u, 0),
    3: lambda u, S: (u, S),
}
HEX_FACE_PARAM = {
    0: lambda u, v, S: (0, u, v),
    1: lambda u, v, S: (S, u, v),
    2: lambda u, v, S: (u, 0, v),
    3: lambda u, v, S: (u, S, v),
    4: lambda u, v, S: (u, v, 0),
    5: lambda u, v, S: (u, v, S),
}
PRISM_FACE_PARAM = {
    0: lambda u, v, S: (S, u, v),       # over triangle edge x = S
    1: lambda u, v, S: (u, u, v),       # over the diagonal x = y
    2: lambda u, v, S: (u, 0, v),       # over triangle edge y = 0
    3: lambda u, v, S: (u, v, 0),       # bottom triangle
    4: lambda u, v, S: (u, v, S),       # top triangle
}


def enumerate_simplices_in_root(dim, level):
    """All (type, anchor) pairs of the given level inside the root simplex."""
    ntypes = 2 if dim == 2 else 6
    S = 1 << level
    root = simplex_verts(dim, 0, (0,) * dim, S)
    out = []
    for a in product(range(S), repeat=dim):
        for t in range(ntypes):
            if simplex_contains(root, simplex_verts(dim, t, a, 1)):
                out.append((t, a))
    assert len(out) == (2 ** dim) ** level * (1 if dim == 1 else 1)
    return out


def root_face_planes(dim, S):
    root = simplex_verts(dim, 0, (0,) * dim, S)
    return {g: plane_of(frozenset(root[i] for i in face_vert_ids(dim, g)))
            for g in range(dim + 1)}


def derive_tree_face(dim, level=2):
    """tree_face[(type, f)] -> root face g (only for boundary-capable pairs)."""
    S = 1 << level
    planes = root_face_planes(dim, S)
    table = {}
    for t, a in enumerate_simplices_in_root(dim, level):
        verts = simplex_verts(dim, t, a, 1)
        for f in range(dim + 1):
            fv = [verts[i] for i in face_vert_ids(dim, f)]
            for g, plane in planes.items():
                if all(on_plane(p, plane) for p in fv):
                    key = (t, f)
                    assert table.setdefault(key, g) == g, key
    return table


def param_inverse(dim, shape, g, pt, S):
    """Invert Phi_g at a point known to lie on root face g."""
    if dim == 3:
        param = {'tet': TET_FACE_PARAM, 'hex': HEX_FACE_PARAM,
                 'prism': PRISM_FACE_PARAM}[shape][g]
        # solve by matching against the parametrization on basis probes
        p0 = param(0, 0, S)
        pu = vsub(param(1, 0, S), p0)
        pv = vsub(param(0, 1, S), p0)
        d = vsub(pt, p0)
        # pick two axes where (pu, pv) is invertible
        for i, j in ((0, 1), (0, 2), (1, 2)):
            det = pu[i] * pv[j] - pu[j] * pv[i]
            if det != 0:
                u = Fraction(d[i] * pv[j] - d[j] * pv[i], det)
                v = Fraction(pu[i] * d[j] - pu[j] * d[i], det)
                assert param(u, v, S) == tuple(Fraction(x) for x in pt)
                return (u, v)
        raise AssertionError
    param = {'tri': TRI_FACE_PARAM, 'quad': QUAD_FACE_PARAM}[shape][g]
    p0 = param(0, S)
    pu = vsub(param(1, S), p0)
    d = vsub(pt, p0)
    for i in range(2):
        if pu[i] != 0:
            u = Fraction(d[i], pu[i])
            assert param(u, S) == tuple(Fraction(x) for x in pt)
            return (u,)
    raise AssertionError


def identify_face_element(coords):
    """Given the exact vertex set of a sub-line/sub-triangle in face root
    coordinates, return (type, anchor)."""
    pts = sorted(coords)
    if len(pts) == 2:
        (x0,), (x1,) = pts
        assert x1 - x0 > 0
        return 0, (int(x0),)
    h = max(p[0] for p in pts) - min(p[0] for p in pts)
    for t in (0, 1):
        for a in pts:
            cand = tri_verts(t, tuple(int(c) for c in a), int(h))
            if frozenset(cand) == frozenset(tuple(int(c) for c in p) for p in pts):
                return t, tuple(int(c) for c in a)
    raise AssertionError(pts)


def derive_boundary_rules(dim, shape, tree_face, level=2):
    """boundary[(type, f)] -> (face type, coordinate selector).

    The selector maps the element anchor to the face anchor: each face
    coordinate is one of the element's anchor coordinates (index into the
    anchor tuple).  Verified over the full level-`level` enumeration.
    """
    S = 1 << level
    planes = root_face_planes(dim, S)
    rules = {}
    for t, a in enumerate_simplices_in_root(dim, level):
        verts = simplex_verts(dim, t, a, 1)
        for f in range(dim + 1):
            key = (t, f)
            if key not in tree_face:
                continue
            g = tree_face[key]
            fv = [verts[i] for i in face_vert_ids(dim, f)]
            if not all(on_plane(p, planes[g]) for p in fv):
                continue
            coords = [param_inverse(dim, shape, g, p, S) for p in fv]
            ft, fa = identify_face_element(coords)
            # fit each face-anchor coordinate as one element-anchor coordinate
            sel = []
            for k, val in enumerate(fa):
                cands = frozenset(i for i in range(dim) if a[i] == val)
                sel.append(cands)
            prev = rules.get((key, 'acc'))
            if prev is None:
                rules[(key, 'acc')] = (ft, sel)
            else:
                pft, psel = prev
                assert pft == ft
                rules[(key, 'acc')] = (ft, [p & c for p, c in zip(psel, sel)])
    out = {}
    for (key, _), (ft, sel) in list(rules.items()):
        picked = []
        for cands in sel:
            assert len(cands) >= 1, (key, sel)
            # on diagonal root faces two anchor coordinates coincide; the
            # conventional projection reads z in 3D and x in 2D
            picked.append(max(cands) if dim == 3 else min(cands))
        out[key] = (ft, tuple(picked))
    return out


def shape_face_param(shape):
    return {'tri': TRI_FACE_PARAM, 'quad': QUAD_FACE_PARAM,
            'tet': TET_FACE_PARAM, 'hex': HEX_FACE_PARAM,
            'prism': PRISM_FACE_PARAM}[shape]


def prism_verts(t, a, h):
    x, y, z = a
    tri = tri_verts(t, (x, y), h)
    return [(vx, vy, z) for vx, vy in tri] + [(vx, vy, z + h) for vx, vy in tri]


def shape_verts(shape, t, a, h):
    if shape == 'tri':
        return tri_verts(t, a, h)
    if shape == 'quad':
        x, y = a
        return [(x + (i & 1) * h, y + (i >> 1) * h) for i in range(4)]
    if shape == 'hex':
        x, y, z = a
        return [(x + (i & 1) * h, y + (i >> 1 & 1) * h, z + (i >> 2) * h)
                for i in range(8)]
    if shape == 'tet':
        return tet_verts(t, a, h)
    if shape == 'prism':
        return prism_verts(t, a, h)
    raise ValueError(shape)


SHAPE_NTYPES = {'tri': 2, 'quad': 1, 'hex': 1, 'tet': 6, 'prism': 2}
SHAPE_DIM = {'tri': 2, 'quad': 2, 'hex': 3, 'tet': 3, 'prism': 3}
SHAPE_NFACES = {'tri': 3, 'quad': 4, 'hex': 6, 'tet': 4, 'prism': 5}


def shape_face_vert_ids(shape, f):
    if shape in ('tri', 'tet'):
        return face_vert_ids(SHAPE_DIM[shape], f)
    if shape == 'quad':
        return {0: (0, 2), 1: (1, 3), 2: (0, 1), 3: (2, 3)}[f]
    if shape == 'hex':
        return {0: (0, 2, 4, 6), 1: (1, 3, 5, 7), 2: (0, 1, 4, 5),
                3: (2, 3, 6, 7), 4: (0, 1, 2, 3), 5: (4, 5, 6, 7)}[f]
    if shape == 'prism':
        return {0: (1, 2, 4, 5), 1: (0, 2, 3, 5), 2: (0, 1, 3, 4),
                3: (0, 1, 2), 4: (3, 4, 5)}[f]
    raise ValueError(shape)


def inside_root(shape, t, a, h, S):
    verts = shape_verts(shape, t, a, h)
    dim = SHAPE_DIM[shape]
    if shape in ('quad', 'hex'):
        return all(0 <= c <= S for v in verts for c in v)
    if shape == 'prism':
        if not all(0 <= v[2] <= S for v in verts):
            return False
        root = tri_verts(0, (0, 0), S)
        return all(point_in_simplex(v[:2], root) for v in verts)
    root = simplex_verts(dim, 0, (0,) * dim, S)
    return simplex_contains(root, verts)


def derive_extrude_rules(shape, level=2):
    """extrude[(g', face type)] -> (elem type, anchor recipe, dual face).

    The anchor recipe gives, per element coordinate, a term
    (coeff_Fx, coeff_Fy, coeff_h, coeff_S) with S = 2^L.  Derived by
    locating, for sample face elements, the unique element of the shape
    whose face on root face g' equals the embedded face polygon.
    """
    dim = SHAPE_DIM[shape]
    S = 1 << level
    params = shape_face_param(shape)
    nfp = SHAPE_NFACES[shape]
    rules = {}
    for g in range(nfp):
        param = params[g]
        fshape = 'line' if dim == 2 else (
            'tri' if len(shape_face_vert_ids(shape, g)) == 3 else 'quad')
        ftypes = (0,) if fshape in ('line', 'quad') else (0, 1)
        for ft in ftypes:
            samples = []
            fanchors = ([(a,) for a in range(S)] if fshape == 'line' else
                        [a for t, a in enumerate_simplices_in_root(2, level)
                         if t == ft] if fshape == 'tri' else
                        [(x, y) for x in range(S) for y in range(S)])
            for fa in fanchors:
                if fshape == 'line':
                    fpoly = frozenset(param(u, S) for u in (fa[0], fa[0] + 1))
                elif fshape == 'quad':
                    fpoly = frozenset(param(fa[0] + du, fa[1] + dv, S)
                                      for du in (0, 1) for dv in (0, 1))
                else:
                    fpoly = frozenset(param(u, v, S)
                                      for u, v in tri_verts(ft, fa, 1))
                hit = None
                lo = tuple(min(p[i] for p in fpoly) for i in range(dim))
                for delta in product((-1, 0), repeat=dim):
                    a2 = vadd(lo, delta)
                    if any(c < 0 or c >= S for c in a2):
                        continue
                    for t2 in range(SHAPE_NTYPES[shape]):
                        if not inside_root(shape, t2, a2, 1, S):
                            continue
                        for f2 in range(nfp):
                            ids = shape_face_vert_ids(shape, f2)
                            verts = shape_verts(shape, t2, a2, 1)
                            if frozenset(verts[i] for i in ids) == fpoly:
                                assert hit is None or hit == (t2, a2, f2)
                                hit = (t2, a2, f2)
                assert hit is not None, (shape, g, ft, fa)
                samples.append((fa, hit))
            et = samples[0][1][0]
            df = samples[0][1][2]
            assert all(h[0] == et and h[2] == df for _, h in samples)
            # fit anchor = cx*F.x + cy*F.y + ch*h + cS*S per coordinate
            recipe = []
            for i in range(dim):
                fit = None
                coeffs = ((0, 1), (0, 1), (-1, 0), (0, 1))
                for cx in coeffs[0]:
                    for cy in (coeffs[1] if fshape != 'line' else (0,)):
                        for ch in coeffs[2]:
                            for cS in coeffs[3]:
                                ok = all(
                                    h[1][i] == cx * fa[0]
                                    + cy * (fa[1] if len(fa) > 1 else 0)
                                    + ch * 1 + cS * S
                                    for fa, h in samples)
                                if ok:
                                    fit = (cx, cy, ch, cS)
                                    break
                            if fit:
                                break
                        if fit:
                            break
                    if fit:
                        break
                assert fit is not None, (shape, g, ft, i)
                recipe.append(fit)
            rules[(g, ft)] = (et, tuple(recipe), df)
    return rules


# ---------------------------------------------------------------------------
# Face transformation symmetries and connection signs
# ---------------------------------------------------------------------------

def quad_corner(i, S):
    return ((i & 1) * S, (i >> 1) * S)


def tri_corner(i, S):
    return [(0, 0), (S, 0), (S, S)][i]


def derive_transform_perm_tables():
    """For each face shape, map (o, s) <-> the corner permutation of the
    face root symmetry, and compute the inverse orientation table."""
    out = {}
    for fshape, ncorner, corner in (('quad', 4, quad_corner),
                                    ('tri', 3, tri_corner)):
        perms = {}
        for o in range(ncorner if fshape == 'quad' else 3):
            for s in (1, -1):
                # find the corner permutation with corner0 -> corner o, det s
                best = None
                for perm in permutations(range(ncorner)):
                    if perm[0] != o:
                        continue
                    pts = [corner(i, 4) for i in range(ncorner)]
                    img = [corner(perm[i], 4) for i in range(ncorner)]
                    d1, d2 = vsub(pts[1], pts[0]), vsub(pts[2], pts[0])
                    i1, i2 = vsub(img[1], img[0]), vsub(img[2], img[0])
                    # affine consistency for quads: corner3 must match too
                    det_src = det2(d1, d2)
                    det_img = det2(i1, i2)
                    if det_img * det_src * s <= 0:
                        continue
                    if ncorner == 4:
                        d3 = vsub(pts[3], pts[0])
                        # solve d3 = a*d1 + b*d2, check image consistency
                        den = det2(d1, d2)
                        a = Fraction(det2(d3, d2), den)
                        b = Fraction(det2(d1, d3), den)
                        want = vadd(img[0], vadd(vscale(a, i1), vscale(b, i2)))
                        if tuple(want) != tuple(Fraction(c) for c in img[3]):
                            continue
                    assert best is None, (fshape, o, s)
                    best = perm
                assert best is not None
                perms[(o, s)] = best
        inv = {}
        for (o, s), perm in perms.items():
            iperm = tuple(perm.index(i) for i in range(ncorner))
            matches = [(o2, s2) for (o2, s2), p2 in perms.items() if p2 == iperm]
            assert len(matches) == 1 and matches[0][1] == s
            inv[(o, s)] = matches[0][0]
        out[fshape] = {'perm': perms, 'inv': inv}
    return out


SHAPE_CORNERS = {
    'hex': [( (i & 1), (i >> 1 & 1), (i >> 2)) for i in range(8)],
    'tet': tet_verts(0, (0, 0, 0), 1),
    'prism': prism_verts(0, (0, 0, 0), 1),
    'quad': [(0, 0), (1, 0), (0, 1), (1, 1)],
    'tri': tri_verts(0, (0, 0), 1),
}


def centroid(pts):
    n = len(pts)
    return tuple(Fraction(sum(p[i] for p in pts), n) for i in range(len(pts[0])))


def derive_face_signs():
    """sign[(shape, shape')][(g, g')] for all 3D shape pairs whose faces have
    the same shape: parity of the unique corner matching that connects the
    two trees with positive volume and corner 0 on corner 0."""
    out = {}
    shapes = ('hex', 'tet', 'prism')
    for sa in shapes:
        for sb in shapes:
            table = {}
            for ga in range(SHAPE_NFACES[sa]):
                ia = shape_face_vert_ids(sa, ga)
                for gb in range(SHAPE_NFACES[sb]):
                    ib = shape_face_vert_ids(sb, gb)
                    if len(ia) != len(ib):
                        continue
                    table[(ga, gb)] = connection_sign(sa, ga, sb, gb)
            if table:
                out[(sa, sb)] = table
    return out


def connection_sign(sa, ga, sb, gb):
    """+1 if the identity corner matching glues with positive volume,
    otherwise the transposed matching must (and sign is -1)."""
    A = SHAPE_CORNERS[sa]
    B = SHAPE_CORNERS[sb]
    ia = shape_face_vert_ids(sa, ga)
    ib = shape_face_vert_ids(sb, gb)
    n = len(ia)
    fa = [tuple(Fraction(c) for c in A[i]) for i in ia]
    fb = [tuple(Fraction(c) for c in B[i]) for i in ib]
    # outward normal of face ga of A
    ca = centroid(fa)
    cA = centroid([tuple(Fraction(c) for c in v) for v in A])
    d1, d2 = vsub(fa[1], fa[0]), vsub(fa[2], fa[0])
    nrm = (d1[1] * d2[2] - d1[2] * d2[1],
           d1[2] * d2[0] - d1[0] * d2[2],
           d1[0] * d2[1] - d1[1] * d2[0])
    if sum(a * b for a, b in zip(nrm, vsub(cA, ca))) > 0:
        nrm = vscale(-1, nrm)

    def valid(sigma):
        # sigma: index i of A's ascending face corners -> index of B's
        inv = {v: k for k, v in sigma.items()}
        tgt = [fa[inv[j]] for j in range(n)]
        src = [fb[j] for j in range(n)]
        cb = centroid([tuple(Fraction(c) for c in v) for v in B])
        d = [vsub(src[1], src[0]), vsub(src[2], src[0]), vsub(cb, src[0])]
        img3 = vadd(centroid(tgt), nrm)
        e = [vsub(tgt[1], tgt[0]), vsub(tgt[2], tgt[0]),
             vsub(img3, tgt[0])]
        # also require affine consistency of the 4th corner for quads
        if n == 4:
            # solve src[3]-src[0] = a*d0+b*d1 in the face plane
            d3 = vsub(src[3], src[0])
            # use 2D solve in the plane spanned by d0, d1
            for i, j in ((0, 1), (0, 2), (1, 2)):
                den2 = d[0][i] * d[1][j] - d[0][j] * d[1][i]
                if den2 != 0:
                    a = Fraction(d3[i] * d[1][j] - d3[j] * d[1][i], den2)
                    b = Fraction(d[0][i] * d3[j] - d[0][j] * d3[i], den2)
                    break
            want = vadd(tgt[0], vadd(vscale(a, e[0]), vscale(b, e[1])))
            have = vsub(tgt[3], (0,) * 3)
            if tuple(want) != tuple(have):
                return False
        return det3(*d) * det3(*e) > 0

    ident = {i: i for i in range(n)}
    swap = dict(ident)
    swap[1], swap[2] = 2, 1
    okI, okS = valid(ident), valid(swap)
    assert okI != okS, (sa, ga, sb, gb)
    return 1 if okI else -1


# ---------------------------------------------------------------------------
# Freeze
# ---------------------------------------------------------------------------

def build_tables():
    t = {}
    for dim, name in ((2, 'tri'), (3, 'tet')):
        ch = derive_children(dim)
        t[f'{name}_children'] = {k: [(list(o), c) for o, c in v]
                                 for k, v in ch.items()}
        t[f'{name}_parent_type'] = derive_parent_type(ch)
        t[f'{name}_child_index'] = derive_child_index(ch)
        t[f'{name}_face_neighbor'] = {k: (list(v[0]), v[1], v[2])
                                      for k, v in derive_face_neighbors(dim).items()}
        af, cf = derive_children_at_face(dim, ch)
        t[f'{name}_children_at_face'] = af
        t[f'{name}_child_face'] = cf
        t[f'{name}_tree_face'] = derive_tree_face(dim)
        t[f'{name}_boundary'] = derive_boundary_rules(
            dim, name, t[f'{name}_tree_face'])
    for shape in ('quad', 'hex', 'tri', 'tet', 'prism'):
        t[f'{shape}_extrude'] = derive_extrude_rules(shape)
    perm = derive_transform_perm_tables()
    t['transform_inverse'] = {fs: perm[fs]['inv'] for fs in perm}
    t['face_sign'] = derive_face_signs()
    return t


def main():
    tables = build_tables()
    lines = ['"""Frozen geometric lookup tables (generated by',
             'scripts/derive_tables.py -- do not edit by hand)."""',
             '']
    import pprint
    for key in sorted(tables):
        rep = pprint.pformat(tables[key], width=100, sort_dicts=True)
        lines.append(f'{key.upper()} = {rep}')
        lines.append('')
    out = '\n'.join(lines)
    target = sys.argv[1] if len(sys.argv) > 1 else None
    if target:
        with open(target, 'w') as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


if __name__ == '__main__':
    main()
