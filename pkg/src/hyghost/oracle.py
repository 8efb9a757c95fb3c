"""Brute-force geometric adjacency oracle.

Independent of the neighbor/owner machinery: every leaf face is embedded
into world coordinates through the tree's exact affine map (scaled to
integers), faces are grouped by their supporting plane, and two leaves are
adjacent iff faces on opposite sides of one plane overlap in a (d-1)-cell.
Overlap is decided by exact convex polygon clipping, so hanging faces and
arbitrary level jumps are handled.  Periodic connections are unified by
translating one side onto the other.
"""

import itertools
from fractions import Fraction
from math import gcd, lcm

from . import elements as el
from .cmesh import FACE_CORNERS


def _scaled_int_maps(F):
    """Per-tree integer world transforms w(v) = origin + M v for lattice v.

    All trees share one scale so coordinates are comparable; returns
    (origins, matrices, shifts, T): shifts are the scaled periodic offsets
    and T the common denominator, i.e. world = ints / (T * 2**max_level).
    """
    cm = F.cmesh
    S = 1 << F.max_level
    dens = [1]
    for m in cm.maps:
        dens += [Fraction(c).denominator for c in m.origin]
        dens += [Fraction(e).denominator for col in m.cols for e in col]
    for tau in cm.periodic_shifts.values():
        dens += [Fraction(t).denominator for t in tau]
    T = lcm(*dens)
    origins, mats = [], []
    for m in cm.maps:
        origins.append(tuple(int(T * S * c) for c in m.origin))
        mats.append(tuple(tuple(int(T * e) for e in col) for col in m.cols))
    shifts = {key: tuple(int(T * S * t) for t in tau)
              for key, tau in cm.periodic_shifts.items()}
    return origins, mats, shifts, T


def _apply(origin, cols, v):
    cx, cy, cz = cols
    return (origin[0] + cx[0] * v[0] + cy[0] * v[1] + cz[0] * v[2],
            origin[1] + cx[1] * v[0] + cy[1] * v[1] + cz[1] * v[2],
            origin[2] + cx[2] * v[0] + cy[2] * v[1] + cz[2] * v[2])


def _plane_key(pts):
    """Normalized (normal, offset) of the supporting plane/line of pts."""
    p0 = pts[0]
    if len(pts) == 2:  # 1D face of a 2D forest: a segment in the z=0 plane
        d = (pts[1][0] - p0[0], pts[1][1] - p0[1])
        n = (d[1], -d[0], 0)
    else:
        u = tuple(pts[1][i] - p0[i] for i in range(3))
        v = tuple(pts[2][i] - p0[i] for i in range(3))
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
             u[0] * v[1] - u[1] * v[0])
    g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    n = tuple(c // g for c in n)
    if n < (0, 0, 0):
        n = tuple(-c for c in n)
    off = n[0] * p0[0] + n[1] * p0[1] + n[2] * p0[2]
    return n, off


def _project(pts, n):
    """Drop the dominant normal axis; keeps the projection injective."""
    drop = max(range(3), key=lambda i: abs(n[i]))
    keep = [i for i in range(3) if i != drop]
    poly = [(p[keep[0]], p[keep[1]]) for p in pts]
    if len(poly) == 4:  # corners come in z-order; make the boundary cyclic
        poly = [poly[0], poly[1], poly[3], poly[2]]
    return poly


def _signed_area2(poly):
    a = 0
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        a += x1 * y2 - x2 * y1
    return a


def _clip(poly, a, b):
    """Keep the part of poly left of the directed edge a->b."""
    ex, ey = b[0] - a[0], b[1] - a[1]
    out = []
    m = len(poly)
    for i in range(m):
        p, q = poly[i], poly[(i + 1) % m]
        sp = ex * (p[1] - a[1]) - ey * (p[0] - a[0])
        sq = ex * (q[1] - a[1]) - ey * (q[0] - a[0])
        if sp >= 0:
            out.append(p)
        if (sp > 0 > sq) or (sp < 0 < sq):
            t = Fraction(sp, sp - sq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _polys_overlap(pa, pb):
    """True iff two convex polygons (or segments) share positive measure."""
    if len(pa) == 2 and len(pb) == 2:
        # collinear segments: compare intervals along the dominant axis
        ax = 0 if abs(pa[1][0] - pa[0][0]) >= abs(pa[1][1] - pa[0][1]) else 1
        lo1, hi1 = sorted((pa[0][ax], pa[1][ax]))
        lo2, hi2 = sorted((pb[0][ax], pb[1][ax]))
        return max(lo1, lo2) < min(hi1, hi2)
    if _signed_area2(pa) < 0:
        pa = pa[::-1]
    if _signed_area2(pb) < 0:
        pb = pb[::-1]
    cur = pa
    for i in range(len(pb)):
        cur = _clip(cur, pb[i], pb[(i + 1) % len(pb)])
        if len(cur) < 3:
            return False
    return _signed_area2(cur) != 0


class _Face:
    __slots__ = ("gi", "tree", "elem", "poly", "bbox")

    def __init__(self, gi, tree, elem, poly):
        self.gi = gi
        self.tree = tree
        self.elem = elem
        self.poly = poly
        xs = [p[0] for p in poly]
        ys = [p[1] for p in poly]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))


def _collect_faces(F):
    """Group every leaf face by (plane, side): {plane: {+1: [...], -1: [...]}}."""
    L = F.max_level
    origins, mats, shifts, _ = _scaled_int_maps(F)
    cm = F.cmesh
    planes = {}
    for gi in range(F.num_leaves):
        K, E = F.global_leaf(gi)
        verts = [_apply(origins[K], mats[K], v) for v in el.vertices(E, L)]
        for f in range(el.NUM_FACES[E.shape]):
            fverts = [verts[i] for i in FACE_CORNERS[E.shape][f]]
            tau = (0, 0, 0)
            if shifts and not el.neighbor_is_inside_root(E, f, L):
                g = el.tree_face(E, f, L)
                if (K, g) in shifts:
                    conn = cm.conns[K][g]
                    if (K, g) < (conn.tree, conn.face):  # canonical side shifts
                        tau = shifts[(K, g)]
                        fverts = [tuple(p[i] + tau[i] for i in range(3))
                                  for p in fverts]
            n, off = _plane_key(fverts)
            # element centroid, translated along with the face
            csum = tuple(sum(p[i] for p in verts) + len(verts) * tau[i]
                         for i in range(3))
            side = (n[0] * csum[0] + n[1] * csum[1] + n[2] * csum[2]
                    - len(verts) * off)
            side = 1 if side > 0 else -1
            planes.setdefault((n, off), {1: [], -1: []})[side].append(
                _Face(gi, K, E, _project(fverts, n)))
    return planes


def _adjacency_with_indices(F):
    """All face-adjacent leaf pairs as ((K1, E1, gi1), (K2, E2, gi2))."""
    pairs = []
    for sides in _collect_faces(F).values():
        A, B = sides[1], sides[-1]
        if not A or not B:
            continue
        width = min(max(fc.bbox[2] - fc.bbox[0], fc.bbox[3] - fc.bbox[1])
                    for fc in A + B)
        buckets = {}
        for side_id, faces in ((0, A), (1, B)):
            for idx, fc in enumerate(faces):
                x0, y0, x1, y1 = fc.bbox
                for cx in range(x0 // width, max(x0, x1 - 1) // width + 1):
                    for cy in range(y0 // width, max(y0, y1 - 1) // width + 1):
                        buckets.setdefault((cx, cy), ([], []))[side_id].append(idx)
        seen = set()
        for ia_list, ib_list in buckets.values():
            for ia in ia_list:
                for ib in ib_list:
                    if (ia, ib) in seen:
                        continue
                    seen.add((ia, ib))
                    fa, fb = A[ia], B[ib]
                    if len(fa.poly) > 2 and (
                            fa.bbox[2] <= fb.bbox[0] or fb.bbox[2] <= fa.bbox[0] or
                            fa.bbox[3] <= fb.bbox[1] or fb.bbox[3] <= fa.bbox[1]):
                        continue
                    if _polys_overlap(fa.poly, fb.poly):
                        pairs.append(((fa.tree, fa.elem, fa.gi),
                                      (fb.tree, fb.elem, fb.gi)))
    return pairs


def leaf_adjacency(F):
    """All face-adjacent leaf pairs as ((K1, E1), (K2, E2))."""
    return [((a[0], a[1]), (b[0], b[1])) for a, b in _adjacency_with_indices(F)]


def oracle_ghosts(F):
    """Per-rank mirror and ghost sets straight from the adjacency relation.

    Returns (mirrors, ghosts): mirrors[p][q] and ghosts[p][q] are sorted
    lists of (tree, Element); ghosts[p][q] equals mirrors[q][p].
    """
    mirrors = [dict() for _ in range(F.P)]
    for (K1, E1, g1), (K2, E2, g2) in _adjacency_with_indices(F):
        p1 = F.leaf_owner_by_index(g1)
        p2 = F.leaf_owner_by_index(g2)
        if p1 == p2:
            continue
        mirrors[p1].setdefault(p2, set()).add((K1, E1))
        mirrors[p2].setdefault(p1, set()).add((K2, E2))
    L = F.max_level
    key = lambda te: (te[0], el.linear_id(te[1], L))
    mirrors = [{q: sorted(s, key=key) for q, s in sorted(m.items())}
               for m in mirrors]
    ghosts = [{q: mirrors[q][p] for q in sorted(
        qq for qq in range(F.P) if p in mirrors[qq])} for p in range(F.P)]
    return mirrors, ghosts
