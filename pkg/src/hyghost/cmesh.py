"""Conforming coarse mesh of root trees.

A CoarseMesh stores the tree shapes, the face-to-face connectivity with
orientation, and (for the built-in meshes) an exact affine embedding of
every tree into world coordinates, kept as Fractions so that face gluing,
validation, and the brute-force adjacency oracle are exact.

Connectivity can be built automatically from the embeddings: faces whose
world corner sets coincide (optionally after a periodic translation) are
glued, and the orientation is derived by corner matching.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import elements as el
from ._tables import FACE_SIGN, TRANSFORM_INVERSE

# reference corner ids of each face (ascending vertex order)
FACE_CORNERS = {
    el.LINE: ((0,), (1,)),
    el.TRI: ((1, 2), (0, 2), (0, 1)),
    el.QUAD: ((0, 2), (1, 3), (0, 1), (2, 3)),
    el.TET: ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)),
    el.HEX: ((0, 2, 4, 6), (1, 3, 5, 7), (0, 1, 4, 5), (2, 3, 6, 7),
             (0, 1, 2, 3), (4, 5, 6, 7)),
    el.PRISM: ((1, 2, 4, 5), (0, 2, 3, 5), (0, 1, 3, 4), (0, 1, 2), (3, 4, 5)),
}

# precedence when choosing which side of a connection carries the stored
# orientation: hex < prism, tet < prism (and quad < tri for 2D trees);
# ties broken by smaller face index, then lower tree id
_CONV_RANK = {el.HEX: 0, el.TET: 0, el.QUAD: 0, el.LINE: 0,
              el.PRISM: 1, el.TRI: 1}


@dataclass(frozen=True)
class TreeFaceConn:
    tree: int
    face: int
    orientation: int


class AffineMap:
    """Exact affine map from the unit reference cell into world space."""

    def __init__(self, origin, cols):
        self.origin = tuple(Fraction(c) for c in origin)
        self.cols = tuple(tuple(Fraction(c) for c in col) for col in cols)

    def apply(self, p):
        """Map a reference point (fractions of the root size)."""
        o, (cx, cy, cz) = self.origin, self.cols
        return tuple(o[i] + p[0] * cx[i] + p[1] * cy[i] + p[2] * cz[i]
                     for i in range(3))

    def apply_int(self, v, root_size):
        """Map integer lattice coordinates of a root of size root_size."""
        S = root_size
        return self.apply((Fraction(v[0], S), Fraction(v[1], S), Fraction(v[2], S)))

    def det(self):
        (a, d, g), (b, e, h), (c, f, i) = self.cols
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def inverse_apply(self, w):
        """Solve origin + M p = w exactly (3x3 Cramer)."""
        cx, cy, cz = self.cols
        r = tuple(w[i] - self.origin[i] for i in range(3))
        det = self.det()
        if det == 0:
            raise ValueError("degenerate map")

        def d3(c0, c1, c2):
            return (c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
                    - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
                    + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]))

        return (d3(r, cy, cz) / det, d3(cx, r, cz) / det, d3(cx, cy, r) / det)


def _pad2d(cols, dim):
    """Fill unused columns so the 3x3 map is invertible (z -> z etc.)."""
    cols = [list(c) for c in cols]
    if dim <= 2:
        cols[2] = [0, 0, 1]
    if dim == 1:
        cols[1] = [0, 1, 0]
    return cols


def fit_map(shape, world_corners):
    """Affine map taking the reference cell's corners onto world_corners.

    Tries all assignments of reference corners to the given points and
    returns one with positive determinant (affine-consistent for quads and
    hexes).  world_corners entries are (x, y, z) fraction triples.
    """
    import itertools

    ref = el.vertices(el.root_element(shape), 1)  # corners at scale S=2
    ref = [tuple(Fraction(c, 2) for c in v) for v in ref]
    dim = el.DIM[shape]
    pts = [tuple(Fraction(c) for c in (list(w) + [0, 0])[:3]) for w in world_corners]
    for perm in itertools.permutations(range(len(pts))):
        w = [pts[j] for j in perm]
        o = tuple(w[0][i] - 0 for i in range(3))  # ref corner 0 is the origin
        # solve columns from d+1 spanning reference corners
        if shape in (el.LINE, el.QUAD, el.HEX):
            cx = tuple(w[1][i] - w[0][i] for i in range(3))
            cy = tuple(w[2][i] - w[0][i] for i in range(3)) if dim >= 2 else (0, 0, 0)
            cz = tuple(w[4][i] - w[0][i] for i in range(3)) if dim == 3 else (0, 0, 0)
        elif shape == el.TRI:
            cx = tuple(w[1][i] - w[0][i] for i in range(3))
            cy = tuple(w[2][i] - w[1][i] for i in range(3))
            cz = (0, 0, 0)
        elif shape == el.TET:
            cx = tuple(w[1][i] - w[0][i] for i in range(3))
            cz = tuple(w[2][i] - w[1][i] for i in range(3))
            cy = tuple(w[3][i] - w[2][i] for i in range(3))
        elif shape == el.PRISM:
            cx = tuple(w[1][i] - w[0][i] for i in range(3))
            cy = tuple(w[2][i] - w[1][i] for i in range(3))
            cz = tuple(w[3][i] - w[0][i] for i in range(3))
        else:
            raise ValueError("unknown shape %r" % (shape,))
        m = AffineMap(o, _pad2d([cx, cy, cz], dim))
        if all(m.apply(ref[k]) == w[k] for k in range(len(ref))) and m.det() > 0:
            return m
    raise ValueError("no positive affine fit for %s onto %r" % (shape, world_corners))


class CoarseMesh:
    """Tree shapes + face connectivity (+ optional exact embedding)."""

    def __init__(self, shapes, maps=None):
        self.shapes = list(shapes)
        self.maps = maps  # list of AffineMap or None
        self.name = None
        # world translation applied when crossing a periodic face, keyed by
        # (tree, face); empty for non-periodic meshes
        self.periodic_shifts = {}
        self.conns = [[None] * el.NUM_FACES[s] for s in self.shapes]
        # orientation to apply when transforming a face element from this
        # side into the neighbor's coordinates, and the permutation sign
        self._eff_o = [[None] * el.NUM_FACES[s] for s in self.shapes]
        self._sign = [[1] * el.NUM_FACES[s] for s in self.shapes]

    @property
    def num_trees(self):
        return len(self.shapes)

    def face_shape(self, K, g):
        return el.FACE_SHAPE[self.shapes[K]][g]

    # -- connectivity queries -------------------------------------------

    def tree_neighbor_face(self, K, g):
        c = self.conns[K][g]
        if c is None:
            raise ValueError("no neighbor: tree %d face %d is a boundary" % (K, g))
        return c.face

    def face_orientation(self, K, g):
        c = self.conns[K][g]
        if c is None:
            raise ValueError("no neighbor: tree %d face %d is a boundary" % (K, g))
        return c.orientation

    def face_connection(self, K, g):
        """(neighbor tree, neighbor face, orientation to apply, sign) or None."""
        c = self.conns[K][g]
        if c is None:
            return None
        return c.tree, c.face, self._eff_o[K][g], self._sign[K][g]

    # -- construction ----------------------------------------------------

    def _is_convention_side(self, K, g, K2, g2):
        a = (_CONV_RANK[self.shapes[K]], g, K)
        b = (_CONV_RANK[self.shapes[K2]], g2, K2)
        return a <= b

    def add_connection(self, K, g, K2, g2, orientation):
        """Record a two-sided connection; orientation is measured from the
        convention side (smaller shape rank / face index / tree id)."""
        fs = self.face_shape(K, g)
        if fs != self.face_shape(K2, g2):
            raise ValueError("incompatible face shapes %s vs %s" %
                             (fs, self.face_shape(K2, g2)))
        self.conns[K][g] = TreeFaceConn(K2, g2, orientation)
        self.conns[K2][g2] = TreeFaceConn(K, g, orientation)
        s, na = face_sign(self.shapes[K], self.shapes[K2], g, g2)
        for (a, ga) in ((K, g), (K2, g2)):
            self._sign[a][ga] = s
        if fs == el.LINE or na:
            o_conv = o_other = orientation  # 1D reflections are involutions
        else:
            o_conv = orientation
            o_other = TRANSFORM_INVERSE[fs][(orientation, s)]
        if self._is_convention_side(K, g, K2, g2):
            self._eff_o[K][g], self._eff_o[K2][g2] = o_conv, o_other
        else:
            self._eff_o[K][g], self._eff_o[K2][g2] = o_other, o_conv

    def face_world_corners(self, K, g, translate=None):
        """World coordinates of face g's corners, in reference corner order."""
        shape = self.shapes[K]
        ref = el.vertices(el.root_element(shape), 1)
        pts = []
        for ci in FACE_CORNERS[shape][g]:
            w = self.maps[K].apply(tuple(Fraction(c, 2) for c in ref[ci]))
            if translate is not None:
                w = tuple(w[i] + translate[i] for i in range(3))
            pts.append(w)
        return pts

    def glue_from_geometry(self, periodic=()):
        """Connect all faces whose world corner sets coincide.

        periodic: iterable of ((K, g), (K2, g2), translation) forcing
        face g of K (translated) onto face g2 of K2.
        """
        buckets = {}
        for K in range(self.num_trees):
            for g in range(el.NUM_FACES[self.shapes[K]]):
                key = frozenset(self.face_world_corners(K, g))
                buckets.setdefault(key, []).append((K, g))
        for key, members in buckets.items():
            if len(members) == 1:
                continue
            if len(members) > 2:
                raise ValueError("more than two faces coincide: %r" % (members,))
            (K, g), (K2, g2) = members
            self._glue_pair(K, g, K2, g2, None)
        for (K, g), (K2, g2), tau in periodic:
            self._glue_pair(K, g, K2, g2, tuple(Fraction(t) for t in tau))

    def _glue_pair(self, K, g, K2, g2, tau):
        # orientation: index j such that corner v0 of the convention-side
        # face lands on corner v'_j of the other face
        if self._is_convention_side(K, g, K2, g2):
            A, gA, B, gB = K, g, K2, g2
            tA, tB = tau, None
        else:
            A, gA, B, gB = K2, g2, K, g
            tA, tB = None, tau
        ca = self.face_world_corners(A, gA, tA)
        cb = self.face_world_corners(B, gB, tB)
        if set(ca) != set(cb):
            raise ValueError("faces do not coincide: (%d,%d) vs (%d,%d)" %
                             (K, g, K2, g2))
        o = cb.index(ca[0])
        self.add_connection(A, gA, B, gB, o)

    # -- validation ------------------------------------------------------

    def validate(self):
        for K in range(self.num_trees):
            if len(self.conns[K]) != el.NUM_FACES[self.shapes[K]]:
                raise ValueError("face list length mismatch on tree %d" % K)
            for g, c in enumerate(self.conns[K]):
                if c is None:
                    continue
                back = self.conns[c.tree][c.face]
                if back is None or back.tree != K or back.face != g or \
                        back.orientation != c.orientation:
                    raise ValueError("involution violated at tree %d face %d" % (K, g))
                fs = self.face_shape(K, g)
                if fs != self.face_shape(c.tree, c.face):
                    raise ValueError("face shape mismatch at tree %d face %d" % (K, g))
                nverts = len(FACE_CORNERS[self.shapes[K]][g])
                if not 0 <= c.orientation < nverts:
                    raise ValueError("orientation out of range at tree %d face %d" % (K, g))
        return True

    # -- text format -----------------------------------------------------

    def save(self, fh):
        fh.write("cmesh v1\n")
        for K, s in enumerate(self.shapes):
            fh.write("tree %d %s\n" % (K, s))
            for g, c in enumerate(self.conns[K]):
                if c is None:
                    fh.write("conn %d - - -\n" % g)
                else:
                    fh.write("conn %d %d %d %d\n" % (g, c.tree, c.face, c.orientation))

    @classmethod
    def load(cls, fh):
        lines = [ln.split() for ln in fh.read().splitlines() if ln.strip()]
        if not lines or lines[0] != ["cmesh", "v1"]:
            raise ValueError("not a cmesh v1 file")
        trees = {}
        conns = {}
        cur = None
        for tok in lines[1:]:
            if tok[0] == "tree":
                cur = int(tok[1])
                if tok[2] not in el.SHAPES:
                    raise ValueError("unknown shape %r" % (tok[2],))
                trees[cur] = tok[2]
            elif tok[0] == "conn":
                if cur is None:
                    raise ValueError("conn before tree")
                if tok[2] != "-":
                    conns[(cur, int(tok[1]))] = (int(tok[2]), int(tok[3]), int(tok[4]))
            else:
                raise ValueError("unknown directive %r" % (tok[0],))
        if sorted(trees) != list(range(len(trees))):
            raise ValueError("tree ids must be dense from 0")
        mesh = cls([trees[i] for i in range(len(trees))])
        done = set()
        for (K, g), (K2, g2, o) in conns.items():
            if (K2, g2) in done:
                if conns.get((K2, g2)) != (K, g, o):
                    raise ValueError("asymmetric connection at tree %d face %d" % (K, g))
                continue
            if conns.get((K2, g2)) != (K, g, o):
                raise ValueError("asymmetric connection at tree %d face %d" % (K, g))
            if not mesh._is_convention_side(K, g, K2, g2):
                K, g, K2, g2 = K2, g2, K, g
            mesh.add_connection(K, g, K2, g2, o)
            done.add((K, g))
        mesh.validate()
        return mesh


def face_sign(shape_a, shape_b, g, g2):
    """Permutation sign of the base corner matching between two tree faces.

    Returns (sign, not_applicable); line faces have no meaningful sign and
    report (+1, True).
    """
    if el.DIM[shape_a] != el.DIM[shape_b]:
        raise ValueError("mixed-dimension connection")
    if el.DIM[shape_a] <= 2:
        return 1, True
    try:
        return FACE_SIGN[(shape_a, shape_b)][(g, g2)], False
    except KeyError:
        raise ValueError("incompatible face shapes for %s/%s faces %d/%d" %
                         (shape_a, shape_b, g, g2))


# ---------------------------------------------------------------------------
# built-in meshes

def _box_map(lo, hi):
    o = tuple(Fraction(c) for c in lo)
    cols = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    for i in range(3):
        ext = Fraction(hi[i]) - Fraction(lo[i])
        cols[i][i] = ext if ext != 0 else Fraction(1)  # pad unused axes
    return AffineMap(o, cols)


def _kuhn_tets(lo, size):
    """Six tetrahedra filling the cube [lo, lo+size]^3, all sharing the
    main diagonal; returns a list of 4-corner world tuples."""
    s = Fraction(size)
    c = lambda bits: tuple(Fraction(lo[i]) + s * bits[i] for i in range(3))
    out = []
    for a, b in ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)):
        ea = [0, 0, 0]
        ea[a] = 1
        eab = list(ea)
        eab[b] = 1
        out.append([c((0, 0, 0)), c(ea), c(eab), c((1, 1, 1))])
    return out


def builtin_cmesh(name):
    """Factory for the built-in coarse meshes."""
    F = Fraction
    if name == "hex_cube":
        mesh = CoarseMesh([el.HEX], [_box_map((0, 0, 0), (1, 1, 1))])
        mesh.glue_from_geometry()
    elif name == "quad_unit":
        mesh = CoarseMesh([el.QUAD], [_box_map((0, 0, 0), (1, 1, 0))])
        mesh.glue_from_geometry()
    elif name == "quad_periodic":
        mesh = CoarseMesh([el.QUAD], [_box_map((0, 0, 0), (1, 1, 0))])
        mesh.glue_from_geometry(periodic=[((0, 0), (0, 1), (1, 0, 0))])
        mesh.periodic_shifts = {(0, 0): (F(1), F(0), F(0)), (0, 1): (F(-1), F(0), F(0))}
    elif name == "tri_unit":
        maps = [fit_map(el.TRI, [(0, 0, 0), (1, 0, 0), (1, 1, 0)]),
                fit_map(el.TRI, [(0, 0, 0), (1, 1, 0), (0, 1, 0)])]
        mesh = CoarseMesh([el.TRI, el.TRI], maps)
        mesh.glue_from_geometry()
    elif name == "tet_cube":
        maps = [fit_map(el.TET, w) for w in _kuhn_tets((0, 0, 0), 1)]
        mesh = CoarseMesh([el.TET] * 6, maps)
        mesh.glue_from_geometry()
    elif name == "hybrid_cube":
        h = F(1, 2)
        shapes, maps = [], []
        # octant at the origin: six Kuhn tets
        for w in _kuhn_tets((0, 0, 0), h):
            shapes.append(el.TET)
            maps.append(fit_map(el.TET, w))
        # three prism octants facing the tet octant; each is a pair of
        # prisms whose triangular cross-section diagonal continues the
        # Kuhn split of the shared octant face
        prism_octants = [
            # (octant lo, extrusion axis)
            ((h, 0, 0), 0),
            ((0, h, 0), 1),
            ((0, 0, h), 2),
        ]
        for lo, axis in prism_octants:
            u, v = [i for i in range(3) if i != axis]
            # cross-section square in (u, v), split along its main diagonal
            tri_a = [(0, 0), (h, 0), (h, h)]
            tri_b = [(0, 0), (h, h), (0, h)]
            for tri in (tri_a, tri_b):
                corners = []
                for w_axis in (0, h):
                    for (cu, cv) in tri:
                        p = [0, 0, 0]
                        p[axis] = Fraction(lo[axis]) + w_axis
                        p[u] = Fraction(lo[u]) + cu
                        p[v] = Fraction(lo[v]) + cv
                        corners.append(tuple(p))
                shapes.append(el.PRISM)
                maps.append(fit_map(el.PRISM, corners))
        # four hex octants
        for lo in ((h, h, 0), (h, 0, h), (0, h, h), (h, h, h)):
            shapes.append(el.HEX)
            maps.append(_box_map(lo, tuple(F(c) + h for c in lo)))
        mesh = CoarseMesh(shapes, maps)
        mesh.glue_from_geometry()
    else:
        raise ValueError("unknown cmesh name %r" % (name,))
    mesh.name = name
    mesh.validate()
    return mesh


BUILTIN_NAMES = ("hex_cube", "quad_unit", "quad_periodic", "tri_unit",
                 "tet_cube", "hybrid_cube")
