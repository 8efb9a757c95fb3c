"""Low-level per-shape element kernels.

Elements live on the integer lattice of their root tree: an element of
refinement level ``l`` has edge length ``h = 2**(L - l)`` where ``L`` is the
global maximum level, and its anchor coordinates are multiples of ``h``.
Supported shapes are line, quad and hex (Morton / bitwise arithmetic) and
triangle, tet and prism (red refinement, driven by the frozen lookup tables
in ``_tables``; the prism is the product line x triangle).

All functions here are pure; an :class:`Element` is immutable.
"""

import os

from . import _tables as tb

DEFAULT_MAX_LEVEL = int(os.environ.get("HYGHOST_LMAX", "18"))

LINE = "line"
TRI = "tri"
QUAD = "quad"
TET = "tet"
HEX = "hex"
PRISM = "prism"

SHAPES = (LINE, TRI, QUAD, TET, HEX, PRISM)

DIM = {LINE: 1, TRI: 2, QUAD: 2, TET: 3, HEX: 3, PRISM: 3}
NUM_CHILDREN = {LINE: 2, TRI: 4, QUAD: 4, TET: 8, HEX: 8, PRISM: 8}
NUM_FACES = {LINE: 2, TRI: 3, QUAD: 4, TET: 4, HEX: 6, PRISM: 5}
NUM_TYPES = {LINE: 1, TRI: 2, QUAD: 1, TET: 6, HEX: 1, PRISM: 2}

# shape of each face, per volume shape
FACE_SHAPE = {
    LINE: ("point", "point"),
    TRI: (LINE, LINE, LINE),
    QUAD: (LINE, LINE, LINE, LINE),
    TET: (TRI, TRI, TRI, TRI),
    HEX: (QUAD, QUAD, QUAD, QUAD, QUAD, QUAD),
    PRISM: (QUAD, QUAD, QUAD, TRI, TRI),
}

# VTK cell type ids, used by the export path
VTK_CELL_TYPE = {LINE: 3, TRI: 5, QUAD: 9, TET: 10, HEX: 12, PRISM: 13}


class Element:
    """A (hypothetical or leaf) mesh cell: shape, level, anchor, type."""

    __slots__ = ("shape", "level", "x", "y", "z", "etype", "_lid")

    def __init__(self, shape, level, x, y, z=0, etype=0):
        self.shape = shape
        self.level = level
        self.x = x
        self.y = y
        self.z = z
        self.etype = etype
        self._lid = None

    @property
    def anchor(self):
        return (self.x, self.y, self.z)

    def key(self):
        return (self.shape, self.level, self.x, self.y, self.z, self.etype)

    def __eq__(self, other):
        return isinstance(other, Element) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Element(%s, l=%d, (%d,%d,%d), t=%d)" % (
            self.shape, self.level, self.x, self.y, self.z, self.etype)


def root_element(shape):
    return Element(shape, 0, 0, 0, 0, 0)


def _L(max_level):
    return DEFAULT_MAX_LEVEL if max_level is None else max_level


def elem_size(E, max_level=None):
    """Edge length h = 2**(L - level) on the integer lattice."""
    return 1 << (_L(max_level) - E.level)


def num_children(E):
    return NUM_CHILDREN[E.shape]


def num_faces(E):
    return NUM_FACES[E.shape]


def num_face_children(E, f):
    if not 0 <= f < NUM_FACES[E.shape]:
        raise ValueError("invalid face index %r for %s" % (f, E.shape))
    return 2 if DIM[E.shape] == 2 else 4 if DIM[E.shape] == 3 else 1


# ---------------------------------------------------------------------------
# refinement: children / parent / child_id

def children(E, max_level=None):
    """All n children of E, ascending in SFC order (child 0 keeps the anchor)."""
    L = _L(max_level)
    if E.level >= L:
        raise ValueError("max level exceeded")
    h2 = 1 << (L - E.level - 1)
    s, lv = E.shape, E.level + 1
    x, y, z = E.x, E.y, E.z
    out = []
    if s == LINE:
        out = [Element(s, lv, x, 0, 0), Element(s, lv, x + h2, 0, 0)]
    elif s in (QUAD, HEX):
        d = DIM[s]
        for i in range(1 << d):
            out.append(Element(s, lv, x + h2 * (i & 1), y + h2 * ((i >> 1) & 1),
                               z + h2 * ((i >> 2) & 1)))
    elif s == TRI:
        for off, ct in tb.TRI_CHILDREN[E.etype]:
            out.append(Element(s, lv, x + h2 * off[0], y + h2 * off[1], 0, ct))
    elif s == TET:
        for off, ct in tb.TET_CHILDREN[E.etype]:
            out.append(Element(s, lv, x + h2 * off[0], y + h2 * off[1],
                               z + h2 * off[2], ct))
    elif s == PRISM:
        for zb in (0, 1):
            for off, ct in tb.TRI_CHILDREN[E.etype]:
                out.append(Element(s, lv, x + h2 * off[0], y + h2 * off[1],
                                   z + h2 * zb, ct))
    else:
        raise ValueError("unknown shape %r" % (s,))
    return out


def _cube_id(E, max_level=None):
    """Which corner of the parent's 2h-cube the anchor sits in (zyx bits)."""
    sh = _L(max_level) - E.level
    cid = (E.x >> sh) & 1
    if DIM[E.shape] >= 2:
        cid |= ((E.y >> sh) & 1) << 1
    if DIM[E.shape] == 3:
        cid |= ((E.z >> sh) & 1) << 2
    return cid


def parent(E, max_level=None):
    if E.level == 0:
        raise ValueError("root has no parent")
    L = _L(max_level)
    mask = ~((1 << (L - E.level + 1)) - 1)
    x, y, z = E.x & mask, E.y & mask, E.z & mask
    s = E.shape
    if s in (LINE, QUAD, HEX):
        pt = 0
    elif s == TRI:
        pt = tb.TRI_PARENT_TYPE[(E.etype, _cube_id(E, L) & 3)]
    elif s == TET:
        pt = tb.TET_PARENT_TYPE[(E.etype, _cube_id(E, L))]
    elif s == PRISM:
        pt = tb.TRI_PARENT_TYPE[(E.etype, _cube_id(E, L) & 3)]
    else:
        raise ValueError("unknown shape %r" % (s,))
    return Element(s, E.level - 1, x, y, z, pt)


def child_id(E, max_level=None):
    if E.level == 0:
        raise ValueError("root has no child id")
    L = _L(max_level)
    cid = _cube_id(E, L)
    s = E.shape
    if s in (LINE, QUAD, HEX):
        return cid
    if s == TRI:
        pt = tb.TRI_PARENT_TYPE[(E.etype, cid)]
        return tb.TRI_CHILD_INDEX[pt][(cid, E.etype)]
    if s == TET:
        pt = tb.TET_PARENT_TYPE[(E.etype, cid)]
        return tb.TET_CHILD_INDEX[pt][(cid, E.etype)]
    if s == PRISM:
        tcid = cid & 3
        pt = tb.TRI_PARENT_TYPE[(E.etype, tcid)]
        return 4 * (cid >> 2) + tb.TRI_CHILD_INDEX[pt][(tcid, E.etype)]
    raise ValueError("unknown shape %r" % (s,))


# ---------------------------------------------------------------------------
# geometry: vertices and root containment

def vertices(E, max_level=None):
    """Integer vertex coordinates (always 3-tuples, unused axes 0)."""
    h = elem_size(E, max_level)
    x, y, z = E.x, E.y, E.z
    s, t = E.shape, E.etype
    if s == LINE:
        return [(x, 0, 0), (x + h, 0, 0)]
    if s == QUAD:
        return [(x + h * (i & 1), y + h * ((i >> 1) & 1), 0) for i in range(4)]
    if s == HEX:
        return [(x + h * (i & 1), y + h * ((i >> 1) & 1), z + h * ((i >> 2) & 1))
                for i in range(8)]
    if s == TRI:
        if t == 0:
            return [(x, y, 0), (x + h, y, 0), (x + h, y + h, 0)]
        return [(x, y, 0), (x, y + h, 0), (x + h, y + h, 0)]
    if s == TET:
        ei = t // 2
        ej = (ei + 2) % 3 if t % 2 == 0 else (ei + 1) % 3
        v0 = [x, y, z]
        v1 = list(v0)
        v1[ei] += h
        v2 = list(v1)
        v2[ej] += h
        return [tuple(v0), tuple(v1), tuple(v2), (x + h, y + h, z + h)]
    if s == PRISM:
        if t == 0:
            base = [(x, y), (x + h, y), (x + h, y + h)]
        else:
            base = [(x, y), (x, y + h), (x + h, y + h)]
        return [(px, py, z) for px, py in base] + [(px, py, z + h) for px, py in base]
    raise ValueError("unknown shape %r" % (s,))


def _vertex_in_root(s, v, S):
    x, y, z = v
    if s == LINE:
        return 0 <= x <= S
    if s == QUAD:
        return 0 <= x <= S and 0 <= y <= S
    if s == HEX:
        return 0 <= x <= S and 0 <= y <= S and 0 <= z <= S
    if s == TRI:
        return 0 <= y <= x <= S
    if s == TET:
        return 0 <= y <= z <= x <= S
    if s == PRISM:
        return 0 <= y <= x <= S and 0 <= z <= S
    raise ValueError("unknown shape %r" % (s,))


def is_inside_root(E, max_level=None):
    S = 1 << _L(max_level)
    return all(_vertex_in_root(E.shape, v, S) for v in vertices(E, max_level))


# ---------------------------------------------------------------------------
# same-level face neighbors within the tree

# cube shapes: face f moves axis f//2 in direction (-1)**(1 - f%2); dual = f^1
def face_neighbor_inside(E, f, max_level=None):
    """Same-level neighbor across face f inside the root, plus the dual face."""
    L = _L(max_level)
    h = 1 << (L - E.level)
    s = E.shape
    if s in (LINE, QUAD, HEX):
        axis, hi = f >> 1, f & 1
        d = [0, 0, 0]
        d[axis] = h if hi else -h
        return (Element(s, E.level, E.x + d[0], E.y + d[1], E.z + d[2]), f ^ 1)
    if s == TRI:
        dd, nt, df = tb.TRI_FACE_NEIGHBOR[(E.etype, f)]
        return (Element(s, E.level, E.x + h * dd[0], E.y + h * dd[1], 0, nt), df)
    if s == TET:
        dd, nt, df = tb.TET_FACE_NEIGHBOR[(E.etype, f)]
        return (Element(s, E.level, E.x + h * dd[0], E.y + h * dd[1],
                        E.z + h * dd[2], nt), df)
    if s == PRISM:
        if f < 3:
            dd, nt, df = tb.TRI_FACE_NEIGHBOR[(E.etype, f)]
            return (Element(s, E.level, E.x + h * dd[0], E.y + h * dd[1],
                            E.z, nt), df)
        dz = -h if f == 3 else h
        return (Element(s, E.level, E.x, E.y, E.z + dz, E.etype), 7 - f)
    raise ValueError("unknown shape %r" % (s,))


def neighbor_is_inside_root(E, f, max_level=None):
    N, _ = face_neighbor_inside(E, f, max_level)
    return is_inside_root(N, max_level)


# ---------------------------------------------------------------------------
# tree boundary: tree_face / boundary_face / transform_face / extrude_face

def tree_face(E, f, max_level=None):
    """Root-tree face index g containing face f of E (error if interior)."""
    if neighbor_is_inside_root(E, f, max_level):
        raise ValueError("face not on tree boundary: illegal")
    s = E.shape
    if s in (LINE, QUAD, HEX):
        return f
    if s == TRI:
        return tb.TRI_TREE_FACE[(E.etype, f)]
    if s == TET:
        return tb.TET_TREE_FACE[(E.etype, f)]
    if s == PRISM:
        if f < 3:
            return tb.TRI_TREE_FACE[(E.etype, f)]
        return f
    raise ValueError("unknown shape %r" % (s,))


def boundary_face(E, f, max_level=None):
    """(d-1)-face element F in the coordinate system of tree face g."""
    s = E.shape
    if s == QUAD:
        c = E.y if f < 2 else E.x
        return Element(LINE, E.level, c, 0, 0)
    if s == HEX:
        if f < 2:
            fx, fy = E.y, E.z
        elif f < 4:
            fx, fy = E.x, E.z
        else:
            fx, fy = E.x, E.y
        return Element(QUAD, E.level, fx, fy, 0)
    if s == TRI:
        _, sel = tb.TRI_BOUNDARY[(E.etype, f)]
        return Element(LINE, E.level, E.anchor[sel[0]], 0, 0)
    if s == TET:
        ft, sel = tb.TET_BOUNDARY[(E.etype, f)]
        return Element(TRI, E.level, E.anchor[sel[0]], E.anchor[sel[1]], 0, ft)
    if s == PRISM:
        if f < 3:
            _, sel = tb.TRI_BOUNDARY[(E.etype, f)]
            return Element(QUAD, E.level, E.anchor[sel[0]], E.z, 0)
        return Element(TRI, E.level, E.x, E.y, 0, E.etype)
    raise ValueError("no boundary faces for shape %r" % (s,))


def transform_face(F, o, s=1, max_level=None):
    """Map a face element into the neighbor tree's face coordinates.

    o is the connection orientation, s the permutation sign (+1/-1); for
    line faces s is ignored.  The s = -1 case composes the base reflection
    with the s = +1 rotation.
    """
    L = _L(max_level)
    S = 1 << L
    h = 1 << (L - F.level)
    sh = F.shape
    if sh == LINE:
        if o == 0:
            return Element(LINE, F.level, F.x, 0, 0)
        if o == 1:
            return Element(LINE, F.level, S - F.x - h, 0, 0)
        raise ValueError("invalid orientation %r for line" % (o,))
    if s == -1:
        return transform_face(_transform_reflect(F, L), o, 1, L)
    if sh == QUAD:
        x, y = F.x, F.y
        if o == 0:
            nx, ny = x, y
        elif o == 1:
            nx, ny = S - y - h, x
        elif o == 2:
            nx, ny = y, S - x - h
        elif o == 3:
            nx, ny = S - x - h, S - y - h
        else:
            raise ValueError("invalid orientation %r for quad" % (o,))
        return Element(QUAD, F.level, nx, ny, 0)
    if sh == TRI:
        x, y, t = F.x, F.y, F.etype
        if o == 0:
            nx, ny = x, y
        elif o == 1:
            nx, ny = (S - y - h, x - y) if t == 0 else (S - y - h, x - y - h)
        elif o == 2:
            nx, ny = (S - x + y - h, S - x - h) if t == 0 else \
                     (S - x + y, S - x - h)
        else:
            raise ValueError("invalid orientation %r for triangle" % (o,))
        return Element(TRI, F.level, nx, ny, 0, t)
    raise ValueError("transform_face expects a face shape, got %r" % (sh,))


def _transform_reflect(F, max_level=None):
    """The base s = -1 reflection (o = 0) of a face element."""
    L = _L(max_level)
    h = 1 << (L - F.level)
    if F.shape == QUAD:
        return Element(QUAD, F.level, F.y, F.x, 0)
    if F.shape == TRI:
        ny = F.x - F.y if F.etype == 0 else F.x - F.y - h
        return Element(TRI, F.level, F.x, ny, 0, F.etype)
    if F.shape == LINE:
        return F
    raise ValueError("not a face shape: %r" % (F.shape,))


def extrude_face(F, shape, g, max_level=None):
    """Volume element of `shape` whose face on tree face g equals F.

    Returns (element, dual_face): the element's face index lying on g.
    """
    L = _L(max_level)
    S = 1 << L
    h = 1 << (L - F.level)
    table = {QUAD: tb.QUAD_EXTRUDE, HEX: tb.HEX_EXTRUDE, TRI: tb.TRI_EXTRUDE,
             TET: tb.TET_EXTRUDE, PRISM: tb.PRISM_EXTRUDE}[shape]
    try:
        etype, recipe, dual = table[(g, F.etype)]
    except KeyError:
        raise ValueError("face shape/type mismatch for %s face %d" % (shape, g))
    fy = F.y if DIM[shape] == 3 else 0
    coords = [cx * F.x + cy * fy + ch * h + cs * S for cx, cy, ch, cs in recipe]
    while len(coords) < 3:
        coords.append(0)
    return Element(shape, F.level, coords[0], coords[1], coords[2], etype), dual


# ---------------------------------------------------------------------------
# children at a face

def children_at_face(E, f, max_level=None):
    """Child ids (ascending) of the children of E sharing a subface of f."""
    s = E.shape
    if s == LINE:
        return [0] if f == 0 else [1]
    if s == QUAD:
        axis, hi = f >> 1, f & 1
        return [i for i in range(4) if (i >> axis) & 1 == hi]
    if s == HEX:
        axis, hi = f >> 1, f & 1
        return [i for i in range(8) if (i >> axis) & 1 == hi]
    if s == TRI:
        return list(tb.TRI_CHILDREN_AT_FACE[(E.etype, f)])
    if s == TET:
        return list(tb.TET_CHILDREN_AT_FACE[(E.etype, f)])
    if s == PRISM:
        if f < 3:
            ids = tb.TRI_CHILDREN_AT_FACE[(E.etype, f)]
            return [i for i in ids] + [i + 4 for i in ids]
        return [0, 1, 2, 3] if f == 3 else [4, 5, 6, 7]
    raise ValueError("unknown shape %r" % (s,))


def child_face(E, i, f):
    """Face index of the i-th face child (position in children_at_face order)
    that is a subface of face f of E."""
    s = E.shape
    if s in (LINE, QUAD, HEX):
        return f
    if s == TRI:
        return tb.TRI_CHILD_FACE[(E.etype, f)][i]
    if s == TET:
        return tb.TET_CHILD_FACE[(E.etype, f)][i]
    if s == PRISM:
        if f < 3:
            return tb.TRI_CHILD_FACE[(E.etype, f)][i % 2]
        return f
    raise ValueError("unknown shape %r" % (s,))


# ---------------------------------------------------------------------------
# descendants and SFC order

def first_descendant(E, at_level=None, max_level=None):
    """Descendant with the smallest SFC index (repeated child 0)."""
    L = _L(max_level)
    lv = L if at_level is None else at_level
    if lv < E.level:
        raise ValueError("at_level below element level")
    # child 0 always keeps the anchor and the type
    return Element(E.shape, lv, E.x, E.y, E.z, E.etype)


def last_descendant(E, at_level=None, max_level=None):
    """Descendant with the largest SFC index (repeated child n-1)."""
    L = _L(max_level)
    lv = L if at_level is None else at_level
    if lv < E.level:
        raise ValueError("at_level below element level")
    # the last child sits in the far corner and keeps the type
    off = (1 << (L - E.level)) - (1 << (L - lv))
    d = DIM[E.shape]
    return Element(E.shape, lv, E.x + off, E.y + (off if d >= 2 else 0),
                   E.z + (off if d == 3 else 0), E.etype)


def _face_descendant(E, f, at_level, max_level, last):
    L = _L(max_level)
    lv = L if at_level is None else at_level
    if lv < E.level:
        raise ValueError("at_level below element level")
    while E.level < lv:
        ids = children_at_face(E, f)
        pos = len(ids) - 1 if last else 0
        nf = child_face(E, pos, f)
        E = children(E, L)[ids[pos]]
        f = nf
    return E, f


def first_face_descendant(E, f, at_level=None, max_level=None):
    return _face_descendant(E, f, at_level, max_level, False)[0]


def last_face_descendant(E, f, at_level=None, max_level=None):
    return _face_descendant(E, f, at_level, max_level, True)[0]


def linear_id(E, max_level=None):
    """SFC index of E's first descendant at max level, in [0, n**L).

    Elements of a tree are totally ordered by (linear_id, level); a leaf
    set (pairwise disjoint) is strictly ordered by linear_id alone.
    """
    L = _L(max_level)
    if E._lid is not None and E._lid[0] == L:
        return E._lid[1]
    s = E.shape
    if s in (LINE, QUAD, HEX):
        d = DIM[s]
        lid = 0
        for k in range(1, E.level + 1):
            sh = L - k
            cid = (E.x >> sh) & 1
            if d >= 2:
                cid |= ((E.y >> sh) & 1) << 1
            if d == 3:
                cid |= ((E.z >> sh) & 1) << 2
            lid |= cid << (d * (L - k))
    else:
        # walk the type chain bottom-up, then accumulate child ids
        n = NUM_CHILDREN[s]
        chain = []
        cur = E
        while cur.level > 0:
            chain.append(child_id(cur, L))
            cur = parent(cur, L)
        lid = 0
        for k, cid in enumerate(reversed(chain), start=1):
            lid += cid * n ** (L - k)
    E._lid = (L, lid)
    return lid


def descendant_id_range(E, max_level=None):
    """Half-open [lo, hi) of max-level SFC indices covered by E."""
    L = _L(max_level)
    lo = linear_id(E, L)
    return lo, lo + NUM_CHILDREN[E.shape] ** (L - E.level)


def compare_sfc(E1, E2, max_level=None):
    """-1/0/+1 in depth-first SFC order; ancestors precede descendants."""
    a = (linear_id(E1, max_level), E1.level)
    b = (linear_id(E2, max_level), E2.level)
    return -1 if a < b else (0 if a == b else 1)


def is_ancestor(E1, E2, max_level=None):
    """True iff E2 is a descendant of (or equal to) E1."""
    if E1.shape != E2.shape or E1.level > E2.level:
        return False
    lo1, hi1 = descendant_id_range(E1, max_level)
    lo2 = linear_id(E2, max_level)
    return lo1 <= lo2 < hi1


def nearest_common_ancestor(E1, E2, max_level=None):
    L = _L(max_level)
    a, b = E1, E2
    while a.level > b.level:
        a = parent(a, L)
    while b.level > a.level:
        b = parent(b, L)
    while a != b:
        a = parent(a, L)
        b = parent(b, L)
    return a
