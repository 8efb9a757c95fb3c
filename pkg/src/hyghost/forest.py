"""Partitioned adaptive forest: linear leaf storage, refinement drivers,
cross-tree neighbor construction, and SFC-based owner queries.

Leaves are stored per tree in ascending SFC order; the partition into P
simulated ranks is a split of the global (tree-major) leaf sequence into
contiguous slices.  Owner queries binary-search the partition markers,
which record the first descendant of each rank's first leaf.
"""

import bisect
from dataclasses import dataclass

from . import elements as el
from . import _tables as tb

BOUNDARY = None  # face_neighbor result for unconnected tree faces


@dataclass(frozen=True)
class SfcMarker:
    """First descendant (tree id + max-level SFC index) of a rank's first leaf."""
    tree: int
    index: int

    def key(self):
        return (self.tree, self.index)


@dataclass(frozen=True)
class OwnerRange:
    p_first: int
    p_last: int


class Forest:
    """Adaptive forest over a CoarseMesh, partitioned into P ranks."""

    def __init__(self, cmesh, P, max_level=None):
        self.cmesh = cmesh
        self.P = P
        self.max_level = el.DEFAULT_MAX_LEVEL if max_level is None else max_level
        self.tree_leaves = [[] for _ in range(cmesh.num_trees)]
        self.tree_lids = [[] for _ in range(cmesh.num_trees)]
        self.offsets = [0] * (P + 1)  # global leaf index per rank boundary
        self.tree_starts = [0] * (cmesh.num_trees + 1)
        self.markers = []

    # -- bookkeeping -----------------------------------------------------

    def _rebuild_index(self):
        acc = 0
        for K, leaves in enumerate(self.tree_leaves):
            self.tree_starts[K] = acc
            acc += len(leaves)
        self.tree_starts[self.cmesh.num_trees] = acc
        self.markers = []
        sentinel = SfcMarker(self.cmesh.num_trees, 0)
        for p in range(self.P):
            gi = self.offsets[p]
            if gi >= acc:
                self.markers.append(sentinel)
            else:
                K = bisect.bisect_right(self.tree_starts, gi) - 1
                li = gi - self.tree_starts[K]
                self.markers.append(SfcMarker(K, self.tree_lids[K][li]))
        self.markers.append(sentinel)
        self._marker_keys = [m.key() for m in self.markers]

    @property
    def num_leaves(self):
        return self.tree_starts[-1]

    def global_leaf(self, gi):
        """(tree, element) of the gi-th leaf in global SFC order."""
        K = bisect.bisect_right(self.tree_starts, gi) - 1
        return K, self.tree_leaves[K][gi - self.tree_starts[K]]

    def rank_slice(self, p):
        """Global index range [lo, hi) of rank p's leaves."""
        return self.offsets[p], self.offsets[p + 1]

    def iter_rank_trees(self, p):
        """Yield (tree, local index lo, local index hi) slices of rank p."""
        lo, hi = self.rank_slice(p)
        while lo < hi:
            K = bisect.bisect_right(self.tree_starts, lo) - 1
            tree_hi = min(hi, self.tree_starts[K + 1])
            yield K, lo - self.tree_starts[K], tree_hi - self.tree_starts[K]
            lo = tree_hi

    def leaf_owner_by_index(self, gi):
        return bisect.bisect_right(self.offsets, gi, 1, self.P) - 1

    # -- owner queries ---------------------------------------------------

    def _owner_of_key(self, K, lid, lo=0, hi=None):
        hi = self.P - 1 if hi is None else hi
        i = bisect.bisect_right(self._marker_keys, (K, lid), lo, hi + 1)
        return i - 1 if i > lo else lo

    def owner_of(self, K, E, lo=0, hi=None):
        """Owner rank of an element with a unique owner (leaf or deeper)."""
        return self._owner_of_key(K, el.linear_id(E, self.max_level), lo, hi)

    def owner_range(self, K, E, lo=0, hi=None):
        a, b = el.descendant_id_range(E, self.max_level)
        return OwnerRange(self._owner_of_key(K, a, lo, hi),
                          self._owner_of_key(K, b - 1, lo, hi))

    def _face_descendant_lid(self, K, E, f, last):
        """Max-level SFC index of the first/last face descendant of (E, f)."""
        L = self.max_level
        lid = el.linear_id(E, L)
        s = E.shape
        n = el.NUM_CHILDREN[s]
        t = E.etype
        for lv in range(E.level, L):
            step = n ** (L - lv - 1)
            if s in (el.LINE, el.QUAD, el.HEX):
                axis, hi_side = f >> 1, f & 1
                # first/last child on this face in Morton order
                free = [a for a in range(el.DIM[s]) if a != axis]
                i = hi_side << axis
                if last:
                    for a in free:
                        i |= 1 << a
            elif s == el.TRI:
                ids = tb.TRI_CHILDREN_AT_FACE[(t, f)]
                pos = -1 if last else 0
                i = ids[pos]
                f = tb.TRI_CHILD_FACE[(t, f)][pos]
                t = tb.TRI_CHILDREN[t][i][1]
            elif s == el.TET:
                ids = tb.TET_CHILDREN_AT_FACE[(t, f)]
                pos = -1 if last else 0
                i = ids[pos]
                f = tb.TET_CHILD_FACE[(t, f)][pos]
                t = tb.TET_CHILDREN[t][i][1]
            elif s == el.PRISM:
                if f < 3:
                    ids = tb.TRI_CHILDREN_AT_FACE[(t, f)]
                    ti = ids[-1 if last else 0]
                    i = ti + (4 if last else 0)
                    f = tb.TRI_CHILD_FACE[(t, f)][-1 if last else 0]
                    t = tb.TRI_CHILDREN[t][ti][1]
                else:
                    zb = 0 if f == 3 else 1
                    ti = 3 if last else 0  # tri children 0..3 all touch
                    i = 4 * zb + ti
                    t = tb.TRI_CHILDREN[t][ti][1]
            else:
                raise ValueError("unknown shape %r" % (s,))
            lid += i * step
        return lid

    def first_owner_at_face(self, K, E, f, lo=0, hi=None):
        return self._owner_of_key(K, self._face_descendant_lid(K, E, f, False), lo, hi)

    def last_owner_at_face(self, K, E, f, lo=0, hi=None):
        return self._owner_of_key(K, self._face_descendant_lid(K, E, f, True), lo, hi)

    def owners_at_face(self, K, E, f, lo=0, hi=None):
        """All ranks owning leaves that touch face f of E (Alg-2 recursion)."""
        hi = self.P - 1 if hi is None else hi
        pf = self.first_owner_at_face(K, E, f, lo, hi)
        pl = self.last_owner_at_face(K, E, f, lo, hi)
        out = set()
        self._owners_rec(K, E, f, pf, pl, out)
        return out

    def _owners_rec(self, K, E, f, pf, pl, out):
        if pf == pl or pf == pl - 1:
            out.add(pf)
            out.add(pl)
            return
        if E.level >= self.max_level:
            out.add(pf)
            out.add(pl)
            return
        ids = el.children_at_face(E, f)
        ch = el.children(E, self.max_level)
        last_pos = len(ids) - 1
        for pos, i in enumerate(ids):
            C = ch[i]
            cf = el.child_face(E, pos, f)
            # first child at the face shares E's first face descendant, the
            # last child its last one; the rest are searched in [pf, pl]
            cpf = pf if pos == 0 else self.first_owner_at_face(K, C, cf, pf, pl)
            cpl = pl if pos == last_pos else self.last_owner_at_face(K, C, cf, pf, pl)
            self._owners_rec(K, C, cf, cpf, cpl, out)

    # -- neighbors -------------------------------------------------------

    def face_neighbor(self, K, E, f):
        """Same-level neighbor (K', E', f') across face f, or BOUNDARY."""
        L = self.max_level
        N, df = el.face_neighbor_inside(E, f, L)
        if el.is_inside_root(N, L):
            return K, N, df
        g = el.tree_face(E, f, L)
        conn = self.cmesh.face_connection(K, g)
        if conn is None:
            return BOUNDARY
        K2, g2, o_eff, sign = conn
        F = el.boundary_face(E, f, L)
        F2 = el.transform_face(F, o_eff, sign, L)
        E2, dual = el.extrude_face(F2, self.cmesh.shapes[K2], g2, L)
        return K2, E2, dual

    def half_face_neighbors(self, K, E, f):
        """Level ℓ+1 neighbors across face f (BOUNDARY entries for
        unconnected tree faces); order follows E's face children."""
        if E.level >= self.max_level:
            raise ValueError("max level exceeded")
        ids = el.children_at_face(E, f)
        ch = el.children(E, self.max_level)
        out = []
        for pos, i in enumerate(ids):
            cf = el.child_face(E, pos, f)
            out.append(self.face_neighbor(K, ch[i], cf))
        return out

    # -- construction / refinement --------------------------------------

    def dump(self, fh):
        for K, leaves in enumerate(self.tree_leaves):
            for E in leaves:
                fh.write("leaf %d %d %d %d %d %d\n" %
                         (K, E.level, E.etype, E.x, E.y, E.z))


def new_uniform(cmesh, level, P, max_level=None):
    """Uniform forest of the given level, evenly split over P ranks."""
    F = Forest(cmesh, P, max_level)
    L = F.max_level
    if level > L:
        raise ValueError("level exceeds max level")
    for K, shape in enumerate(cmesh.shapes):
        n = el.NUM_CHILDREN[shape]
        step = n ** (L - level)
        leaves = []
        stack = [el.root_element(shape)]
        while stack:
            E = stack.pop()
            if E.level == level:
                leaves.append(E)
            else:
                stack.extend(reversed(el.children(E, L)))
        F.tree_leaves[K] = leaves
        lids = [i * step for i in range(len(leaves))]
        for E, lid in zip(leaves, lids):
            E._lid = (L, lid)
        F.tree_lids[K] = lids
    _split_even(F)
    return F


def _split_even(F):
    total = sum(len(t) for t in F.tree_leaves)
    base, rem = divmod(total, F.P)
    F.offsets = [0]
    for p in range(F.P):
        F.offsets.append(F.offsets[-1] + base + (1 if p < rem else 0))
    F._rebuild_index()


def adapt(F, callback):
    """One refinement/coarsening sweep.

    callback(tree, leaf) returns +1 (refine), -1 (coarsen) or 0 (keep).
    Coarsening happens only when a complete sibling family is stored
    consecutively on one rank and every member votes -1.  Levels clamp at
    0 and the forest's max level.  Ranks keep their (resized) leaf ranges.
    """
    L = F.max_level
    new_tree_leaves = [[] for _ in range(F.cmesh.num_trees)]
    new_counts = [0] * F.P
    for p in range(F.P):
        for K, lo, hi in F.iter_rank_trees(p):
            leaves = F.tree_leaves[K]
            out = new_tree_leaves[K]
            n_before = len(out)
            i = lo
            while i < hi:
                E = leaves[i]
                verdict = callback(K, E)
                if verdict > 0 and E.level < L:
                    lid = el.linear_id(E, L)
                    step = el.NUM_CHILDREN[E.shape] ** (L - E.level - 1)
                    for ci, C in enumerate(el.children(E, L)):
                        C._lid = (L, lid + ci * step)
                        out.append(C)
                    i += 1
                    continue
                if verdict < 0 and E.level > 0:
                    n = el.NUM_CHILDREN[E.shape]
                    fam = leaves[i:min(i + n, hi)]  # stay inside this rank
                    if (len(fam) == n and el.child_id(E, L) == 0 and
                            all(s.level == E.level for s in fam) and
                            all(el.parent(s, L) == el.parent(E, L) for s in fam[1:]) and
                            all(callback(K, s) < 0 for s in fam[1:])):
                        out.append(el.parent(E, L))
                        i += n
                        continue
                out.append(E)
                i += 1
            new_counts[p] += len(out) - n_before
    F.tree_leaves = new_tree_leaves
    F.tree_lids = [[el.linear_id(E, L) for E in leaves] for leaves in new_tree_leaves]
    F.offsets = [0]
    for p in range(F.P):
        F.offsets.append(F.offsets[-1] + new_counts[p])
    F._rebuild_index()
    return F


def repartition(F):
    """Restore the contiguous even split over ranks."""
    _split_even(F)
    return F


def is_balanced(F):
    """True iff face-adjacent leaves differ by at most one level."""
    from . import oracle
    return all(abs(E1.level - E2.level) <= 1
               for (_, E1), (_, E2) in oracle.leaf_adjacency(F))


def balance_naive(F):
    """Fixed-point 2:1 balancing sweep (test scaffolding, not scalable):
    refine any leaf more than one level coarser than a face neighbor."""
    from . import oracle
    while True:
        marks = set()
        for (K1, E1), (K2, E2) in oracle.leaf_adjacency(F):
            if E1.level - E2.level >= 2:
                marks.add((K2, E2.key()))
            elif E2.level - E1.level >= 2:
                marks.add((K1, E1.key()))
        if not marks:
            return F
        adapt(F, lambda K, E: 1 if (K, E.key()) in marks else 0)
