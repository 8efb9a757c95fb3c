"""Legacy ASCII VTK export of forest leaves.

Points are deduplicated by exact (integer-scaled) world coordinates before
being written as floats, so the output is bit-stable.
"""

from . import elements as el
from .oracle import _scaled_int_maps

# map z-order / table vertex order to VTK cell connectivity order
_VTK_ORDER = {
    el.LINE: (0, 1),
    el.TRI: (0, 1, 2),
    el.QUAD: (0, 1, 3, 2),
    el.TET: (0, 1, 2, 3),
    el.HEX: (0, 1, 3, 2, 4, 5, 7, 6),
    el.PRISM: (0, 1, 2, 3, 4, 5),
}


def export_vtk(F, fh, title="forest"):
    """Write all leaves as an unstructured grid with rank/level cell data."""
    origins, mats, _, T = _scaled_int_maps(F)
    denom = float(T * (1 << F.max_level))
    points = {}
    order = []
    cells = []
    types = []
    ranks = []
    levels = []
    for gi in range(F.num_leaves):
        K, E = F.global_leaf(gi)
        ids = []
        for v in el.vertices(E, F.max_level):
            w = _int_apply(origins[K], mats[K], v)
            pid = points.get(w)
            if pid is None:
                pid = len(order)
                points[w] = pid
                order.append(w)
            ids.append(pid)
        cells.append([ids[i] for i in _VTK_ORDER[E.shape]])
        types.append(el.VTK_CELL_TYPE[E.shape])
        ranks.append(F.leaf_owner_by_index(gi))
        levels.append(E.level)
    fh.write("# vtk DataFile Version 3.0\n%s\nASCII\n" % title)
    fh.write("DATASET UNSTRUCTURED_GRID\n")
    fh.write("POINTS %d float\n" % len(order))
    for w in order:
        fh.write("%g %g %g\n" % (w[0] / denom, w[1] / denom, w[2] / denom))
    size = sum(len(c) + 1 for c in cells)
    fh.write("CELLS %d %d\n" % (len(cells), size))
    for c in cells:
        fh.write("%d %s\n" % (len(c), " ".join(str(i) for i in c)))
    fh.write("CELL_TYPES %d\n" % len(cells))
    for t in types:
        fh.write("%d\n" % t)
    fh.write("CELL_DATA %d\n" % len(cells))
    for name, data in (("rank", ranks), ("level", levels)):
        fh.write("SCALARS %s int 1\nLOOKUP_TABLE default\n" % name)
        for v in data:
            fh.write("%d\n" % v)


def _int_apply(origin, cols, v):
    cx, cy, cz = cols
    return (origin[0] + cx[0] * v[0] + cy[0] * v[1] + cz[0] * v[2],
            origin[1] + cx[1] * v[0] + cy[1] * v[1] + cz[1] * v[2],
            origin[2] + cx[2] * v[0] + cy[2] * v[1] + cz[2] * v[2])
