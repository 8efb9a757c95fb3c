"""Ghost-layer construction: three variants plus the symmetric exchange.

Variant 1 (balanced forests only) walks half-size face neighbors and their
unique owners; variant 2 walks same-level neighbors and the owners-at-face
recursion; variant 3 embeds variant 2's leaf loop into the pruned top-down
search so that locally surrounded subtrees are skipped entirely.
"""

import time
from dataclasses import dataclass, field

from . import elements as el
from .forest import BOUNDARY
from .search import SearchStats, forest_search

CSV_HEADER = "rank,elements,ghosts,remotes,visited_leaves,pruned,seconds"


@dataclass
class GhostLayer:
    """Exchange result for one rank."""
    rank: int
    remotes: list            # ranks q with R_p^q nonempty, ascending
    mirrors: dict            # q -> ascending [(tree, Element)]  (R_p^q)
    ghosts: dict             # q -> ascending [(tree, Element)]  (R_q^p)

    @property
    def num_ghosts(self):
        return sum(len(v) for v in self.ghosts.values())

    @property
    def num_mirrors(self):
        return sum(len(v) for v in self.mirrors.values())


def _sorted_mirrors(raw, max_level):
    key = lambda te: (te[0], el.linear_id(te[1], max_level))
    return {q: sorted(s, key=key) for q, s in sorted(raw.items()) if s}


def ghost_v1(F, p):
    """Mirror sets of rank p via half-face neighbors (2:1 balanced input)."""
    raw = {}
    lo, hi = F.rank_slice(p)
    for gi in range(lo, hi):
        K, E = F.global_leaf(gi)
        for f in range(el.NUM_FACES[E.shape]):
            if E.level < F.max_level:
                halves = F.half_face_neighbors(K, E, f)
            else:
                halves = [F.face_neighbor(K, E, f)]
            for res in halves:
                if res is BOUNDARY:
                    continue
                K2, E2, _ = res
                q = F.owner_of(K2, E2)
                if q != p:
                    raw.setdefault(q, set()).add((K, E))
    return _sorted_mirrors(raw, F.max_level)


def ghost_v2(F, p):
    """Mirror sets of rank p via same-level neighbors + owners_at_face."""
    raw = {}
    lo, hi = F.rank_slice(p)
    for gi in range(lo, hi):
        K, E = F.global_leaf(gi)
        _leaf_owners_into(F, p, K, E, 0, F.P - 1, raw)
    return _sorted_mirrors(raw, F.max_level)


def _leaf_owners_into(F, p, K, E, lo, hi, raw):
    for f in range(el.NUM_FACES[E.shape]):
        res = F.face_neighbor(K, E, f)
        if res is BOUNDARY:
            continue
        K2, E2, f2 = res
        for q in F.owners_at_face(K2, E2, f2, lo, hi):
            if q != p:
                raw.setdefault(q, set()).add((K, E))


class _GhostCtx:
    __slots__ = ("F", "p", "raw", "windows")

    def __init__(self, F, p):
        self.F = F
        self.p = p
        self.raw = {}
        self.windows = {}


def ghost_match(K, E, is_leaf, view, ctx, depth):
    """Search callback (the optimized ghost kernel).

    Leaf branch accumulates remote owners like ghost_v2; the non-leaf
    branch prunes exactly the locally surrounded subtrees, windowing all
    owner searches by the bounding ranks stored at the previous level.
    """
    F, p = ctx.F, ctx.p
    lo, hi = ctx.windows.get(depth - 1, (0, F.P - 1))
    if is_leaf:
        _leaf_owners_into(F, p, K, E, lo, hi, ctx.raw)
        return True
    rng = F.owner_range(K, E, lo, hi)
    foreign = rng.p_first != p or rng.p_last != p
    env_lo, env_hi = rng.p_first, rng.p_last
    # always refresh the per-face bounds, even once foreign is known
    for f in range(el.NUM_FACES[E.shape]):
        res = F.face_neighbor(K, E, f)
        if res is BOUNDARY:
            continue
        K2, E2, f2 = res
        pf = F.first_owner_at_face(K2, E2, f2, lo, hi)
        pl = F.last_owner_at_face(K2, E2, f2, lo, hi)
        if pf != p or pl != p:
            foreign = True
        env_lo = min(env_lo, pf)
        env_hi = max(env_hi, pl)
    ctx.windows[depth] = (env_lo, env_hi)
    return foreign


def ghost(F, p):
    """Optimized mirror construction (pruned search); returns
    (mirrors, search stats)."""
    ctx = _GhostCtx(F, p)
    stats = forest_search(F, p, ghost_match, ctx)
    return _sorted_mirrors(ctx.raw, F.max_level), stats


ALGORITHMS = {"v1": ghost_v1, "v2": ghost_v2, "v3": lambda F, p: ghost(F, p)[0]}


def compute_mirrors(F, algo="v3", with_stats=False):
    """Run the chosen variant on every rank."""
    mirrors, stats, seconds = [], [], []
    for p in range(F.P):
        t0 = time.perf_counter()
        if algo == "v3":
            m, st = ghost(F, p)
        else:
            m = ALGORITHMS[algo](F, p)
            st = SearchStats()
            lo, hi = F.rank_slice(p)
            st.visited_leaves = hi - lo  # leaf loops visit every local leaf
        seconds.append(time.perf_counter() - t0)
        mirrors.append(m)
        stats.append(st)
    if with_stats:
        return mirrors, stats, seconds
    return mirrors


def exchange(F, mirrors_all):
    """Deliver all mirror sets; asserts the R_p^q <-> R_q^p symmetry."""
    for p in range(F.P):
        for q in mirrors_all[p]:
            if not mirrors_all[q].get(p):
                raise AssertionError(
                    "ghost symmetry violated: R_%d^%d nonempty but R_%d^%d empty"
                    % (p, q, q, p))
    layers = []
    for p in range(F.P):
        ghosts = {q: list(mirrors_all[q][p])
                  for q in sorted(qq for qq in range(F.P)
                                  if mirrors_all[qq].get(p))}
        layers.append(GhostLayer(rank=p, remotes=sorted(mirrors_all[p]),
                                 mirrors=mirrors_all[p], ghosts=ghosts))
    return layers


def stats_csv_rows(F, layers, stats, seconds):
    """One CSV row per rank (schema in CSV_HEADER)."""
    rows = []
    for p in range(F.P):
        lo, hi = F.rank_slice(p)
        rows.append("%d,%d,%d,%d,%d,%d,%.6f" % (
            p, hi - lo, layers[p].num_ghosts, len(layers[p].remotes),
            stats[p].visited_leaves, stats[p].pruned, seconds[p]))
    return rows
