"""Simulated-rank experiment driver.

Builds the test scenarios (uniform, every-third, moving refinement band,
sphere shell), runs a chosen ghost variant on every rank, exchanges, and
reports the per-rank statistics plus the parallel-efficiency arithmetic.
"""

import json
import math
import time
from dataclasses import dataclass, field, asdict

from . import elements as el
from . import forest as ft
from . import ghost as gh
from .cmesh import builtin_cmesh, CoarseMesh, BUILTIN_NAMES

# band-refinement defaults: plane normal direction (1, 1, 1/2) (unit length
# (2/3, 2/3, 1/3)), band width 1/4, speed 1/64
BAND_NORMAL = (2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0)
BAND_WIDTH = 0.25
BAND_SPEED = 1.0 / 64.0


def band_time_step(level):
    """dt(l) = 0.8 / (2**l * v): the coarsest cell crossing time scale."""
    return 0.8 / (2 ** level * BAND_SPEED)


def band_start(level):
    """Plane offset at t = 0: x0(l) = 0.56 - 2.5 dt(l) * v."""
    return 0.56 - 2.5 * band_time_step(level) * BAND_SPEED


@dataclass
class ScenarioConfig:
    cmesh: str = "hex_cube"
    level: int = 2
    extra_levels: int = 0
    pattern: str = "uniform"       # uniform | third | band | shell
    pattern_step: int = 0          # rounds (third) / time step index (band)
    ranks: int = 1
    algo: str = "v3"
    balance: bool = False
    seed: int = 0
    max_level: int = None

    def validate(self):
        L = el.DEFAULT_MAX_LEVEL if self.max_level is None else self.max_level
        if self.level + self.extra_levels > L:
            raise ValueError("level + extra_levels exceeds max level")
        if self.ranks < 1:
            raise ValueError("ranks must be >= 1")
        if self.algo not in ("v1", "v2", "v3"):
            raise ValueError("unknown algorithm %r" % (self.algo,))
        if self.pattern not in ("uniform", "third", "band", "shell"):
            raise ValueError("unknown pattern %r" % (self.pattern,))
        return self


@dataclass
class RunReport:
    config: ScenarioConfig
    rows: list               # per-rank CSV rows
    num_leaves: int
    num_ghosts: int
    mean_elements: float
    max_elements: int
    mean_ghosts: float
    max_ghosts: int
    seconds: float           # ghost phase only, summed over simulated ranks
    efficiency: float = None  # vs. a reference run; None when standalone

    def to_json(self):
        return json.dumps({
            "config": asdict(self.config),
            "efficiency": self.efficiency,
            "totals": {
                "leaves": self.num_leaves, "ghosts": self.num_ghosts,
                "mean_elements_per_rank": self.mean_elements,
                "max_elements_per_rank": self.max_elements,
                "mean_ghosts_per_rank": self.mean_ghosts,
                "max_ghosts_per_rank": self.max_ghosts,
                "seconds": self.seconds,
            },
        }, indent=2, sort_keys=True)


def efficiency(t1, g1, t2, g2):
    """Parallel efficiency of the second of two runs: e = T1 G2 / (T2 G1)."""
    return (t1 * g2) / (t2 * g1)


def load_cmesh(name_or_path):
    if name_or_path in BUILTIN_NAMES:
        return builtin_cmesh(name_or_path)
    with open(name_or_path) as fh:
        return CoarseMesh.load(fh)


# ---------------------------------------------------------------------------
# refinement patterns

def _world_midpoints(F):
    """Float world midpoint per (tree, leaf key); None maps fall back to
    reference coordinates."""
    S = float(1 << F.max_level)
    mids = {}
    for K in range(F.cmesh.num_trees):
        m = F.cmesh.maps[K] if F.cmesh.maps else None
        if m is not None:
            o = [float(c) for c in m.origin]
            cols = [[float(e) for e in col] for col in m.cols]
        for E in F.tree_leaves[K]:
            vs = el.vertices(E, F.max_level)
            rx = sum(v[0] for v in vs) / len(vs) / S
            ry = sum(v[1] for v in vs) / len(vs) / S
            rz = sum(v[2] for v in vs) / len(vs) / S
            if m is None:
                w = (rx, ry, rz)
            else:
                w = tuple(o[i] + rx * cols[0][i] + ry * cols[1][i] + rz * cols[2][i]
                          for i in range(3))
            mids[(K, E.key())] = w
    return mids


def _adapt_marked(F, marks):
    ft.adapt(F, lambda K, E: 1 if (K, E.key()) in marks else 0)


def refine_every_third(F, rounds):
    """Per round: refine the leaves at global SFC position 2 mod 3."""
    for _ in range(rounds):
        marks = set()
        for gi in range(2, F.num_leaves, 3):
            K, E = F.global_leaf(gi)
            marks.add((K, E.key()))
        _adapt_marked(F, marks)
    return F


def band_predicate(mid, level, step):
    """Midpoint lies in the moving band at time index `step` (levels use
    the base level's time scale)."""
    c = band_start(level) + BAND_SPEED * step * band_time_step(level)
    d = sum(BAND_NORMAL[i] * mid[i] for i in range(3)) - c
    return 0.0 <= d <= BAND_WIDTH


def refine_band(F, base_level, extra_levels, step):
    for _ in range(extra_levels):
        mids = _world_midpoints(F)
        marks = set()
        for K in range(F.cmesh.num_trees):
            for E in F.tree_leaves[K]:
                if E.level < base_level + extra_levels and \
                        band_predicate(mids[(K, E.key())], base_level, step):
                    marks.add((K, E.key()))
        _adapt_marked(F, marks)
    return F


SHELL_CENTER = (0.5, 0.5, 0.5)
SHELL_RADIUS = 0.25
SHELL_THICKNESS = 0.1


def shell_predicate(mid):
    r = math.dist(mid, SHELL_CENTER)
    return abs(r - SHELL_RADIUS) <= SHELL_THICKNESS


def refine_shell(F, base_level, extra_levels):
    for _ in range(extra_levels):
        mids = _world_midpoints(F)
        marks = set()
        for K in range(F.cmesh.num_trees):
            for E in F.tree_leaves[K]:
                if E.level < base_level + extra_levels and \
                        shell_predicate(mids[(K, E.key())]):
                    marks.add((K, E.key()))
        _adapt_marked(F, marks)
    return F


def build_forest(cfg):
    """uniform level -> pattern refinement -> optional balance -> even split."""
    cfg.validate()
    mesh = load_cmesh(cfg.cmesh)
    F = ft.new_uniform(mesh, cfg.level, cfg.ranks, cfg.max_level)
    if cfg.pattern == "third":
        refine_every_third(F, cfg.extra_levels or cfg.pattern_step or 1)
    elif cfg.pattern == "band":
        refine_band(F, cfg.level, cfg.extra_levels, cfg.pattern_step)
    elif cfg.pattern == "shell":
        refine_shell(F, cfg.level, cfg.extra_levels)
    if cfg.balance:
        ft.balance_naive(F)
    ft.repartition(F)
    return F


def run_scenario(cfg, forest=None):
    """Build (or reuse) the forest, run the ghost variant, exchange, report."""
    F = build_forest(cfg) if forest is None else forest
    mirrors, stats, seconds = gh.compute_mirrors(F, cfg.algo, with_stats=True)
    layers = gh.exchange(F, mirrors)
    rows = gh.stats_csv_rows(F, layers, stats, seconds)
    counts = [F.rank_slice(p)[1] - F.rank_slice(p)[0] for p in range(F.P)]
    gcounts = [layers[p].num_ghosts for p in range(F.P)]
    report = RunReport(
        config=cfg, rows=rows, num_leaves=F.num_leaves,
        num_ghosts=sum(gcounts),
        mean_elements=sum(counts) / F.P, max_elements=max(counts),
        mean_ghosts=sum(gcounts) / F.P, max_ghosts=max(gcounts),
        seconds=sum(seconds))
    return F, layers, report


def verify(F, mirrors):
    """Set-compare against the brute-force oracle.

    Returns (ok, diffs) with at most 10 differing (rank, q, tree, element,
    which-side) entries.
    """
    from . import oracle
    want, _ = oracle.oracle_ghosts(F)
    diffs = []
    for p in range(F.P):
        have_p = {q: {(K, E.key()) for K, E in v} for q, v in mirrors[p].items() if v}
        want_p = {q: {(K, E.key()) for K, E in v} for q, v in want[p].items() if v}
        for q in sorted(set(have_p) | set(want_p)):
            for K, ek in sorted(have_p.get(q, set()) - want_p.get(q, set())):
                diffs.append((p, q, K, ek, "extra"))
            for K, ek in sorted(want_p.get(q, set()) - have_p.get(q, set())):
                diffs.append((p, q, K, ek, "missing"))
    return not diffs, diffs[:10]


def compare_algorithms(cfg):
    """Run v1 (balanced inputs only), v2 and v3 on one forest; returns
    {algo: {"seconds", "visited_leaves", "ghosts"}} plus the forest."""
    F = build_forest(cfg)
    algos = ["v2", "v3"]
    if cfg.balance or cfg.pattern == "uniform":
        algos.insert(0, "v1")
    table = {}
    ref = None
    for algo in algos:
        mirrors, stats, seconds = gh.compute_mirrors(F, algo, with_stats=True)
        layers = gh.exchange(F, mirrors)
        key_of = lambda ms: [{q: [(K, E.key()) for K, E in v]
                              for q, v in m.items()} for m in ms]
        if ref is None:
            ref = key_of(mirrors)
        elif key_of(mirrors) != ref:
            raise AssertionError("ghost variants disagree on %r" % (cfg,))
        table[algo] = {
            "seconds": sum(seconds),
            "visited_leaves": sum(st.visited_leaves for st in stats),
            "ghosts": sum(l.num_ghosts for l in layers),
        }
    if table["v3"]["visited_leaves"] > table["v2"]["visited_leaves"]:
        raise AssertionError("pruned search visited more leaves than the leaf loop")
    return F, table


# ---------------------------------------------------------------------------
# config files: key=value lines mirroring ScenarioConfig fields

def parse_config(text):
    cfg = ScenarioConfig()
    casts = {"level": int, "extra_levels": int, "pattern_step": int,
             "ranks": int, "seed": int, "max_level": int,
             "balance": lambda v: v.lower() in ("1", "true", "yes")}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        key, _, val = ln.partition("=")
        key, val = key.strip(), val.strip()
        if not hasattr(cfg, key):
            raise ValueError("unknown config key %r" % (key,))
        setattr(cfg, key, casts.get(key, str)(val))
    return cfg.validate()
