"""Ghost (halo) layers for adaptive, non-conforming, hybrid forest-of-trees
meshes with simulated parallel ranks.

The package is organized bottom-up: `elements` holds the per-shape kernels
(children, neighbors, space-filling-curve indices), `cmesh` the coarse mesh
of glued trees, `forest` the distributed leaf storage with owner queries,
`search` the pruned top-down traversal, `ghost` the three ghost-layer
variants, `oracle` the brute-force geometric cross-check, `harness` the
scenario driver, and `cli` / `vtk` the user-facing front ends.
"""

from .elements import (Element, LINE, TRI, QUAD, TET, HEX, PRISM,
                       DEFAULT_MAX_LEVEL)
from .cmesh import CoarseMesh, builtin_cmesh, BUILTIN_NAMES
from .forest import Forest, new_uniform, adapt, repartition, balance_naive
from .ghost import (GhostLayer, ghost_v1, ghost_v2, compute_mirrors,
                    exchange, ALGORITHMS)
from .harness import (ScenarioConfig, RunReport, build_forest, run_scenario,
                      verify, compare_algorithms, efficiency)
from .oracle import leaf_adjacency, oracle_ghosts
from .vtk import export_vtk

__version__ = "1.0.0"

__all__ = [
    "Element", "LINE", "TRI", "QUAD", "TET", "HEX", "PRISM",
    "DEFAULT_MAX_LEVEL", "CoarseMesh", "builtin_cmesh", "BUILTIN_NAMES",
    "Forest", "new_uniform", "adapt", "repartition", "balance_naive",
    "GhostLayer", "ghost_v1", "ghost_v2", "compute_mirrors",
    "exchange", "ALGORITHMS", "ScenarioConfig", "RunReport", "build_forest",
    "run_scenario", "verify", "compare_algorithms", "efficiency",
    "leaf_adjacency", "oracle_ghosts", "export_vtk",
]
