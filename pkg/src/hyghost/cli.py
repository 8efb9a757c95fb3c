"""Command-line front end: mesh generation, ghost runs, verification,
table dumps, and VTK export.

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""

import argparse
import json
import sys

from . import elements as el
from . import _tables as tb
from . import ghost as gh
from .harness import (ScenarioConfig, build_forest, run_scenario, verify,
                      compare_algorithms, efficiency)
from .vtk import export_vtk


# ---------------------------------------------------------------------------
# table rendering (diffable against the transcribed reference fixtures)

_COORD = {el.QUAD: ("Q.x", "Q.y"), el.HEX: ("Q.x", "Q.y", "Q.z"),
          el.TRI: ("T.x", "T.y", "T.z"), el.TET: ("T.x", "T.y", "T.z")}


def _poly_str(coeffs, names):
    """Render c0*n0 + c1*n1 + ... with integer coefficients."""
    parts = []
    for c, n in zip(coeffs, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else "%d*" % abs(c)
        parts.append(("-" if c < 0 else "+", mag + n))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += " %s %s" % (sign, term)
    return out


def _fit_transform(shape, t, o, s):
    """Recover the affine coefficients of transform_face by probing it."""
    L1, L2 = 10, 11
    dim = el.DIM[shape]

    def probe(x, y, level, L):
        F = el.Element(shape, level, x, y, 0, t)
        G = el.transform_face(F, o, s, L)
        return [G.anchor[i] for i in range(dim)], G.etype

    v0, ot = probe(128, 64, 5, L1)
    vx, _ = probe(160, 64, 5, L1)
    vy, _ = probe(128, 96, 5, L1) if dim == 2 else (v0, ot)
    vh, _ = probe(128, 64, 4, L1)      # h: 32 -> 64
    vS, _ = probe(128, 64, 6, L2)      # S: 1024 -> 2048, h unchanged
    rows = []
    for i in range(dim):
        ax = (vx[i] - v0[i]) // 32
        ay = (vy[i] - v0[i]) // 32 if dim == 2 else 0
        ah = (vh[i] - v0[i]) // 32
        aS = (vS[i] - v0[i]) // 1024
        c0 = v0[i] - ax * 128 - ay * 64 - ah * 32 - aS * 1024
        rows.append((aS, ax, ay, ah, c0) if dim == 2 else (aS, ax, ah, c0))
    return rows, ot


def _render_affine(rows, names):
    terms = ["2^L"] + list(names) + ["h", "1"]
    return "(" + ", ".join(_poly_str(r, terms) for r in rows) + ")"


def dump_table(shape, table):
    """Text rows of one derived table; raises ValueError on bad names."""
    out = []
    if table == "tree_face":
        src = {el.TET: tb.TET_TREE_FACE, el.TRI: tb.TRI_TREE_FACE}
        if shape in src:
            for (t, f), g in sorted(src[shape].items()):
                out.append("type=%d f=%d -> g=%d" % (t, f, g))
        elif shape in (el.LINE, el.QUAD, el.HEX):
            for f in range(el.NUM_FACES[shape]):
                out.append("f=%d -> g=%d" % (f, f))
        else:
            raise ValueError("no tree_face table for %s" % shape)
    elif table == "boundary_face":
        if shape in (el.QUAD, el.HEX):
            names = _COORD[shape]
            sel = {el.QUAD: {0: (1,), 1: (1,), 2: (0,), 3: (0,)},
                   el.HEX: {0: (1, 2), 1: (1, 2), 2: (0, 2), 3: (0, 2),
                            4: (0, 1), 5: (0, 1)}}[shape]
            for f in sorted(sel):
                out.append("f=%d -> coords=(%s)" %
                           (f, ", ".join(names[i] for i in sel[f])))
        elif shape in (el.TRI, el.TET):
            src = {el.TRI: tb.TRI_BOUNDARY, el.TET: tb.TET_BOUNDARY}[shape]
            names = _COORD[shape]
            for (t, f), (ftype, sel) in sorted(src.items()):
                out.append("type=%d f=%d -> face_type=%d coords=(%s)" %
                           (t, f, ftype, ", ".join(names[i] for i in sel)))
        else:
            raise ValueError("no boundary_face table for %s" % shape)
    elif table == "transform":
        if shape == el.LINE:
            for o in (0, 1):
                rows, _ = _fit_transform(shape, 0, o, 1)
                out.append("o=%d -> %s" % (o, _render_affine(rows, ("F.x",))))
        elif shape == el.QUAD:
            for s in (1, -1):
                for o in range(4):
                    rows, _ = _fit_transform(shape, 0, o, s)
                    out.append("o=%d s=%+d -> %s" %
                               (o, s, _render_affine(rows, ("F.x", "F.y"))))
        elif shape == el.TRI:
            for s in (1, -1):
                for t in (0, 1):
                    for o in range(3):
                        rows, ot = _fit_transform(shape, t, o, s)
                        out.append("type=%d o=%d s=%+d -> type=%d %s" %
                                   (t, o, s, ot,
                                    _render_affine(rows, ("F.x", "F.y"))))
        else:
            raise ValueError("no transform table for %s" % shape)
    elif table == "sign":
        try:
            a, b = shape.split("-")
            src = tb.FACE_SIGN[(a, b)]
        except (ValueError, KeyError):
            raise ValueError("sign tables are keyed like tet-tet, hex-prism")
        for (g, g2), s in sorted(src.items()):
            out.append("g=%d g'=%d -> %+d" % (g, g2, s))
    elif table == "extrude":
        src = {el.QUAD: tb.QUAD_EXTRUDE, el.HEX: tb.HEX_EXTRUDE,
               el.TRI: tb.TRI_EXTRUDE, el.TET: tb.TET_EXTRUDE,
               el.PRISM: tb.PRISM_EXTRUDE}
        if shape not in src:
            raise ValueError("no extrude table for %s" % shape)
        for (g, ftype), (etype, recipe, dual) in sorted(src[shape].items()):
            anchor = ", ".join(
                _poly_str((cS, cx, cy, ch), ("2^L", "F.x", "F.y", "h"))
                for cx, cy, ch, cS in recipe)
            out.append("g'=%d face_type=%d -> type=%d anchor=(%s) dual_face=%d"
                       % (g, ftype, etype, anchor, dual))
    elif table == "children_at_face":
        if shape in (el.TRI, el.TET):
            src = {el.TRI: tb.TRI_CHILDREN_AT_FACE,
                   el.TET: tb.TET_CHILDREN_AT_FACE}[shape]
            for (t, f), ids in sorted(src.items()):
                out.append("type=%d f=%d -> %s" %
                           (t, f, ", ".join(str(i) for i in ids)))
        elif shape == el.PRISM:
            for t in (0, 1):
                for f in range(5):
                    E = el.Element(el.PRISM, 0, 0, 0, 0, t)
                    ids = el.children_at_face(E, f)
                    out.append("type=%d f=%d -> %s" %
                               (t, f, ", ".join(str(i) for i in ids)))
        elif shape in (el.LINE, el.QUAD, el.HEX):
            E = el.root_element(shape)
            for f in range(el.NUM_FACES[shape]):
                ids = el.children_at_face(E, f)
                out.append("f=%d -> %s" % (f, ", ".join(str(i) for i in ids)))
        else:
            raise ValueError("no children_at_face table for %s" % shape)
    else:
        raise ValueError("unknown table %r" % (table,))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# argument plumbing

def _add_scenario_flags(sp):
    sp.add_argument("--cmesh", default="hex_cube",
                    help="built-in cmesh name or cmesh v1 file path")
    sp.add_argument("--level", type=int, default=2)
    sp.add_argument("--extra-levels", type=int, default=0)
    sp.add_argument("--pattern", default="uniform",
                    help="uniform | third:R | band:t | shell")
    sp.add_argument("--ranks", type=int, default=1)
    sp.add_argument("--algo", choices=("v1", "v2", "v3"), default="v3")
    sp.add_argument("--balance", action="store_true")
    sp.add_argument("--seed", type=int, default=0)


def _config_from(args):
    pat, _, step = args.pattern.partition(":")
    return ScenarioConfig(
        cmesh=args.cmesh, level=args.level, extra_levels=args.extra_levels,
        pattern=pat, pattern_step=int(step) if step else 0,
        ranks=args.ranks, algo=args.algo, balance=args.balance,
        seed=args.seed).validate()


def _open_out(path):
    return sys.stdout if path in (None, "-") else open(path, "w")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hyghost",
        description="ghost layers for adaptive hybrid forest meshes "
                    "(simulated ranks)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name, hlp in (("gen", "generate a forest and dump its leaves"),
                      ("ghost", "run a ghost algorithm, print per-rank stats"),
                      ("compare", "run all applicable variants and compare"),
                      ("verify", "check a run against the geometric oracle"),
                      ("export", "write the forest as a VTK file"),
                      ("bench", "time two identical runs, report efficiency")):
        sp = sub.add_parser(name, help=hlp)
        _add_scenario_flags(sp)
        if name == "ghost":
            sp.add_argument("--verify", action="store_true")
            sp.add_argument("--csv")
            sp.add_argument("--json")
        if name in ("gen", "export"):
            sp.add_argument("--out")
        if name == "export":
            sp.add_argument("--format", choices=("vtk",), default="vtk")

    sp = sub.add_parser("tables", help="print a derived element table")
    sp.add_argument("--shape", required=True,
                    help="shape name (or pair like tet-tet for sign)")
    sp.add_argument("--table", required=True,
                    choices=("tree_face", "boundary_face", "transform",
                             "sign", "extrude", "children_at_face"))

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def _dispatch(args):
    if args.cmd == "tables":
        sys.stdout.write(dump_table(args.shape, args.table))
        return 0

    cfg = _config_from(args)
    if args.cmd == "gen":
        F = build_forest(cfg)
        fh = _open_out(args.out)
        F.dump(fh)
        if fh is not sys.stdout:
            fh.close()
        return 0
    if args.cmd == "export":
        F = build_forest(cfg)
        fh = _open_out(args.out)
        export_vtk(F, fh, title=cfg.cmesh)
        if fh is not sys.stdout:
            fh.close()
        return 0
    if args.cmd == "ghost":
        F, layers, report = run_scenario(cfg)
        print(gh.CSV_HEADER)
        for row in report.rows:
            print(row)
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write(gh.CSV_HEADER + "\n")
                fh.write("\n".join(report.rows) + "\n")
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(report.to_json() + "\n")
        if args.verify:
            ok, diffs = verify(F, [l.mirrors for l in layers])
            if not ok:
                for d in diffs:
                    print("diff: %r" % (d,), file=sys.stderr)
                return 2
        return 0
    if args.cmd == "verify":
        F, layers, _ = run_scenario(cfg)
        ok, diffs = verify(F, [l.mirrors for l in layers])
        if ok:
            print("verify: pass")
            return 0
        print("verify: FAIL (%d shown)" % len(diffs))
        for d in diffs:
            print("diff: %r" % (d,))
        return 2
    if args.cmd == "compare":
        F, table = compare_algorithms(cfg)
        print("algo,seconds,visited_leaves,ghosts")
        for algo in sorted(table):
            r = table[algo]
            print("%s,%.6f,%d,%d" % (algo, r["seconds"], r["visited_leaves"],
                                     r["ghosts"]))
        return 0
    if args.cmd == "bench":
        _, _, rep1 = run_scenario(cfg)
        _, _, rep2 = run_scenario(cfg)
        e = efficiency(rep1.seconds, max(rep1.num_ghosts, 1),
                       rep2.seconds, max(rep2.num_ghosts, 1))
        print(json.dumps({"run1_seconds": rep1.seconds,
                          "run2_seconds": rep2.seconds,
                          "ghosts": rep1.num_ghosts,
                          "efficiency_run2": e}, indent=2, sort_keys=True))
        return 0
    raise ValueError("unknown command %r" % (args.cmd,))


if __name__ == "__main__":
    sys.exit(main())
