"""Scenario driver: configs, refinement patterns, reports, efficiency."""

import io
import json
import math

import pytest

from hyghost import harness as hz
from hyghost import forest as ft


def test_config_validation():
    hz.ScenarioConfig().validate()
    with pytest.raises(ValueError):
        hz.ScenarioConfig(ranks=0).validate()
    with pytest.raises(ValueError):
        hz.ScenarioConfig(algo="v9").validate()
    with pytest.raises(ValueError):
        hz.ScenarioConfig(pattern="spiral").validate()
    with pytest.raises(ValueError):
        hz.ScenarioConfig(level=4, extra_levels=2, max_level=5).validate()


def test_parse_config_roundtrip():
    text = """
    # comment
    cmesh = tet_cube
    level = 3
    pattern = band
    pattern_step = 2
    extra_levels = 1
    ranks = 7
    balance = true
    """
    cfg = hz.parse_config(text)
    assert (cfg.cmesh, cfg.level, cfg.pattern, cfg.pattern_step,
            cfg.extra_levels, cfg.ranks, cfg.balance) == \
           ("tet_cube", 3, "band", 2, 1, 7, True)
    with pytest.raises(ValueError):
        hz.parse_config("wavelength = 7")


def test_efficiency_formula():
    assert hz.efficiency(3.0, 7.0, 2.0, 11.0) == (3.0 * 11.0) / (2.0 * 7.0)
    assert hz.efficiency(1.0, 5.0, 1.0, 5.0) == 1.0


def test_band_constants():
    # unit normal along (1, 1, 1/2)
    assert math.isclose(sum(c * c for c in hz.BAND_NORMAL), 1.0)
    assert hz.band_time_step(3) == 0.8 / (8 * hz.BAND_SPEED)
    assert math.isclose(hz.band_start(3),
                        0.56 - 2.5 * hz.band_time_step(3) * hz.BAND_SPEED)


def test_every_third_refines_expected_count():
    cfg = hz.ScenarioConfig(cmesh="quad_unit", level=2, pattern="third",
                            pattern_step=1, ranks=2).validate()
    F = hz.build_forest(cfg)
    # 16 leaves, positions 2,5,8,11,14 refined: 16 - 5 + 5*4 = 31
    assert F.num_leaves == 31


def test_build_forest_deterministic():
    cfg = hz.ScenarioConfig(cmesh="tet_cube", level=1, pattern="band",
                            extra_levels=2, pattern_step=2, ranks=3)
    a, b = hz.build_forest(cfg), hz.build_forest(cfg)
    fa, fb = io.StringIO(), io.StringIO()
    a.dump(fa)
    b.dump(fb)
    assert fa.getvalue() == fb.getvalue()
    assert a.num_leaves > 6 * 8  # the band actually refined something


def test_shell_pattern_refines_a_shell():
    cfg = hz.ScenarioConfig(cmesh="hex_cube", level=2, pattern="shell",
                            extra_levels=1, ranks=1)
    F = hz.build_forest(cfg)
    assert 64 < F.num_leaves
    levels = {E.level for lv in F.tree_leaves for E in lv}
    assert levels == {2, 3}


def test_run_scenario_report():
    cfg = hz.ScenarioConfig(cmesh="hybrid_cube", level=1, ranks=4)
    F, layers, report = hz.run_scenario(cfg)
    assert len(report.rows) == 4
    assert report.num_leaves == 16 * 8
    assert report.num_ghosts == sum(l.num_ghosts for l in layers)
    blob = json.loads(report.to_json())
    assert blob["totals"]["leaves"] == 128
    assert blob["config"]["cmesh"] == "hybrid_cube"


def test_compare_algorithms_includes_v1_when_balanced():
    cfg = hz.ScenarioConfig(cmesh="hex_cube", level=2, ranks=4)
    _, table = hz.compare_algorithms(cfg)
    assert set(table) == {"v1", "v2", "v3"}
    cfg2 = hz.ScenarioConfig(cmesh="hex_cube", level=2, ranks=4,
                             pattern="third", pattern_step=2)
    _, table2 = hz.compare_algorithms(cfg2)
    assert set(table2) == {"v2", "v3"}
    assert table2["v3"]["visited_leaves"] <= table2["v2"]["visited_leaves"]


def test_load_cmesh_from_file(tmp_path):
    cm = hz.load_cmesh("tri_unit")
    path = tmp_path / "mesh.txt"
    with open(path, "w") as fh:
        cm.save(fh)
    cm2 = hz.load_cmesh(str(path))
    assert cm2.shapes == cm.shapes
