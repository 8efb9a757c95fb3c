"""The frozen lookup-table module matches a fresh derivation."""

import importlib.util
import pprint
from pathlib import Path

ROOT = Path(__file__).parent.parent


def _load_derivation():
    spec = importlib.util.spec_from_file_location(
        "derive_tables", ROOT / "scripts" / "derive_tables.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_frozen_tables_match_derivation():
    from hyghost import _tables as tb
    derived = _load_derivation().build_tables()
    for key, value in derived.items():
        frozen = getattr(tb, key.upper())
        assert pprint.pformat(frozen, width=100, sort_dicts=True) == \
               pprint.pformat(value, width=100, sort_dicts=True), key
