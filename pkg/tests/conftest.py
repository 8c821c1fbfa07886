import json
import sys
from pathlib import Path

import pytest

from satake_lab import CartanType, Preset, build_root_datum

FIXTURES = Path(__file__).parent / "fixtures"

# (label, family, rank, preset) used across the acceptance corpus
CORPUS_TYPES = [
    ("A1", "A", 1, Preset.SIMPLY_CONNECTED),
    ("A2", "A", 2, Preset.SIMPLY_CONNECTED),
    ("B2", "B", 2, Preset.SIMPLY_CONNECTED),
    ("GL3", "A", 2, Preset.GL_STYLE),
    ("G2", "G", 2, Preset.SIMPLY_CONNECTED),
]


def datum(family, rank, preset=Preset.SIMPLY_CONNECTED):
    return build_root_datum(CartanType(family, rank), preset)


def gl(n):
    return datum("A", n - 1, Preset.GL_STYLE)


def load_table():
    rows = []
    for line in (FIXTURES / "root_system_table.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        t, h, npos, order, exps = line.split()
        rows.append((t, int(h), int(npos), int(order), [int(e) for e in exps.split(",")]))
    return rows


@pytest.fixture
def write_config(tmp_path):
    def write(cfg, name="job.json"):
        path = tmp_path / name
        path.write_text(json.dumps(cfg, indent=2))
        return path
    return write


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
