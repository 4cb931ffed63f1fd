import json
from pathlib import Path

import pytest

from repscreen import chartab, sympow

DATA = Path(__file__).resolve().parents[1] / "src" / "repscreen" / "data"
MUTATIONS = Path(__file__).resolve().parent / "fixtures" / "mutations"

FIXTURE_TABLES = ["s3.json", "c2.json", "c7.json", "a5.json", "sl25.json", "m11.json"]


@pytest.fixture(scope="session")
def tables():
    return {name.split(".")[0]: chartab.load(DATA / name) for name in FIXTURE_TABLES}


@pytest.fixture(scope="session")
def s3(tables):
    return tables["s3"]


@pytest.fixture(scope="session")
def a5(tables):
    return tables["a5"]


@pytest.fixture(scope="session")
def m11(tables):
    return tables["m11"]


@pytest.fixture(scope="session")
def sl25(tables):
    return tables["sl25"]


@pytest.fixture(scope="session")
def suz12_delta():
    return sympow.load_delta(DATA / "suz12_delta.json")


@pytest.fixture(scope="session")
def suz12_sigma(suz12_delta):
    from repscreen import screen

    return screen.sigma_from_delta(suz12_delta)


@pytest.fixture(scope="session")
def gens():
    out = {}
    for path in (DATA / "gens").glob("*.json"):
        out[path.stem] = json.loads(path.read_text())
    return out


@pytest.fixture(scope="session")
def mutation_manifest():
    return json.loads((MUTATIONS / "manifest.json").read_text())
