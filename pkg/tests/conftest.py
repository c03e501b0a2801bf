from __future__ import annotations

import pathlib
import sys

import pytest
from click.testing import CliRunner

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from themekit.cli import main as cli_main

REPO = pathlib.Path(__file__).resolve().parent.parent
DEMO_CORPUS = REPO / "demo" / "corpus"
DEMO_ONTOLOGY = REPO / "demo" / "ontology.json"
DATA = pathlib.Path(__file__).resolve().parent / "data"


def run_pipeline(out_dir: pathlib.Path) -> None:
    runner = CliRunner()
    result = runner.invoke(
        cli_main,
        [
            "pipeline",
            "--corpus", str(DEMO_CORPUS),
            "--ontology", str(DEMO_ONTOLOGY),
            "--out", str(out_dir),
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0, result.output


@pytest.fixture(scope="session")
def demo_workspace(tmp_path_factory: pytest.TempPathFactory) -> pathlib.Path:
    """Full pipeline output over the bundled demo corpus, built once."""
    out = tmp_path_factory.mktemp("demo-ws")
    run_pipeline(out)
    return out
