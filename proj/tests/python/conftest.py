import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("AVOID132_CLI", str(ROOT / "build" / "tools" / "avoid132"))
    if not pathlib.Path(path).exists():
        pytest.skip("avoid132 binary not built")

    def run(*args, expect=0, env=None):
        proc = subprocess.run([path, *args], capture_output=True, text=True, env=env)
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    directory = pathlib.Path(os.environ.get("AVOID132_SCHEMA_DIR", ROOT / "schema"))

    def load(name):
        return json.loads((directory / f"{name}.schema.json").read_text())

    return load
