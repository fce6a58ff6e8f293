import os
import subprocess
import sys

import pytest

from qtrd import kernels

PROBE = "from qtrd import kernels; print(kernels.backend_name(10), kernels.backend_name(80))"


def _probe(env_extra, code=PROBE):
    env = dict(os.environ, **env_extra)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    return out.stdout.split()


def test_env_forces_pure_python():
    assert _probe({"QTRD_PURE_PYTHON": "1"}) == ["python", "python"]


def test_missing_extension_falls_back():
    code = (
        "import sys; sys.modules['qtrd._kernels'] = None\n" + PROBE
    )
    assert _probe({"QTRD_PURE_PYTHON": "0"}, code) == ["python", "python"]


@pytest.mark.skipif(not kernels.has_compiled(), reason="compiled kernels not built")
def test_compiled_selected_for_small_graphs():
    assert _probe({"QTRD_PURE_PYTHON": "0"}) == ["compiled", "python"]
    with pytest.raises(ValueError):
        kernels.backend(64, "compiled")


def test_backend_argument_validation():
    assert kernels.backend(5, "python") is kernels.pure
    with pytest.raises(ValueError):
        kernels.backend(5, "gpu")
