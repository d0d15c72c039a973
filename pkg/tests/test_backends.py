"""The pure-Python fallback must agree with the numba kernels.

Each case runs a small workload in a subprocess with ORIGAMI_NUMBA=0
and compares against the in-process (default) backend.  Monte Carlo
runs are expected to agree bit for bit: the kernels perform the same
floating-point operations in the same order under both backends.
"""

import json
import os
import subprocess
import sys

import pytest

SCRIPT = r"""
import json
from fractions import Fraction

from origamis.jit import NUMBA_ENABLED
from origamis.origami import make_origami, canonical_form, format_origami
from origamis.orbits import enumerate_stratum, sl2z_orbit, cusp_decomposition
from origamis.svc import normalized_svc, sum_exponents_abelian_orbit
from origamis.montecarlo import estimate_spectrum

out = {"numba": NUMBA_ENABLED}
L = make_origami((1, 0, 2), (2, 1, 0))
out["canonical_L"] = format_origami(canonical_form(L))
orbit = sl2z_orbit(L)
out["orbit_members"] = [format_origami(m) for m in orbit.members]
out["cusp_widths"] = list(cusp_decomposition(orbit).widths)
out["svc"] = str(normalized_svc(orbit).svc)
out["sum"] = str(sum_exponents_abelian_orbit(orbit).value)
out["enum4"] = [
    [format_origami(m) for m in o.members] for o in enumerate_stratum(4)
]
est = estimate_spectrum(L, 2 * 10**4, 2024)
out["mc_exponents"] = list(est.exponents)
out["mc_stderr"] = list(est.standard_errors)
out["mc_resamples"] = est.cf_digit_resamples
print(json.dumps(out, sort_keys=True))
"""


def run_backend(numba_flag):
    env = dict(os.environ)
    env["ORIGAMI_NUMBA"] = numba_flag
    res = subprocess.run(
        [sys.executable, "-c", SCRIPT],
        capture_output=True,
        text=True,
        env=env,
        timeout=600,
    )
    assert res.returncode == 0, res.stderr
    return json.loads(res.stdout)


@pytest.fixture(scope="module")
def results():
    return run_backend("1"), run_backend("0")


def test_backends_selected(results):
    with_numba, without = results
    assert with_numba["numba"] is True
    assert without["numba"] is False


def test_exact_outputs_agree(results):
    with_numba, without = results
    for key in ("canonical_L", "orbit_members", "cusp_widths", "svc", "sum", "enum4"):
        assert with_numba[key] == without[key], key


def test_monte_carlo_agrees(results):
    with_numba, without = results
    assert with_numba["mc_resamples"] == without["mc_resamples"]
    assert with_numba["mc_exponents"] == pytest.approx(
        without["mc_exponents"], abs=1e-12
    )
    assert with_numba["mc_stderr"] == pytest.approx(
        without["mc_stderr"], abs=1e-12
    )
