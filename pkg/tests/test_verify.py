import subprocess
import sys

import pytest

from superdirac import kernels
from superdirac.verify import ANCHORS, SUITES, run_suites


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes(suite):
    report = run_suites(suite, n_max=2, order=10)
    entries = report["suites"][suite]["entries"]
    assert entries and report["pass"]
    for e in entries:
        assert e["anchor"] == ANCHORS[e["identity"]]
        assert "certificate" not in e


def test_denominator_suite_to_rank_four():
    assert run_suites("denominator", n_max=4)["pass"]


def test_report_independent_of_jobs():
    selection = ("hc", "denominator", "lifting")
    assert run_suites(selection, jobs=1) == run_suites(selection, jobs=2)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites("bogus")


def test_python_fallback_when_extension_missing():
    code = (
        "import sys; sys.modules['superdirac._kernels'] = None\n"
        "from superdirac import kernels\n"
        "assert kernels.backend() == 'python', kernels.backend()\n"
        "assert kernels.available_backends() == ['python']\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
