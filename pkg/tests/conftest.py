import numpy as np
import pytest

from curvekit.families import kula_slant_helix
from curvekit.involute import InvoluteSpec
from curvekit.verify import run_identity_suite, run_suite


@pytest.fixture(scope="session")
def kula_spec():
    return InvoluteSpec(kula_slant_helix(0.25), 2.0, subdomain=(0.15, 1.25))


@pytest.fixture(scope="session")
def kula_grid(kula_spec):
    return np.linspace(*kula_spec.work, 1200)


@pytest.fixture(scope="session")
def kula_identities():
    return run_identity_suite("kula")


@pytest.fixture(scope="session")
def fourier_identities():
    return run_identity_suite("fourier")


@pytest.fixture(scope="session")
def kula_all_report():
    return run_suite("kula", "all")
