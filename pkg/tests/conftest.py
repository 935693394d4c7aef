"""Shared fixtures: the named corpus models, built once per session."""

import pytest
from hypothesis import settings

from idealis import corpus

# Grid oracles rebuild dense membership tables per example; the default
# 200ms deadline flags them as slow on loaded CI boxes.
settings.register_profile("grids", deadline=None, max_examples=40)
settings.load_profile("grids")

_NAMED = {e.name: e.model for e in corpus.members("named")}


@pytest.fixture(scope="session")
def named():
    """Name -> model for every named corpus member, affine included."""
    return dict(_NAMED)


@pytest.fixture(scope="session")
def certified(named):
    return {k: v for k, v in named.items() if v.certified}


@pytest.fixture(scope="session")
def n1():
    return _NAMED["n1"]


@pytest.fixture(scope="session")
def n2():
    return _NAMED["n2"]


@pytest.fixture(scope="session")
def n3():
    return _NAMED["n3"]


@pytest.fixture(scope="session")
def gap23():
    return _NAMED["gap23"]


@pytest.fixture(scope="session")
def n345():
    return _NAMED["n345"]


@pytest.fixture(scope="session")
def n25():
    return _NAMED["n25"]


@pytest.fixture(scope="session")
def g23xn():
    return _NAMED["g23xn"]


@pytest.fixture(scope="session")
def g23xz():
    return _NAMED["g23xz"]


@pytest.fixture(scope="session")
def nxz():
    return _NAMED["nxz"]


@pytest.fixture(scope="session")
def z2():
    return _NAMED["z2"]


@pytest.fixture(scope="session")
def affine1():
    return _NAMED["affine1"]
