from pathlib import Path

import pytest

from helpers import ex
from ovopub import Provenance
from ovopub.vocab import CC_BY

GOLDEN = Path(__file__).parent / "data" / "golden"


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    # Expose each phase's report on the item so fixtures can see the outcome.
    rep = yield
    setattr(item, "rep_" + rep.when, rep)
    return rep


@pytest.fixture
def prov():
    return Provenance((ex("alice"),), "2013-06-01T12:00:00Z", CC_BY)


@pytest.fixture
def other_prov():
    return Provenance(("Bob", ex("carol")), "2014-01-01T00:00:00+02:00", CC_BY,
                      label=("other", "en"), identifier="X:1")


@pytest.fixture
def golden_dir():
    return GOLDEN
