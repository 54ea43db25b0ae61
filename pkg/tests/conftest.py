import pytest

from kappalab.catalog import builtin
from kappalab.enrich import build_enriched
from kappalab.modulecat import as_module

FUSION_NAMES = ["trivial", "z2", "z2-cocycle", "z3", "semion", "fibonacci",
                "ising"]
MODULE_NAMES = [f"regular:{n}" for n in FUSION_NAMES] + ["vec-over-z2"]
CENTRAL_NAMES = ["central:trivial", "central:z3", "central:semion",
                 "central:fibonacci", "central:ising"]


@pytest.fixture(scope="session")
def fib():
    return builtin("fibonacci").payload


@pytest.fixture(scope="session")
def ising():
    return builtin("ising").payload


@pytest.fixture(scope="session")
def semion():
    return builtin("semion").payload


@pytest.fixture(scope="session")
def z3():
    return builtin("z3").payload


@pytest.fixture(scope="session")
def trivial():
    return builtin("trivial").payload


@pytest.fixture(scope="session")
def modules():
    """Materialized catalog modules, shared across the session."""
    return {name: as_module(builtin(name).payload) for name in MODULE_NAMES}


@pytest.fixture(scope="session")
def enrichments(modules):
    return {name: build_enriched(mod) for name, mod in modules.items()}
