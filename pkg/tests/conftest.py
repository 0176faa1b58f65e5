import pytest

from omegagroups.catalog import build_catalog


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def algebras(catalog):
    return {entry.name: entry.algebra for entry in catalog}


@pytest.fixture(scope="session")
def small_algebras(algebras):
    """Catalog algebras within the exhaustive-scan guard."""
    return {name: a for name, a in algebras.items() if a.size <= 8}
