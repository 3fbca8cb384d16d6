import pytest

from kflag import CartanMatrix, WeylGroup, full_table

_groups: dict[str, WeylGroup] = {}
_tables: dict[tuple[str, str], object] = {}


def _group(name: str) -> WeylGroup:
    if name not in _groups:
        _groups[name] = WeylGroup(CartanMatrix.named(name))
    return _groups[name]


def _table(name: str, basis: str):
    key = (name, basis)
    if key not in _tables:
        _tables[key] = full_table(_group(name), basis)
    return _tables[key]


@pytest.fixture(scope="session")
def groups():
    """Factory: groups("B2") -> cached WeylGroup."""
    return _group


@pytest.fixture(scope="session")
def tables():
    """Factory: tables("B2", "demazure") -> cached ConstantTable."""
    return _table
