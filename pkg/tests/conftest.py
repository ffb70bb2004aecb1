import pytest

from gradedlab import (
    make_quadratic,
    make_zn,
    make_product_module,
    ring_as_module,
)


@pytest.fixture(scope="session")
def ring_pool():
    """Small rings covering trivial and nontrivial gradings."""
    return [
        make_zn(4),
        make_zn(6),
        make_zn(12),
        make_zn(16),
        make_quadratic(2, 0),
        make_quadratic(2, 1),
        make_quadratic(3, 1),
        make_quadratic(3, 2),
    ]


@pytest.fixture(scope="session")
def module_pool(ring_pool):
    mods = [ring_as_module(r) for r in ring_pool]
    z2 = make_zn(2)
    m2 = ring_as_module(z2)
    mods.append(make_product_module(m2, m2))
    return mods
