"""Shared fixtures.

The chi construction for free_nilpotent(3, 2) takes a few seconds, so chi
and homology results are cached once per session and shared across files.
"""
from __future__ import annotations

import pytest

from chi_lie import (
    build as catalog_build,
    compute_chi,
    compute_chi_superperfect,
    compute_homology,
    is_nilpotent,
)

_CHI = {}
_HOM = {}


@pytest.fixture(scope="session")
def chi_of():
    def get(name, *params):
        key = (name, params)
        if key not in _CHI:
            g = catalog_build(name, list(params))
            if is_nilpotent(g):
                _CHI[key] = compute_chi(g)
            else:
                _CHI[key] = compute_chi_superperfect(g)
        return _CHI[key]

    return get


@pytest.fixture(scope="session")
def homology_of():
    def get(name, *params):
        key = (name, params)
        if key not in _HOM:
            _HOM[key] = compute_homology(catalog_build(name, list(params)))
        return _HOM[key]

    return get
