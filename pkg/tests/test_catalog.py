"""Named example algebras and their expected invariants."""
import json
from fractions import Fraction

import pytest

from chi_lie import (
    BadParams,
    ENTRIES,
    UnknownName,
    abelian,
    build,
    free_nilpotent,
    heisenberg,
    is_abelian,
    listing,
    paper_example_1,
    sl2,
    upper_triangular_nil,
    validate,
)

F = Fraction


def test_abelian_builder():
    g = abelian(4)
    assert g.dim == 4
    assert is_abelian(g)
    assert abelian(0).dim == 0
    with pytest.raises(BadParams):
        abelian(-1)


def test_heisenberg_builder():
    g = heisenberg(5)
    assert g.dim == 5
    # basis runs x1..xk, y1..yk, z
    x1, y1 = g.basis_vector(0), g.basis_vector(2)
    x2, y2 = g.basis_vector(1), g.basis_vector(3)
    z = g.basis_vector(4)
    assert list(g.bracket(x1, y1)) == list(z)
    assert list(g.bracket(x2, y2)) == list(z)
    assert all(c == 0 for c in g.bracket(x1, y2))
    with pytest.raises(BadParams):
        heisenberg(4)
    with pytest.raises(BadParams):
        heisenberg(1)


def test_free_nilpotent_builder():
    assert free_nilpotent(2, 2).dim == 3
    assert free_nilpotent(3, 2).dim == 6
    assert free_nilpotent(2, 3).dim == 5
    with pytest.raises(BadParams):
        free_nilpotent(0, 2)
    with pytest.raises(BadParams):
        free_nilpotent(2, 0)


def test_dim4_example_builder():
    g = paper_example_1()
    assert g.dim == 4
    z = g.basis_vector(3)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        assert list(g.bracket(g.basis_vector(i), g.basis_vector(j))) == list(z)
    assert validate(g) is None


def test_sl2_builder():
    g = sl2()
    e, h, f = (g.basis_vector(i) for i in range(3))
    assert list(g.bracket(h, e)) == [F(2), F(0), F(0)]
    assert list(g.bracket(h, f)) == [F(0), F(0), F(-2)]
    assert list(g.bracket(e, f)) == [F(0), F(1), F(0)]


def test_upper_triangular_builder():
    g = upper_triangular_nil(3)
    assert g.dim == 3
    assert len(g.table) == 1
    g4 = upper_triangular_nil(4)
    assert g4.dim == 6
    assert validate(g4) is None
    with pytest.raises(BadParams):
        upper_triangular_nil(1)


def test_build_dispatch():
    assert build("heisenberg", [3]).dim == 3
    assert build("paper_example_1").dim == 4
    with pytest.raises(UnknownName):
        build("mystery")
    with pytest.raises(BadParams):
        build("heisenberg", [3, 3])
    with pytest.raises(BadParams):
        build("sl2", [1])


def test_all_catalog_entries_are_valid_algebras():
    assert len(ENTRIES) >= 8
    names = set()
    for entry in ENTRIES:
        g = entry.build()
        assert validate(g) is None
        names.add((entry.name, entry.params))
    assert len(names) == len(ENTRIES)


def test_entries_carry_provenance_tagged_expectations():
    for entry in ENTRIES:
        for key, (value, tag) in entry.expected.items():
            assert isinstance(value, int)
            assert tag in ("reference", "derived", "closed-form")


def test_listing_is_json_ready():
    doc = listing()
    json.dumps(doc)
    assert {b["name"] for b in doc["builders"]} == {
        "abelian", "heisenberg", "free_nilpotent",
        "paper_example_1", "sl2", "upper_triangular_nil",
    }
    for b in doc["builders"]:
        assert isinstance(b["arity"], int)
    assert len(doc["entries"]) == len(ENTRIES)
    for e in doc["entries"]:
        for key, val in e["expected"].items():
            assert set(val) == {"value", "provenance"}
