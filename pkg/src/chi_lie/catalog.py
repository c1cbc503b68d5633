"""Named constructors for the example algebras used across the test suite.

Each builder returns a validated structure-constant algebra.  The entry
list pairs instances with their known dimension data; every expected
value is tagged with where it comes from ("closed-form" for formula
values, "reference" for published dimension tables, "derived" for values
obtained by independent computation).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BadParams, UnknownName
from .freelie import build_free_nilpotent
from .liealg import LieAlgebra
from .linalg import ONE


def abelian(n: int) -> LieAlgebra:
    """The abelian algebra of dimension n."""
    if n < 0:
        raise BadParams("abelian: dimension must be >= 0")
    return LieAlgebra(f"abelian({n})", n, {}, [f"e{i+1}" for i in range(n)])


def heisenberg(d: int) -> LieAlgebra:
    """Heisenberg algebra of odd dimension d = 2k+1: [x_i, y_i] = z."""
    if d < 3 or d % 2 == 0:
        raise BadParams("heisenberg: dimension must be odd and >= 3")
    k = (d - 1) // 2
    labels = [f"x{i+1}" for i in range(k)] + [f"y{i+1}" for i in range(k)] + ["z"]
    table = {(i, k + i): [(2 * k, ONE)] for i in range(k)}
    return LieAlgebra(f"heisenberg({d})", d, table, labels)


def free_nilpotent(r: int, c: int) -> LieAlgebra:
    """Free nilpotent algebra on r generators of class c."""
    if r < 1 or c < 1:
        raise BadParams("free_nilpotent: rank and class must be >= 1")
    f = build_free_nilpotent(r, c)
    raw = f.algebra
    return LieAlgebra(
        f"free_nilpotent({r},{c})", raw.dim, dict(raw.table), list(raw.labels), check=False
    )


def paper_example_1() -> LieAlgebra:
    """Dimension four: [a,b] = [a,c] = [b,c] = z with z central."""
    table = {(0, 1): [(3, ONE)], (0, 2): [(3, ONE)], (1, 2): [(3, ONE)]}
    return LieAlgebra("paper_example_1", 4, table, ["a", "b", "c", "z"])


def sl2() -> LieAlgebra:
    """sl(2) in the (e, h, f) basis: [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    table = {
        (0, 1): [(0, -2 * ONE)],  # [e,h] = -2e
        (0, 2): [(1, ONE)],  # [e,f] = h
        (1, 2): [(2, -2 * ONE)],  # [h,f] = -2f
    }
    return LieAlgebra("sl2", 3, table, ["e", "h", "f"])


def upper_triangular_nil(n: int) -> LieAlgebra:
    """Strictly upper triangular n x n matrices under the commutator."""
    if n < 2:
        raise BadParams("upper_triangular_nil: size must be >= 2")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pidx = {p: t for t, p in enumerate(pairs)}
    table: dict[tuple[int, int], list] = {}
    for a, (i, j) in enumerate(pairs):
        for b in range(a + 1, len(pairs)):
            k, l = pairs[b]
            terms = []
            # [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if j == k:
                terms.append((pidx[(i, l)], ONE))
            if l == i:
                terms.append((pidx[(k, j)], -ONE))
            if terms:
                table[(a, b)] = terms
    labels = [f"e{i+1}{j+1}" for i, j in pairs]
    return LieAlgebra(f"upper_triangular_nil({n})", len(pairs), table, labels)


# -- the catalog -------------------------------------------------------------

BUILDERS: dict[str, tuple[Callable[..., LieAlgebra], int]] = {
    "abelian": (abelian, 1),
    "heisenberg": (heisenberg, 1),
    "free_nilpotent": (free_nilpotent, 2),
    "paper_example_1": (paper_example_1, 0),
    "sl2": (sl2, 0),
    "upper_triangular_nil": (upper_triangular_nil, 1),
}


@dataclass(frozen=True)
class CatalogEntry:
    """One named instance with its known dimension data.

    ``expected`` maps "chi" / "W" / "R" / "h2" to (value, provenance).
    """

    name: str
    params: tuple[int, ...]
    builder: Callable[..., LieAlgebra]
    expected: dict[str, tuple[int, str]] | None

    def build(self) -> LieAlgebra:
        return self.builder(*self.params)


def _exp(chi: int, w: int, r: int, h2: int, tag: str) -> dict[str, tuple[int, str]]:
    return {"chi": (chi, tag), "W": (w, tag), "R": (r, tag), "h2": (h2, tag)}


ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry("abelian", (2,), abelian, _exp(5, 1, 0, 1, "closed-form")),
    CatalogEntry("abelian", (3,), abelian, _exp(9, 3, 0, 3, "closed-form")),
    CatalogEntry("heisenberg", (3,), heisenberg, _exp(9, 2, 0, 2, "derived")),
    CatalogEntry("paper_example_1", (), paper_example_1, _exp(14, 5, 1, 4, "reference")),
    CatalogEntry("free_nilpotent", (2, 2), free_nilpotent, _exp(9, 2, 0, 2, "derived")),
    CatalogEntry("free_nilpotent", (3, 2), free_nilpotent, _exp(27, 12, 4, 8, "reference")),
    CatalogEntry("sl2", (), sl2, _exp(9, 0, 0, 0, "reference")),
    CatalogEntry("upper_triangular_nil", (3,), upper_triangular_nil, _exp(9, 2, 0, 2, "derived")),
)


def build(name: str, params: list[int] | tuple[int, ...] = ()) -> LieAlgebra:
    """Build a catalog algebra by name; params are plain integers."""
    if name not in BUILDERS:
        raise UnknownName(f"unknown catalog name {name!r}")
    fn, arity = BUILDERS[name]
    params = tuple(params)
    if len(params) != arity:
        raise BadParams(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def listing() -> dict:
    """Catalog description: builder names, arities, expected provenance."""
    return {
        "builders": [
            {"name": name, "arity": arity} for name, (_, arity) in sorted(BUILDERS.items())
        ],
        "entries": [
            {
                "name": e.name,
                "params": list(e.params),
                "expected": None
                if e.expected is None
                else {
                    key: {"value": val, "provenance": tag}
                    for key, (val, tag) in sorted(e.expected.items())
                },
            }
            for e in ENTRIES
        ],
    }
