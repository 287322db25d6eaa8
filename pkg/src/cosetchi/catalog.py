"""The default group catalog for the verification suites.

Each entry records its constructor expression, its expected order, the
primes to analyze, and optionally the catalog name of a group expected to
match G / O_p(G) (a quotient link).  Structural claims are never trusted:
the suites re-verify orders, Sylow properties, and product certificates
computationally from the expression's factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import FiniteGroup, prime_factors
from .groupio import parse_group_expression


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expression: str
    order: int
    primes: tuple[int, ...]
    quotient_link: str | None = None

    def build(self) -> tuple[FiniteGroup, tuple[str, ...]]:
        """Construct the group; returns (group, factor expressions)."""
        G, factors = parse_group_expression(self.expression)
        G.name = self.name
        return G, factors


def _cyclic_entries() -> list[CatalogEntry]:
    out = []
    for n in range(1, 31):
        out.append(CatalogEntry(
            name=f"C({n})", expression=f"C({n})", order=n,
            primes=tuple(prime_factors(n))))
    return out


DEFAULT_CATALOG: list[CatalogEntry] = [
    *_cyclic_entries(),
    CatalogEntry("S(3)", "S(3)", 6, (2, 3)),
    CatalogEntry("D(4)", "D(4)", 8, (2,)),
    CatalogEntry("Q8", "Q8", 8, (2,)),
    CatalogEntry("A(4)", "A(4)", 12, (2, 3)),
    CatalogEntry("D(6)", "D(6)", 12, (2, 3), quotient_link="S(3)"),
    CatalogEntry("S(3)xC(3)", "S(3)xC(3)", 18, (2, 3)),
    CatalogEntry("F21", "F21", 21, (3, 7)),
    CatalogEntry("S(4)", "S(4)", 24, (2, 3), quotient_link="S(3)"),
    CatalogEntry("A(4)xC(2)", "A(4)xC(2)", 24, (2, 3)),
    CatalogEntry("S(3)xS(3)", "S(3)xS(3)", 36, (2, 3)),
    CatalogEntry("A(5)", "A(5)", 60, (2, 3, 5)),
    CatalogEntry("C(3)xS(3)xS(3)", "C(3)xS(3)xS(3)", 108, (2, 3)),
    CatalogEntry("S(5)", "S(5)", 120, (2, 3, 5)),
    CatalogEntry("S(3)xS(3)xS(3)", "S(3)xS(3)xS(3)", 216, (2, 3)),
]

_BY_NAME = {e.name: e for e in DEFAULT_CATALOG}


def entry_by_name(name: str) -> CatalogEntry:
    return _BY_NAME[name]


def filtered_catalog(max_order: int | None = None,
                     primes: tuple[int, ...] | None = None
                     ) -> list[tuple[CatalogEntry, int]]:
    """(entry, prime) pairs in catalog order, filtered by order and primes."""
    out = []
    for entry in DEFAULT_CATALOG:
        if max_order is not None and entry.order > max_order:
            continue
        for p in entry.primes:
            if primes is not None and p not in primes:
                continue
            out.append((entry, p))
    return out


# Pairs exercised by the product-multiplicativity suite; the product group
# itself is built and analyzed, so each pair costs one extra construction.
PRODUCT_PAIRS: list[tuple[str, str, int]] = [
    ("S(3)", "S(3)", 2),
    ("S(3)", "C(2)", 2),
    ("A(4)", "C(2)", 2),
    ("S(3)", "A(4)", 3),
    ("C(6)", "S(3)", 2),
    ("S(3)", "C(3)", 3),
    ("A(4)", "S(3)", 2),
]
