"""Simplicial complexes, order complexes of posets, and Euler characteristics.

Simplices are vertex tuples; for an order complex each tuple lists a chain
ascending in the poset order, which is the canonical form used everywhere
(boundary orientation, export, deduplication).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .errors import ParseError, SimplexCapExceeded
from .poset import Poset

DEFAULT_SIMPLEX_CAP = 5_000_000


class SimplicialComplex:
    """Simplices grouped by dimension; closed under taking faces."""

    def __init__(self, simplices_by_dim: Sequence[Sequence[tuple[int, ...]]]):
        self.simplices_by_dim = [list(level) for level in simplices_by_dim]
        while self.simplices_by_dim and not self.simplices_by_dim[-1]:
            self.simplices_by_dim.pop()

    @property
    def dim(self) -> int:
        return len(self.simplices_by_dim) - 1

    @property
    def counts(self) -> list[int]:
        return [len(level) for level in self.simplices_by_dim]

    @property
    def n_simplices(self) -> int:
        return sum(self.counts)

    def vertices(self) -> list[int]:
        if not self.simplices_by_dim:
            return []
        return sorted(s[0] for s in self.simplices_by_dim[0])

    @classmethod
    def from_maximal_simplices(cls, maximal: Iterable[tuple[int, ...]],
                               cap: int = DEFAULT_SIMPLEX_CAP) -> "SimplicialComplex":
        """Close a set of simplices under faces (subtuples keep vertex order)."""
        by_dim: list[set[tuple[int, ...]]] = []
        total = 0
        for simplex in maximal:
            simplex = tuple(simplex)
            for k in range(1, len(simplex) + 1):
                while len(by_dim) < k:
                    by_dim.append(set())
                bucket = by_dim[k - 1]
                for face in combinations(simplex, k):
                    if face not in bucket:
                        total += 1
                        if total > cap:
                            raise SimplexCapExceeded(
                                f"simplex count exceeds cap {cap}")
                        bucket.add(face)
        return cls([sorted(level) for level in by_dim])

    def maximal_simplices(self) -> list[tuple[int, ...]]:
        """Simplices that are a face of no higher simplex, in lexicographic order."""
        out: list[tuple[int, ...]] = []
        for d, level in enumerate(self.simplices_by_dim):
            if d + 1 < len(self.simplices_by_dim):
                covered = set()
                for s in self.simplices_by_dim[d + 1]:
                    covered.update(combinations(s, d + 1))
                out.extend(s for s in level if s not in covered)
            else:
                out.extend(level)
        return sorted(out)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.counts))

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.simplices_by_dim == other.simplices_by_dim)

    def __repr__(self) -> str:
        return f"SimplicialComplex(counts={self.counts})"


def successor_csr(P: Poset) -> tuple[list[int], list[int]]:
    """CSR adjacency of the strict order; successor lists sorted ascending."""
    indptr = [0]
    indices: list[int] = []
    for i in range(P.size):
        indices.extend(P.strict_successors(i))
        indptr.append(len(indices))
    return indptr, indices


def order_complex(P: Poset, cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """All chains of a poset, grouped by length; the empty chain is excluded."""
    indptr, indices = successor_csr(P)
    return SimplicialComplex(kernels.enumerate_chains(indptr, indices, cap))


def euler_char_simplices(K: SimplicialComplex) -> int:
    """Alternating simplex count, summed from dimension 0."""
    return K.euler_characteristic()


def reduced_euler_char(K: SimplicialComplex) -> int:
    """Euler characteristic with the empty simplex accounted for."""
    return K.euler_characteristic() - 1


# -- export format -----------------------------------------------------------
#
# Header 'vertices: <n>', one 'v <id> <label>' line per vertex, then one
# 's <id id ...>' line per maximal simplex with ids ascending.  Output is
# byte-identical for identical input.


def write_complex(K: SimplicialComplex, labels: Sequence[str]) -> str:
    verts = K.vertices()
    if verts and (verts[0] < 0 or verts[-1] >= len(labels)):
        raise ValueError("labels do not cover vertex ids")
    lines = [f"vertices: {len(verts)}"]
    for v in verts:
        lines.append(f"v {v} {labels[v]}")
    for s in K.maximal_simplices():
        if any(a >= b for a, b in zip(s, s[1:])):
            raise ValueError(f"simplex ids not ascending: {s}")
        lines.append("s " + " ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def read_complex(text: str) -> tuple[SimplicialComplex, dict[int, str]]:
    """Inverse of write_complex; returns the face-closed complex and labels."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vertices:"):
        raise ParseError("complex file must start with 'vertices: <n>'")
    try:
        count = int(lines[0].split(":", 1)[1])
    except ValueError as exc:
        raise ParseError("bad vertex count") from exc
    labels: dict[int, str] = {}
    maximal: list[tuple[int, ...]] = []
    for ln in lines[1:]:
        kind, _, rest = ln.partition(" ")
        if kind == "v":
            vid, _, label = rest.partition(" ")
            labels[int(vid)] = label
        elif kind == "s":
            maximal.append(tuple(int(tok) for tok in rest.split()))
        else:
            raise ParseError(f"bad line in complex file: {ln!r}")
    if len(labels) != count:
        raise ParseError(f"expected {count} vertices, found {len(labels)}")
    return SimplicialComplex.from_maximal_simplices(maximal), labels
