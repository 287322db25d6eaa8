"""Integral simplicial homology via Smith normal form of boundary matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import SimplexCapExceeded
from .snf import invariant_factors

DEFAULT_HOMOLOGY_SIMPLEX_CAP = 10_000


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion coefficients per dimension.

    For a non-empty complex with reduced=False, betti[0] is the number of
    connected components; with reduced=True the summary describes reduced
    homology (the empty simplex augments the chain complex).
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    reduced: bool

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))


def boundary_entries(K: SimplicialComplex, i: int) -> dict[tuple[int, int], int]:
    """Sparse boundary map from i-simplices to (i-1)-simplices.

    Simplex tuples are canonical chains, so dropping the k-th vertex with
    sign (-1)^k gives a consistent orientation.
    """
    if i <= 0 or i > K.dim:
        return {}
    rows = {s: r for r, s in enumerate(K.simplices_by_dim[i - 1])}
    entries: dict[tuple[int, int], int] = {}
    for c, simplex in enumerate(K.simplices_by_dim[i]):
        sign = 1
        for k in range(len(simplex)):
            face = simplex[:k] + simplex[k + 1:]
            entries[(rows[face], c)] = sign
            sign = -sign
    return entries


def homology(K: SimplicialComplex, reduced: bool = False,
             cap: int = DEFAULT_HOMOLOGY_SIMPLEX_CAP) -> HomologySummary:
    """Homology of a complex: betti[i] = dim C_i - rank d_i - rank d_{i+1},
    torsion of H_i from the invariant factors of d_{i+1} exceeding 1."""
    if K.n_simplices > cap:
        raise SimplexCapExceeded(
            f"homology needs {K.n_simplices} simplices, cap is {cap}")
    counts = K.counts
    if not counts:
        return HomologySummary((), (), reduced)
    dim = K.dim
    factors: list[list[int]] = []
    for i in range(dim + 1):
        if i == 0:
            # rank of the augmentation map for reduced homology
            factors.append([1] if reduced else [])
        else:
            entries = boundary_entries(K, i)
            factors.append(invariant_factors(entries, counts[i - 1], counts[i]))
    factors.append([])
    betti = []
    torsion = []
    for i in range(dim + 1):
        betti.append(counts[i] - len(factors[i]) - len(factors[i + 1]))
        torsion.append(tuple(f for f in factors[i + 1] if f > 1))
    return HomologySummary(tuple(betti), tuple(torsion), reduced)


def is_z_acyclic(K: SimplicialComplex,
                 cap: int = DEFAULT_HOMOLOGY_SIMPLEX_CAP) -> bool:
    """True iff all reduced homology groups vanish.

    The empty complex is not acyclic under this convention (its reduced
    homology in degree -1 does not vanish); it never arises from a coset
    poset, which always contains at least the identity singleton.
    """
    if K.n_simplices == 0:
        return False
    summary = homology(K, reduced=True, cap=cap)
    return (all(b == 0 for b in summary.betti)
            and all(not t for t in summary.torsion))
