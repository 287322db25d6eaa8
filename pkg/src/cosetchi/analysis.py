"""Full analysis of one (group, prime) pair: the AnalysisReport record."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chi import (chi_direct, chi_ti_closed_form, chi_via_subgroup_mobius,
                  chi_via_sylow_intersections, congruence_check,
                  min_sylow_intersection_index, p_local_chi)
from .complexes import DEFAULT_SIMPLEX_CAP
from .cosetposet import DEFAULT_POSET_CAP, coset_poset, coset_poset_size
from .errors import ConsistencyError, PClosedNoPairs, PosetCapExceeded, SimplexCapExceeded
from .group import FiniteGroup, all_sylow, is_p_closed, is_p_ti, sylow_subgroup
from .homology import DEFAULT_HOMOLOGY_SIMPLEX_CAP, homology, is_z_acyclic


@dataclass(frozen=True)
class Caps:
    """Resource limits for the expensive (non-formula) computation paths."""

    poset: int = DEFAULT_POSET_CAP
    simplex: int = DEFAULT_SIMPLEX_CAP
    homology: int = DEFAULT_HOMOLOGY_SIMPLEX_CAP


DEFAULT_CAPS = Caps()


@dataclass
class AnalysisReport:
    """Everything the suites and the CLI report about one (G, p) pair.

    Optional sections that were skipped because a cap was exceeded carry the
    reason in the matching *_skipped field; a skip is a first-class state,
    distinct from both success and failure.
    """

    name: str
    order: int
    degree: int
    prime: int
    p_part: int
    p_prime_part: int
    is_p_group: bool
    p_closed: bool
    p_ti: bool
    sylow_order: int
    sylow_count: int
    p_subgroup_count: int
    poset_elements: int
    chi_formula: int
    chi_intersections: int
    chi: int
    chi_p_local: int
    ti_closed_form: int | None = None
    chi_direct: int | None = None
    chi_direct_skipped: str | None = None
    p_d: int | None = None
    p_d_value: int | None = None
    congruence_ok: bool | None = None
    congruence_mod_p_ok: bool = True
    sylow_count_congruence_ok: bool | None = None
    component_count: int | None = None
    components_match: bool | None = None
    components_skipped: str | None = None
    homology_betti: tuple[int, ...] | None = None
    homology_torsion: tuple[tuple[int, ...], ...] | None = None
    z_acyclic: bool | None = None
    homology_skipped: str | None = None
    warnings: list[str] = field(default_factory=list)


def analyze(G: FiniteGroup, p: int, *, name: str | None = None,
            with_direct: bool = True, with_components: bool = True,
            with_homology: bool = False, caps: Caps = DEFAULT_CAPS
            ) -> AnalysisReport:
    """Analyze one (group, prime) pair.

    The two formula routes always run and must agree; the direct count,
    component count and homology run when requested and within caps.
    Divisibility of chi by the p'-part is enforced unconditionally.
    """
    sylows = all_sylow(G, p)
    chi_formula = chi_via_subgroup_mobius(G, p)
    chi_intersections = chi_via_sylow_intersections(G, p)
    if chi_formula != chi_intersections:
        raise ConsistencyError(
            f"formula routes disagree for {G.name} p={p}: "
            f"{chi_formula} != {chi_intersections}")
    report = AnalysisReport(
        name=name or G.name or "group",
        order=G.order,
        degree=G.degree,
        prime=p,
        p_part=G.p_part_of_order(p),
        p_prime_part=G.p_prime_part_of_order(p),
        is_p_group=G.is_p_group(p),
        p_closed=is_p_closed(G, p),
        p_ti=is_p_ti(G, p),
        sylow_order=sylow_subgroup(G, p).order,
        sylow_count=len(sylows),
        p_subgroup_count=_p_subgroup_count(G, p),
        poset_elements=coset_poset_size(G, p),
        chi_formula=chi_formula,
        chi_intersections=chi_intersections,
        chi=chi_formula,
        chi_p_local=p_local_chi(G, p),
    )
    if report.p_ti:
        report.ti_closed_form = chi_ti_closed_form(G, p)
        if report.ti_closed_form != report.chi:
            raise ConsistencyError(
                f"closed form {report.ti_closed_form} != chi {report.chi}")
    try:
        report.p_d, report.p_d_value = min_sylow_intersection_index(G, p)
        cong = congruence_check(G, p)
        report.congruence_ok = cong.ok_mod_p_d
        report.congruence_mod_p_ok = cong.ok_mod_p
        report.sylow_count_congruence_ok = cong.sylow_count_ok
    except PClosedNoPairs:
        report.congruence_mod_p_ok = (report.chi_p_local - 1) % p == 0

    poset = None
    poset_fail: str | None = None
    if with_direct or with_components or with_homology:
        try:
            poset = coset_poset(G, p, cap=caps.poset)
        except PosetCapExceeded as exc:
            poset_fail = str(exc)
    if with_direct:
        if poset is None:
            report.chi_direct_skipped = poset_fail
        else:
            try:
                counts = poset.chain_counts(cap=caps.simplex)
                report.chi_direct = sum((-1) ** d * c
                                        for d, c in enumerate(counts))
                if report.chi_direct != report.chi:
                    raise ConsistencyError(
                        f"direct count {report.chi_direct} != chi {report.chi} "
                        f"for {G.name} p={p}")
            except SimplexCapExceeded as exc:
                report.chi_direct_skipped = str(exc)
    if with_components:
        if poset is None:
            report.components_skipped = poset_fail
        else:
            report.component_count = poset.component_count()
            part = report.p_prime_part
            report.components_match = (
                report.component_count == part if report.p_closed
                else report.component_count < part)
    if with_homology:
        if poset is None:
            report.homology_skipped = poset_fail
        else:
            try:
                complex_ = poset.order_complex(cap=min(caps.simplex,
                                                       caps.homology))
                summary = homology(complex_, reduced=False, cap=caps.homology)
                report.homology_betti = summary.betti
                report.homology_torsion = summary.torsion
                report.z_acyclic = is_z_acyclic(complex_, cap=caps.homology)
            except SimplexCapExceeded as exc:
                report.homology_skipped = str(exc)
    return report


def _p_subgroup_count(G: FiniteGroup, p: int) -> int:
    from .group import all_p_subgroups

    return len(all_p_subgroups(G, p))
