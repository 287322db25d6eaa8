"""Theorem verification suites over the group catalog.

Each suite turns one family of invariants into per-entry checks with three
outcomes: pass, fail, or skip (a cap prevented the computation).  A suite
passes iff no check fails; skips are reported but never count as coverage
for the capped computation itself.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .analysis import Caps, DEFAULT_CAPS, analyze
from .catalog import (DEFAULT_CATALOG, PRODUCT_PAIRS, CatalogEntry,
                      entry_by_name, filtered_catalog)
from .chi import chi_via_sylow_intersections, p_local_chi
from .cosetposet import coset_poset, coset_poset_size, p_subgroup_poset, subgroup_poset
from .errors import CosetChiError
from .group import FiniteGroup, direct_product, is_p_ti, p_core, quotient_group
from .groupio import parse_group_expression
from .poset import Poset, mobius, mobius_from

SUITE_IDS = ("thm1", "thm2", "thm3", "thm4", "lemmas", "products")

SUITE_TITLES = {
    "thm1": "Euler characteristic 1 exactly for p-groups; acyclicity proxy",
    "thm2": "component count equals the p'-part exactly for p-closed groups",
    "thm3": "local chi classification for products of TI-Sylow groups",
    "thm4": "local chi congruent to 1 modulo the minimal Sylow index",
    "lemmas": "Mobius, Hall, quotient and counting consistency laws",
    "products": "local chi is multiplicative over direct products",
}

_MOBIUS_POSET_LIMIT = 400
_DENSE_POSET_LIMIT = 200
_HALL_POSET_LIMIT = 1000


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str  # pass | fail | skip
    detail: str = ""


@dataclass
class TaskResult:
    label: str
    checks_by_suite: dict[str, list[CheckOutcome]]


@dataclass
class SuiteResult:
    suite: str
    max_order: int
    rows: list[tuple[str, CheckOutcome]]
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: str | None = None

    def tally(self) -> None:
        self.passed = sum(1 for _, c in self.rows if c.status == "pass")
        self.failed = sum(1 for _, c in self.rows if c.status == "fail")
        self.skipped = sum(1 for _, c in self.rows if c.status == "skip")
        for label, c in self.rows:
            if c.status == "fail":
                self.first_failure = f"{label} {c.name}: {c.detail}"
                break

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _check(name: str, ok: bool, detail: str = "") -> CheckOutcome:
    return CheckOutcome(name, "pass" if ok else "fail", detail if not ok else "")


def _trim(seq) -> tuple:
    """Drop trailing zero/empty entries so summaries of homotopy-equivalent
    complexes of different dimensions compare equal."""
    out = list(seq)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _skip(name: str, detail: str) -> CheckOutcome:
    return CheckOutcome(name, "skip", detail)


# -- per-entry computation ----------------------------------------------------


def _factor_certificate(factors: tuple[str, ...], p: int
                        ) -> tuple[bool, int, bool]:
    """(all factors have TI Sylow structure modulo their p-core,
    number of S(3) factors, all non-S(3) factors have order prime to 2).

    The first flag certifies, without any isomorphism testing, that the
    group modulo its largest normal p-subgroup is a direct product of
    groups with pairwise trivially intersecting Sylow p-subgroups.
    """
    certified = True
    s3_count = 0
    others_odd = True
    for expr in factors:
        F, _ = parse_group_expression(expr)
        if expr == "S(3)":
            s3_count += 1
        elif F.order % 2 == 0:
            others_odd = False
        core = p_core(F, p)
        Q = F if core.order == 1 else quotient_group(F, core)[0]
        if not is_p_ti(Q, p):
            certified = False
    return certified, s3_count, others_odd


def _convolutions_hold(P: Poset) -> tuple[bool, str]:
    """Verify both defining Möbius convolutions on every comparable pair."""
    table = mobius(P)
    leq = P.leq
    from_x: dict[int, dict[int, int]] = {}
    to_y: dict[int, dict[int, int]] = {}
    for (x, y), v in table.entries.items():
        from_x.setdefault(x, {})[y] = v
        to_y.setdefault(y, {})[x] = v
    for (x, y) in table.entries:
        if x == y:
            continue
        left = sum(v for z, v in from_x[x].items() if leq[z, y])
        right = sum(v for z, v in to_y[y].items() if leq[x, z])
        if left != 0 or right != 0:
            return False, f"convolution failed on pair ({x}, {y})"
    return True, ""


def _entry_task(entry: CatalogEntry, p: int, suites: tuple[str, ...],
                caps: Caps) -> TaskResult:
    label = f"{entry.name} p={p}"
    out: dict[str, list[CheckOutcome]] = {s: [] for s in suites}

    try:
        G, factors = entry.build()
    except CosetChiError as exc:
        for s in suites:
            out[s].append(_check("build", False, str(exc)))
        return TaskResult(label, out)
    if G.order != entry.order:
        for s in suites:
            out[s].append(_check(
                "catalog_order", False,
                f"constructed order {G.order} != recorded {entry.order}"))
        return TaskResult(label, out)

    need_homology = "thm1" in suites or "lemmas" in suites
    try:
        rep = analyze(G, p, name=entry.name, with_direct=True,
                      with_components=True, with_homology=need_homology,
                      caps=caps)
    except CosetChiError as exc:
        for s in suites:
            out[s].append(_check("analysis", False, str(exc)))
        return TaskResult(label, out)

    if "thm1" in suites:
        checks = out["thm1"]
        checks.append(_check(
            "formula_agreement", rep.chi_formula == rep.chi_intersections,
            f"{rep.chi_formula} != {rep.chi_intersections}"))
        checks.append(_check(
            "chi_one_iff_p_group", (rep.chi == 1) == rep.is_p_group,
            f"chi={rep.chi} is_p_group={rep.is_p_group}"))
        checks.append(_check(
            "p_prime_part_divides_chi", rep.chi % rep.p_prime_part == 0,
            f"chi={rep.chi} part={rep.p_prime_part}"))
        if rep.chi_direct is None:
            checks.append(_skip("direct_count_agreement",
                                rep.chi_direct_skipped or "capped"))
        else:
            checks.append(_check("direct_count_agreement",
                                 rep.chi_direct == rep.chi,
                                 f"{rep.chi_direct} != {rep.chi}"))
        if rep.z_acyclic is None:
            checks.append(_skip("z_acyclic_iff_p_group",
                                rep.homology_skipped or "capped"))
        else:
            checks.append(_check(
                "z_acyclic_iff_p_group", rep.z_acyclic == rep.is_p_group,
                f"z_acyclic={rep.z_acyclic} is_p_group={rep.is_p_group}"))
            euler = sum((-1) ** i * b for i, b in enumerate(rep.homology_betti))
            checks.append(_check("euler_poincare", euler == rep.chi,
                                 f"betti sum {euler} != chi {rep.chi}"))

    if "thm2" in suites:
        checks = out["thm2"]
        if rep.component_count is None:
            checks.append(_skip("component_count_law",
                                rep.components_skipped or "capped"))
        else:
            checks.append(_check(
                "component_count_law", bool(rep.components_match),
                f"components={rep.component_count} part={rep.p_prime_part} "
                f"p_closed={rep.p_closed}"))

    if "thm3" in suites:
        checks = out["thm3"]
        certified, s3_count, others_odd = _factor_certificate(factors, p)
        if not certified:
            checks.append(_skip("local_chi_classification",
                                "factors not TI modulo p-core"))
        else:
            classified = rep.p_closed or (
                p == 2 and s3_count > 0 and s3_count % 2 == 0 and others_odd)
            checks.append(_check(
                "local_chi_classification",
                (rep.chi_p_local == 1) == classified,
                f"chi_p={rep.chi_p_local} classified={classified}"))
        if rep.p_ti and not rep.p_closed:
            checks.append(_check("ti_local_chi_bound", rep.chi_p_local <= -1,
                                 f"chi_p={rep.chi_p_local}"))
            is_s3_times_odd = p == 2 and s3_count == 1 and others_odd
            checks.append(_check(
                "ti_equality_case",
                (rep.chi_p_local == -1) == is_s3_times_odd,
                f"chi_p={rep.chi_p_local} s3_times_odd={is_s3_times_odd}"))

    if "thm4" in suites:
        checks = out["thm4"]
        checks.append(_check("congruence_mod_p", rep.congruence_mod_p_ok,
                             f"chi_p={rep.chi_p_local} p={p}"))
        if rep.p_closed:
            checks.append(_skip("congruence_mod_p_d", "p-closed: no Sylow pairs"))
        else:
            checks.append(_check(
                "congruence_mod_p_d", bool(rep.congruence_ok),
                f"chi_p={rep.chi_p_local} p^d={rep.p_d_value}"))
            checks.append(_check(
                "sylow_count_mod_p_d", bool(rep.sylow_count_congruence_ok),
                f"s={rep.sylow_count} p^d={rep.p_d_value}"))

    if "lemmas" in suites:
        checks = out["lemmas"]
        if rep.chi_direct is None:
            checks.append(_skip("three_way_chi_agreement",
                                rep.chi_direct_skipped or "capped"))
        else:
            checks.append(_check(
                "three_way_chi_agreement",
                rep.chi_formula == rep.chi_intersections == rep.chi_direct,
                f"{rep.chi_formula}/{rep.chi_intersections}/{rep.chi_direct}"))
        checks.append(_check(
            "coset_count_formula",
            rep.poset_elements == coset_poset_size(G, p),
            "arithmetic count mismatch"))
        handles = p_subgroup_poset(G, p).with_bounds_handles()
        if len(handles) > _MOBIUS_POSET_LIMIT:
            checks.append(_skip("mobius_convolutions",
                                f"{len(handles)} subgroups"))
        else:
            ok, detail = _convolutions_hold(subgroup_poset(handles))
            checks.append(_check("mobius_convolutions", ok, detail))
        checks.extend(_poset_law_checks(G, p, rep.chi, caps))
        checks.extend(_quotient_checks(entry, G, p, rep, caps))

    return TaskResult(label, out)


def _poset_law_checks(G: FiniteGroup, p: int, chi: int, caps: Caps
                      ) -> list[CheckOutcome]:
    """Hall's identity and the pair-sum identity on the coset poset itself."""
    checks: list[CheckOutcome] = []
    size = coset_poset_size(G, p)
    if size > _HALL_POSET_LIMIT:
        checks.append(_skip("hall_identity", f"{size} elements"))
    else:
        P = coset_poset(G, p, cap=caps.poset).to_poset()
        bounded, bottom, top = P.with_bounds()
        mu_hat = mobius_from(bounded, bottom)[top]
        checks.append(_check("hall_identity", mu_hat == chi - 1,
                             f"mu(0,1)={mu_hat} chi-1={chi - 1}"))
        if size > _DENSE_POSET_LIMIT:
            checks.append(_skip("chi_equals_mobius_pair_sum", f"{size} elements"))
        else:
            total = sum(mobius(P).entries.values())
            checks.append(_check("chi_equals_mobius_pair_sum", total == chi,
                                 f"pair sum {total} != chi {chi}"))
    return checks


def _quotient_checks(entry: CatalogEntry, G: FiniteGroup, p: int, rep,
                     caps: Caps) -> list[CheckOutcome]:
    """Invariance of local chi (plus components and homology when cheap)
    under factoring out the largest normal p-subgroup."""
    checks: list[CheckOutcome] = []
    core = p_core(G, p)
    if core.order == 1:
        return checks
    Q, _ = quotient_group(G, core)
    q_rep = analyze(Q, p, name=f"{entry.name}/core", with_direct=False,
                    with_components=True, with_homology=True, caps=caps)
    checks.append(_check(
        "quotient_local_chi", q_rep.chi_p_local == rep.chi_p_local,
        f"{q_rep.chi_p_local} != {rep.chi_p_local}"))
    if rep.component_count is not None and q_rep.component_count is not None:
        checks.append(_check(
            "quotient_components",
            q_rep.component_count == rep.component_count,
            f"{q_rep.component_count} != {rep.component_count}"))
    if rep.homology_betti is not None and q_rep.homology_betti is not None:
        same = (_trim(rep.homology_betti) == _trim(q_rep.homology_betti)
                and _trim(rep.homology_torsion) == _trim(q_rep.homology_torsion))
        checks.append(_check(
            "quotient_homology", same,
            f"{rep.homology_betti} != {q_rep.homology_betti}"))
    if entry.quotient_link:
        L, _ = entry_by_name(entry.quotient_link).build()
        checks.append(_check(
            "quotient_link_local_chi",
            p_local_chi(L, p) == rep.chi_p_local,
            f"link {entry.quotient_link}"))
    return checks


def _pair_task(expr1: str, expr2: str, p: int, caps: Caps) -> TaskResult:
    label = f"{expr1} x {expr2} p={p}"
    G1, _ = parse_group_expression(expr1)
    G2, _ = parse_group_expression(expr2)
    G = direct_product(G1, G2)
    lhs_chi = chi_via_sylow_intersections(G, p)
    rhs_chi = (chi_via_sylow_intersections(G1, p)
               * chi_via_sylow_intersections(G2, p))
    lhs_local = p_local_chi(G, p)
    rhs_local = p_local_chi(G1, p) * p_local_chi(G2, p)
    checks = [
        _check("chi_multiplicative", lhs_chi == rhs_chi,
               f"{lhs_chi} != {rhs_chi}"),
        _check("local_chi_multiplicative", lhs_local == rhs_local,
               f"{lhs_local} != {rhs_local}"),
    ]
    return TaskResult(label, {"products": checks})


# -- the runner ---------------------------------------------------------------


def _run_entry_task(args) -> tuple[int, TaskResult]:
    index, entry, p, suites, caps = args
    return index, _entry_task(entry, p, suites, caps)


def _run_pair_task(args) -> tuple[int, TaskResult]:
    index, expr1, expr2, p, caps = args
    return index, _pair_task(expr1, expr2, p, caps)


def run_suites(suites: tuple[str, ...], max_order: int = 200,
               primes: tuple[int, ...] | None = None, jobs: int = 1,
               caps: Caps = DEFAULT_CAPS) -> list[SuiteResult]:
    """Run the requested suites over the filtered catalog.

    Catalog entries are analyzed independently (in parallel when jobs > 1);
    aggregation is ordered by catalog position, never by completion order.
    """
    for s in suites:
        if s not in SUITE_IDS:
            raise ValueError(f"unknown suite {s!r}")
    entry_suites = tuple(s for s in suites if s != "products")
    entry_args = []
    if entry_suites:
        for entry, p in filtered_catalog(max_order, primes):
            entry_args.append((len(entry_args), entry, p, entry_suites, caps))
    pair_args = []
    if "products" in suites:
        for expr1, expr2, p in PRODUCT_PAIRS:
            if primes is not None and p not in primes:
                continue
            pair_args.append((len(pair_args), expr1, expr2, p, caps))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entry_results = [r for _, r in sorted(pool.map(_run_entry_task,
                                                           entry_args))]
            pair_results = [r for _, r in sorted(pool.map(_run_pair_task,
                                                          pair_args))]
    else:
        entry_results = [_run_entry_task(a)[1] for a in entry_args]
        pair_results = [_run_pair_task(a)[1] for a in pair_args]

    out = []
    for suite in suites:
        result = SuiteResult(suite=suite, max_order=max_order, rows=[])
        source = pair_results if suite == "products" else entry_results
        for task in source:
            for check in task.checks_by_suite.get(suite, ()):
                result.rows.append((task.label, check))
        result.tally()
        out.append(result)
    return out


def run_suite(suite: str, max_order: int = 200,
              primes: tuple[int, ...] | None = None, jobs: int = 1,
              caps: Caps = DEFAULT_CAPS) -> list[SuiteResult]:
    """Entry point used by the CLI; 'all' expands to every suite in order."""
    suites = SUITE_IDS if suite == "all" else (suite,)
    return run_suites(suites, max_order=max_order, primes=primes, jobs=jobs,
                      caps=caps)


def search_chi_one(max_order: int = 200,
                   primes: tuple[int, ...] | None = None,
                   extra_entries: list[CatalogEntry] | None = None
                   ) -> list[dict]:
    """Non-p-closed catalog entries with local chi equal to 1 (formula path)."""
    from .group import all_sylow, is_p_closed

    findings = []
    entries = list(DEFAULT_CATALOG) + list(extra_entries or [])
    for entry in entries:
        if entry.order > max_order:
            continue
        for p in entry.primes:
            if primes is not None and p not in primes:
                continue
            G, _ = entry.build()
            if is_p_closed(G, p):
                continue
            local = p_local_chi(G, p)
            if local == 1:
                findings.append({
                    "name": entry.name,
                    "prime": p,
                    "order": G.order,
                    "chi": chi_via_sylow_intersections(G, p),
                    "chi_p_local": local,
                    "sylow_count": len(all_sylow(G, p)),
                })
    return findings
