"""Deterministic rendering of analysis reports and suite results.

Line-oriented text: one key per line, nested sections indented two spaces,
numbers in full decimal, booleans lowercase.  Identical inputs and flags
produce byte-identical output.  A JSON emitter mirrors the same structure.
"""

from __future__ import annotations

import json

from .analysis import AnalysisReport
from .suites import SUITE_TITLES, SuiteResult


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value) if value else "none"
    return str(value)


def analysis_to_dict(rep: AnalysisReport) -> dict:
    """Ordered plain-data view of a report (drives both output formats)."""
    out: dict = {
        "group": rep.name,
        "order": rep.order,
        "degree": rep.degree,
        "prime": rep.prime,
        "p_part": rep.p_part,
        "p_prime_part": rep.p_prime_part,
        "is_p_group": rep.is_p_group,
        "p_closed": rep.p_closed,
        "p_TI": rep.p_ti,
        "sylow_order": rep.sylow_order,
        "sylow_count": rep.sylow_count,
        "p_subgroup_count": rep.p_subgroup_count,
        "coset_poset_elements": rep.poset_elements,
        "chi_formula": rep.chi_formula,
        "chi_intersections": rep.chi_intersections,
    }
    if rep.chi_direct is not None:
        out["chi_direct"] = rep.chi_direct
    elif rep.chi_direct_skipped is not None:
        out["chi_direct_skipped"] = rep.chi_direct_skipped
    out["chi"] = rep.chi
    out["chi_p_local"] = rep.chi_p_local
    if rep.ti_closed_form is not None:
        out["ti_closed_form"] = rep.ti_closed_form
    congruence: dict = {"mod_p_ok": rep.congruence_mod_p_ok}
    if rep.p_d is not None:
        congruence.update({
            "d": rep.p_d,
            "p_d": rep.p_d_value,
            "mod_p_d_ok": rep.congruence_ok,
            "sylow_count_mod_p_d_ok": rep.sylow_count_congruence_ok,
        })
    out["congruence"] = congruence
    if rep.component_count is not None:
        out["components"] = {
            "count": rep.component_count,
            "p_prime_part": rep.p_prime_part,
            "law_ok": rep.components_match,
        }
    elif rep.components_skipped is not None:
        out["components_skipped"] = rep.components_skipped
    if rep.homology_betti is not None:
        out["homology"] = {
            "betti": list(rep.homology_betti),
            "torsion": [list(t) for t in rep.homology_torsion or ()],
            "z_acyclic": rep.z_acyclic,
        }
    elif rep.homology_skipped is not None:
        out["homology_skipped"] = rep.homology_skipped
    return out


def _render_block(data: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_block(value, indent + 1))
        elif (isinstance(value, list) and value
              and all(isinstance(v, list) for v in value)):
            flat = ["[" + " ".join(str(x) for x in v) + "]" for v in value]
            lines.append(f"{pad}{key}: {' '.join(flat) if flat else 'none'}")
        else:
            lines.append(f"{pad}{key}: {_fmt(value)}")
    return lines


def render_analysis(rep: AnalysisReport, fmt: str = "text") -> str:
    data = analysis_to_dict(rep)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    return "\n".join(["report:"] + _render_block(data, 1)) + "\n"


def render_suites(results: list[SuiteResult], fmt: str = "text") -> str:
    if fmt == "json":
        payload = [{
            "suite": r.suite,
            "title": SUITE_TITLES[r.suite],
            "max_order": r.max_order,
            "checks": [{"entry": label, "check": c.name, "status": c.status,
                        "detail": c.detail} for label, c in r.rows],
            "passed": r.passed,
            "failed": r.failed,
            "skipped": r.skipped,
            "result": "PASS" if r.ok else "FAIL",
        } for r in results]
        overall = all(r.ok for r in results)
        return json.dumps({"suites": payload,
                           "overall": "PASS" if overall else "FAIL"},
                          indent=2) + "\n"
    lines = []
    for r in results:
        lines.append(f"suite: {r.suite}")
        lines.append(f"title: {SUITE_TITLES[r.suite]}")
        lines.append(f"max_order: {r.max_order}")
        lines.append("checks:")
        for label, c in r.rows:
            detail = f" ({c.detail})" if c.detail else ""
            lines.append(f"  {label} {c.name}: {c.status}{detail}")
        lines.append("summary:")
        lines.append(f"  passed: {r.passed}")
        lines.append(f"  failed: {r.failed}")
        lines.append(f"  skipped: {r.skipped}")
        if r.first_failure:
            lines.append(f"  first_failure: {r.first_failure}")
        lines.append(f"result: {'PASS' if r.ok else 'FAIL'}")
        lines.append("")
    overall = all(r.ok for r in results)
    lines.append(f"overall: {'PASS' if overall else 'FAIL'}")
    return "\n".join(lines) + "\n"


def render_search(findings: list[dict], max_order: int, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"max_order": max_order, "findings": findings,
                           "count": len(findings)}, indent=2) + "\n"
    lines = ["search: non-p-closed groups with local chi equal to 1",
             f"max_order: {max_order}", "findings:"]
    if not findings:
        lines.append("  none")
    for f in findings:
        lines.append(f"  {f['name']} p={f['prime']} order={f['order']} "
                     f"chi={f['chi']} chi_p_local={f['chi_p_local']} "
                     f"sylow_count={f['sylow_count']}")
    lines.append(f"count: {len(findings)}")
    return "\n".join(lines) + "\n"
