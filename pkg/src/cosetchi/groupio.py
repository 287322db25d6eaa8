"""Parsers for group constructor expressions and group-definition files.

Expression grammar: atoms S(n), A(n), D(n) (dihedral of order 2n), C(n),
Q8, F21, joined by 'x' for direct products, e.g. 'S(3)xS(3)'.

Group-definition file format::

    name: <string>
    degree: <n>
    generators:
    (1 2)(3 4)
    ...

with one generator per line in disjoint-cycle notation on 1-based points;
the identity group has no lines after 'generators:'.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .group import (FiniteGroup, alternating, cyclic, dihedral, direct_product,
                    frobenius21, generate_group, quaternion8, symmetric)
from .perm import Permutation

_ATOM_RE = re.compile(r"^([SADC])\((\d+)\)$|^(Q8|F21)$")

_SPECIAL = {"Q8": quaternion8, "F21": frobenius21}
_PARAMETRIC = {"S": symmetric, "A": alternating, "D": dihedral, "C": cyclic}


def _build_atom(token: str) -> FiniteGroup:
    m = _ATOM_RE.match(token)
    if not m:
        raise ParseError(f"bad group atom {token!r}")
    if m.group(3):
        return _SPECIAL[m.group(3)]()
    try:
        return _PARAMETRIC[m.group(1)](int(m.group(2)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_group_expression(expr: str) -> tuple[FiniteGroup, tuple[str, ...]]:
    """Build a group from a constructor expression.

    Returns the group and the tuple of normalized factor atoms, which serves
    as construction metadata (e.g. for product-structure certificates).
    """
    text = "".join(expr.split())
    if not text:
        raise ParseError("empty group expression")
    atoms = text.split("x")
    groups = [_build_atom(a) for a in atoms]
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    G.name = "x".join(atoms)
    return G, tuple(atoms)


def parse_group_file(text: str) -> tuple[str, FiniteGroup]:
    """Parse the group-definition file format; returns (name, group)."""
    lines = [ln.rstrip() for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 3:
        raise ParseError("group file needs name, degree and generators lines")
    m = re.match(r"^name:\s*(.*)$", lines[0])
    if not m:
        raise ParseError(f"first line must be 'name: <string>', got {lines[0]!r}")
    name = m.group(1).strip()
    m = re.match(r"^degree:\s*(\d+)$", lines[1])
    if not m:
        raise ParseError(f"second line must be 'degree: <n>', got {lines[1]!r}")
    degree = int(m.group(1))
    if degree < 1:
        raise ParseError("degree must be positive")
    if lines[2].strip() != "generators:":
        raise ParseError(f"third line must be 'generators:', got {lines[2]!r}")
    gens = [Permutation.from_cycle_string(ln.strip(), degree)
            for ln in lines[3:] if ln.strip()]
    return name, generate_group(degree, gens, name=name)


def load_group_file(path: str) -> tuple[str, FiniteGroup]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_file(fh.read())
