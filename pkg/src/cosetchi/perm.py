"""Permutations of {0, ..., degree-1}, ordered lexicographically by image tuple."""

from __future__ import annotations

import math
import re

from .errors import ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable permutation stored as its tuple of images.

    Composition is left-to-right: (a * b)(x) = b(a(x)).  The identity has
    images (0, 1, ..., n-1), which is also the lexicographically smallest
    image tuple of any permutation; element id 0 of an enumerated group is
    therefore always the identity.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(o[x] for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each rotated to start at its minimum, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Disjoint-cycle notation with 1-based points, '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    @classmethod
    def from_cycle_string(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation with 1-based points, e.g. '(1 2)(3 4)'."""
        normalized = text.replace(",", " ")
        if _CYCLE_RE.sub("", normalized).strip():
            raise ParseError(f"stray characters in cycle notation: {text!r}")
        images = list(range(degree))
        used: set[int] = set()
        for body in _CYCLE_RE.findall(normalized):
            pts = [int(tok) for tok in body.split()]
            if not pts:
                continue
            for p in pts:
                if not 1 <= p <= degree:
                    raise ParseError(f"point {p} outside 1..{degree}: {text!r}")
                if p - 1 in used:
                    raise ParseError(f"point {p} repeated in {text!r}")
                used.add(p - 1)
            if len(pts) == 1:
                continue
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b - 1
        return cls(images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"
