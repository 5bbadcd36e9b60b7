"""Kauffman states of braid closure diagrams.

The closure diagram of a word has one arc for every piece of a strand
position between two consecutive crossings touching that position (cyclically,
through the closure). Smoothing a crossing joins its four arc-ends in pairs:

* vertical: bottom-left with top-left, bottom-right with top-right;
* horizontal: bottom-left with bottom-right, top-left with top-right.

For a positive letter the A-smoothing is vertical and the B-smoothing
horizontal; a negative letter swaps the two. Circles are the classes of a
union-find over arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BraidError, NotAdequateError, VerificationError
from .word import BraidWord

__all__ = [
    "ClosureDiagram",
    "AdequacyReport",
    "closure_diagram",
    "count_circles",
    "adequacy",
    "khovanov_width_adequate",
]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.find(x) == x)


@dataclass(frozen=True)
class ClosureDiagram:
    """Arc incidence of a braid closure.

    ``ends[j]`` lists the arcs at crossing j as
    ``(bottom_left, bottom_right, top_left, top_right)``.
    """

    word: BraidWord
    arc_count: int
    ends: tuple[tuple[int, int, int, int], ...]


def closure_diagram(word: BraidWord) -> ClosureDiagram:
    n = word.strands
    events: list[list[int]] = [[] for _ in range(n)]
    for j, x in enumerate(word.letters):
        i = abs(x) - 1
        events[i].append(j)
        events[i + 1].append(j)
    # arc k on position p ends just below the k-th event; arc 0 wraps around
    base = []
    total = 0
    for p in range(n):
        base.append(total)
        total += max(len(events[p]), 1)
    below: dict[tuple[int, int], int] = {}
    above: dict[tuple[int, int], int] = {}
    for p in range(n):
        m = len(events[p])
        for k, j in enumerate(events[p]):
            below[p, j] = base[p] + k
            above[p, j] = base[p] + (k + 1) % m
    ends = []
    for j, x in enumerate(word.letters):
        i = abs(x) - 1
        ends.append((below[i, j], below[i + 1, j], above[i, j], above[i + 1, j]))
    return ClosureDiagram(word, total, tuple(ends))


def _resolve(diagram: ClosureDiagram, vertical: Sequence[bool]) -> _UnionFind:
    uf = _UnionFind(diagram.arc_count)
    for (bl, br, tl, tr), v in zip(diagram.ends, vertical):
        if v:
            uf.union(bl, tl)
            uf.union(br, tr)
        else:
            uf.union(bl, br)
            uf.union(tl, tr)
    return uf


def _verticals(word: BraidWord, state: Sequence[str]) -> list[bool]:
    if len(state) != len(word):
        raise BraidError(
            f"state has {len(state)} entries but the word has {len(word)} crossings"
        )
    out = []
    for x, s in zip(word.letters, state):
        if s not in ("A", "B"):
            raise BraidError(f"state entries must be 'A' or 'B', got {s!r}")
        out.append((s == "A") == (x > 0))
    return out


def count_circles(word: BraidWord, state: Sequence[str]) -> int:
    """Number of circles after smoothing crossing j according to ``state[j]``."""
    diagram = closure_diagram(word)
    return _resolve(diagram, _verticals(word, state)).classes()


@dataclass(frozen=True)
class AdequacyReport:
    s_A: int
    s_B: int
    a_adequate: bool
    b_adequate: bool
    crossing_count: int
    a_failures: tuple[int, ...] = ()
    b_failures: tuple[int, ...] = ()

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate


def _state_failures(diagram: ClosureDiagram, vertical: list[bool]) -> tuple[int, list[int]]:
    uf = _resolve(diagram, vertical)
    failures = []
    for j, ((bl, br, tl, _tr), v) in enumerate(zip(diagram.ends, vertical)):
        # the two smoothing arcs start at bl and at br (vertical) or tl (horizontal)
        other = br if v else tl
        if uf.find(bl) == uf.find(other):
            failures.append(j)
    return uf.classes(), failures


def adequacy(word: BraidWord) -> AdequacyReport:
    diagram = closure_diagram(word)
    c = len(word)
    s_a, fa = _state_failures(diagram, _verticals(word, "A" * c))
    s_b, fb = _state_failures(diagram, _verticals(word, "B" * c))
    return AdequacyReport(
        s_A=s_a,
        s_B=s_b,
        a_adequate=not fa,
        b_adequate=not fb,
        crossing_count=c,
        a_failures=tuple(fa),
        b_failures=tuple(fb),
    )


def khovanov_width_adequate(word: BraidWord, report: AdequacyReport | None = None) -> int:
    """Khovanov width of the closure of an adequate diagram.

    Uses ``(c - s_A - s_B) / 2 + 3``; refuses diagrams that are not both A- and
    B-adequate.
    """
    if report is None:
        report = adequacy(word)
    if not report.adequate:
        raise NotAdequateError(report.a_failures, report.b_failures)
    numerator = report.crossing_count - report.s_A - report.s_B
    if numerator % 2:
        raise VerificationError(
            f"odd numerator {numerator} in width formula for an adequate diagram"
        )
    return numerator // 2 + 3
