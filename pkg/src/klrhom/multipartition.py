"""Multipartitions, nodes, dominance, contents and the column/row splits.

Components are drawn in a diagonal line from top right to bottom left, so
component m+1 sits to the left of and below component m.  A node (r, c, m)
therefore lies weakly left of (r', c', m') when m > m', or m = m' and
c <= c'; it lies strictly above when m < m', or m = m' and r < r'.
"""

from __future__ import annotations

import itertools
from functools import cache
from typing import Iterator, NamedTuple

from .config import AlgebraConfig


class Node(NamedTuple):
    """A box (row, col, comp), all 1-based."""

    row: int
    col: int
    comp: int


def node_weakly_left(a: Node, b: Node) -> bool:
    """True when a lies at least as far left as b."""
    if a.comp != b.comp:
        return a.comp > b.comp
    return a.col <= b.col


def node_strictly_below(a: Node, b: Node) -> bool:
    """True when a lies strictly below b."""
    if a.comp != b.comp:
        return a.comp > b.comp
    return a.row > b.row


def node_strictly_above(a: Node, b: Node) -> bool:
    if a.comp != b.comp:
        return a.comp < b.comp
    return a.row < b.row


def node_weakly_above(a: Node, b: Node) -> bool:
    if a.comp != b.comp:
        return a.comp < b.comp
    return a.row <= b.row


def _trim(parts) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _conj_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


class Multipartition:
    """A tuple of partitions, trailing zeros trimmed, structurally hashable."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        comps = tuple(_trim(c) for c in comps)
        for c in comps:
            if any(c[i] < c[i + 1] for i in range(len(c) - 1)) or any(p < 0 for p in c):
                raise ValueError("component %r is not a partition" % (c,))
        self.comps = comps

    @property
    def level(self) -> int:
        return len(self.comps)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.comps)

    def component(self, m: int) -> tuple[int, ...]:
        """1-based component access."""
        return self.comps[m - 1]

    def row_length(self, m: int, r: int) -> int:
        c = self.comps[m - 1]
        return c[r - 1] if r <= len(c) else 0

    def col_length(self, m: int, c: int) -> int:
        """Number of boxes in column c of component m."""
        return sum(1 for p in self.comps[m - 1] if p >= c)

    def nodes(self) -> Iterator[Node]:
        """All nodes, by component then row then column."""
        for m, comp in enumerate(self.comps, start=1):
            for r, length in enumerate(comp, start=1):
                for c in range(1, length + 1):
                    yield Node(r, c, m)

    def contains(self, node: Node) -> bool:
        r, c, m = node
        return 1 <= m <= self.level and c >= 1 and c <= self.row_length(m, r)

    def removable_nodes(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self.comps, start=1):
            for r, length in enumerate(comp, start=1):
                if length > 0 and (r == len(comp) or comp[r] < length):
                    out.append(Node(r, length, m))
        return out

    def addable_nodes(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self.comps, start=1):
            for r in range(1, len(comp) + 2):
                length = comp[r - 1] if r <= len(comp) else 0
                above = comp[r - 2] if r >= 2 else None
                if above is None or length < above:
                    out.append(Node(r, length + 1, m))
        return out

    def remove_node(self, node: Node) -> "Multipartition":
        r, c, m = node
        comp = list(self.comps[m - 1])
        if r > len(comp) or comp[r - 1] != c:
            raise ValueError("%r is not removable from %r" % (node, self))
        comp[r - 1] -= 1
        comps = list(self.comps)
        comps[m - 1] = tuple(comp)
        return Multipartition(comps)

    def add_node(self, node: Node) -> "Multipartition":
        r, c, m = node
        comp = list(self.comps[m - 1])
        while len(comp) < r:
            comp.append(0)
        if comp[r - 1] != c - 1:
            raise ValueError("%r is not addable to %r" % (node, self))
        comp[r - 1] += 1
        comps = list(self.comps)
        comps[m - 1] = tuple(comp)
        return Multipartition(comps)

    def conjugate(self) -> "Multipartition":
        """Reverse the components and conjugate each diagram."""
        return Multipartition(tuple(_conj_partition(c) for c in reversed(self.comps)))

    def __eq__(self, other):
        return isinstance(other, Multipartition) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return "Multipartition(%r)" % (self.comps,)

    def __str__(self):
        return format_multipartition(self)


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """The dominance partial order via prefix sums."""
    if lam.size != mu.size or lam.level != mu.level:
        raise ValueError("dominance needs equal size and level")
    acc_l = acc_m = 0
    for m in range(1, lam.level + 1):
        cl, cm = lam.component(m), mu.component(m)
        for r in range(1, max(len(cl), len(cm)) + 1):
            left = acc_l + sum(cl[:r])
            right = acc_m + sum(cm[:r])
            if left < right:
                return False
        acc_l += sum(cl)
        acc_m += sum(cm)
    return True


def content(lam: Multipartition, cfg: AlgebraConfig) -> dict[int, int]:
    """Multiplicity of each residue among the nodes, as a root."""
    out: dict[int, int] = {}
    for node in lam.nodes():
        i = cfg.residue(node)
        out[i] = out.get(i, 0) + 1
    return out


def defect_of_content(alpha: dict[int, int], cfg: AlgebraConfig) -> int:
    """(Lambda_kappa | alpha) - (alpha | alpha)/2 for a root alpha."""
    lam_pairing = sum(alpha.get(cfg.normalise(k), 0) for k in cfg.kappa)
    quad = 0
    for i, ci in alpha.items():
        for j, cj in alpha.items():
            quad += ci * cj * cfg.cartan(i, j)
    assert quad % 2 == 0
    return lam_pairing - quad // 2


def defect(lam: Multipartition, cfg: AlgebraConfig) -> int:
    return defect_of_content(content(lam, cfg), cfg)


# ---------------------------------------------------------------------------
# column and row splits

def split_columns(lam: Multipartition, c: int, m: int, kappa: tuple[int, ...]):
    """Split after column c of component m.

    Returns (lam_L, lam_R, kappa_L, kappa_R).  The left part keeps columns
    1..c of component m and all later components; the right part keeps the
    columns after c and all earlier components.
    """
    if not (1 <= m <= lam.level) or c < 0:
        raise ValueError("bad split parameters c=%r m=%r" % (c, m))
    comp = lam.component(m)
    left_m = _trim(min(p, c) for p in comp)
    right_m = _trim(max(p - c, 0) for p in comp)
    lam_left = Multipartition((left_m,) + lam.comps[m:])
    lam_right = Multipartition(lam.comps[: m - 1] + (right_m,))
    kappa_left = kappa[m - 1:]
    kappa_right = kappa[: m - 1] + (kappa[m - 1] + c,)
    return lam_left, lam_right, kappa_left, kappa_right


def split_rows(lam: Multipartition, r: int, m: int, kappa: tuple[int, ...]):
    """Split after row r of component m.

    Returns (lam_T, lam_B, kappa_T, kappa_B).
    """
    if not (1 <= m <= lam.level) or r < 0:
        raise ValueError("bad split parameters r=%r m=%r" % (r, m))
    comp = lam.component(m)
    top_m = comp[:r]
    bottom_m = comp[r:]
    lam_top = Multipartition(lam.comps[: m - 1] + (top_m,))
    lam_bottom = Multipartition((bottom_m,) + lam.comps[m:])
    kappa_top = kappa[:m]
    kappa_bottom = (kappa[m - 1] - r,) + kappa[m:]
    return lam_top, lam_bottom, kappa_top, kappa_bottom


def lr_join(lam: Multipartition, mu: Multipartition, c: int, m: int) -> Multipartition:
    """The multipartition whose left part is lam's and right part is mu's.

    Requires lam and mu to have the same level and the column compatibility
    lam^(m)'_c >= mu^(m)'_c >= mu^(m)'_{c+1}.
    """
    if lam.level != mu.level:
        raise ValueError("levels differ")
    if c > 0:
        lc = lam.col_length(m, c)
        mc = mu.col_length(m, c)
        mc1 = mu.col_length(m, c + 1)
        if not (lc >= mc >= mc1):
            raise ValueError(
                "incompatible join at (c=%d, m=%d): column lengths %d, %d, %d"
                % (c, m, lc, mc, mc1)
            )
    comp_l = lam.component(m)
    comp_r = mu.component(m)
    rows = max(len(comp_l), len(comp_r))
    merged = _trim(
        min(comp_l[i] if i < len(comp_l) else 0, c)
        + max((comp_r[i] if i < len(comp_r) else 0) - c, 0)
        for i in range(rows)
    )
    return Multipartition(mu.comps[: m - 1] + (merged,) + lam.comps[m:])


# ---------------------------------------------------------------------------
# enumeration

@cache
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, largest part first within each."""
    if n == 0:
        return ((),)
    out = []

    def grow(remaining, max_part, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, max_part), 0, -1):
            prefix.append(p)
            grow(remaining - p, p, prefix)
            prefix.pop()

    grow(n, n, [])
    return tuple(out)


@cache
def multipartitions_of(n: int, level: int) -> tuple[Multipartition, ...]:
    out = []
    for sizes in itertools.product(range(n + 1), repeat=level):
        if sum(sizes) != n:
            continue
        for combo in itertools.product(*(partitions_of(k) for k in sizes)):
            out.append(Multipartition(combo))
    return tuple(out)


# ---------------------------------------------------------------------------
# text format: components separated by "|", parts by ",", empty written "0"

def format_multipartition(lam: Multipartition) -> str:
    return "|".join(",".join(map(str, c)) if c else "0" for c in lam.comps)


def parse_multipartition(text: str) -> Multipartition:
    comps = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("0", ""):
            comps.append(())
        else:
            comps.append(tuple(int(p) for p in chunk.split(",")))
    return Multipartition(comps)
