"""Standard tableaux, degrees, dominated sets and the split/join maps.

A tableau is stored by rows per component, so ``rows[m-1][r-1][c-1]`` is the
entry in node (r, c, m).  The distinguished tableaux are ``t_col`` (entries
written down successive columns, leftmost component last) and ``t_row``
(entries along successive rows, first component first).

Tableau dominance follows the Bruhat order of the column permutations:
s dominates t when w_s is Bruhat-above w_t, so ``t_col(shape)`` is the
minimum of the order.
"""

from __future__ import annotations

from functools import cache

from . import symgroup
from .config import AlgebraConfig
from .errors import NotSplittableError
from .multipartition import (
    Multipartition,
    Node,
    node_strictly_above,
    node_strictly_below,
    node_weakly_above,
    node_weakly_left,
    split_columns,
    split_rows,
)


class Tableau:
    """A bijective filling of a multipartition diagram by 1..n."""

    __slots__ = ("rows", "_pos")

    def __init__(self, rows):
        self.rows = tuple(tuple(tuple(row) for row in comp) for comp in rows)
        pos: dict[int, Node] = {}
        for m, comp in enumerate(self.rows, start=1):
            for r, row in enumerate(comp, start=1):
                for c, entry in enumerate(row, start=1):
                    pos[entry] = Node(r, c, m)
        self._pos = pos
        if set(pos) != set(range(1, len(pos) + 1)):
            raise ValueError("entries must be exactly 1..n")

    @property
    def size(self) -> int:
        return len(self._pos)

    @property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(row) for row in comp) for comp in self.rows))

    def entry(self, node: Node) -> int:
        r, c, m = node
        return self.rows[m - 1][r - 1][c - 1]

    def node_of(self, entry: int) -> Node:
        return self._pos[entry]

    def is_row_strict(self) -> bool:
        return all(row[i] < row[i + 1] for comp in self.rows for row in comp for i in range(len(row) - 1))

    def is_column_strict(self) -> bool:
        for comp in self.rows:
            for r in range(len(comp) - 1):
                upper, lower = comp[r], comp[r + 1]
                if any(upper[c] > lower[c] for c in range(len(lower))):
                    return False
        return True

    def is_standard(self) -> bool:
        return self.is_row_strict() and self.is_column_strict()

    def conjugate(self) -> "Tableau":
        """t'(r, c, m) = t(c, r, l+1-m)."""
        shape_conj = self.shape.conjugate()
        level = self.shape.level
        rows = []
        for m, comp in enumerate(shape_conj.comps, start=1):
            rows.append(
                tuple(
                    tuple(self.entry(Node(c, r, level + 1 - m)) for c in range(1, width + 1))
                    for r, width in enumerate(comp, start=1)
                )
            )
        return Tableau(rows)

    def apply_perm(self, w) -> "Tableau":
        """Relabel every entry x as w(x)."""
        return Tableau(
            tuple(tuple(tuple(w[x - 1] for x in row) for row in comp) for comp in self.rows)
        )

    def restrict(self, k: int) -> "Tableau":
        """The subtableau on entries 1..k (valid when row-strict)."""
        return Tableau(tuple(comp_rows_filter(comp, k) for comp in self.rows))

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Tableau(%r)" % (self.rows,)

    def __str__(self):
        return format_tableau(self)


def comp_rows_filter(comp, k: int):
    out = []
    for row in comp:
        trimmed = tuple(x for x in row if x <= k)
        out.append(trimmed)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# distinguished tableaux and column/row permutations

@cache
def t_col(shape: Multipartition) -> Tableau:
    """Entries 1..n down successive columns from left to right."""
    entries = {}
    counter = 1
    for m in range(shape.level, 0, -1):
        comp = shape.component(m)
        width = comp[0] if comp else 0
        for c in range(1, width + 1):
            for r in range(1, shape.col_length(m, c) + 1):
                entries[Node(r, c, m)] = counter
                counter += 1
    return _tableau_from_entries(shape, entries)


@cache
def t_row(shape: Multipartition) -> Tableau:
    """Entries 1..n along successive rows from top to bottom."""
    entries = {}
    counter = 1
    for m in range(1, shape.level + 1):
        for r, length in enumerate(shape.component(m), start=1):
            for c in range(1, length + 1):
                entries[Node(r, c, m)] = counter
                counter += 1
    return _tableau_from_entries(shape, entries)


def _tableau_from_entries(shape: Multipartition, entries: dict[Node, int]) -> Tableau:
    rows = []
    for m, comp in enumerate(shape.comps, start=1):
        rows.append(
            tuple(
                tuple(entries[Node(r, c, m)] for c in range(1, length + 1))
                for r, length in enumerate(comp, start=1)
            )
        )
    return Tableau(rows)


def perm_of_col(t: Tableau):
    """The permutation w_t with w_t t_col = t (acting on entries)."""
    base = t_col(t.shape)
    w = [0] * t.size
    for node in t.shape.nodes():
        w[base.entry(node) - 1] = t.entry(node)
    return tuple(w)


def perm_of_row(t: Tableau):
    """The permutation with w t_row = t."""
    base = t_row(t.shape)
    w = [0] * t.size
    for node in t.shape.nodes():
        w[base.entry(node) - 1] = t.entry(node)
    return tuple(w)


def tableau_from_col_perm(shape: Multipartition, w) -> Tableau:
    return t_col(shape).apply_perm(w)


# ---------------------------------------------------------------------------
# residues and degrees

def residue_sequence(t: Tableau, cfg: AlgebraConfig) -> tuple[int, ...]:
    return tuple(cfg.residue(t.node_of(k)) for k in range(1, t.size + 1))


def d_below(shape: Multipartition, node: Node, cfg: AlgebraConfig) -> int:
    """Addable minus removable i-nodes strictly below the given i-node."""
    i = cfg.residue(node)
    add = sum(
        1
        for a in shape.addable_nodes()
        if cfg.residue(a) == i and node_strictly_below(a, node)
    )
    rem = sum(
        1
        for a in shape.removable_nodes()
        if cfg.residue(a) == i and node_strictly_below(a, node)
    )
    return add - rem


def d_above(shape: Multipartition, node: Node, cfg: AlgebraConfig) -> int:
    """Addable minus removable i-nodes strictly above the given i-node."""
    i = cfg.residue(node)
    add = sum(
        1
        for a in shape.addable_nodes()
        if cfg.residue(a) == i and node_strictly_above(a, node)
    )
    rem = sum(
        1
        for a in shape.removable_nodes()
        if cfg.residue(a) == i and node_strictly_above(a, node)
    )
    return add - rem


@cache
def degree(t: Tableau, cfg: AlgebraConfig) -> int:
    """Recursive degree, peeling the largest entry."""
    if t.size == 0:
        return 0
    if not t.is_standard():
        raise ValueError("degree is defined for standard tableaux")
    node = t.node_of(t.size)
    return d_below(t.shape, node, cfg) + degree(t.restrict(t.size - 1), cfg)


@cache
def codegree(t: Tableau, cfg: AlgebraConfig) -> int:
    if t.size == 0:
        return 0
    if not t.is_standard():
        raise ValueError("codegree is defined for standard tableaux")
    node = t.node_of(t.size)
    return d_above(t.shape, node, cfg) + codegree(t.restrict(t.size - 1), cfg)


# ---------------------------------------------------------------------------
# dominance on tableaux

def shape_upto(t: Tableau, m: int) -> tuple[tuple[int, ...], ...]:
    """Row counts of entries <= m, as a multicomposition."""
    return tuple(
        tuple(sum(1 for x in row if x <= m) for row in comp) for comp in t.rows
    )


def shape_upto_conj(t: Tableau, m: int) -> tuple[tuple[int, ...], ...]:
    """Column counts of entries <= m on the conjugate diagram."""
    shape = t.shape
    out = []
    for comp_idx in range(shape.level, 0, -1):
        comp = shape.component(comp_idx)
        width = comp[0] if comp else 0
        cols = []
        for c in range(1, width + 1):
            cols.append(
                sum(
                    1
                    for r in range(1, shape.col_length(comp_idx, c) + 1)
                    if t.entry(Node(r, c, comp_idx)) <= m
                )
            )
        out.append(tuple(cols))
    return tuple(out)


def compositions_dominate(a, b) -> bool:
    """Prefix-sum dominance for multicompositions of equal size and level."""
    acc_a = acc_b = 0
    for ca, cb in zip(a, b):
        for r in range(1, max(len(ca), len(cb)) + 1):
            if acc_a + sum(ca[:r]) < acc_b + sum(cb[:r]):
                return False
        acc_a += sum(ca)
        acc_b += sum(cb)
    return acc_a == acc_b


def tableau_dominates(s: Tableau, t: Tableau) -> bool:
    """s dominates t when w_s is Bruhat-above w_t."""
    if s.shape != t.shape:
        raise ValueError("tableaux of different shape")
    return symgroup.bruhat_leq(perm_of_col(t), perm_of_col(s))


def tableau_dominates_shapewise(s: Tableau, t: Tableau) -> bool:
    """The prefix-shape characterisation, for row-strict tableaux."""
    return all(
        compositions_dominate(shape_upto(s, m), shape_upto(t, m))
        for m in range(1, s.size + 1)
    )


def tableau_dominates_shapewise_conj(s: Tableau, t: Tableau) -> bool:
    """Conjugate prefix-shape characterisation, for column-strict tableaux.

    s dominates t iff the conjugate prefix shapes of t dominate those of s.
    """
    return all(
        compositions_dominate(shape_upto_conj(t, m), shape_upto_conj(s, m))
        for m in range(1, s.size + 1)
    )


# ---------------------------------------------------------------------------
# enumeration

@cache
def enumerate_std(shape: Multipartition) -> tuple[Tableau, ...]:
    """All standard tableaux, built by placing 1..n at addable nodes."""
    n = shape.size

    def grow(current: Multipartition, entries: dict, k: int):
        if k > n:
            yield _tableau_from_entries(shape, entries)
            return
        for node in current.addable_nodes():
            if shape.contains(node):
                entries[node] = k
                yield from grow(current.add_node(node), entries, k + 1)
                del entries[node]

    return tuple(grow(Multipartition(((),) * shape.level), {}, 1))


def is_col_dominated_upto(t: Tableau, lam: Multipartition, j: int) -> bool:
    """Entries 1..j sit at least as far left in t as in t_col(lam)."""
    base = t_col(lam)
    return all(node_weakly_left(t.node_of(i), base.node_of(i)) for i in range(1, j + 1))


def is_col_dominated(t: Tableau, lam: Multipartition) -> bool:
    return is_col_dominated_upto(t, lam, t.size)


def is_row_dominated(t: Tableau, lam: Multipartition) -> bool:
    """Entries sit at least as high in t as in t_row(lam)."""
    base = t_row(lam)
    return all(
        node_weakly_above(t.node_of(i), base.node_of(i)) for i in range(1, t.size + 1)
    )


@cache
def enumerate_col_dominated(lam: Multipartition, mu: Multipartition) -> tuple[Tableau, ...]:
    """Std_lam(mu): standard mu-tableaux dominated by the column filling of lam.

    Grown entry by entry; the leftness bound against t_col(lam) prunes early.
    """
    if lam.size != mu.size or lam.level != mu.level:
        raise ValueError("need equal size and level")
    n = mu.size
    base = t_col(lam)

    def grow(current: Multipartition, entries: dict, k: int):
        if k > n:
            yield _tableau_from_entries(mu, entries)
            return
        bound = base.node_of(k)
        for node in current.addable_nodes():
            if mu.contains(node) and node_weakly_left(node, bound):
                entries[node] = k
                yield from grow(current.add_node(node), entries, k + 1)
                del entries[node]

    return tuple(grow(Multipartition(((),) * mu.level), {}, 1))


@cache
def enumerate_row_dominated(lam: Multipartition, mu: Multipartition) -> tuple[Tableau, ...]:
    """Std^lam(mu): standard mu-tableaux lying weakly above the row filling of lam."""
    if lam.size != mu.size or lam.level != mu.level:
        raise ValueError("need equal size and level")
    n = mu.size
    base = t_row(lam)

    def grow(current: Multipartition, entries: dict, k: int):
        if k > n:
            yield _tableau_from_entries(mu, entries)
            return
        bound = base.node_of(k)
        for node in current.addable_nodes():
            if mu.contains(node) and node_weakly_above(node, bound):
                entries[node] = k
                yield from grow(current.add_node(node), entries, k + 1)
                del entries[node]

    return tuple(grow(Multipartition(((),) * mu.level), {}, 1))


# ---------------------------------------------------------------------------
# column removal maps on tableaux

def add_first_column(t: Tableau, k: int, m: int, level: int) -> Tableau:
    """Shift entries by k, prepend a length-k first column to component m,
    and pad with empty components up to the given level."""
    shape = t.shape
    if shape.level != m:
        raise ValueError("tableau must have exactly m components")
    if len(shape.component(m)) > k:
        raise ValueError("component %d has more than %d rows" % (m, k))
    rows = [list(map(lambda row: tuple(x + k for x in row), comp)) for comp in t.rows]
    comp_m = rows[m - 1]
    while len(comp_m) < k:
        comp_m.append(())
    rows[m - 1] = [(r,) + tuple(row) for r, row in zip(range(1, k + 1), comp_m)]
    rows.extend([] for _ in range(level - m))
    return Tableau(rows)


def add_last_column(t: Tableau, k: int, m: int) -> Tableau:
    """Append a column with entries n+1..n+k at the right of component m."""
    n = t.size
    comp = t.rows[m - 1]
    if len(comp) < k:
        raise ValueError("component %d has fewer than %d rows" % (m, k))
    widths = {len(row) for row in comp[:k]}
    if len(widths) != 1:
        raise ValueError("first %d rows of component %d have unequal length" % (k, m))
    rows = [list(c) for c in t.rows]
    rows[m - 1] = [
        tuple(row) + ((n + r,) if r <= k else ())
        for r, row in enumerate(comp, start=1)
    ]
    return Tableau(rows)


def lr_join_tableaux(t_left: Tableau, t_right: Tableau, c: int | None = None) -> Tableau:
    """Glue a left tableau onto a right tableau along a column cut.

    The left shape's first component occupies columns 1..c of the joined
    component m = level(t_right); later left components follow it.  Entries
    of the right tableau are shifted up by the left size.
    """
    n_left = t_left.size
    m = t_right.shape.level
    if c is None:
        first = t_left.shape.component(1)
        c = first[0] if first else 0
    level = m + t_left.shape.level - 1
    entries: dict[Node, int] = {}
    for node in t_left.shape.nodes():
        r, col, comp = node
        target = Node(r, col, m) if comp == 1 else Node(r, col, m + comp - 1)
        entries[target] = t_left.entry(node)
    for node in t_right.shape.nodes():
        r, col, comp = node
        target = Node(r, col, comp) if comp < m else Node(r, col + c, m)
        entries[target] = t_right.entry(node) + n_left
    rows_by_comp: list[dict[tuple[int, int], int]] = [dict() for _ in range(level)]
    for node, val in entries.items():
        rows_by_comp[node.comp - 1][(node.row, node.col)] = val
    rows = []
    for comp_map in rows_by_comp:
        if not comp_map:
            rows.append(())
            continue
        nrows = max(r for r, _ in comp_map)
        comp_rows = []
        for r in range(1, nrows + 1):
            cols = sorted(cc for rr, cc in comp_map if rr == r)
            if cols != list(range(1, len(cols) + 1)):
                raise ValueError("joined diagram has a gap in component row %d" % r)
            comp_rows.append(tuple(comp_map[(r, cc)] for cc in cols))
        rows.append(tuple(comp_rows))
    return Tableau(rows)


def lr_split(t: Tableau, c: int, m: int) -> tuple[Tableau, Tableau]:
    """Inverse of the join: requires entries 1..n_L to fill the left region."""
    shape = t.shape
    lam_left, lam_right, _, _ = split_columns(shape, c, m, (0,) * shape.level)
    n_left = lam_left.size
    left_entries: dict[Node, int] = {}
    right_entries: dict[Node, int] = {}
    for node in shape.nodes():
        r, col, comp = node
        val = t.entry(node)
        in_left = comp > m or (comp == m and col <= c)
        if in_left != (val <= n_left):
            raise NotSplittableError(
                "entry %d is on the wrong side of the column cut" % val
            )
        if in_left:
            target = Node(r, col, 1) if comp == m else Node(r, col, comp - m + 1)
            left_entries[target] = val
        else:
            target = Node(r, col - c, m) if comp == m else Node(r, col, comp)
            right_entries[target] = val - n_left
    return (
        _tableau_from_entries(lam_left, left_entries),
        _tableau_from_entries(lam_right, right_entries),
    )


def in_std_lr(t: Tableau, c: int, m: int) -> bool:
    try:
        lr_split(t, c, m)
        return True
    except NotSplittableError:
        return False


def row_join_tableaux(
    t_bottom: Tableau,
    s_top: Tableau,
    lam: Multipartition,
    mu: Multipartition,
    r: int,
    m: int,
) -> Tableau:
    """Interleave dominated tableaux for the two row parts into a mu-tableau.

    The entries of t_col(lam) in the top part (components < m, or component m
    rows <= r) form the label set for s_top; the bottom entries label
    t_bottom.  Both inputs must be dominated for the corresponding row parts.
    """
    kappa0 = (0,) * lam.level
    lam_top, lam_bottom, _, _ = split_rows(lam, r, m, kappa0)
    mu_top, mu_bottom, _, _ = split_rows(mu, r, m, kappa0)
    if t_bottom.shape != mu_bottom or s_top.shape != mu_top:
        raise ValueError("input tableaux have the wrong shapes")
    if not is_col_dominated(t_bottom, lam_bottom):
        raise ValueError("bottom tableau is not dominated")
    if not is_col_dominated(s_top, lam_top):
        raise ValueError("top tableau is not dominated")
    base = t_col(lam)
    top_set = sorted(
        base.entry(node)
        for node in lam.nodes()
        if node.comp < m or (node.comp == m and node.row <= r)
    )
    bottom_set = sorted(
        base.entry(node)
        for node in lam.nodes()
        if node.comp > m or (node.comp == m and node.row > r)
    )
    entries: dict[Node, int] = {}
    for node in mu_top.nodes():
        rr, cc, kk = node
        entries[Node(rr, cc, kk)] = top_set[s_top.entry(node) - 1]
    for node in mu_bottom.nodes():
        rr, cc, kk = node
        target = Node(rr + r, cc, m) if kk == 1 else Node(rr, cc, kk + m - 1)
        entries[target] = bottom_set[t_bottom.entry(node) - 1]
    return _tableau_from_entries(mu, entries)


def row_split_sets(lam: Multipartition, r: int, m: int) -> tuple[list[int], list[int]]:
    """The label sets (top, bottom) cut out of t_col(lam) by a row split."""
    base = t_col(lam)
    top = sorted(
        base.entry(node)
        for node in lam.nodes()
        if node.comp < m or (node.comp == m and node.row <= r)
    )
    bottom = sorted(
        base.entry(node)
        for node in lam.nodes()
        if node.comp > m or (node.comp == m and node.row > r)
    )
    return top, bottom


# ---------------------------------------------------------------------------
# text format: rows by ";", components by "|", e.g. "1,3;2|4"

def format_tableau(t: Tableau) -> str:
    return "|".join(
        ";".join(",".join(map(str, row)) for row in comp) if comp else "0"
        for comp in t.rows
    )


def parse_tableau(text: str) -> Tableau:
    comps = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("0", ""):
            comps.append(())
        else:
            comps.append(
                tuple(tuple(int(x) for x in row.split(",")) for row in chunk.split(";"))
            )
    return Tableau(comps)
