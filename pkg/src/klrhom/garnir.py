"""Column Garnir belts and the relations they impose on the cyclic generator.

For a Garnir node A = (r, c, m) the belt consists of column c from row r
down together with column c+1 up to row r; in the column filling these boxes
carry consecutive entries a..b.  For r = 1 the relation is the single
crossing run psi_a ... psi_{b-1}.

For r >= 2 the relation is not written down here in closed form.  Instead it
is derived, once per profile (e, r, L) where L is the length of column c, on
the minimal two-column shape carrying such a belt: the window closure of
that shape is computed with the relations already known, and basis symbols
whose residue/degree block does not meet the standard-tableau character are
forced to vanish.  The forced kernel is closed under the window action and
exported as oriented relations.  A belt with the same profile in any shape
imposes the same relations shifted into place, and every model built from
them is certified afterwards by its dimension and relation checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import symgroup, tableaux
from .config import AlgebraConfig
from .errors import EngineInconsistencyError
from .fields import QQ
from .multipartition import Multipartition, Node


@dataclass(frozen=True)
class GarnirRelation:
    """An oriented annihilator: psi(lead_word) z = sum of rhs terms applied to z.

    rhs terms are (rational coefficient, word) pairs where a word is a tuple
    of integers, r > 0 for psi_r and r < 0 for y_{-r}.  All indices lie in
    the window [a, b).  In practice the coefficients are small integers.
    """

    lead_word: tuple[int, ...]
    rhs: tuple[tuple[Fraction, tuple[int, ...]], ...]
    window: tuple[int, int]


def is_garnir_node(lam: Multipartition, node: Node) -> bool:
    r, c, m = node
    return lam.contains(node) and lam.contains(Node(r, c + 1, m))


def belt_window(lam: Multipartition, node: Node) -> tuple[int, int, int]:
    """(a, b, L): belt entries a..b in t_col(lam), L the length of column c."""
    r, c, m = node
    base = tableaux.t_col(lam)
    a = base.entry(node)
    b = base.entry(Node(r, c + 1, m))
    L = lam.col_length(m, c)
    assert b == a + L
    return a, b, L


def garnir_tableau(lam: Multipartition, node: Node) -> tableaux.Tableau:
    """The column-strict non-standard tableau with the belt rotated.

    Belt entries fill column c+1 (rows 1..r) first, then the rest of column
    c; outside the belt it agrees with the column filling.
    """
    r, c, m = node
    a, b, L = belt_window(lam, node)
    base = tableaux.t_col(lam)
    entries = {nd: base.entry(nd) for nd in lam.nodes()}
    counter = a
    for row in range(1, r + 1):
        entries[Node(row, c + 1, m)] = counter
        counter += 1
    for row in range(r, L + 1):
        entries[Node(row, c, m)] = counter
        counter += 1
    assert counter == b + 1
    return tableaux._tableau_from_entries(lam, entries)


def garnir_perm(lam: Multipartition, node: Node):
    return tableaux.perm_of_col(garnir_tableau(lam, node))


def _shift_intword(word, delta: int):
    return tuple(x + delta if x > 0 else x - delta for x in word)


def relations_for_node(
    lam: Multipartition, node: Node, cfg: AlgebraConfig
) -> tuple[GarnirRelation, ...]:
    """All oriented belt relations for a Garnir node, shifted into place."""
    if not is_garnir_node(lam, node):
        return ()
    r = node.row
    a, b, L = belt_window(lam, node)
    if r == 1:
        return (GarnirRelation(tuple(range(a, b)), (), (a, b)),)
    base = _derived_relations(cfg.e, r, L)
    delta = a - r
    return tuple(
        GarnirRelation(
            _shift_intword(rel.lead_word, delta),
            tuple((cf, _shift_intword(w, delta)) for cf, w in rel.rhs),
            (a, b),
        )
        for rel in base
    )


# ---------------------------------------------------------------------------
# derivation on the minimal two-column shape

@cache
def _derived_relations(e: int | None, r: int, L: int) -> tuple[GarnirRelation, ...]:
    from .engine import WordReducer

    nu = Multipartition(((2,) * r + (1,) * (L - r),))
    cfg = AlgebraConfig(e, (0,), QQ)
    n = L + r
    a0, b0 = r, L + r
    reducer = WordReducer(nu, cfg, allow_symbols=True)

    # close the window span under the window generators
    one = Fraction(1)
    std_perms = {tableaux.perm_of_col(t) for t in tableaux.enumerate_std(nu)}
    sym_order: list = [symgroup.identity(n)]
    seen = {symgroup.identity(n): 0}
    tables: dict[tuple, dict] = {}
    frontier = [symgroup.identity(n)]
    while frontier:
        u = frontier.pop()
        wu = symgroup.canonical_reduced_word(u)
        gens = [(g,) + wu for g in range(a0, b0)]
        gens += [(-s,) + wu for s in range(a0, b0 + 1)]
        for gw in gens:
            img = reducer.reduce(gw)
            tables[(gw[0], u)] = img
            for v in img:
                if v not in seen:
                    seen[v] = len(sym_order)
                    sym_order.append(v)
                    frontier.append(v)

    # sanity: symbols other than standard ones break only across the deep belt
    for u in sym_order:
        if u in std_perms:
            continue
        T = tableaux.tableau_from_col_perm(nu, u)
        for rr in range(1, r):
            if T.entry(Node(rr, 1, 1)) > T.entry(Node(rr, 2, 1)):
                raise EngineInconsistencyError(
                    "window closure reached a shallower belt", (e, r, L, u)
                )

    # residue/degree block of each symbol versus the standard character
    i_seed = tableaux.residue_sequence(tableaux.t_col(nu), cfg)
    seed_deg = tableaux.codegree(tableaux.t_col(nu), cfg)

    def block_key(u):
        word = symgroup.canonical_reduced_word(u)
        seq = list(i_seed)
        deg = seed_deg
        for g in reversed(word):
            deg += cfg.psi_degree(seq[g - 1], seq[g])
            seq[g - 1], seq[g] = seq[g], seq[g - 1]
        return (tuple(seq), deg)

    std_blocks: dict = {}
    for t in tableaux.enumerate_std(nu):
        w = tableaux.perm_of_col(t)
        if all(w[i] == i + 1 for i in list(range(a0 - 1)) + list(range(b0, n))):
            key = (tableaux.residue_sequence(t, cfg), tableaux.codegree(t, cfg))
            std_blocks[key] = std_blocks.get(key, 0) + 1

    sym_blocks: dict = {}
    for u in sym_order:
        sym_blocks.setdefault(block_key(u), []).append(u)

    forced = []
    for key, members in sym_blocks.items():
        if std_blocks.get(key, 0) == 0:
            for u in members:
                vec = {seen[u]: one}
                forced.append(vec)

    # close the forced space under the window action, echelonised by symbol key
    dim = len(sym_order)

    def sym_key(idx):
        u = sym_order[idx]
        return (symgroup.length(u), u)

    by_pivot: dict[int, dict] = {}

    def reduce_vec(vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            piv = max(vec, key=sym_key)
            row = by_pivot.get(piv)
            if row is None:
                return vec
            f = vec[piv] / row[piv]
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    queue = list(forced)
    while queue:
        vec = reduce_vec(queue.pop())
        if not vec:
            continue
        by_pivot[max(vec, key=sym_key)] = vec
        for g in list(range(a0, b0)) + [-s for s in range(a0, b0 + 1)]:
            img: dict = {}
            for idx, cf in vec.items():
                col = tables[(g, sym_order[idx])]
                for v, cv in col.items():
                    j = seen[v]
                    img[j] = img.get(j, Fraction(0)) + cf * cv
            img = {k: v for k, v in img.items() if v}
            if img:
                queue.append(img)

    n_std_window = sum(std_blocks.values())
    if len(by_pivot) != dim - n_std_window:
        raise EngineInconsistencyError(
            "belt derivation could not isolate the kernel",
            (e, r, L, len(by_pivot), dim, n_std_window),
        )

    rels = []
    for piv in sorted(by_pivot, key=sym_key, reverse=True):
        row = by_pivot[piv]
        lead = sym_order[piv]
        if lead in std_perms:
            raise EngineInconsistencyError(
                "belt derivation pivoted on a standard tableau", (e, r, L)
            )
        scale = row[piv]
        rhs = tuple(
            (-(cf / scale), symgroup.canonical_reduced_word(sym_order[idx]))
            for idx, cf in row.items()
            if idx != piv
        )
        rels.append(
            GarnirRelation(
                symgroup.canonical_reduced_word(lead), rhs, (a0, b0)
            )
        )
    return tuple(rels)
