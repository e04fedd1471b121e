"""Concrete graded Specht modules with certified generator matrices.

A column model realises the cyclic module on z with the column presentation:
the basis is indexed by standard tableaux, v_t is the preferred psi word of
w_t applied to z, and every generator column is computed by straightening
words back into that basis.  Straightening walks deterministic elementary
move paths between reduced words (emitting the braid correction terms),
eliminates dots against the seed, kills words ending in a column pair, and
resolves row descents through the belt relations.

Nothing is assumed about the straightening beyond what the certificate
checks afterwards: the dimension is pinned to the number of standard
tableaux by construction, and ``validate`` replays the defining relations,
the seed relations and the degree bookkeeping on the finished matrices.

Row models are the sign twist of the conjugate column model with the basis
relabelled through tableau conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import garnir, symgroup, tableaux, words as words_mod
from .config import AlgebraConfig
from .errors import EngineInconsistencyError
from .gradeddim import GradedDimension
from .linalg import solve_square
from .multipartition import Multipartition, Node


def _suffix_seqs(word, seed):
    """seqs[k] = residue sequence after applying word[k:] to the seed."""
    L = len(word)
    seqs = [None] * (L + 1)
    seqs[L] = tuple(seed)
    for k in range(L - 1, -1, -1):
        r = word[k]
        cur = list(seqs[k + 1])
        cur[r - 1], cur[r] = cur[r], cur[r - 1]
        seqs[k] = tuple(cur)
    return seqs


class _WalkState:
    """A mutable word plus a lazily maintained residue-sequence profile."""

    __slots__ = ("word", "seed", "_seqs", "_valid_from")

    def __init__(self, word, seed):
        self.word = list(word)
        self.seed = tuple(seed)
        L = len(self.word)
        self._seqs = [None] * (L + 1)
        self._seqs[L] = self.seed
        self._valid_from = L

    def seq_at(self, k: int):
        if k < self._valid_from:
            for j in range(self._valid_from - 1, k - 1, -1):
                r = self.word[j]
                cur = list(self._seqs[j + 1])
                cur[r - 1], cur[r] = cur[r], cur[r - 1]
                self._seqs[j] = tuple(cur)
            self._valid_from = k
        return self._seqs[k]

    def apply(self, move):
        kind, p = move
        symgroup.apply_move(self.word, move)
        self._valid_from = max(self._valid_from, p + (2 if kind == "c" else 3))


class WordReducer:
    """Rewrites generator words applied to the seed into basis coordinates.

    Words are tuples of integers: r > 0 is psi_r, r < 0 is y_{-r}.  The
    result maps permutations (of standard tableaux, plus irreducible symbols
    when ``allow_symbols``) to field scalars.
    """

    def __init__(self, lam: Multipartition, cfg: AlgebraConfig,
                 allow_symbols: bool = False, relations_provider=None):
        self.lam = lam
        self.cfg = cfg
        self.n = lam.size
        self.field = cfg.field
        self.allow_symbols = allow_symbols
        self.relations_provider = relations_provider
        base = tableaux.t_col(lam)
        self.i_seed = tableaux.residue_sequence(base, cfg)
        self.col_pairs = frozenset(
            r for r in range(1, self.n)
            if self._column_adjacent(base.node_of(r), base.node_of(r + 1))
        )
        self.std_perms = frozenset(
            tableaux.perm_of_col(t) for t in tableaux.enumerate_std(lam)
        )
        self._memo: dict = {}
        self._active: set = set()
        self._tabs: dict = {}

    @staticmethod
    def _column_adjacent(a: Node, b: Node) -> bool:
        return a.comp == b.comp and a.col == b.col and b.row == a.row + 1

    def _tableau(self, w):
        t = self._tabs.get(w)
        if t is None:
            t = tableaux.tableau_from_col_perm(self.lam, w)
            self._tabs[w] = t
        return t

    # -- main entry -------------------------------------------------------

    def reduce(self, word) -> dict:
        word = tuple(word)
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        if word in self._active:
            raise EngineInconsistencyError("straightening cycle", word)
        self._active.add(word)
        try:
            out = self._reduce(word)
        finally:
            self._active.discard(word)
        self._memo[word] = out
        return out

    def _acc(self, out: dict, coeff, word) -> None:
        if coeff == 0:
            return
        for key, val in self.reduce(word).items():
            cur = out.get(key, self.field.zero) + coeff * val
            if cur == self.field.zero:
                out.pop(key, None)
            else:
                out[key] = cur

    def _reduce(self, word: tuple) -> dict:
        for q in range(len(word) - 1, -1, -1):
            if word[q] < 0:
                return self._reduce_dot(word, q)
        return self._reduce_psi(word)

    # -- dot elimination ----------------------------------------------------

    def _reduce_dot(self, word: tuple, q: int) -> dict:
        s = -word[q]
        prefix = list(word[:q])
        tail = list(word[q + 1:])
        seqs = _suffix_seqs(tail, self.i_seed)
        out: dict = {}
        one = self.field.one
        for j, r in enumerate(tail):
            i = seqs[j + 1]
            if s == r:
                if i[r - 1] == i[r]:
                    self._acc(out, -one, tuple(prefix + tail[:j] + tail[j + 1:]))
                s = r + 1
            elif s == r + 1:
                if i[r - 1] == i[r]:
                    self._acc(out, one, tuple(prefix + tail[:j] + tail[j + 1:]))
                s = r
        return out

    # -- psi words ----------------------------------------------------------

    def _walk(self, state: _WalkState, moves):
        """Apply moves, returning braid corrections as (coeff, word) pairs."""
        corr = []
        cfg = self.cfg
        for mv in moves:
            kind, p = mv
            if kind == "b":
                a = state.word[p]
                r = min(a, state.word[p + 1])
                i = state.seq_at(p + 3)
                if i[r + 1] == i[r - 1]:
                    sign = 1 if a == r else -1
                    base = state.word[:p]
                    rest = state.word[p + 3:]
                    ir, ir1 = i[r - 1], i[r]
                    if cfg.is_single_arrow(ir, ir1):
                        corr.append((sign, tuple(base + rest)))
                    elif cfg.is_single_arrow(ir1, ir):
                        corr.append((-sign, tuple(base + rest)))
                    elif cfg.is_double_arrow(ir, ir1):
                        corr.append((sign, tuple(base + [-r] + rest)))
                        corr.append((-2 * sign, tuple(base + [-(r + 1)] + rest)))
                        corr.append((sign, tuple(base + [-(r + 2)] + rest)))
            state.apply(mv)
        return corr

    def _reduce_psi(self, word: tuple) -> dict:
        n = self.n
        one = self.field.one
        # reducedness scan; find the first length drop
        u = list(range(1, n + 1))
        drop = None
        for p, r in enumerate(word, start=1):
            if u[r - 1] > u[r]:
                drop = p
                break
            u[r - 1], u[r] = u[r], u[r - 1]

        if drop is not None:
            p = drop
            moves = symgroup.moves_to_suffix(word[: p - 1], word[p - 1], n)
            state = _WalkState(word, self.i_seed)
            corr = self._walk(state, moves)
            r0 = word[p - 1]
            assert state.word[p - 2] == state.word[p - 1] == r0
            base = state.word[: p - 2]
            rest = state.word[p:]
            i = state.seq_at(p)
            ir, ir1 = i[r0 - 1], i[r0]
            out: dict = {}
            if ir == ir1:
                pass
            elif self.cfg.is_single_arrow(ir, ir1):
                self._acc(out, one, tuple(base + [-(r0 + 1)] + rest))
                self._acc(out, -one, tuple(base + [-r0] + rest))
            elif self.cfg.is_single_arrow(ir1, ir):
                self._acc(out, one, tuple(base + [-r0] + rest))
                self._acc(out, -one, tuple(base + [-(r0 + 1)] + rest))
            elif self.cfg.is_double_arrow(ir, ir1):
                self._acc(out, 2 * one, tuple(base + [-r0, -(r0 + 1)] + rest))
                self._acc(out, -one, tuple(base + [-r0, -r0] + rest))
                self._acc(out, -one, tuple(base + [-(r0 + 1), -(r0 + 1)] + rest))
            else:
                self._acc(out, one, tuple(base + rest))
            for cf, cw in corr:
                self._acc(out, cf * one, cw)
            return out

        w = tuple(u)  # the scan finished, so word is reduced and evaluates to u
        canon = symgroup.canonical_reduced_word(w)
        if w in self.std_perms:
            if word == canon:
                return {w: one}
            return self._via_canonical(word, w)

        kills = [r for r in self.col_pairs if w[r - 1] > w[r]]
        if kills:
            r0 = min(kills)
            moves = symgroup.moves_to_suffix(word, r0, n)
            state = _WalkState(word, self.i_seed)
            corr = self._walk(state, moves)
            assert state.word[-1] == r0
            out: dict = {}
            for cf, cw in corr:
                self._acc(out, cf * one, cw)
            return out

        T = self._tableau(w)
        descents = self._row_descents(T)
        if not descents:
            raise EngineInconsistencyError("non-standard tableau with no descent", w)
        if self.relations_provider is not None:
            for node in descents:
                for rel in self.relations_provider(node):
                    wg = symgroup.perm_of_word(rel.lead_word, n)
                    x = symgroup.compose(w, symgroup.inverse(wg))
                    if symgroup.length(x) + len(rel.lead_word) != len(word):
                        continue
                    wx = symgroup.canonical_reduced_word(x)
                    target = wx + rel.lead_word
                    moves = symgroup.moves_between(word, target, n)
                    state = _WalkState(word, self.i_seed)
                    corr = self._walk(state, moves)
                    assert tuple(state.word) == target
                    out: dict = {}
                    for q, rhs_word in rel.rhs:
                        self._acc(out, self._field_frac(q), wx + rhs_word)
                    for cf, cw in corr:
                        self._acc(out, cf * one, cw)
                    return out
        if self.allow_symbols:
            if word == canon:
                return {w: one}
            return self._via_canonical(word, w)
        raise EngineInconsistencyError(
            "no belt relation straightens the word", (word, w)
        )

    def _via_canonical(self, word: tuple, w) -> dict:
        moves = symgroup.canonicalize_moves(word, self.n)
        state = _WalkState(word, self.i_seed)
        corr = self._walk(state, moves)
        assert tuple(state.word) == symgroup.canonical_reduced_word(w)
        out = {w: self.field.one}
        for cf, cw in corr:
            self._acc(out, cf * self.field.one, cw)
        return out

    def _row_descents(self, T: tableaux.Tableau):
        found = []
        for m, comp in enumerate(T.rows, start=1):
            for r, row in enumerate(comp, start=1):
                for c in range(len(row) - 1):
                    if row[c] > row[c + 1]:
                        found.append(Node(r, c + 1, m))
        found.sort(key=lambda node: garnir.belt_window(self.lam, node)[0])
        return found

    def _field_frac(self, q):
        if isinstance(q, Fraction):
            return self.field.of(q.numerator) / self.field.of(q.denominator)
        return self.field.of(q)


# ---------------------------------------------------------------------------
# models

@dataclass
class ValidationReport:
    checks: list = dc_field(default_factory=list)

    def add(self, name: str, ok: bool, witness=None):
        self.checks.append((name, bool(ok), witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(name, witness) for name, ok, witness in self.checks if not ok]

    def summary(self) -> str:
        lines = []
        for name, ok, witness in self.checks:
            line = "%-24s %s" % (name, "pass" if ok else "FAIL")
            if not ok and witness is not None:
                line += "  witness=%r" % (witness,)
            lines.append(line)
        return "\n".join(lines)


class SpechtModel:
    """A concrete graded Specht module with sparse generator columns.

    Columns are computed lazily and cached; ``matrix`` materialises a full
    generator matrix.  Column models straighten through a WordReducer; row
    models negate the columns of the conjugate column model.
    """

    def __init__(self, lam: Multipartition, cfg: AlgebraConfig,
                 orientation: str = "col", base: "SpechtModel | None" = None):
        self.lam = lam
        self.cfg = cfg
        self.orientation = orientation
        self.field = cfg.field
        self.n = lam.size
        if orientation == "col":
            tabs = sorted(
                tableaux.enumerate_std(lam),
                key=lambda t: (symgroup.length(tableaux.perm_of_col(t)),
                               tableaux.perm_of_col(t)),
            )
            self.tabs = tuple(tabs)
            self.base = None
            self._reducer = WordReducer(
                lam, cfg,
                relations_provider=lambda node: garnir.relations_for_node(lam, node, cfg),
            )
            self.perms = tuple(tableaux.perm_of_col(t) for t in self.tabs)
            self.degrees = tuple(tableaux.codegree(t, cfg) for t in self.tabs)
            self.seed_index = 0
            assert self.perms[0] == symgroup.identity(self.n)
        elif orientation == "row":
            assert base is not None
            self.base = base
            self.tabs = tuple(t.conjugate() for t in base.tabs)
            self._reducer = None
            self.perms = tuple(tableaux.perm_of_row(t) for t in self.tabs)
            self.degrees = tuple(tableaux.degree(t, cfg) for t in self.tabs)
            self.seed_index = base.seed_index
        else:
            raise ValueError(orientation)
        self.index = {t: j for j, t in enumerate(self.tabs)}
        self.iseqs = tuple(tableaux.residue_sequence(t, cfg) for t in self.tabs)
        self.words = tuple(symgroup.canonical_reduced_word(p) for p in self.perms)
        self._perm_index = {p: j for j, p in enumerate(self.perms)}
        self._psi_cols: dict = {}
        self._y_cols: dict = {}

    @property
    def dim(self) -> int:
        return len(self.tabs)

    def seed_vector(self) -> dict:
        return {self.seed_index: self.field.one}

    # -- generator columns -------------------------------------------------

    def psi_col(self, r: int, j: int) -> dict:
        if not 1 <= r <= self.n - 1:
            raise IndexError("psi index out of range")
        key = (r, j)
        col = self._psi_cols.get(key)
        if col is None:
            if self.orientation == "col":
                raw = self._reducer.reduce((r,) + self.words[j])
                col = {self._perm_index[p]: c for p, c in raw.items()}
            else:
                col = {k: -c for k, c in self.base.psi_col(r, j).items()}
            self._psi_cols[key] = col
        return col

    def y_col(self, r: int, j: int) -> dict:
        if not 1 <= r <= self.n:
            raise IndexError("y index out of range")
        key = (r, j)
        col = self._y_cols.get(key)
        if col is None:
            if self.orientation == "col":
                raw = self._reducer.reduce((-r,) + self.words[j])
                col = {self._perm_index[p]: c for p, c in raw.items()}
            else:
                col = {k: -c for k, c in self.base.y_col(r, j).items()}
            self._y_cols[key] = col
        return col

    # -- vector operations ---------------------------------------------------

    def _combine(self, vec: dict, col_fn) -> dict:
        out: dict = {}
        zero = self.field.zero
        for j, c in vec.items():
            for k, v in col_fn(j).items():
                cur = out.get(k, zero) + c * v
                if cur == zero:
                    out.pop(k, None)
                else:
                    out[k] = cur
        return out

    def apply_psi(self, r: int, vec: dict) -> dict:
        return self._combine(vec, lambda j: self.psi_col(r, j))

    def apply_y(self, r: int, vec: dict) -> dict:
        return self._combine(vec, lambda j: self.y_col(r, j))

    def apply_intword(self, word, vec: dict) -> dict:
        for r in reversed(word):
            vec = self.apply_psi(r, vec) if r > 0 else self.apply_y(-r, vec)
            if not vec:
                return {}
        return vec

    def project_idempotent(self, iseq, off: int, vec: dict) -> dict:
        width = len(iseq)
        return {
            j: c
            for j, c in vec.items()
            if self.iseqs[j][off:off + width] == tuple(iseq)
        }

    def act_element(self, x: words_mod.AlgebraElement, vec: dict) -> dict:
        out: dict = {}
        zero = self.field.zero
        for word, coeff in x.terms.items():
            cur = dict(vec)
            for sym in reversed(word):
                if not cur:
                    break
                if sym[0] == "p":
                    cur = self.apply_psi(sym[1], cur)
                elif sym[0] == "y":
                    cur = self.apply_y(sym[1], cur)
                else:
                    cur = self.project_idempotent(sym[2], sym[1], cur)
            scal = self._scalar(coeff)
            for k, v in cur.items():
                acc = out.get(k, zero) + scal * v
                if acc == zero:
                    out.pop(k, None)
                else:
                    out[k] = acc
        return out

    def _scalar(self, c):
        if isinstance(c, Fraction) and self.field.p is not None:
            return self.field.of(c.numerator) / self.field.of(c.denominator)
        if isinstance(c, int):
            return self.field.of(c)
        return c

    def matrix(self, kind: str, r: int):
        col_fn = self.psi_col if kind == "psi" else self.y_col
        return [col_fn(r, j) for j in range(self.dim)]

    def graded_dimension(self) -> GradedDimension:
        return GradedDimension.from_degrees(self.degrees)

    def to_json_dict(self) -> dict:
        mats = {}
        for r in range(1, self.n):
            mats["psi%d" % r] = _sparse_triples(self.matrix("psi", r), self.cfg)
        for r in range(1, self.n + 1):
            mats["y%d" % r] = _sparse_triples(self.matrix("y", r), self.cfg)
        return {
            "shape": str(self.lam),
            "orientation": self.orientation,
            "config": str(self.cfg),
            "basis": [tableaux.format_tableau(t) for t in self.tabs],
            "degrees": list(self.degrees),
            "residue_sequences": [list(i) for i in self.iseqs],
            "graded_dimension": self.graded_dimension().to_json_dict(),
            "matrices": mats,
        }


def _sparse_triples(cols, cfg):
    out = []
    for j, col in enumerate(cols):
        for i, v in sorted(col.items()):
            out.append([i, j, cfg.field.format_scalar(v)])
    return out


# ---------------------------------------------------------------------------
# registry

_CACHE: dict = {}


def column_model(lam: Multipartition, cfg: AlgebraConfig) -> SpechtModel:
    key = ("col", lam, cfg)
    model = _CACHE.get(key)
    if model is None:
        model = SpechtModel(lam, cfg, "col")
        _CACHE[key] = model
    return model


def row_model(lam: Multipartition, cfg: AlgebraConfig) -> SpechtModel:
    key = ("row", lam, cfg)
    model = _CACHE.get(key)
    if model is None:
        base = column_model(lam.conjugate(), cfg.conjugate())
        model = SpechtModel(lam, cfg, "row", base=base)
        _CACHE[key] = model
    return model


def clear_model_cache() -> None:
    _CACHE.clear()


# ---------------------------------------------------------------------------
# validation

def validate(model: SpechtModel, full: bool = True) -> ValidationReport:
    """Replay the presentation on the finished matrices.

    ``full`` runs every defining relation on every basis vector; otherwise
    only the structural checks and the seed relations are replayed.
    """
    rep = ValidationReport()
    cfg = model.cfg
    n = model.n
    zero = model.field.zero

    rep.add("dimension", model.dim == len(tableaux.enumerate_std(model.lam)), model.dim)

    base_tab = (tableaux.t_col if model.orientation == "col" else tableaux.t_row)(model.lam)
    seed_seq = tableaux.residue_sequence(base_tab, cfg)
    rep.add("seed-residue", model.iseqs[model.seed_index] == seed_seq)
    if model.orientation == "col":
        expected = [tableaux.codegree(t, cfg) for t in model.tabs]
    else:
        expected = [tableaux.degree(t, cfg) for t in model.tabs]
    rep.add("degrees", list(model.degrees) == expected)

    # residue blocks and homogeneity of every generator column
    ok_block = ok_homog = True
    wit_block = wit_homog = None
    for j in range(model.dim):
        it = model.iseqs[j]
        for r in range(1, n):
            target = list(it)
            target[r - 1], target[r] = target[r], target[r - 1]
            dshift = cfg.psi_degree(it[r - 1], it[r])
            for k, v in model.psi_col(r, j).items():
                if model.iseqs[k] != tuple(target):
                    ok_block, wit_block = False, ("psi", r, j, k)
                if model.degrees[k] != model.degrees[j] + dshift:
                    ok_homog, wit_homog = False, ("psi", r, j, k)
        for r in range(1, n + 1):
            for k, v in model.y_col(r, j).items():
                if model.iseqs[k] != it:
                    ok_block, wit_block = False, ("y", r, j, k)
                if model.degrees[k] != model.degrees[j] + 2:
                    ok_homog, wit_homog = False, ("y", r, j, k)
    rep.add("residue-blocks", ok_block, wit_block)
    rep.add("homogeneity", ok_homog, wit_homog)

    # seed relations
    seed = model.seed_vector()
    ok_seed = all(not model.apply_y(r, seed) for r in range(1, n + 1))
    rep.add("seed-dots", ok_seed)
    if model.orientation == "col":
        pairs = [
            r for r in range(1, n)
            if WordReducer._column_adjacent(base_tab.node_of(r), base_tab.node_of(r + 1))
        ]
    else:
        pairs = [
            r for r in range(1, n)
            if (lambda a, b: a.comp == b.comp and a.row == b.row and b.col == a.col + 1)(
                base_tab.node_of(r), base_tab.node_of(r + 1)
            )
        ]
    ok_pairs = all(not model.apply_psi(r, seed) for r in pairs)
    rep.add("seed-crossings", ok_pairs)

    if model.orientation == "col":
        ok_g = True
        wit_g = None
        for node in model.lam.nodes():
            for rel in garnir.relations_for_node(model.lam, node, cfg):
                val = model.apply_intword(rel.lead_word, seed)
                for q, wrd in rel.rhs:
                    sub = model.apply_intword(wrd, seed)
                    for k, v in sub.items():
                        cur = val.get(k, zero) - model._scalar(q) * v
                        if cur == zero:
                            val.pop(k, None)
                        else:
                            val[k] = cur
                if val:
                    ok_g, wit_g = False, (node, rel.lead_word)
        rep.add("seed-garnir", ok_g, wit_g)

    # cyclotomic smoke test on the seed
    power = sum(1 for k in cfg.kappa if cfg.normalise(k) == seed_seq[0]) if n else 0
    vec = dict(seed)
    for _ in range(power):
        vec = model.apply_y(1, vec)
    rep.add("cyclotomic-seed", not vec if n else True)

    # standard basis triangularity: the defining words reproduce the units
    if full:
        ok_tri = True
        wit_tri = None
        for j in range(model.dim):
            got = model.apply_intword(model.words[j], seed)
            if model.orientation == "col":
                want_ok = got == {j: model.field.one}
            else:
                want_ok = set(got) == {j} and got[j] in (model.field.one, -model.field.one)
            if not want_ok:
                ok_tri, wit_tri = False, j
                break
        rep.add("basis-words", ok_tri, wit_tri)

    if full:
        _validate_relations(model, rep)

    want = GradedDimension.from_degrees(
        (tableaux.codegree if model.orientation == "col" else tableaux.degree)(t, cfg)
        for t in tableaux.enumerate_std(model.lam)
    )
    rep.add("graded-dimension", model.graded_dimension() == want, str(want))
    return rep


def _vec_eq(a: dict, b: dict) -> bool:
    return {k: v for k, v in a.items() if v != 0} == {k: v for k, v in b.items() if v != 0}


def _vec_sub(a: dict, b: dict, field) -> dict:
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k, field.zero) - v
        if cur == field.zero:
            out.pop(k, None)
        else:
            out[k] = cur
    return out


def _scale(vec: dict, c) -> dict:
    return {k: c * v for k, v in vec.items()} if c != 0 else {}


def _validate_relations(model: SpechtModel, rep: ValidationReport) -> None:
    """All defining relations as identities on every basis vector."""
    cfg = model.cfg
    n = model.n
    field = model.field
    one = field.one

    def unit(j):
        return {j: one}

    checks = {
        "rel-dot-commute": True, "rel-dot-cross-far": True,
        "rel-dot-cross": True, "rel-cross-far": True,
        "rel-quadratic": True, "rel-braid": True,
    }
    wits = {k: None for k in checks}

    for j in range(model.dim):
        iseq = model.iseqs[j]
        v = unit(j)
        ycols = [None] + [model.y_col(r, j) for r in range(1, n + 1)]
        for r in range(1, n + 1):
            for s in range(r + 1, n + 1):
                lhs = model.apply_y(r, ycols[s])
                rhs = model.apply_y(s, ycols[r])
                if not _vec_eq(lhs, rhs):
                    checks["rel-dot-commute"], wits["rel-dot-commute"] = False, (r, s, j)
        for r in range(1, n):
            pv = model.psi_col(r, j)
            for s in range(1, n + 1):
                if s in (r, r + 1):
                    continue
                if not _vec_eq(model.apply_y(s, pv), model.apply_psi(r, ycols[s])):
                    checks["rel-dot-cross-far"], wits["rel-dot-cross-far"] = False, (r, s, j)
            delta = one if iseq[r - 1] == iseq[r] else field.zero
            lhs = model.apply_y(r, pv)
            rhs = _vec_sub(model.apply_psi(r, ycols[r + 1]), _scale(v, delta), field)
            if not _vec_eq(lhs, rhs):
                checks["rel-dot-cross"], wits["rel-dot-cross"] = False, ("a", r, j)
            lhs = model.apply_y(r + 1, pv)
            rhs = _vec_sub(model.apply_psi(r, ycols[r]), _scale(v, -delta), field)
            if not _vec_eq(lhs, rhs):
                checks["rel-dot-cross"], wits["rel-dot-cross"] = False, ("b", r, j)
            for s in range(r + 2, n):
                if not _vec_eq(
                    model.apply_psi(s, pv), model.apply_psi(r, model.psi_col(s, j))
                ):
                    checks["rel-cross-far"], wits["rel-cross-far"] = False, (r, s, j)
            # quadratic relation
            ir, ir1 = iseq[r - 1], iseq[r]
            lhs = model.apply_psi(r, pv)
            if ir == ir1:
                rhs = {}
            elif cfg.is_single_arrow(ir, ir1):
                rhs = _vec_sub(ycols[r + 1], ycols[r], field)
            elif cfg.is_single_arrow(ir1, ir):
                rhs = _vec_sub(ycols[r], ycols[r + 1], field)
            elif cfg.is_double_arrow(ir, ir1):
                # (y_{r+1} - y_r)(y_r - y_{r+1}) = 2 y_r y_{r+1} - y_r^2 - y_{r+1}^2
                cross = model.apply_y(r, ycols[r + 1])
                rhs = _vec_sub(
                    _vec_sub(_scale(cross, 2 * one), model.apply_y(r, ycols[r]), field),
                    model.apply_y(r + 1, ycols[r + 1]),
                    field,
                )
            else:
                rhs = v
            if not _vec_eq(lhs, rhs):
                checks["rel-quadratic"], wits["rel-quadratic"] = False, (r, j)
        for r in range(1, n - 1):
            ir, ir1, ir2 = iseq[r - 1], iseq[r], iseq[r + 1]
            lhs = model.apply_psi(
                r, model.apply_psi(r + 1, model.psi_col(r, j))
            )
            rhs = model.apply_psi(
                r + 1, model.apply_psi(r, model.psi_col(r + 1, j))
            )
            if ir2 == ir:
                if cfg.is_single_arrow(ir, ir1):
                    rhs = _vec_sub(rhs, _scale(v, -one), field)
                elif cfg.is_single_arrow(ir1, ir):
                    rhs = _vec_sub(rhs, _scale(v, one), field)
                elif cfg.is_double_arrow(ir, ir1):
                    extra = _vec_sub(
                        _vec_sub(ycols[r], _scale(ycols[r + 1], 2 * one), field),
                        _scale(ycols[r + 2], -one),
                        field,
                    )
                    rhs = _vec_sub(rhs, _scale(extra, -one), field)
            if not _vec_eq(lhs, rhs):
                checks["rel-braid"], wits["rel-braid"] = False, (r, j)

    for name, ok in checks.items():
        rep.add(name, ok, wits[name])


# ---------------------------------------------------------------------------
# duality: the pairing matrix and the dual basis

def _place_apply(word, seq):
    seq = list(seq)
    for r in reversed(word):
        seq[r - 1], seq[r] = seq[r], seq[r - 1]
    return tuple(seq)


def _tau_word(model: SpechtModel, s_idx: int):
    """The reversed preferred word of w^s, ready for apply_intword."""
    word = symgroup.canonical_reduced_word(tableaux.perm_of_row(model.tabs[s_idx]))
    return tuple(reversed(word))


def pairing_entry(model: SpechtModel, s_idx: int, t_idx: int):
    trow = model.index[tableaux.t_row(model.lam)]
    vec = model.apply_intword(_tau_word(model, s_idx), {t_idx: model.field.one})
    return vec.get(trow, model.field.zero)


def pairing_matrix(model: SpechtModel):
    """P(s, t) = coefficient of the row-filled basis vector in tau(psi^s) v_t."""
    assert model.orientation == "col"
    D = model.dim
    zero = model.field.zero
    trow = model.index[tableaux.t_row(model.lam)]
    target_seq = model.iseqs[trow]
    P = [[zero] * D for _ in range(D)]
    for s in range(D):
        wtau = _tau_word(model, s)
        for t in range(D):
            if _place_apply(wtau, model.iseqs[t]) != target_seq:
                continue
            vec = model.apply_intword(wtau, {t: model.field.one})
            P[s][t] = vec.get(trow, zero)
    for s in range(D):
        if P[s][s] == zero:
            raise EngineInconsistencyError("pairing matrix has a zero diagonal", s)
        for t in range(D):
            if P[s][t] != zero and not tableaux.tableau_dominates(
                model.tabs[t], model.tabs[s]
            ):
                raise EngineInconsistencyError("pairing matrix not triangular", (s, t))
    return P


def dual_basis_f(model: SpechtModel):
    """All dual basis vectors f_t in standard-basis coordinates."""
    from .linalg import invert

    P = pairing_matrix(model)
    Pinv = invert(P, model.field)
    return [
        {u: Pinv[u][t] for u in range(model.dim) if Pinv[u][t] != model.field.zero}
        for t in range(model.dim)
    ]


def dual_basis_vector(model: SpechtModel, tab: tableaux.Tableau) -> dict:
    """One dual basis vector, solved inside its residue/degree block."""
    assert model.orientation == "col"
    t_idx = model.index[tab]
    key = (model.iseqs[t_idx], model.degrees[t_idx])
    block = [u for u in range(model.dim)
             if (model.iseqs[u], model.degrees[u]) == key]
    trow = model.index[tableaux.t_row(model.lam)]
    target_seq = model.iseqs[trow]
    target_deg = model.degrees[trow]
    rows = []
    for s in range(model.dim):
        wtau = _tau_word(model, s)
        if _place_apply(wtau, key[0]) != target_seq:
            continue
        if key[1] + words_mod.word_degree(
            tuple(("p", r) for r in wtau), key[0], model.cfg
        ) != target_deg:
            continue
        rows.append(s)
    if len(rows) != len(block) or t_idx not in rows:
        raise EngineInconsistencyError(
            "pairing block is not square", (len(rows), len(block))
        )
    zero = model.field.zero
    P_sub = []
    rhs = []
    for s in rows:
        wtau = _tau_word(model, s)
        P_sub.append([
            model.apply_intword(wtau, {u: model.field.one}).get(trow, zero)
            for u in block
        ])
        rhs.append(model.field.one if s == t_idx else zero)
    sol = solve_square(P_sub, rhs, model.field)
    return {u: c for u, c in zip(block, sol) if c != zero}


def to_f_coordinates(model: SpechtModel, vec: dict) -> dict:
    """Rewrite a vector from the standard basis into the dual basis."""
    out: dict = {}
    zero = model.field.zero
    remaining = dict(vec)
    # f_t has unitriangular shape against v_t within its block, so peel greedily
    while remaining:
        t_idx = max(
            remaining,
            key=lambda j: (symgroup.length(model.perms[j]), model.perms[j]),
        )
        f = dual_basis_vector(model, model.tabs[t_idx])
        c = remaining[t_idx] / f[t_idx]
        out[t_idx] = c
        for k, v in f.items():
            cur = remaining.get(k, zero) - c * v
            if cur == zero:
                remaining.pop(k, None)
            else:
                remaining[k] = cur
    return out
