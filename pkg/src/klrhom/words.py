"""Formal words in the generators e(i), y_r, psi_r with exact coefficients.

Symbols:

* ``('p', r)``: the crossing psi_r,
* ``('y', r)``: the dot y_r,
* ``('e', off, iseq)``: an idempotent matching residues ``iseq`` in slots
  ``off+1 .. off+len(iseq)``; off > 0 arises from shift maps, where a short
  idempotent expands over all extensions and acts as a partial projection.

An AlgebraElement is a finite sum of scalar multiples of symbol words.  The
degree of a word is only defined relative to a residue sequence it acts on,
which is how the grading enters without materialising idempotents.
"""

from __future__ import annotations

from . import symgroup, tableaux
from .config import AlgebraConfig
from .multipartition import Multipartition, Node

Symbol = tuple
Word = tuple


def psi(r: int) -> Symbol:
    return ("p", r)

def dot(r: int) -> Symbol:
    return ("y", r)

def idem(iseq, off: int = 0) -> Symbol:
    return ("e", off, tuple(iseq))


class AlgebraElement:
    """A formal sum of words; terms with zero coefficient are dropped."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Word, object] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @staticmethod
    def from_word(n: int, word, coeff=1) -> "AlgebraElement":
        return AlgebraElement(n, {tuple(word): coeff})

    @staticmethod
    def psi_word(n: int, indices, coeff=1) -> "AlgebraElement":
        return AlgebraElement.from_word(n, tuple(psi(r) for r in indices), coeff)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return AlgebraElement(self.n, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out: dict[Word, object] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return AlgebraElement(self.n, out)
        return AlgebraElement(self.n, {w: c * other for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items(), key=repr))))

    def __repr__(self):
        if not self.terms:
            return "AlgebraElement(%d, 0)" % self.n
        bits = []
        for w, c in sorted(self.terms.items(), key=repr):
            sym = "*".join(_sym_str(s) for s in w) if w else "1"
            bits.append("%s%s" % ("" if c == 1 else "%s*" % (c,), sym))
        return " + ".join(bits)

    def support_indices(self) -> set[int]:
        """All psi indices occurring in any term."""
        return {s[1] for w in self.terms for s in w if s[0] == "p"}


def _sym_str(s: Symbol) -> str:
    kind = s[0]
    if kind == "p":
        return "psi%d" % s[1]
    if kind == "y":
        return "y%d" % s[1]
    return "e(%s%s)" % ("+%d|" % s[1] if s[1] else "", ",".join(map(str, s[2])))


# ---------------------------------------------------------------------------
# degree, tau, sgn and shift

def word_degree(word, seed, cfg: AlgebraConfig) -> int:
    """Degree of a word acting on a vector with the given residue sequence.

    Tracks the sequence through the crossings: psi_r contributes the negative
    Cartan pairing of the residues in slots r, r+1 and then swaps them.
    """
    seq = list(seed)
    deg = 0
    for sym in reversed(word):
        kind = sym[0]
        if kind == "y":
            deg += 2
        elif kind == "p":
            r = sym[1]
            deg += cfg.psi_degree(seq[r - 1], seq[r])
            seq[r - 1], seq[r] = seq[r], seq[r - 1]
    return deg


def element_degree(x: AlgebraElement, seed, cfg: AlgebraConfig) -> int:
    """Common degree of all terms on the seed; raises if inhomogeneous."""
    degs = {word_degree(w, seed, cfg) for w in x.terms}
    if len(degs) != 1:
        raise ValueError("element is not homogeneous on this sequence: %r" % degs)
    return degs.pop()


def tau(x: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism fixing every generator: reverse each word."""
    return AlgebraElement(x.n, {tuple(reversed(w)): c for w, c in x.terms.items()})


def sgn_twist(x: AlgebraElement, cfg: AlgebraConfig) -> AlgebraElement:
    """e(i) -> e(-i), y -> -y, psi -> -psi."""
    out: dict[Word, object] = {}
    for w, c in x.terms.items():
        sign = 1
        new = []
        for sym in w:
            if sym[0] == "e":
                new.append(("e", sym[1], tuple(cfg.normalise(-i) for i in sym[2])))
            else:
                sign = -sign
                new.append(sym)
        key = tuple(new)
        out[key] = out.get(key, 0) + sign * c
    return AlgebraElement(x.n, out)


def shift_word(x: AlgebraElement, k: int, n_target: int) -> AlgebraElement:
    """The degree-preserving shift: indices move up by k.

    Idempotents keep their residue pattern but now match it in shifted
    slots; extensions over the new slots are left implicit, i.e. the symbol
    projects only on the slots it mentions.
    """
    if k < 0 or x.n + k > n_target:
        raise ValueError("shift out of range")
    out: dict[Word, object] = {}
    for w, c in x.terms.items():
        new = []
        for sym in w:
            if sym[0] == "e":
                new.append(("e", sym[1] + k, sym[2]))
            else:
                new.append((sym[0], sym[1] + k))
        out[tuple(new)] = c
    return AlgebraElement(n_target, out)


# ---------------------------------------------------------------------------
# tableau words and Garnir elements

def word_of_tableau_col(t: tableaux.Tableau) -> AlgebraElement:
    """psi_t: the psi word of the preferred reduced word of w_t."""
    word = symgroup.canonical_reduced_word(tableaux.perm_of_col(t))
    return AlgebraElement.psi_word(t.size, word)


def word_of_tableau_row(t: tableaux.Tableau) -> AlgebraElement:
    """The psi word of the preferred reduced word of w^t."""
    word = symgroup.canonical_reduced_word(tableaux.perm_of_row(t))
    return AlgebraElement.psi_word(t.size, word)


def garnir_element_column(lam: Multipartition, node: Node, cfg: AlgebraConfig) -> AlgebraElement:
    """The column Garnir element for a Garnir node, as an annihilator word.

    For a first-row node this is the single crossing run psi_a ... psi_{b-1}.
    Deeper nodes use relations derived once per belt profile (e, row, column
    length) on a minimal two-column shape and translated into place; the sum
    of all of them is returned, each in lead-minus-rest form.
    """
    from . import garnir

    rels = garnir.relations_for_node(lam, node, cfg)
    if not rels:
        raise ValueError("%r is not a Garnir node of %r" % (node, lam))
    n = lam.size
    total = AlgebraElement(n, {})
    for rel in rels:
        elem = AlgebraElement.psi_word(n, rel.lead_word)
        for coeff, word in rel.rhs:
            elem = elem - AlgebraElement.from_word(n, _int_word_to_symbols(word), coeff)
        total = total + elem
    return total


def _int_word_to_symbols(word) -> Word:
    return tuple(psi(r) if r > 0 else dot(-r) for r in word)
