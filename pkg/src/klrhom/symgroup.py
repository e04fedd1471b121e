"""Symmetric group combinatorics: lengths, reduced words, Bruhat order.

Permutations are tuples in one-line form with 1-based values, so
``w[i-1] == w(i)``.  Words are tuples of generator indices ``r`` meaning the
adjacent transposition (r, r+1).

Besides the order-theoretic predicates, this module provides deterministic
sequences of elementary moves (commutations and braid moves) between reduced
words.  The preferred reduced word of a permutation is the lexicographically
smallest one; this choice commutes with the shift embeddings, which the
Specht engine relies on for column removal.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator

Perm = tuple[int, ...]
Word = tuple[int, ...]
# a move is ('c', p): swap letters p, p+1, or ('b', p): braid at p, p+1, p+2
Move = tuple[str, int]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def apply_transposition_left(r: int, w: Perm) -> Perm:
    """s_r w: swap the values r and r+1 in the one-line form."""
    return tuple(r + 1 if x == r else r if x == r + 1 else x for x in w)


def length(w: Perm) -> int:
    """Coxeter length = inversion count."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_of_word(word, n: int) -> Perm:
    """Evaluate s_{r_1} ... s_{r_k}, folding from the right."""
    out = identity(n)
    for r in reversed(word):
        out = apply_transposition_left(r, out)
    return out


def is_reduced(word, n: int) -> bool:
    return length(perm_of_word(word, n)) == len(word)


def left_descents(w: Perm) -> list[int]:
    """Indices r with l(s_r w) < l(w), i.e. w^{-1}(r) > w^{-1}(r+1)."""
    winv = inverse(w)
    return [r for r in range(1, len(w)) if winv[r - 1] > winv[r]]


def right_descents(w: Perm) -> list[int]:
    return [r for r in range(1, len(w)) if w[r - 1] > w[r]]


@cache
def canonical_reduced_word(w: Perm) -> Word:
    """The lexicographically smallest reduced word of w.

    Computed greedily: the lex-min word must begin with the smallest left
    descent, then recurse.
    """
    out = []
    while True:
        ds = left_descents(w)
        if not ds:
            return tuple(out)
        d = ds[0]
        out.append(d)
        w = apply_transposition_left(d, w)


@cache
def bruhat_leq(x: Perm, w: Perm) -> bool:
    """Bruhat order via the rank-matrix criterion.

    x <= w iff #{k <= i : x(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
    """
    n = len(x)
    if len(w) != n:
        raise ValueError("permutations of different degree")
    for i in range(1, n):
        for j in range(2, n + 1):
            cx = sum(1 for k in range(i) if x[k] >= j)
            cw = sum(1 for k in range(i) if w[k] >= j)
            if cx > cw:
                return False
    return True


def left_order_leq(x: Perm, w: Perm) -> bool:
    """x is below w in the left order: l(w) = l(w x^{-1}) + l(x)."""
    return length(w) == length(compose(w, inverse(x))) + length(x)


def shift_perm(w: Perm, k: int, n: int) -> Perm:
    """Embed w in S_n fixing 1..k and k+m+1..n, sending s_i to s_{i+k}."""
    m = len(w)
    if k < 0 or k + m > n:
        raise ValueError("shift out of range")
    out = list(range(1, n + 1))
    for i in range(m):
        out[k + i] = k + w[i]
    return tuple(out)


def all_reduced_words(w: Perm) -> Iterator[Word]:
    """All reduced words (test oracle; exponential)."""
    if length(w) == 0:
        yield ()
        return
    for d in left_descents(w):
        for rest in all_reduced_words(apply_transposition_left(d, w)):
            yield (d,) + rest


# ---------------------------------------------------------------------------
# elementary-move paths between reduced words

def apply_move(word: list[int], move: Move) -> None:
    kind, p = move
    if kind == "c":
        word[p], word[p + 1] = word[p + 1], word[p]
    else:
        a, b = word[p], word[p + 1]
        word[p], word[p + 1], word[p + 2] = b, a, b


def _bring_to_front(word: list[int], pos: int, d: int, log: list[Move]) -> None:
    """Rewrite word[pos:] in place so word[pos] == d, logging moves.

    Requires word[pos:] reduced and d a left descent of its permutation.
    The recursion is the usual rank-2 parabolic argument: a commuting first
    letter slides past d, an adjacent one resolves through a braid move.
    """
    j = word[pos]
    if j == d:
        return
    _bring_to_front(word, pos + 1, d, log)
    if abs(j - d) >= 2:
        apply_move(word, ("c", pos))
        log.append(("c", pos))
    else:
        _bring_to_front(word, pos + 2, j, log)
        apply_move(word, ("b", pos))
        log.append(("b", pos))


def canonicalize_moves(word: Word, n: int) -> list[Move]:
    """Moves transforming the reduced word into the canonical word of its permutation."""
    work = list(word)
    log: list[Move] = []
    for pos in range(len(work)):
        w = perm_of_word(tuple(work[pos:]), n)
        d = min(left_descents(w))
        _bring_to_front(work, pos, d, log)
    return log


def moves_to_suffix(word: Word, r: int, n: int) -> list[Move]:
    """Moves transforming the reduced word into one ending with the letter r.

    Requires r to be a right descent of the word's permutation.  Works on the
    reversed word (a reduced word of the inverse) and mirrors the moves.
    """
    rev = list(reversed(word))
    log: list[Move] = []
    _bring_to_front(rev, 0, r, log)
    L = len(word)
    mirrored: list[Move] = []
    for kind, p in log:
        mirrored.append(("c", L - 2 - p) if kind == "c" else ("b", L - 3 - p))
    return mirrored


def moves_between(src: Word, dst: Word, n: int) -> list[Move]:
    """Moves from one reduced word to another word of the same permutation.

    Goes through the canonical word; braid and commutation moves are
    self-inverse, so the second leg is replayed backwards.
    """
    if perm_of_word(src, n) != perm_of_word(dst, n):
        raise ValueError("words evaluate to different permutations")
    return canonicalize_moves(src, n) + list(reversed(canonicalize_moves(dst, n)))
