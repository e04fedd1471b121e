"""Quiver and multicharge data shared by every computation.

The quantum characteristic e is an integer >= 2 or infinity (stored as
``None``).  Residues live in I = Z/eZ (integers in ``[0, e)``) for finite e
and in Z for e infinite.  The quiver has an arrow i -> i-1 for every i; for
e = 2 each pair of adjacent vertices carries arrows both ways.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import Field, QQ


@dataclass(frozen=True)
class AlgebraConfig:
    """Quantum characteristic, multicharge and ground field.

    kappa has one residue per component; its length is the level.
    """

    e: int | None
    kappa: tuple[int, ...]
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        if self.e is not None and self.e < 2:
            raise ValueError("e must be >= 2 or None (infinity)")
        if len(self.kappa) < 1:
            raise ValueError("multicharge must have level >= 1")
        object.__setattr__(self, "kappa", tuple(self.normalise(k) for k in self.kappa))

    @property
    def level(self) -> int:
        return len(self.kappa)

    def normalise(self, i: int) -> int:
        """Reduce a residue into I."""
        return i if self.e is None else i % self.e

    def residue(self, node) -> int:
        """kappa_m + (c - r), reduced mod e."""
        r, c, m = node
        return self.normalise(self.kappa[m - 1] + c - r)

    def cartan(self, i: int, j: int) -> int:
        """Cartan matrix entry a_ij = 2 d_ij - d_i(j+1) - d_i(j-1)."""
        i, j = self.normalise(i), self.normalise(j)
        a = 2 if i == j else 0
        if i == self.normalise(j + 1):
            a -= 1
        if i == self.normalise(j - 1):
            a -= 1
        return a

    def is_single_arrow(self, i: int, j: int) -> bool:
        """i -> j: an arrow from i to j but none back (so e != 2)."""
        if self.e == 2:
            return False
        return self.normalise(j) == self.normalise(i - 1)

    def is_double_arrow(self, i: int, j: int) -> bool:
        """i <=> j: arrows both ways (e = 2 and i != j)."""
        return self.e == 2 and self.normalise(i) != self.normalise(j)

    def psi_degree(self, i: int, j: int) -> int:
        """deg(psi_r e(i)) where i, j are the residues in slots r, r+1."""
        return -self.cartan(i, j)

    def conjugate(self) -> "AlgebraConfig":
        """The multicharge (-kappa_l, ..., -kappa_1), same e and field."""
        return AlgebraConfig(self.e, tuple(self.normalise(-k) for k in reversed(self.kappa)), self.field)

    def with_kappa(self, kappa) -> "AlgebraConfig":
        return AlgebraConfig(self.e, tuple(kappa), self.field)

    def __str__(self):
        e = "inf" if self.e is None else str(self.e)
        return "e=%s kappa=(%s) field=%s" % (e, ",".join(map(str, self.kappa)), self.field)


def parse_e(text: str) -> int | None:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return None
    return int(text)


def parse_kappa(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))
