"""Graded dimensions as Laurent polynomials in v with nonnegative coefficients."""

from __future__ import annotations


class GradedDimension:
    """A Laurent polynomial in v, stored as a degree -> coefficient dict.

    Zero coefficients are never stored.  Printing lists terms in ascending
    degree, e.g. ``1 + v^2``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {d: c for d, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def from_degrees(degrees) -> "GradedDimension":
        out: dict[int, int] = {}
        for d in degrees:
            out[d] = out.get(d, 0) + 1
        return GradedDimension(out)

    def total(self) -> int:
        """Ungraded dimension: value at v = 1."""
        return sum(self.coeffs.values())

    def shifted(self, k: int) -> "GradedDimension":
        return GradedDimension({d + k: c for d, c in self.coeffs.items()})

    def reversed(self) -> "GradedDimension":
        """Substitute v -> 1/v."""
        return GradedDimension({-d: c for d, c in self.coeffs.items()})

    def __add__(self, other: "GradedDimension") -> "GradedDimension":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return GradedDimension(out)

    def __mul__(self, other: "GradedDimension") -> "GradedDimension":
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, 0) + c1 * c2
        return GradedDimension(out)

    def __eq__(self, other):
        if isinstance(other, GradedDimension):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            if d == 0:
                parts.append(str(c))
            else:
                power = "v" if d == 1 else "v^%d" % d
                parts.append(power if c == 1 else "%d*%s" % (c, power))
        return " + ".join(parts)

    def __repr__(self):
        return "GradedDimension(%r)" % (self.coeffs,)

    def to_json_dict(self) -> dict[str, int]:
        return {str(d): c for d, c in sorted(self.coeffs.items())}

    @staticmethod
    def parse(text: str) -> "GradedDimension":
        """Inverse of ``str``, accepting e.g. ``"1 + 2*v^3"``."""
        text = text.strip()
        if text == "0":
            return GradedDimension({})
        out: dict[int, int] = {}
        for term in text.split("+"):
            term = term.strip()
            if "*" in term:
                c_str, pow_str = term.split("*")
                c = int(c_str)
            elif term.startswith("v"):
                c, pow_str = 1, term
            else:
                c, pow_str = int(term), ""
            if not pow_str:
                d = 0
            elif pow_str == "v":
                d = 1
            else:
                d = int(pow_str[2:])
            out[d] = out.get(d, 0) + c
        return GradedDimension(out)
