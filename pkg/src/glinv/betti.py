"""Equivariant Betti numbers of powers of determinantal ideals.

The minimal free resolution of the ideal generated by the b-th powers of the
a x a minors is assembled from rectangle blocks h_{r x s}: one irreducible
summand for every pair of partitions (alpha, beta) fitting beside and below
the rectangle. betti_polynomial combines the blocks for the rectangles
(a+t) x (b+t) with Gauss polynomial multiplicities in q^2, and betti_table
flattens the result to numeric Betti numbers beta_{i, degree}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import MatrixContext
from .partitions import attach, conjugate, enumerate_in_box, qbinomial, size
from .schur import EquivariantCharacter, dim_term


class BettiPolynomial:
    """Character of a resolution, grouped by homological index."""

    __slots__ = ("_char",)

    def __init__(self, character: EquivariantCharacter):
        self._char = character

    @property
    def character(self) -> EquivariantCharacter:
        return self._char

    def indices(self) -> list[int]:
        return self._char.indices()

    def by_homological_index(self) -> dict[int, EquivariantCharacter]:
        return {i: self._char.at_index(i) for i in self._char.indices()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiPolynomial) and self._char == other._char

    def __bool__(self) -> bool:
        return bool(self._char)

    def __repr__(self) -> str:
        return f"BettiPolynomial(indices={self.indices()})"


def h_rect(ctx: MatrixContext, r: int, s: int) -> BettiPolynomial:
    """Rectangle block h_{r x s}.

    One term per pair (alpha, beta) with alpha inside the min(r,s) x (n-r)
    box and beta inside the (m-r) x min(r,s) box. The pair sits at exponent
    |alpha| + |beta|, in internal degree r*s plus that exponent, with row
    weight attach(r, s, alpha, beta) and column weight
    attach(r, s, beta', alpha').
    """
    m, n = ctx.m, ctx.n
    if not 1 <= r <= n:
        raise ValueError(f"rectangle height out of range for n={n}: {r}")
    if s < 1:
        raise ValueError("rectangle width must be positive")
    ch = EquivariantCharacter()
    edge = min(r, s)
    for alpha in enumerate_in_box(edge, n - r):
        for beta in enumerate_in_box(m - r, edge):
            k = size(alpha) + size(beta)
            ch.add(
                k,
                attach(r, s, alpha, beta),
                attach(r, s, conjugate(beta), conjugate(alpha)),
                r * s + k,
            )
    return BettiPolynomial(ch)


def betti_polynomial(ctx: MatrixContext, a: int, b: int) -> BettiPolynomial:
    """Equivariant Betti polynomial of the b-th powers of the a x a minors.

    Sum over t = 0..n-a of the block for the (a+t) x (b+t) rectangle, with
    every block exponent k landing at homological index k + t^2 + 2t + 2u
    for each exponent 2u of qbinomial(t + min(a,b) - 1, t) taken in q^2,
    weighted by the corresponding Gauss coefficient.
    """
    m, n = ctx.m, ctx.n
    if not 1 <= a <= n:
        raise ValueError(f"minor size out of range for n={n}: {a}")
    if b < 1:
        raise ValueError("power must be positive")
    out = EquivariantCharacter()
    for t in range(n - a + 1):
        gauss = qbinomial(t + min(a, b) - 1, t).subst_power(2)
        block = h_rect(ctx, a + t, b + t).character
        base = t * t + 2 * t
        for e, gmult in gauss.items():
            for k, term in block.items():
                out.add(k + base + e, term.wm, term.wn, term.degree,
                        term.multiplicity * gmult)
    return BettiPolynomial(out)


@dataclass(frozen=True)
class BettiTable:
    """Numeric Betti numbers entries[(i, degree)] of a resolution."""

    entries: dict[tuple[int, int], int]

    def total(self, i: int) -> int:
        return sum(v for (idx, _), v in self.entries.items() if idx == i)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    def csv_rows(self) -> list[str]:
        rows = ["i,degree,beta"]
        for (i, d), v in sorted(self.entries.items()):
            rows.append(f"{i},{d},{v}")
        return rows

    def render(self) -> str:
        """Grid with one column per homological index and one row per slope
        degree - index, dots marking empty cells."""
        if not self.entries:
            return "(empty resolution)"
        imin = min(i for i, _ in self.entries)
        imax = max(i for i, _ in self.entries)
        slopes = sorted({d - i for i, d in self.entries})
        cols = list(range(imin, imax + 1))
        totals = self.totals()
        header = [""] + [str(i) for i in cols]
        lines = [header, ["total:"] + [str(totals.get(i, 0)) for i in cols]]
        for sl in range(slopes[0], slopes[-1] + 1):
            row = [f"{sl}:"]
            for i in cols:
                v = self.entries.get((i, i + sl))
                row.append(str(v) if v else ".")
            lines.append(row)
        widths = [max(len(line[c]) for line in lines) for c in range(len(cols) + 1)]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip()
            for line in lines
        )


def betti_table(bp: BettiPolynomial, ctx: MatrixContext) -> BettiTable:
    """Flatten an equivariant Betti polynomial to numeric Betti numbers."""
    entries: dict[tuple[int, int], int] = {}
    for i, term in bp.character.items():
        key = (i, term.degree)
        entries[key] = entries.get(key, 0) + dim_term(term, ctx.m, ctx.n)
    return BettiTable(dict(sorted(entries.items())))
