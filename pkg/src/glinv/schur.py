"""Dimensions of irreducible GL_N representations and character containers."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Parts, Weight, dominant_weight, pad_weight, partition


def dim_schur(w, N: int) -> int:
    """Dimension of the irreducible GL_N representation with highest weight w.

    Exact product over pairs i < j of (w_i - w_j + j - i) / (j - i), with the
    numerator and denominator accumulated separately and the final division
    checked to be exact. Weights shorter than N are zero-padded on the right,
    which requires a nonnegative tail.
    """
    if N < 1:
        raise ValueError("N must be positive")
    ww = dominant_weight(w)
    if len(ww) != N:
        ww = pad_weight(ww, N)
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= ww[i] - ww[j] + j - i
            den *= j - i
    if num % den:
        raise ArithmeticError(f"dimension product not integral for {ww}")
    return num // den


def ssyt_count(x, N: int) -> int:
    """Count semistandard tableaux of shape x with entries in 1..N.

    Rows weakly increase, columns strictly increase. Filled cell by cell by
    backtracking; deliberately independent of dim_schur so the two can be
    checked against each other.
    """
    shape = partition(x)
    if len(shape) > N:
        raise ValueError(f"shape {shape} has more than {N} rows")
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    grid = [[0] * width for width in shape]

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, N + 1):
            grid[r][c] = v
            total += fill(k + 1)
        grid[r][c] = 0
        return total

    return fill(0)


@dataclass(frozen=True)
class IrredTerm:
    """One summand S_wm(C^m) (x) S_wn(C^n) in a single internal degree."""

    wm: Weight
    wn: Weight
    degree: int
    multiplicity: int = 1


def dim_term(term: IrredTerm, m: int, n: int) -> int:
    """Vector space dimension contributed by one summand."""
    return term.multiplicity * dim_schur(term.wm, m) * dim_schur(term.wn, n)


class EquivariantCharacter:
    """Finite multiset of irreducible summands, keyed by a homological index.

    Entries are stored as (index, wm, wn, degree) -> multiplicity with all
    multiplicities positive. Characters concentrated in a single
    cohomological degree use that degree as the index; plain graded
    characters use index 0.
    """

    __slots__ = ("_terms",)

    def __init__(self):
        self._terms: dict[tuple[int, Weight, Weight, int], int] = {}

    def add(self, index: int, wm, wn, degree: int, multiplicity: int = 1) -> "EquivariantCharacter":
        if multiplicity <= 0:
            raise ValueError("multiplicity must be positive")
        key = (int(index), dominant_weight(wm), dominant_weight(wn), int(degree))
        self._terms[key] = self._terms.get(key, 0) + multiplicity
        return self

    def merge(self, other: "EquivariantCharacter") -> "EquivariantCharacter":
        for (j, wm, wn, deg), mult in other._terms.items():
            self.add(j, wm, wn, deg, mult)
        return self

    def __add__(self, other: "EquivariantCharacter") -> "EquivariantCharacter":
        out = EquivariantCharacter()
        out.merge(self)
        out.merge(other)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EquivariantCharacter) and self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[int, IrredTerm]]:
        """(index, term) pairs sorted by index, then degree, then wm, then wn."""
        out = [
            (j, IrredTerm(wm, wn, deg, mult))
            for (j, wm, wn, deg), mult in self._terms.items()
        ]
        out.sort(key=lambda it: (it[0], it[1].degree, it[1].wm, it[1].wn))
        return out

    def indices(self) -> list[int]:
        return sorted({j for (j, _, _, _) in self._terms})

    def at_index(self, index: int) -> "EquivariantCharacter":
        """Sub-character of a single homological index (index is kept)."""
        out = EquivariantCharacter()
        for (j, wm, wn, deg), mult in self._terms.items():
            if j == index:
                out.add(j, wm, wn, deg, mult)
        return out

    def degrees(self) -> list[int]:
        return sorted({deg for (_, _, _, deg) in self._terms})

    def multiplicity(self, index: int, wm, wn, degree: int) -> int:
        key = (index, dominant_weight(wm), dominant_weight(wn), int(degree))
        return self._terms.get(key, 0)

    def dimension_table(self, m: int, n: int) -> dict[tuple[int, int], int]:
        """Total vector space dimension per (index, degree) cell."""
        out: dict[tuple[int, int], int] = {}
        for j, term in self.items():
            key = (j, term.degree)
            out[key] = out.get(key, 0) + dim_term(term, m, n)
        return out

    def __repr__(self) -> str:
        return f"EquivariantCharacter({len(self._terms)} terms)"
