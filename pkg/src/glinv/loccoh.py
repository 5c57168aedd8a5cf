"""Local cohomology with support in the ideal of p x p minors.

Each nonzero cohomology group H^j is a finite extension of simple
GL-equivariant modules D_0, ..., D_{p-1}, and the multiplicity of D_s in
H^j is the coefficient of q^j in the Gauss polynomial with q replaced by
q^2 and the whole thing shifted by (n-p+1)^2 + (n-s)(m-n). The table
builder below records those multiplicities; ds_character expands the
character of a single factor over a degree window.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import DegreeWindow, _insert_block
from .ideals import MatrixContext
from .partitions import qbinomial
from .schur import EquivariantCharacter


@dataclass(frozen=True)
class LCTable:
    """Multiplicities rows[j][s] of the factor D_s inside H^j."""

    ctx: MatrixContext
    p: int
    rows: dict[int, dict[int, int]]


def lc_table(ctx: MatrixContext, p: int) -> LCTable:
    """Composition factor multiplicities of the cohomology supported in the
    p x p minors.

    The factor D_s enters through qbinomial(n-s-1, p-1-s) in the variable
    q^2, shifted by (n-p+1)^2 + (n-s)(m-n). In particular all cohomological
    indices carrying D_s share the parity of that shift, and for square
    matrices the whole table lives in one parity class.
    """
    if not 1 <= p <= ctx.n:
        raise ValueError(f"minor size out of range for n={ctx.n}: {p}")
    m, n = ctx.m, ctx.n
    rows: dict[int, dict[int, int]] = {}
    for s in range(p):
        shift = (n - p + 1) ** 2 + (n - s) * (m - n)
        poly = qbinomial(n - s - 1, p - 1 - s).subst_power(2).shift(shift)
        for j, mult in poly.items():
            rows.setdefault(j, {})[s] = mult
    return LCTable(ctx, p, {j: dict(sorted(rows[j].items())) for j in sorted(rows)})


def lc_support(ctx: MatrixContext, p: int) -> tuple[int, int]:
    """Least and greatest cohomological index with nonzero cohomology."""
    rows = lc_table(ctx, p).rows
    return (min(rows), max(rows))


def ds_character(ctx: MatrixContext, s: int, window: DegreeWindow) -> EquivariantCharacter:
    """Windowed character of the simple factor D_s.

    D_s is spanned by the pairs with GL_n weight lam dominant of length n
    subject to lam_s >= s - n and lam_{s+1} <= s - m. Only s = 0 is
    enumerable: there every entry is at most -m, so each degree cuts out a
    finite set and the total degree never exceeds -m*n. For s >= 1 the
    constraints leave the leading entries unbounded above, every degree
    slice is infinite dimensional, and the query is rejected.
    """
    if not 0 <= s <= ctx.n - 1:
        raise ValueError(f"s out of range for n={ctx.n}: {s}")
    if s >= 1:
        raise ValueError(
            f"D_{s} has infinite dimensional degree slices; "
            "only the s = 0 factor admits a windowed character"
        )
    m, n = ctx.m, ctx.n
    ch = EquivariantCharacter()
    acc = [0] * n

    def walk(idx: int, prev: int, partial: int) -> None:
        if idx > n:
            if window.lo <= partial <= window.hi:
                lam = tuple(acc)
                ch.add(0, _insert_block(ctx, 0, lam), lam, partial)
            return
        remaining = n - idx + 1
        # entries below this make even an all-equal tail fall short of lo
        floor = -((partial - window.lo) // remaining)
        for v in range(min(prev, -m), floor - 1, -1):
            acc[idx - 1] = v
            walk(idx + 1, v, partial + v)

    walk(1, -m, 0)
    return ch
