"""GL-invariant ideals of the coordinate ring of generic m x n matrices.

Every such ideal is generated by orbits of products of minors det_x indexed
by partitions x with at most n parts, and distinct ideals correspond to
distinct antichains of such partitions. An ideal is therefore stored as its
canonical antichain of generators; containment of ideals reverses the
containment of diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .partitions import (
    Parts,
    conjugate,
    leq,
    minimalize,
    part,
    partition,
    partitions_of_size_in_box,
    size,
    truncate_columns,
)


@dataclass(frozen=True)
class MatrixContext:
    """Ambient space of m x n matrices, with the convention m >= n >= 1.

    A transposed problem gives literally the same antichain combinatorics,
    so callers with m < n should swap the sides before building a context.
    """

    m: int
    n: int

    def __post_init__(self):
        if not (self.m >= self.n >= 1):
            raise ValueError(f"need m >= n >= 1, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class InvariantIdeal:
    """Ideal generated by the orbits of det_x for x in gens.

    gens is canonical: partitions with at most n parts, pairwise
    incomparable, in descending lexicographic order. The zero ideal has no
    generators; the unit ideal is generated by the empty partition alone,
    since det of the empty minor is 1.
    """

    ctx: MatrixContext
    gens: tuple[Parts, ...]

    def __post_init__(self):
        for g in self.gens:
            if partition(g) != g:
                raise ValueError(f"generator {g} is not canonical")
            if len(g) > self.ctx.n:
                raise ValueError(f"generator {g} has more than {self.ctx.n} parts")
        if tuple(sorted(self.gens, reverse=True)) != self.gens:
            raise ValueError("generators not in descending lexicographic order")
        for i, x in enumerate(self.gens):
            for j, y in enumerate(self.gens):
                if i != j and leq(x, y):
                    raise ValueError(f"generators are not an antichain: {x} <= {y}")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((),)


def make_ideal(ctx: MatrixContext, gens: Iterable[Iterable[int]]) -> InvariantIdeal:
    """Build the ideal generated by an arbitrary family of partitions.

    Canonicalizes each generator, discards the non-minimal ones, and sorts.
    An empty family gives the zero ideal.
    """
    xs = []
    for g in gens:
        x = partition(g)
        if len(x) > ctx.n:
            raise ValueError(f"generator {x} has more than {ctx.n} parts")
        xs.append(x)
    return InvariantIdeal(ctx, minimalize(xs))


def ideal_leq(a: InvariantIdeal, b: InvariantIdeal) -> bool:
    """True when a contains b as ideals.

    The antichain order runs opposite to inclusion: a >= b as ideals exactly
    when every generator of b contains some generator of a as a diagram.
    """
    if a.ctx != b.ctx:
        raise ValueError("ideals live in different matrix contexts")
    return all(any(leq(x, y) for x in a.gens) for y in b.gens)


def generator_degree(x) -> int:
    """Polynomial degree of the orbit generator det_x: the size of x."""
    return size(partition(x))


def power_of_minors(ctx: MatrixContext, p: int, d: int) -> InvariantIdeal:
    """d-th power of the ideal of p x p minors.

    Generated by every partition of size p*d with at most n parts, each part
    at most d; equal sizes make the family an antichain outright. d = 0 is
    allowed and gives the unit ideal.
    """
    _check_p(ctx, p)
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    gens = partitions_of_size_in_box(p * d, ctx.n, d)
    return InvariantIdeal(ctx, tuple(sorted(gens, reverse=True)))


def symbolic_power(ctx: MatrixContext, p: int, d: int) -> InvariantIdeal:
    """d-th symbolic power of the ideal of p x p minors.

    Generated by the partitions whose first p rows share a common value c
    and whose rows p..n sum to d, over c = 0..d.
    """
    _check_p(ctx, p)
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    gens = []
    for c in range(d, -1, -1):
        for tail in partitions_of_size_in_box(d - c, ctx.n - p, c):
            gens.append(partition((c,) * p + tail))
    return InvariantIdeal(ctx, minimalize(gens))


def saturated_power(ctx: MatrixContext, p: int, d: int) -> InvariantIdeal:
    """Saturation of the d-th power of the p x p minors by the maximal ideal.

    Generated by the partitions with x_1 = x_2 = c <= d whose rows 2..n sum
    to (p-1)*d. Without the cap c <= d the same row conditions admit
    partitions that lie outside the saturation, so the cap is part of the
    description, not an optimization.
    """
    _check_p(ctx, p)
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    gens = []
    for c in range(d, -1, -1):
        for tail in partitions_of_size_in_box((p - 1) * d - c, ctx.n - 2, c):
            gens.append(partition((c, c) + tail))
    return InvariantIdeal(ctx, minimalize(gens))


def strip_short_columns(x, p: int) -> Parts:
    """Drop the columns of x of height at most p.

    Equivalently x(c) where c counts the columns of height greater than p.
    Identity at p = 0; the zero partition for p >= height of x.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    xx = partition(x)
    c = sum(1 for h in conjugate(xx) if h > p)
    return truncate_columns(xx, c)


def saturation_generators(a: InvariantIdeal, p: int) -> tuple[Parts, ...]:
    """Generators of the saturation by the p x p minors, before reduction.

    Strips the short columns from each generator of a; the resulting family
    generates the saturated ideal but need not be an antichain. Sorted
    descending with duplicates removed.
    """
    _check_sat_p(a.ctx, p)
    return tuple(sorted({strip_short_columns(x, p) for x in a.gens}, reverse=True))


def saturate(a: InvariantIdeal, p: int) -> InvariantIdeal:
    """Saturation of a by the ideal of p x p minors.

    Minimalizes the stripped generating family. p = 0 is the identity and
    p = n sends every nonzero ideal to the unit ideal.
    """
    _check_sat_p(a.ctx, p)
    return InvariantIdeal(a.ctx, minimalize(strip_short_columns(x, p) for x in a.gens))


def succ_min(ctx: MatrixContext, z, l: int) -> tuple[Parts, ...]:
    """Minimal partitions x in P_n with x >= z and x_i > z_i for some i > l.

    For each admissible row i the least such x adds one box to row i and to
    every earlier row tied with it, because rows must stay weakly
    decreasing. Minimalizing these candidates over i gives the full answer:
    any member of the set dominates the candidate built from any row
    witnessing its membership.
    """
    if not 0 <= l <= ctx.n - 1:
        raise ValueError(f"l out of range for n={ctx.n}: {l}")
    zz = partition(z)
    if len(zz) > ctx.n:
        raise ValueError(f"{zz} has more than {ctx.n} parts")
    ramps = []
    for i in range(l + 1, ctx.n + 1):
        zi = part(zz, i)
        ramps.append(partition(tuple(
            part(zz, j) + 1 if j <= i and part(zz, j) == zi else part(zz, j)
            for j in range(1, ctx.n + 1)
        )))
    return minimalize(ramps)


def _check_p(ctx: MatrixContext, p: int) -> None:
    if not 1 <= p <= ctx.n:
        raise ValueError(f"minor size out of range for n={ctx.n}: {p}")


def _check_sat_p(ctx: MatrixContext, p: int) -> None:
    if not 0 <= p <= ctx.n:
        raise ValueError(f"minor size out of range for n={ctx.n}: {p}")
