"""Partitions, dominant weights, and exact polynomials in q.

A partition is stored as a tuple of weakly decreasing positive integers with
trailing zeros stripped, so the empty tuple () is the zero partition and
equality of diagrams is equality of tuples. Dominant weights are weakly
decreasing integer tuples of a fixed length whose entries may be negative.
QPolynomial keeps integer coefficients indexed by nonnegative exponents and
backs the Gauss binomial arithmetic used by the multiplicity tables.

All arithmetic is exact; nothing in this module touches floating point.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Parts = tuple[int, ...]
Weight = tuple[int, ...]


def partition(parts: Iterable[int]) -> Parts:
    """Canonicalize a sequence of row lengths.

    Entries must be weakly decreasing and nonnegative; trailing zeros are
    dropped. The empty sequence is accepted and denotes the zero partition.
    """
    xs = tuple(int(v) for v in parts)
    for a, b in zip(xs, xs[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {xs}")
    if xs and xs[-1] < 0:
        raise ValueError(f"negative row length in {xs}")
    k = len(xs)
    while k and xs[k - 1] == 0:
        k -= 1
    return xs[:k]


def part(x: Parts, i: int) -> int:
    """Row i of x, 1-based, reading zero past the last row."""
    return x[i - 1] if 0 < i <= len(x) else 0


def size(x: Parts) -> int:
    """Number of boxes of the diagram."""
    return sum(x)


def conjugate(x: Parts) -> Parts:
    """Transpose of the Young diagram: column heights become row lengths."""
    if not x:
        return ()
    return tuple(sum(1 for v in x if v >= c) for c in range(1, x[0] + 1))


def leq(x: Parts, y: Parts) -> bool:
    """Containment of diagrams: x_i <= y_i for every row."""
    if len(x) > len(y):
        return False
    return all(a <= b for a, b in zip(x, y))


def truncate_columns(x: Parts, c: int) -> Parts:
    """First c columns of x: every row clipped to length at most c."""
    if c < 0:
        raise ValueError("column count must be nonnegative")
    return partition(min(v, c) for v in x)


def minimalize(xs: Iterable[Parts]) -> tuple[Parts, ...]:
    """Minimal elements of a family of partitions, sorted descending.

    The result is an antichain with the same up-set under leq as the input.
    """
    pool = set(xs)
    keep = [x for x in pool if not any(y != x and leq(y, x) for y in pool)]
    return tuple(sorted(keep, reverse=True))


def enumerate_in_box(rows: int, cols: int) -> list[Parts]:
    """All partitions with at most `rows` parts, each part at most `cols`.

    Ordered by size and then lexicographically, so the output is stable for
    golden files. The count is binomial(rows + cols, rows).
    """
    if rows < 0 or cols < 0:
        raise ValueError("box sides must be nonnegative")
    out = list(_box(rows, cols))
    out.sort(key=lambda x: (sum(x), x))
    return out


def _box(rows: int, cap: int) -> Iterator[Parts]:
    yield ()
    if rows == 0 or cap == 0:
        return
    for head in range(1, cap + 1):
        for tail in _box(rows - 1, head):
            yield (head,) + tail


def partitions_of_size_in_box(total: int, rows: int, cols: int) -> list[Parts]:
    """Partitions of `total` with at most `rows` parts, each at most `cols`."""
    if total < 0:
        return []
    return sorted(_sized(total, rows, cols))


def _sized(total: int, rows: int, cap: int) -> Iterator[Parts]:
    if total == 0:
        yield ()
        return
    if rows <= 0 or cap <= 0:
        return
    # the head must carry at least an equal share of the remaining boxes
    lo = -(-total // rows)
    for head in range(min(cap, total), lo - 1, -1):
        for tail in _sized(total - head, rows - 1, head):
            yield (head,) + tail


def attach(r: int, s: int, a: Parts, b: Parts) -> Parts:
    """Attach a to the right and b below an r x s rectangle.

    The rows are s + a_i for i = 1..r followed by the rows of b, so a needs
    at most r parts and b needs b_1 <= s for the result to be a partition.
    The size is always r*s + |a| + |b|.
    """
    if r < 1 or s < 1:
        raise ValueError("rectangle sides must be positive")
    if len(a) > r:
        raise ValueError(f"{a} has more than {r} parts")
    if b and b[0] > s:
        raise ValueError(f"{b} is wider than the rectangle")
    return partition([s + part(a, i) for i in range(1, r + 1)] + list(b))


def dominant_weight(entries: Iterable[int]) -> Weight:
    """Validate a weakly decreasing integer vector."""
    w = tuple(int(v) for v in entries)
    for a, b in zip(w, w[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {w}")
    return w


def dual_weight(w: Iterable[int]) -> Weight:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-v for v in reversed(dominant_weight(w)))


def pad_weight(w: Iterable[int], N: int) -> Weight:
    """Extend a weight to length N by zeros on the right.

    Only meaningful when the missing entries can be read as zeros, so a
    shorter weight with a negative tail is rejected.
    """
    ww = dominant_weight(w)
    if len(ww) > N:
        raise ValueError(f"{ww} is longer than {N}")
    if len(ww) < N and ww and ww[-1] < 0:
        raise ValueError(f"cannot zero-pad {ww}: negative tail")
    return ww + (0,) * (N - len(ww))


class QPolynomial:
    """Polynomial in q with integer coefficients and nonnegative exponents."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c: dict[int, int] = {}
        for e, v in (coeffs or {}).items():
            e = int(e)
            v = int(v)
            if e < 0:
                raise ValueError("negative exponent")
            if v:
                c[e] = v
        self._c = c

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPolynomial":
        return cls({exp: coeff})

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return sorted(self._c.items())

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def degree(self) -> int:
        """Largest exponent present, or -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPolynomial(c)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) - v
        return QPolynomial(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPolynomial(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        return QPolynomial({e + k: v for e, v in self._c.items()})

    def subst_power(self, k: int) -> "QPolynomial":
        """Substitute q -> q^k."""
        if k < 1:
            raise ValueError("substitution power must be positive")
        return QPolynomial({e * k: v for e, v in self._c.items()})

    def __call__(self, q: int) -> int:
        return sum(v * q**e for e, v in self._c.items())

    def divexact(self, other: "QPolynomial") -> "QPolynomial":
        """Exact division; raises ValueError if a remainder would be left."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        le = max(other._c)
        lc = other._c[le]
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            v = rem[e]
            if e < le or v % lc:
                raise ValueError("inexact polynomial division")
            qe, qv = e - le, v // lc
            quot[qe] = qv
            for oe, ov in other._c.items():
                ne = qe + oe
                nv = rem.get(ne, 0) - qv * ov
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return QPolynomial(quot)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        chunks: list[str] = []
        for e, v in self.items():
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not chunks:
                chunks.append(body if v > 0 else "-" + body)
            else:
                chunks.append(("+ " if v > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"QPolynomial({dict(self.items())!r})"


def qbinomial(a: int, b: int) -> QPolynomial:
    """Gauss polynomial, the q-analog of binomial(a, b).

    Built by alternately multiplying by (1 - q^(a-b+i)) and dividing exactly
    by (1 - q^i); every intermediate product is itself a Gauss polynomial,
    so the divisions never truncate. Zero when b > a; at q = 1 the value is
    the ordinary binomial coefficient.
    """
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    if b > a:
        return QPolynomial.zero()
    res = QPolynomial.one()
    for i in range(1, b + 1):
        res = res * QPolynomial({0: 1, a - b + i: -1})
        res = res.divexact(QPolynomial({0: 1, i: -1}))
    return res
