"""Cartan data for finite-type root systems, in fundamental-weight coordinates.

A weight is a tuple of integers: its coefficients on the fundamental
dominant weights w1..wm.  Simple root i is row i of the Cartan matrix, so
every reflection, orbit and inner-product computation happens in this one
coordinate system.  All arithmetic is exact (integers and rationals); no
value in this module is ever rounded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

from . import _kernels
from .errors import InputError

Weight = tuple[int, ...]

#: Practical cap on the size of a single Weyl orbit.
ORBIT_CAP = 10**6

_TAG_RE = re.compile(r"^([A-Za-z])[-_ ]?(\d+)$")


@dataclass(frozen=True)
class CartanData:
    """Root-system data of a simply-connected compact semisimple group.

    ``cartan_matrix`` rows are the simple roots in weight coordinates;
    ``symmetrizer`` holds the minimal positive integers d with
    C[i][j] * d[j] symmetric in (i, j), so that root i has squared length
    2 * d[i] under the invariant form.
    """

    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Weight, ...]
    weyl_vector: Weight
    label: str

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.cartan_matrix)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Invariant inner product on weight coordinates: C^-1 * diag(d)."""
        inv = self.inverse_cartan
        d = self.symmetrizer
        return tuple(
            tuple(inv[i][j] * d[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def gram_scaled(self) -> tuple[tuple[int, ...], ...]:
        """gram cleared of denominators; kernels only ever use ratios."""
        scale = lcm(*[f.denominator for row in self.gram for f in row])
        return tuple(
            tuple(int(f * scale) for f in row) for row in self.gram
        )

    @cached_property
    def height_vector(self) -> tuple[int, ...]:
        """Integer vector h with h . w proportional to the root-coordinate
        sum of w; it strictly refines the dominance order."""
        inv = self.inverse_cartan
        sums = [sum(inv[j][i] for i in range(self.rank)) for j in range(self.rank)]
        scale = lcm(*[f.denominator for f in sums])
        return tuple(int(f * scale) for f in sums)

    def height_key(self, w: Weight) -> int:
        hv = self.height_vector
        return sum(a * b for a, b in zip(hv, w))


def _invert(matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InputError("invalid-cartan", "Cartan matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _symmetrizer(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integers d with C[i][j]*d[j] == C[j][i]*d[i]."""
    n = len(matrix)
    vals: list[Fraction | None] = [None] * n
    for start in range(n):
        if vals[start] is not None:
            continue
        vals[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or matrix[i][j] == 0:
                    continue
                want = vals[i] * Fraction(matrix[j][i], matrix[i][j])  # d[j]/d[i]
                if vals[j] is None:
                    vals[j] = want
                    stack.append(j)
                elif vals[j] != want:
                    raise InputError(
                        "invalid-cartan", "Cartan matrix is not symmetrizable"
                    )
    denom = lcm(*[v.denominator for v in vals])
    ints = [int(v * denom) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _validate_cartan(matrix) -> tuple[tuple[int, ...], ...]:
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise InputError("invalid-cartan", "Cartan matrix must be square")
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            x = matrix[i][j]
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError("invalid-cartan", "entries must be integers")
            if i == j and x != 2:
                raise InputError("invalid-cartan", "diagonal entries must equal 2")
            if i != j and x > 0:
                raise InputError(
                    "invalid-cartan", "off-diagonal entries must be non-positive"
                )
            if i != j and (x == 0) != (matrix[j][i] == 0):
                raise InputError(
                    "invalid-cartan", "zero pattern must be symmetric"
                )
    return tuple(tuple(row) for row in matrix)


def _positive_definite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    # leading principal minors via fraction-preserving elimination
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def _positive_roots(cartan) -> tuple[Weight, ...]:
    m = len(cartan)
    simple = [tuple(row) for row in cartan]
    roots = _kernels.weyl_orbit(cartan, simple[0], ORBIT_CAP)
    for s in simple[1:]:
        roots |= _kernels.weyl_orbit(cartan, s, ORBIT_CAP)
    inv = _invert(cartan)
    positive = []
    for r in roots:
        coords = [
            sum(r[i] * inv[i][j] for i in range(m)) for j in range(m)
        ]
        if all(c >= 0 for c in coords):
            if any(c.denominator != 1 for c in coords):
                raise InputError("invalid-cartan", "root lattice inconsistency")
            positive.append((sum(coords), r))
    positive.sort(key=lambda t: (t[0], t[1]))
    return tuple(r for _, r in positive)


def custom_cartan(matrix: Iterable[Iterable[int]], label: str = "custom") -> CartanData:
    """Build CartanData from an explicit integer Cartan matrix.

    The matrix must be a valid Cartan matrix of finite type (block-diagonal
    matrices of valid blocks are accepted, giving semisimple products).
    """
    try:
        rows = [list(row) for row in matrix]
    except TypeError:
        raise InputError("invalid-cartan", "expected a matrix of integer rows") from None
    cartan = _validate_cartan(rows)
    d = _symmetrizer(cartan)
    n = len(cartan)
    sym = [[Fraction(cartan[i][j] * d[j]) for j in range(n)] for i in range(n)]
    if not _positive_definite(sym):
        raise InputError(
            "invalid-cartan", "Cartan matrix is not of finite type"
        )
    return CartanData(
        rank=n,
        cartan_matrix=cartan,
        symmetrizer=d,
        positive_roots=_positive_roots(cartan),
        weyl_vector=(1,) * n,
        label=label,
    )


def _series_matrix(series: str, rank: int) -> list[list[int]]:
    def chain(n):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
            if i + 1 < n:
                a[i][i + 1] = -1
                a[i + 1][i] = -1
        return a

    if series == "A":
        if rank < 1:
            raise InputError("invalid-group", "series A needs rank >= 1")
        return chain(rank)
    if series == "B":
        if rank < 2:
            raise InputError("invalid-group", "series B needs rank >= 2")
        a = chain(rank)
        a[rank - 2][rank - 1] = -2  # last simple root is short
        return a
    if series == "C":
        if rank < 2:
            raise InputError("invalid-group", "series C needs rank >= 2")
        a = chain(rank)
        a[rank - 1][rank - 2] = -2  # last simple root is long
        return a
    if series == "D":
        if rank < 3:
            raise InputError("invalid-group", "series D needs rank >= 3")
        a = chain(rank - 1)
        for row in a:
            row.append(0)
        a.append([0] * rank)
        a[rank - 1][rank - 1] = 2
        a[rank - 1][rank - 3] = -1  # fork: last root attaches two nodes back
        a[rank - 3][rank - 1] = -1
        return a
    if series == "G":
        if rank != 2:
            raise InputError("invalid-group", "series G needs rank 2")
        return [[2, -1], [-3, 2]]
    raise InputError("invalid-group", f"unknown series {series!r}")


def builtin_cartan(series: str, rank: int) -> CartanData:
    """Standard Cartan data for the series A, B, C, D and G2."""
    series = series.upper()
    if series == "G2":
        series = "G"
    return custom_cartan(_series_matrix(series, rank), label=f"{series}{rank}")


def cartan_from_tag(tag: str) -> CartanData:
    """Parse a tag such as ``A2``, ``B3`` or ``G2`` into CartanData."""
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise InputError("invalid-group", f"cannot parse group tag {tag!r}")
    return builtin_cartan(m.group(1), int(m.group(2)))


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def _check_length(cd: CartanData, w: Sequence[int]) -> Weight:
    if len(w) != cd.rank:
        raise InputError(
            "rank-mismatch", f"weight of length {len(w)} for rank {cd.rank}"
        )
    return tuple(w)


def inner(cd: CartanData, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """Invariant symmetric bilinear form, exact rational value."""
    u = _check_length(cd, u)
    v = _check_length(cd, v)
    g = cd.gram
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui:
            total += ui * sum(g[i][j] * v[j] for j in range(cd.rank) if v[j])
    return total


def simple_reflection(cd: CartanData, i: int, w: Sequence[int]) -> Weight:
    """s_i(w) = w - w[i] * root_i."""
    w = _check_length(cd, w)
    if not 0 <= i < cd.rank:
        raise InputError("invalid-index", f"reflection index {i} out of range")
    c = w[i]
    row = cd.cartan_matrix[i]
    return tuple(w[j] - c * row[j] for j in range(cd.rank))


def dominant_representative(cd: CartanData, w: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    return _kernels.dominant_representative(cd.cartan_matrix, _check_length(cd, w))


def weyl_orbit(cd: CartanData, w: Sequence[int], cap: int = ORBIT_CAP) -> frozenset[Weight]:
    """Full Weyl orbit of ``w``; raises ResourceCapError beyond ``cap``."""
    return frozenset(_kernels.weyl_orbit(cd.cartan_matrix, _check_length(cd, w), cap))
