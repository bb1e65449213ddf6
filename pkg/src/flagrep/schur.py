"""Type-A specialization: partitions, tableaux, Schur polynomials.

Schur polynomials live in the semiring of exponent vectors on y1..ym taken
modulo the relation y1*...*ym = 1; a canonical representative has at least
one zero exponent.  The substitution wk -> y1*...*yk identifies rank-(m-1)
lattice polynomials with these, with inverse ek -> ek - e(k+1); both
directions are exact monomial maps.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .cartan import Weight
from .charpoly import CharPoly, _Parser, _monomial_text, _render_terms
from .errors import InputError

Partition = tuple[int, ...]


def validate_partition(parts: Iterable[int]) -> Partition:
    mu = tuple(parts)
    if any(not isinstance(x, int) or x < 0 for x in mu):
        raise InputError("invalid-partition", "parts must be nonnegative integers")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise InputError("invalid-partition", f"{mu} is not weakly decreasing")
    return mu


def parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError("invalid-partition", f"cannot parse partition {text!r}") from None
    return validate_partition(parts)


def _canonical(e: Iterable[int]) -> tuple[int, ...]:
    e = tuple(e)
    low = min(e)
    return e if low == 0 else tuple(x - low for x in e)


class YPoly:
    """Integer combination of exponent vectors modulo y1*...*ym = 1."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = ()):
        if nvars < 1:
            raise InputError("invalid-rank", "need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise InputError("rank-mismatch", f"exponent {e} for {nvars} variables")
            e = _canonical(e)
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            elif e in clean:
                del clean[e]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "YPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "YPoly":
        return cls(nvars, {(0,) * nvars: 1})

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, YPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def _check(self, other: "YPoly") -> None:
        if self.nvars != other.nvars:
            raise InputError("rank-mismatch", "variable counts differ")

    def __add__(self, other: "YPoly") -> "YPoly":
        if not isinstance(other, YPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            elif e in out:
                del out[e]
        return YPoly(self.nvars, out)

    def __mul__(self, other) -> "YPoly":
        if isinstance(other, int):
            return YPoly(self.nvars, {e: c * other for e, c in self.terms.items()} if other else {})
        if not isinstance(other, YPoly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _canonical(x + y for x, y in zip(ea, eb))
                c = out.get(e, 0) + ca * cb
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return YPoly(self.nvars, out)

    def __rmul__(self, other) -> "YPoly":
        return self.__mul__(other)

    def __str__(self) -> str:
        return render_ypoly(self)

    def __repr__(self) -> str:
        return f"YPoly({self.nvars}, {render_ypoly(self)!r})"


def render_ypoly(q: YPoly) -> str:
    if not q.terms:
        return "0"
    names = [f"y{i + 1}" for i in range(q.nvars)]
    ordered = [
        (q.terms[e], _monomial_text(e, names)) for e in sorted(q.terms, reverse=True)
    ]
    return _render_terms(ordered)


def parse_ypoly(text: str, nvars: int) -> YPoly:
    raw = _Parser(text, "y", nvars, None).parse()
    return YPoly(nvars, ((tuple(e[:nvars]), c) for e, c in raw))


def _ssyt_rows(prev_row: tuple[int, ...], width: int, m: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows of the given width, strictly below prev_row."""
    row = [0] * width

    def fill(j: int, low: int) -> Iterator[tuple[int, ...]]:
        if j == width:
            yield tuple(row)
            return
        lower = max(low, prev_row[j] + 1 if j < len(prev_row) else 1)
        for v in range(lower, m + 1):
            row[j] = v
            yield from fill(j + 1, v)

    return fill(0, 1)


@lru_cache(maxsize=None)
def ssyt_contents(mu: Partition, m: int) -> tuple[tuple[int, ...], ...]:
    """Content vectors of all semistandard tableaux of shape mu, entries <= m.

    One vector per tableau (so repeats appear), sorted descending; this
    fixed order is what the weight listings downstream rely on.
    """
    mu = validate_partition(mu)
    shape = tuple(p for p in mu if p > 0)
    if len(shape) > m:
        raise InputError(
            "invalid-partition", f"partition {mu} has more than {m} parts"
        )
    contents: list[tuple[int, ...]] = []
    counts = [0] * m

    def fill(r: int, prev: tuple[int, ...]) -> None:
        if r == len(shape):
            contents.append(tuple(counts))
            return
        for row in _ssyt_rows(prev, shape[r], m):
            for v in row:
                counts[v - 1] += 1
            fill(r + 1, row)
            for v in row:
                counts[v - 1] -= 1

    fill(0, ())
    contents.sort(reverse=True)
    return tuple(contents)


def schur(mu: Iterable[int], m: int) -> YPoly:
    """Schur polynomial in m variables: the tableau generating function."""
    return YPoly(m, ((e, 1) for e in ssyt_contents(validate_partition(mu), m)))


def schur_dim(mu: Iterable[int], m: int) -> int:
    """Value at (1,..,1) by the hook-content product; counts the tableaux."""
    mu = validate_partition(mu)
    shape = [p for p in mu if p > 0]
    if len(shape) > m:
        raise InputError("invalid-partition", f"partition {mu} has more than {m} parts")
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    num = 1
    den = 1
    for i, row in enumerate(shape):
        for j in range(row):
            num *= m + j - i
            den *= row - j + conj[j] - i - 1  # arm + leg + 1
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("hook-content product did not divide exactly")
    return value


def weight_of_partition(mu: Iterable[int], m: int) -> Weight:
    """Highest weight of the irreducible with Schur character: part differences."""
    mu = validate_partition(mu)
    if len(mu) > m:
        raise InputError("invalid-partition", f"partition {mu} has more than {m} parts")
    if m < 2:
        raise InputError("invalid-rank", "need m >= 2 for a nontrivial weight lattice")
    padded = mu + (0,) * (m - len(mu))
    return tuple(padded[k] - padded[k + 1] for k in range(m - 1))


def _content_to_weight(e: tuple[int, ...]) -> Weight:
    return tuple(e[k] - e[k + 1] for k in range(len(e) - 1))


def weights_of_schur(mu: Iterable[int], m: int) -> list[Weight]:
    """Torus weights of the Schur module: one per tableau, fixed order.

    The content totals are balanced across the variables, so the weights
    always sum to zero; this is asserted.
    """
    mu = validate_partition(mu)
    if m < 2:
        raise InputError("invalid-rank", "need m >= 2 for a nontrivial weight lattice")
    contents = ssyt_contents(mu, m)
    totals = [0] * m
    for e in contents:
        for i, x in enumerate(e):
            totals[i] += x
    if any(t != totals[0] for t in totals):
        raise ArithmeticError("tableau contents are not balanced")
    return [_content_to_weight(e) for e in contents]


def alpha(p: CharPoly) -> YPoly:
    """Substitute wk -> y1*...*yk (rho -> y2*y3^2*...*ym^(m-1)), reduced."""
    m = p.rank + 1
    terms = []
    for w, c in p.terms.items():
        suffix = 0
        e = [0] * m
        for k in range(p.rank - 1, -1, -1):
            suffix += w[k]
            e[k] = suffix
        terms.append((tuple(e), c))
    return YPoly(m, terms)


def alpha_inverse(q: YPoly) -> CharPoly:
    """Inverse substitution: exponent differences give the lattice point."""
    if q.nvars < 2:
        raise InputError("invalid-rank", "need at least two variables to invert")
    return CharPoly(q.nvars - 1, ((_content_to_weight(e), c) for e, c in q.terms.items()))
