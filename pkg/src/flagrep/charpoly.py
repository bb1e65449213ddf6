"""Sparse exact polynomials on a weight lattice, with an inverse relation.

Internally a polynomial is a finite map from lattice points (Laurent
exponent vectors on the fundamental weights w1..wm) to integer
coefficients.  The relation

    w1 * w2 * ... * wm * rho = 1

is applied only at the text boundary: every lattice point has a unique
reduced monomial rendering in w1..wm, rho with nonnegative exponents at
least one of which is zero.  Keeping the relation out of the internal
representation makes it a property of the rendering instead of a rewrite
rule that arithmetic would have to maintain.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple

from . import _kernels
from .cartan import Weight
from .errors import InputError

#: Parser guard; canonical data never gets near this.
MAX_EXPONENT = 10**6


class NormalMonomial(NamedTuple):
    """Reduced exponents: min(omega_exps + (rho_exp,)) == 0."""

    omega_exps: tuple[int, ...]
    rho_exp: int


def normalize(w: Weight) -> NormalMonomial:
    """Reduced monomial of a lattice point: rho absorbs negative exponents."""
    c = max(0, -min(w))
    return NormalMonomial(tuple(x + c for x in w), c)


def denormalize(nm: NormalMonomial) -> Weight:
    """Inverse of normalize; rejects non-reduced input."""
    exps, c = nm
    if c < 0 or any(x < 0 for x in exps) or min(min(exps), c) != 0:
        raise InputError("not-reduced", f"monomial {nm} is not reduced")
    return tuple(x - c for x in exps)


class CharPoly:
    """Finitely supported integer-valued function on a rank-m weight lattice.

    Values are immutable after construction; arithmetic returns new objects.
    A polynomial is "effective" when every coefficient is positive, which is
    the shape characters take; intermediate arithmetic may go negative.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        if rank < 1:
            raise InputError("invalid-rank", "rank must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Weight, int] = {}
        for w, c in items:
            w = tuple(w)
            if len(w) != rank:
                raise InputError(
                    "rank-mismatch", f"term {w} does not have rank {rank}"
                )
            if not all(type(x) is int for x in w) or type(c) is not int:
                raise InputError("invalid-term", "exponents and coefficients must be integers")
            c = clean.get(w, 0) + c
            if c:
                clean[w] = c
            elif w in clean:
                del clean[w]
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CharPoly is immutable")

    @classmethod
    def zero(cls, rank: int) -> "CharPoly":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "CharPoly":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, w: Weight, coeff: int = 1) -> "CharPoly":
        return cls(len(w), {tuple(w): coeff})

    @classmethod
    def from_weights(cls, rank: int, weights: Iterable[Weight]) -> "CharPoly":
        """Sum of monomials, one per listed weight, repeats accumulating."""
        return cls(rank, ((tuple(w), 1) for w in weights))

    def coefficient(self, w: Weight) -> int:
        return self.terms.get(tuple(w), 0)

    def support(self) -> Iterator[Weight]:
        return iter(self.terms)

    def evaluate_at_one(self) -> int:
        """Value at the identity: every monomial is 1 there."""
        return sum(self.terms.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def _check_rank(self, other: "CharPoly") -> None:
        if self.rank != other.rank:
            raise InputError(
                "rank-mismatch", f"ranks {self.rank} and {other.rank} differ"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "CharPoly") -> "CharPoly":
        if not isinstance(other, CharPoly):
            return NotImplemented
        self._check_rank(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = out.get(w, 0) + c
            if c:
                out[w] = c
            elif w in out:
                del out[w]
        return CharPoly(self.rank, out)

    def __neg__(self) -> "CharPoly":
        return CharPoly(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "CharPoly":
        if isinstance(other, int):
            if other == 0:
                return CharPoly.zero(self.rank)
            return CharPoly(self.rank, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, CharPoly):
            return NotImplemented
        self._check_rank(other)
        return CharPoly(self.rank, _kernels.poly_mul(self.terms, other.terms))

    def __rmul__(self, other) -> "CharPoly":
        return self.__mul__(other)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"CharPoly({self.rank}, {render(self)!r})"


def _monomial_text(exps: Iterable[int], names: list[str]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _render_terms(ordered: list[tuple[int, str]]) -> str:
    """Join (coefficient, monomial-text) pairs per the polynomial grammar."""
    pieces = []
    for i, (c, mono) in enumerate(ordered):
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def render(p: CharPoly) -> str:
    """Canonical text form: reduced monomials, highest lattice point first."""
    if not p.terms:
        return "0"
    names = [f"w{i + 1}" for i in range(p.rank)]
    ordered = []
    for w in sorted(p.terms, reverse=True):
        exps, c = normalize(w)
        ordered.append((p.terms[w], _monomial_text(list(exps) + [c], names + ["rho"])))
    return _render_terms(ordered)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z]+\d*)|(\^)|(\*)|(\+)|(-))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            tail = text[pos:].strip()
            if not tail:
                break
            raise InputError("parse-error", f"unexpected input at {tail[:12]!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the shared polynomial grammar."""

    def __init__(self, text: str, var_prefix: str, nvars: int, rho_name: str | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.var_prefix = var_prefix
        self.nvars = nvars
        self.rho_name = rho_name

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def parse_exponent(self) -> int:
        tok = self.take()
        if tok is None or not tok.isdigit():
            raise InputError("parse-error", "expected an exponent after '^'")
        e = int(tok)
        if e > MAX_EXPONENT:
            raise InputError("exponent-overflow", f"exponent {e} exceeds {MAX_EXPONENT}")
        return e

    def var_index(self, tok: str | None) -> int:
        """0..nvars-1 for variables, nvars for the relation variable."""
        if tok is None:
            raise InputError("parse-error", "unexpected end of input")
        if self.rho_name is not None and tok == self.rho_name:
            return self.nvars
        if tok.startswith(self.var_prefix) and tok[len(self.var_prefix):].isdigit():
            i = int(tok[len(self.var_prefix):])
            if not 1 <= i <= self.nvars:
                raise InputError(
                    "rank-mismatch", f"variable {tok!r} out of range for rank {self.nvars}"
                )
            return i - 1
        raise InputError("parse-error", f"unknown symbol {tok!r}")

    def parse_factor(self, exps: list[int]) -> None:
        idx = self.var_index(self.take())
        e = 1
        if self.peek() == "^":
            self.take()
            e = self.parse_exponent()
        exps[idx] += e
        if exps[idx] > MAX_EXPONENT:
            raise InputError("exponent-overflow", "accumulated exponent too large")

    def parse_term(self) -> tuple[list[int], int]:
        coeff = 1
        exps = [0] * (self.nvars + 1)
        tok = self.peek()
        if tok is None:
            raise InputError("parse-error", "expected a term")
        if tok.isdigit():
            coeff = int(self.take())
            if self.peek() == "*":
                self.take()
                self.parse_factor(exps)
            else:
                return exps, coeff
        else:
            self.parse_factor(exps)
        while self.peek() == "*":
            self.take()
            self.parse_factor(exps)
        return exps, coeff

    def parse(self) -> list[tuple[list[int], int]]:
        if not self.tokens:
            raise InputError("parse-error", "empty polynomial text")
        out = []
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        exps, c = self.parse_term()
        out.append((exps, sign * c))
        while self.peek() is not None:
            op = self.take()
            if op not in ("+", "-"):
                raise InputError("parse-error", f"expected '+' or '-', got {op!r}")
            exps, c = self.parse_term()
            out.append((exps, c if op == "+" else -c))
        return out


def parse(text: str, rank: int) -> CharPoly:
    """Parse the polynomial grammar over w1..w<rank> and rho."""
    raw = _Parser(text, "w", rank, "rho").parse()
    terms = []
    for exps, c in raw:
        rho = exps[rank]
        terms.append((tuple(x - rho for x in exps[:rank]), c))
    return CharPoly(rank, terms)
