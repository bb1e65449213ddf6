"""Realizability of degree-2 cohomology homomorphisms between flag manifolds.

A candidate map on second cohomology is an integer matrix: row k gives the
image of the k-th standard generator of the target in fundamental-weight
coordinates, for k = 1..n-1; the n-th generator's image is forced by the
relation that the generators sum to zero.  The s-invariant turns the matrix
into a sum of n lattice monomials, and the candidate is certified exactly
when that polynomial is the character of an n-dimensional representation:
the certificate names a representation whose flag descent induces the given
homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cartan import CartanData, Weight
from .characters import (
    Certificate,
    DecomposeResult,
    NotInOmega,
    is_in_omega_n,
    weight_multiplicities,
)
from .charpoly import CharPoly
from .errors import InputError
from .schur import (
    YPoly,
    alpha,
    schur,
    schur_dim,
    validate_partition,
    weights_of_schur,
)

#: Certification can fail while a map still exists; the criterion is
#: sufficient, not necessary, and the result vocabulary keeps that visible.
NotCertified = NotInOmega


@dataclass(frozen=True)
class CohomHom:
    """Integer matrix of a candidate homomorphism on second cohomology.

    ``rows`` are the images of the first n-1 generators; ``derived_row`` is
    always recomputed, never stored, because the generators sum to zero.
    """

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n != len(self.rows) + 1:
            raise InputError("invalid-hom", "n must equal number of rows + 1")
        if self.n < 2:
            raise InputError("invalid-hom", "target flag size n must be at least 2")
        if self.m < 1:
            raise InputError("invalid-hom", "rank m must be positive")
        for row in self.rows:
            if len(row) != self.m or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in row
            ):
                raise InputError("invalid-hom", f"row {row} is not an integer m-vector")

    @property
    def derived_row(self) -> Weight:
        return tuple(-sum(col) for col in zip(*self.rows)) if self.rows else ()

    def to_json_dict(self, group: str | None = None) -> dict:
        out: dict = {}
        if group:
            out["group"] = group
        out["n"] = self.n
        out["rows"] = [list(r) for r in self.rows]
        return out


def cohom_from_rows(rows: Sequence[Sequence[int]]) -> CohomHom:
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        raise InputError("invalid-hom", "need at least one row")
    return CohomHom(n=len(rows) + 1, m=len(rows[0]), rows=rows)


def cohom_from_json(data: dict) -> tuple[CohomHom, str | None]:
    """Build from ``{"group": ..., "n": ..., "rows": [[...], ...]}``."""
    if not isinstance(data, dict) or "rows" not in data:
        raise InputError("invalid-hom", "expected an object with a 'rows' matrix")
    rows = data["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InputError("invalid-hom", "'rows' must be a nonempty list of rows")
    hom = cohom_from_rows(rows)
    if "n" in data and data["n"] != hom.n:
        raise InputError(
            "invalid-hom", f"stated n={data['n']} but rows imply n={hom.n}"
        )
    group = data.get("group")
    if group is not None and not isinstance(group, str):
        raise InputError("invalid-hom", "'group' must be a string tag")
    return hom, group


@dataclass(frozen=True)
class TorusRestriction:
    """Weights of a torus-preserving homomorphism into a unitary group.

    The list is the multiset of characters through which the maximal torus
    acts; semisimplicity forces them to sum to zero, which is validated.
    """

    weights: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise InputError("invalid-weights", "need at least two weights")
        m = len(self.weights[0])
        for w in self.weights:
            if len(w) != m or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in w
            ):
                raise InputError("invalid-weights", f"weight {w} is not an integer vector")
        if any(sum(col) != 0 for col in zip(*self.weights)):
            raise InputError("weights-not-balanced", "weights must sum to zero")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.weights[0])


def s_map(h: CohomHom) -> CharPoly:
    """Sum of the n row monomials (the derived row included)."""
    return CharPoly.from_weights(h.m, list(h.rows) + [h.derived_row])


def check_realizable(cd: CartanData, h: CohomHom, max_terms: int | None = None) -> DecomposeResult:
    """Certificate that some map induces ``h``, or NotCertified.

    A certificate is constructive: the certified representation's flag
    descent realizes ``h``.  NotCertified only means this criterion failed.
    """
    if h.m != cd.rank:
        raise InputError("rank-mismatch", f"hom rank {h.m} for group rank {cd.rank}")
    if max_terms is None:
        return is_in_omega_n(cd, s_map(h), h.n)
    return is_in_omega_n(cd, s_map(h), h.n, max_terms)


def induced_hom(tr: TorusRestriction) -> CohomHom:
    """Read the cohomology matrix off the first n-1 torus weights."""
    hom = CohomHom(n=tr.n, m=tr.m, rows=tr.weights[:-1])
    assert hom.derived_row == tr.weights[-1]  # forced by the zero-sum invariant
    return hom


class FactorizationCheck(NamedTuple):
    equal: bool
    character: CharPoly
    via_cohomology: CharPoly


def verify_factorization(cd: CartanData, tr: TorusRestriction) -> FactorizationCheck:
    """Compare the direct character with the s-invariant of the induced map.

    The two sides go through independent code paths and must always agree
    for valid input; a False verdict indicates an implementation bug, which
    is exactly what this check exists to catch.
    """
    if tr.m != cd.rank:
        raise InputError("rank-mismatch", f"weights rank {tr.m} for group rank {cd.rank}")
    character = CharPoly.from_weights(tr.m, tr.weights)
    via = s_map(induced_hom(tr))
    return FactorizationCheck(character == via, character, via)


def torus_restriction_from_certificate(cd: CartanData, cert: Certificate) -> TorusRestriction:
    """Expand a certificate into its full torus weight list, highest first."""
    weights: list[Weight] = []
    for lam, mult in cert.summands:
        char = weight_multiplicities(cd, lam)
        for w, c in char.terms.items():
            weights.extend([w] * (c * mult))
    weights.sort(reverse=True)
    return TorusRestriction(tuple(weights))


class SchurRealization(NamedTuple):
    n: int
    hom: CohomHom
    symmetric_function: YPoly


def realize_schur(mu: Sequence[int], m: int) -> SchurRealization:
    """Flag-to-flag map data whose s-invariant realizes a Schur polynomial.

    For a partition with fewer than m parts, the tableau weights assemble a
    torus restriction;  its induced matrix h satisfies
    alpha(s_map(h)) == schur(mu, m) with target size n = schur_dim(mu, m).
    """
    mu = validate_partition(mu)
    if m < 2:
        raise InputError("invalid-rank", "need m >= 2")
    if len(mu) > m:
        raise InputError("invalid-partition", f"partition {mu} has more than {m} parts")
    if len(mu) == m and mu[m - 1] != 0:
        raise InputError(
            "invalid-partition", "last part must be zero (basis Schur polynomials)"
        )
    if sum(mu) == 0:
        raise InputError(
            "invalid-partition", "empty partition targets a one-point flag manifold"
        )
    weights = weights_of_schur(mu, m)
    n = schur_dim(mu, m)
    assert n == len(weights)
    hom = induced_hom(TorusRestriction(tuple(weights)))
    image = alpha(s_map(hom))
    expected = schur(mu, m)
    assert image == expected  # the workflow's defining identity
    return SchurRealization(n, hom, image)
