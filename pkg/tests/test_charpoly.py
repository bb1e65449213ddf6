import pytest
from hypothesis import given, strategies as st

from flagrep import InputError
from flagrep.charpoly import CharPoly, NormalMonomial, denormalize, normalize, parse, render

import oracles


def weights(rank, lo=-20, hi=20):
    return st.tuples(*[st.integers(min_value=lo, max_value=hi)] * rank)


def polys(rank):
    return st.dictionaries(
        weights(rank),
        st.integers(min_value=-10**4, max_value=10**4).filter(bool),
        max_size=6,
    ).map(lambda d: CharPoly(rank, d))


# --- normal form -----------------------------------------------------------

def test_normalize_examples():
    assert normalize((-1, 1)) == NormalMonomial((0, 2), 1)
    assert normalize((-1,)) == NormalMonomial((0,), 1)
    assert normalize((0, 0)) == NormalMonomial((0, 0), 0)


def test_denormalize_examples():
    assert denormalize(NormalMonomial((0, 2), 1)) == (-1, 1)
    assert denormalize(NormalMonomial((3,), 0)) == (3,)
    with pytest.raises(InputError):
        denormalize(NormalMonomial((1, 1), 1))


@given(weights(3))
def test_normalize_round_trip(w):
    nm = normalize(w)
    assert min(min(nm.omega_exps), nm.rho_exp) == 0
    assert denormalize(nm) == w


@given(st.tuples(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20)))
def test_normalize_is_onto_reduced_monomials(exps):
    low = min(exps)
    reduced = NormalMonomial(tuple(x - low for x in exps[:2]), exps[2] - low)
    assert normalize(denormalize(reduced)) == reduced


# --- arithmetic ------------------------------------------------------------

def test_square_of_rank_one_sum():
    # oracle: (z + 1/z)^2 = z^2 + 2 + z^-2 by direct Laurent expansion
    p = CharPoly(1, {(1,): 1, (-1,): 1})
    expected = oracles.laurent_mul(p.terms, p.terms)
    assert (p * p).terms == expected
    assert render(p * p) == "w1^2 + 2 + rho^2"


def test_multiplicative_identity():
    p = CharPoly(2, {(1, -2): 3, (0, 4): -1})
    assert p * CharPoly.one(2) == p
    assert p + CharPoly.zero(2) == p


def test_rank_mismatch_rejected():
    with pytest.raises(InputError):
        CharPoly(1, {(1,): 1}) * CharPoly(2, {(1, 0): 1})
    with pytest.raises(InputError):
        CharPoly(1, {(1,): 1}) + CharPoly(2, {(1, 0): 1})


def test_evaluate_at_one():
    assert CharPoly(1, {(1,): 1, (-1,): 1}).evaluate_at_one() == 2
    assert CharPoly.zero(3).evaluate_at_one() == 0
    assert CharPoly(2, {(1, 0): 1, (0, -1): 1, (-1, 1): 1}).evaluate_at_one() == 3


@given(polys(2), polys(2), polys(2))
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys(2), polys(2))
def test_evaluate_at_one_is_a_homomorphism(p, q):
    assert (p + q).evaluate_at_one() == p.evaluate_at_one() + q.evaluate_at_one()
    assert (p * q).evaluate_at_one() == p.evaluate_at_one() * q.evaluate_at_one()


def test_effectiveness_predicate():
    assert CharPoly(1, {(1,): 2}).is_effective()
    assert not CharPoly(1, {(1,): -1}).is_effective()
    assert CharPoly.zero(1).is_effective()


def test_immutability():
    p = CharPoly.one(1)
    with pytest.raises(AttributeError):
        p.rank = 2


# --- text form -------------------------------------------------------------

def test_render_examples():
    assert render(CharPoly(1, {(1,): 1, (-1,): 1})) == "w1 + rho"
    assert render(CharPoly.zero(2)) == "0"
    assert render(CharPoly(2, {(1, 0): 1, (0, -1): 1, (-1, 1): 1})) == "w1 + w1*rho + w2^2*rho"


def test_render_signed_coefficients():
    p = CharPoly(1, {(2,): 1, (0,): -3, (-1,): -1})
    assert render(p) == "w1^2 - 3 - rho"
    assert parse(render(p), 1) == p
    assert render(CharPoly(1, {(0,): -2})) == "-2"


def test_parse_examples():
    p = CharPoly(1, {(1,): 1, (-1,): 1})
    assert parse("w1 + rho", 1) == p
    assert parse("w1^2 + 2 + rho^2", 1) == p * p
    assert parse("0", 1) == CharPoly.zero(1)


def test_parse_accepts_unreduced_monomials():
    # w1*w2*rho = 1 must hold after conversion to the lattice
    assert parse("w1*w2*rho", 2) == CharPoly.one(2)
    assert parse("3*w1^2*rho^2", 2) == CharPoly(2, {(0, -2): 3})


@pytest.mark.parametrize(
    "bad",
    ["w1 + + rho", "", "w3 + 1", "w0", "2**w1", "w1 ^", "foo", "w1^-2", "1 +", "* w1"],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(InputError):
        parse(bad, 2)


def test_parse_exponent_overflow():
    with pytest.raises(InputError):
        parse("w1^10000001", 1)


@given(polys(1))
def test_parse_render_round_trip_rank1(p):
    assert parse(render(p), 1) == p


@given(polys(3))
def test_parse_render_round_trip_rank3(p):
    assert parse(render(p), 3) == p


def test_render_orders_terms_by_descending_lattice_point():
    p = CharPoly(2, {(0, 0): 1, (1, -3): 2, (-1, 5): 1, (1, 2): 1})
    assert render(p) == "w1*w2^2 + 2*w1^4*rho^3 + 1 + w2^6*rho"
