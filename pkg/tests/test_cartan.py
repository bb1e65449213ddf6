from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from flagrep import (
    InputError,
    ResourceCapError,
    builtin_cartan,
    cartan_from_tag,
    custom_cartan,
    dominant_representative,
    inner,
    is_dominant,
    simple_reflection,
    weyl_orbit,
)
from flagrep.characters import dimension

import oracles


def test_a2_defining_data():
    cd = builtin_cartan("A", 2)
    assert cd.cartan_matrix == ((2, -1), (-1, 2))
    assert len(cd.positive_roots) == 3
    assert cd.weyl_vector == (1, 1)
    assert cd.label == "A2"


def test_a1_defining_data():
    cd = builtin_cartan("A", 1)
    assert cd.cartan_matrix == ((2,),)
    assert cd.positive_roots == ((2,),)
    assert cd.weyl_vector == (1,)


def test_d2_is_rejected():
    with pytest.raises(InputError):
        builtin_cartan("D", 2)


@pytest.mark.parametrize("series,rank", [("B", 1), ("C", 1), ("G", 3), ("X", 2)])
def test_invalid_series_rank_combinations(series, rank):
    with pytest.raises(InputError):
        builtin_cartan(series, rank)


def test_tag_parsing():
    assert cartan_from_tag("A3").label == "A3"
    assert cartan_from_tag("G2").label == "G2"
    with pytest.raises(InputError):
        cartan_from_tag("A")
    with pytest.raises(InputError):
        cartan_from_tag("2A")


def test_positive_root_counts():
    assert len(cartan_from_tag("A1").positive_roots) == 1
    assert len(cartan_from_tag("A2").positive_roots) == 3
    assert len(cartan_from_tag("A3").positive_roots) == 6
    assert len(cartan_from_tag("A4").positive_roots) == 10
    assert len(cartan_from_tag("B2").positive_roots) == 4
    assert len(cartan_from_tag("B3").positive_roots) == 9
    assert len(cartan_from_tag("C3").positive_roots) == 9
    assert len(cartan_from_tag("D4").positive_roots) == 12
    assert len(cartan_from_tag("G2").positive_roots) == 6


def test_simple_roots_are_cartan_rows():
    for tag in ("A2", "B2", "C3", "D4", "G2"):
        cd = cartan_from_tag(tag)
        for row in cd.cartan_matrix:
            assert row in cd.positive_roots


def test_inner_a1_fundamental_weight():
    # oracle: invert C = [[2]] directly, d = (1)
    cd = builtin_cartan("A", 1)
    gram = oracles.gram_from_cartan(oracles.inverse_1x1(2), cd.symmetrizer)
    assert inner(cd, (1,), (1,)) == Fraction(1, 2)
    assert inner(cd, (1,), (1,)) == oracles.form_value(gram, (1,), (1,))
    assert inner(cd, (2,), (2,)) == 2  # simple root squared length = 2 * d
    assert cd.symmetrizer == (1,)


def test_inner_a2_matches_explicit_inverse():
    cd = builtin_cartan("A", 2)
    gram = oracles.gram_from_cartan(oracles.inverse_2x2(cd.cartan_matrix), cd.symmetrizer)
    a1, a2 = cd.cartan_matrix
    assert inner(cd, a1, a2) == oracles.form_value(gram, a1, a2)
    assert inner(cd, a1, a2) < 0
    for alpha in cd.positive_roots:
        assert inner(cd, alpha, alpha) > 0


def test_inner_b2_respects_root_lengths():
    cd = builtin_cartan("B", 2)
    long_root, short_root = cd.cartan_matrix[0], cd.cartan_matrix[1]
    assert inner(cd, long_root, long_root) == 2 * inner(cd, short_root, short_root)


def test_inner_dimension_mismatch():
    cd = builtin_cartan("A", 2)
    with pytest.raises(InputError):
        inner(cd, (1,), (1, 0))


def test_is_dominant():
    assert is_dominant((1, 0))
    assert not is_dominant((-1, 2))
    assert is_dominant((0, 0))


def test_weyl_orbit_a1():
    cd = builtin_cartan("A", 1)
    assert weyl_orbit(cd, (1,)) == frozenset({(1,), (-1,)})


def test_weyl_orbit_a2_defining():
    # oracle: the three weights of the defining representation
    cd = builtin_cartan("A", 2)
    assert weyl_orbit(cd, (1, 0)) == frozenset({(1, 0), (-1, 1), (0, -1)})


def test_weyl_orbit_fixes_zero():
    for tag in ("A1", "A3", "B2", "G2"):
        cd = cartan_from_tag(tag)
        zero = (0,) * cd.rank
        assert weyl_orbit(cd, zero) == frozenset({zero})


@pytest.mark.parametrize(
    "tag,order",
    [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12), ("D4", 192)],
)
def test_orbit_of_weyl_vector_has_group_order(tag, order):
    cd = cartan_from_tag(tag)
    assert len(weyl_orbit(cd, cd.weyl_vector)) == order


def test_orbit_cap():
    cd = builtin_cartan("A", 3)
    with pytest.raises(ResourceCapError):
        weyl_orbit(cd, cd.weyl_vector, cap=5)


def test_orbits_have_unique_dominant_element():
    cd = builtin_cartan("B", 2)
    for w in [(1, 0), (2, 1), (0, 3), (1, 1)]:
        orbit = weyl_orbit(cd, w)
        dominants = [v for v in orbit if is_dominant(v)]
        assert dominants == [w]
        for v in orbit:
            assert dominant_representative(cd, v) == w


def test_weyl_vector_strictly_dominant():
    for tag in ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"):
        cd = cartan_from_tag(tag)
        for alpha in cd.positive_roots:
            assert inner(cd, cd.weyl_vector, alpha) > 0


@given(
    data=st.data(),
    tag=st.sampled_from(["A1", "A2", "A3", "B2", "G2"]),
)
def test_simple_reflection_is_an_involution(data, tag):
    cd = cartan_from_tag(tag)
    w = tuple(
        data.draw(st.integers(min_value=-10, max_value=10)) for _ in range(cd.rank)
    )
    for i in range(cd.rank):
        assert simple_reflection(cd, i, simple_reflection(cd, i, w)) == w


def test_reflections_preserve_inner_product():
    cd = builtin_cartan("G", 2)
    u, v = (2, -1), (1, 3)
    for i in range(cd.rank):
        assert inner(cd, simple_reflection(cd, i, u), simple_reflection(cd, i, v)) == inner(cd, u, v)


def test_custom_cartan_product_of_rank_one():
    cd = custom_cartan([[2, 0], [0, 2]], label="A1xA1")
    assert len(cd.positive_roots) == 2
    assert len(weyl_orbit(cd, (1, 1))) == 4
    assert dimension(cd, (1, 1)) == 4


def test_custom_cartan_matches_builtin():
    assert custom_cartan([[2, -1], [-1, 2]]).positive_roots == builtin_cartan("A", 2).positive_roots


@pytest.mark.parametrize(
    "matrix",
    [
        [[2, -1]],  # not square
        [[1, 0], [0, 2]],  # bad diagonal
        [[2, 1], [1, 2]],  # positive off-diagonal
        [[2, -1], [0, 2]],  # asymmetric zero pattern
        [[2, -2], [-2, 2]],  # affine, not finite type
        [[2, -4], [-1, 2]],  # indefinite
    ],
)
def test_custom_cartan_rejects_invalid(matrix):
    with pytest.raises(InputError):
        custom_cartan(matrix)


def test_positive_roots_lie_in_the_positive_root_lattice():
    for tag in ("A3", "B3", "C3", "D4", "G2"):
        cd = cartan_from_tag(tag)
        inv = cd.inverse_cartan
        for root in cd.positive_roots:
            coords = [
                sum(root[i] * inv[i][j] for i in range(cd.rank))
                for j in range(cd.rank)
            ]
            assert all(c.denominator == 1 and c >= 0 for c in coords)
            assert dominant_representative(cd, root) in cd.positive_roots


def test_symmetrized_product_is_symmetric():
    for tag in ("B2", "B3", "C3", "G2"):
        cd = cartan_from_tag(tag)
        c, d = cd.cartan_matrix, cd.symmetrizer
        for i in range(cd.rank):
            for j in range(cd.rank):
                assert c[i][j] * d[j] == c[j][i] * d[i]
        assert all(x > 0 for x in d)


def test_custom_cartan_rejects_non_matrix_input():
    with pytest.raises(InputError):
        custom_cartan([[2, -1], 5])
    with pytest.raises(InputError):
        custom_cartan([[2, True], [-1, 2]])
