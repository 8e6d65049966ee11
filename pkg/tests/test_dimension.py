from fractions import Fraction

import pytest

from trischur.character import Variant, character_sum, specialize_q
from trischur.diagram import Diagram3
from trischur.dimension import DegenerateSSError, dim_contribution, dimension, dimension_terms
from trischur.oracle import iter_partitions3, weyl_dimension
from trischur.tabloid import classify, d_matrix, enumerate_tabloids, singular_tabloid

ZERO = Diagram3.zero()


def test_singular_simplified_r():
    (c,) = dim_contribution(singular_tabloid(1, 2, 3, 3), ZERO)
    assert c.r == (-1,) * 6


def test_ss_degenerate():
    with pytest.raises(DegenerateSSError, match="degenerate SS"):
        dim_contribution(singular_tabloid(1, 2, 3, 3), ZERO, Variant.SS)
    with pytest.raises(DegenerateSSError):
        dimension(ZERO, 3, Variant.SS)


def test_ss_pair_entries():
    first, second = dim_contribution(singular_tabloid(1, 3, 4, 4), ZERO, Variant.SS)
    assert 1 in first.r and -1 in second.r


def test_fm_has_no_dimension_form():
    with pytest.raises(ValueError):
        dim_contribution(singular_tabloid(1, 2, 3, 3), ZERO, Variant.FM)


@pytest.mark.parametrize("d", [ZERO, Diagram3((1, 1, 0, 1, 0, 2, 1)), Diagram3((0, 0, 3, 0, 1, 1, 0))])
@pytest.mark.parametrize("n", [4, 5])
def test_ss_equals_simplified_where_defined(d, n):
    for tau in enumerate_tabloids(n):
        cls = classify(tau)
        if cls.singular and 2 * cls.ijk[1] != cls.ijk[0] + cls.ijk[2]:
            ss = sum(c.value for c in dim_contribution(tau, d, Variant.SS))
            (simple,) = dim_contribution(tau, d)
            assert ss == simple.value


def test_examples():
    for n in (3, 4, 5):
        assert dimension(ZERO, n) == 1
    assert dimension(Diagram3((0,) * 6 + (1,)), 3) == 1
    assert dimension(Diagram3((1,) + (0,) * 6), 4) == 4


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_weyl_small_partitions(n):
    for lam in iter_partitions3(2):
        assert dimension(Diagram3.from_partition(lam), n) == weyl_dimension(lam, n)


def test_smooth_r_sums():
    for tau in enumerate_tabloids(4):
        if not classify(tau).singular:
            (c,) = dim_contribution(tau, ZERO)
            dm = d_matrix(tau)
            assert sum(c.r) == sum(dm[i][j] * (i - j) for i in range(4) for j in range(4))
            assert len(c.r) == 9


def test_terms_are_exact_rationals():
    terms = dimension_terms(Diagram3((1,) * 7), 3)
    assert len(terms) == 66
    assert all(isinstance(t.value, Fraction) for t in terms)
    assert sum(t.value for t in terms) == dimension(Diagram3((1,) * 7), 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_full_triangle_matches_q_specialization(n):
    d = Diagram3((1,) * 7)
    assert specialize_q(character_sum(d, n)).evaluate([1]) == dimension(d, n)
