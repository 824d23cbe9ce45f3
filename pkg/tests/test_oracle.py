import pytest

from hookalex.braid import NotAKnotError, markov_variants, parse_braid
from hookalex.laurent import LaurentPoly
from hookalex.oracle import burau_alexander, burau_matrix, reduced_burau

from conftest import random_knot_braids


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), LaurentPoly.zero())
                       for j in range(n)) for i in range(n))


def _identity(n):
    return tuple(tuple(LaurentPoly.one() if i == j else LaurentPoly.zero()
                       for j in range(n)) for i in range(n))


# -- the representation itself ---------------------------------------------------

def test_generator_inverses_are_exact():
    for strands in (2, 3, 4, 5):
        for i in range(1, strands):
            prod = _matmul(reduced_burau(i, strands), reduced_burau(-i, strands))
            assert prod == _identity(strands - 1)


def test_braid_relation():
    for strands in (3, 4):
        for i in range(1, strands - 1):
            a, b = reduced_burau(i, strands), reduced_burau(i + 1, strands)
            assert _matmul(_matmul(a, b), a) == _matmul(_matmul(b, a), b)


def test_far_generators_commute():
    a, b = reduced_burau(1, 4), reduced_burau(3, 4)
    assert _matmul(a, b) == _matmul(b, a)


def test_word_matrix_composes():
    b = parse_braid("1 -2 1", 3)
    expected = _matmul(_matmul(reduced_burau(1, 3), reduced_burau(-2, 3)),
                       reduced_burau(1, 3))
    assert burau_matrix(b) == expected


# -- Alexander values -----------------------------------------------------------------

def test_unknot():
    assert burau_alexander(parse_braid("1", 2)) == LaurentPoly.one()


def test_trefoil():
    assert burau_alexander(parse_braid("1 1 1", 2)) == LaurentPoly(-2, (1, 0, -1, 0, 1))


def test_figure8():
    expected = LaurentPoly(-2, (-1, 0, 3, 0, -1))
    assert burau_alexander(parse_braid("1 -2 1 -2", 3)) == expected


def test_rejects_links():
    with pytest.raises(NotAKnotError):
        burau_alexander(parse_braid("1", 3))


def test_markov_invariance():
    for b in random_knot_braids(6, max_length=8, seed=77):
        reference = burau_alexander(b)
        mv = markov_variants(b, count=3, seed=3)
        for variant in mv.conjugates + (mv.stabilized_pos, mv.stabilized_neg):
            assert burau_alexander(variant) == reference
