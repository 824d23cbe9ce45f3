from fractions import Fraction

import pytest

from hookalex.laurent import RationalFunc, qnum
from hookalex.schur import (jacobi_trudi_schur, ratio_at_A1, ratio_closed_form,
                            topological_factors, topological_power_sums,
                            PowerSumSpec)
from hookalex.young import Hook, Partition, hooks_up_to_size, partitions_of

SAMPLE_POINTS = (
    (Fraction(2), Fraction(3, 2)),
    (Fraction(3, 2), Fraction(2)),
    (Fraction(5, 2), Fraction(3)),
    (Fraction(3), Fraction(4, 3)),
    (Fraction(7, 4), Fraction(5, 2)),
)


# -- factor lists ---------------------------------------------------------------

def test_single_box_factors():
    fl = topological_factors(Partition((1,)))
    assert fl.contents == (0,)
    assert fl.hook_lengths == (1,)


def test_two_box_row_factors():
    fl = topological_factors(Partition((2,)))
    assert sorted(fl.contents) == [0, 1]
    assert sorted(fl.hook_lengths) == [1, 2]


def test_hook_corner_factor_is_size():
    for h in hooks_up_to_size(5):
        fl = topological_factors(h.as_partition())
        assert fl.hook_lengths.count(h.size) == 1
        assert len(fl.contents) == len(fl.hook_lengths) == h.size


def test_vanishing_order_equals_diagonal_length():
    for n in range(1, 9):
        for nu in partitions_of(n):
            fl = topological_factors(nu)
            assert fl.zero_order_at_a1() == nu.diagonal_length


# -- the A -> 1 ratio -------------------------------------------------------------

def test_ratio_fundamental_against_column():
    assert ratio_at_A1(Hook(0, 0), Partition((1, 1))) == \
        -RationalFunc(qnum(1), qnum(2))


def test_ratio_row_hook_against_row():
    assert ratio_at_A1(Hook(1, 0), Partition((4,))) == RationalFunc(qnum(2), qnum(4))


def test_ratio_fat_hook_vanishes():
    assert ratio_at_A1(Hook(0, 0), Partition((2, 2))).is_zero()


def test_ratio_rejects_size_mismatch():
    with pytest.raises(ValueError):
        ratio_at_A1(Hook(1, 0), Partition((3,)))


def test_ratio_matches_closed_form():
    # every one-hook case with m * size <= 12
    for color in hooks_up_to_size(12):
        for total in range(color.size, 13, color.size):
            for mu in (h for h in hooks_up_to_size(total) if h.size == total):
                got = ratio_at_A1(color, mu.as_partition())
                assert got == ratio_closed_form(color, mu), (color, mu)


def test_fat_hooks_all_vanish():
    for n in range(2, 9):
        for mu in partitions_of(n):
            if mu.diagonal_length > 1:
                assert ratio_at_A1(Hook(0, 0), mu).is_zero()


# -- Jacobi-Trudi oracle -------------------------------------------------------------

def _generic_spec() -> PowerSumSpec:
    # arbitrary distinct rational-function values for p_1, p_2
    return PowerSumSpec((RationalFunc(qnum(2)), RationalFunc(qnum(3), qnum(2))))


def test_jacobi_trudi_single_box():
    spec = _generic_spec()
    assert jacobi_trudi_schur(Partition((1,)), spec) == spec.p(1)


def test_jacobi_trudi_two_boxes():
    spec = _generic_spec()
    p1, p2 = spec.p(1), spec.p(2)
    half = RationalFunc.from_int(1) / 2
    assert jacobi_trudi_schur(Partition((2,)), spec) == (p1 * p1 + p2) * half
    assert jacobi_trudi_schur(Partition((1, 1)), spec) == (p1 * p1 - p2) * half


def test_jacobi_trudi_matches_factor_products():
    for a, q in SAMPLE_POINTS[:2]:
        for n in range(1, 6):
            spec = topological_power_sums(a, n)
            for nu in partitions_of(n):
                oracle = jacobi_trudi_schur(nu, spec).evaluate(q)
                direct = topological_factors(nu).evaluate(a, q)
                assert oracle == direct, (a, q, nu)


def test_power_sum_spec_bounds():
    spec = topological_power_sums(Fraction(2), 3)
    with pytest.raises(ValueError):
        spec.p(4)
    with pytest.raises(ValueError):
        spec.p(0)
