import pytest

from zerodecomp.errors import NotZeroDimensionalError, UsageError
from zerodecomp.mzdecomp import TRIANGULAR, UNRESOLVED, Component, Strategy, zero_decomp_multi
from zerodecomp.solve import component_zeros, degree_count, rational_zeros, system_zeros

from strategies import R3

x, y, z = R3.gens()


def points(scan):
    return [z.point for z in scan.zeros]


def test_double_root_branch():
    comp = Component(((x - 1) ** 2, x**2 + 2 * y - 1, x**2 - 1 + 2 * z), x**4, TRIANGULAR)
    scan = rational_zeros(comp)
    assert points(scan) == [(1, 0, 0)]
    assert scan.complete
    assert degree_count(comp) == 2


def test_branch_through_the_origin():
    comp = Component((x**2, y - x - y**2, 1 - z - y), R3.one(), TRIANGULAR)
    scan = rational_zeros(comp)
    assert points(scan) == [(0, 0, 1), (0, 1, 0)]
    assert scan.complete
    assert degree_count(comp) == 4


def test_irrational_branch():
    comp = Component((x**2 + 2 * x - 1, x**2 + 2 * y - 1, x**2 - 1 + 2 * z), x**4, TRIANGULAR)
    scan = rational_zeros(comp)
    assert scan.zeros == []
    assert not scan.complete
    assert degree_count(comp) == 2


def test_saturation_filters_points():
    comp = Component((x**2 - x, y - 1, z), x, TRIANGULAR)
    assert points(rational_zeros(comp)) == [(1, 1, 0)]
    assert degree_count(comp) == 1


def test_vanishing_level_inside_saturation_is_pruned():
    comp = Component((x**2 - x, x * y - 1, z), x, TRIANGULAR)
    assert points(rational_zeros(comp)) == [(1, 1, 0)]


def test_vanishing_level_outside_saturation_is_an_error():
    comp = Component((x**2 - x, x * y, z), R3.one(), TRIANGULAR)
    with pytest.raises(NotZeroDimensionalError):
        rational_zeros(comp)


def test_short_chain_is_rejected():
    comp = Component((x, y), R3.one(), TRIANGULAR)
    with pytest.raises(NotZeroDimensionalError):
        rational_zeros(comp)
    assert degree_count(comp) is None


def test_unresolved_component_needs_system_solver():
    comp = Component((x, y, z), R3.one(), UNRESOLVED)
    with pytest.raises(UsageError):
        rational_zeros(comp)
    assert points(component_zeros(comp)) == [(0, 0, 0)]
    assert degree_count(comp) is None


def test_degree_count_needs_univariate_guards():
    comp = Component((x**2 - 2, y**2 - x, x * y * z - 1), R3.one(), TRIANGULAR)
    assert degree_count(comp) is None


def test_system_zeros_example2(ex2):
    scan = system_zeros(ex2.polys)
    assert points(scan) == [(-1, -1, 1), (-1, 1, -1), (0, 0, 0), (1, -1, -1), (1, 1, 1)]
    assert not scan.complete  # x^2 + 1 branches are not rational


def test_system_zeros_with_saturation(ex1):
    assert points(system_zeros(ex1.polys, x)) == [(1, 0, 0)]


def test_every_listed_zero_satisfies_its_component(ex2):
    res = zero_decomp_multi(ex2.polys, strategy=Strategy(factor_initials=True))
    for comp in res.components:
        for zero in component_zeros(comp).zeros:
            assert all(f.evaluate(zero.point) == 0 for f in comp.polys)
            assert comp.saturation.evaluate(zero.point) != 0
