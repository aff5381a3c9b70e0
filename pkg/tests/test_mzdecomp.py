import pytest

from zerodecomp.errors import NotZeroDimensionalError, UsageError
from zerodecomp.mzdecomp import (TRIANGULAR, UNRESOLVED, BoundState, Component, Strategy,
                                 bezout_bound, factor_initials_strategy, prop3_fallback,
                                 split_triangular_component, update_bound, zero_decomp_multi)
from zerodecomp.polyring import prem_seq
from zerodecomp.wucharset import chain_rank, wu_charset

from strategies import R3

x, y, z = R3.gens()


def same_chain(chain, expected):
    return len(chain) == len(expected) and all(
        c.is_scalar_multiple(e) for c, e in zip(chain, expected))


def find(components, expected):
    hits = [c for c in components if same_chain(c.polys, expected)]
    assert len(hits) == 1, [list(map(str, c.polys)) for c in components]
    return hits[0]


def test_bezout_bound(ex1, ex2):
    assert bezout_bound(ex1.polys) == 8
    assert bezout_bound(ex2.polys) == 27
    assert bezout_bound([x - 1]) == 1


def test_bound_state_validation():
    with pytest.raises(UsageError):
        BoundState(0)
    with pytest.raises(UsageError):
        BoundState(3, "sometimes")


def test_example1_base_decomposition(ex1):
    res = zero_decomp_multi(ex1.polys)
    assert res.is_triangular
    assert len(res.set2) == 2
    C = wu_charset(ex1.polys).charset
    main = find(res.set2, C)
    assert main.saturation.is_scalar_multiple(x**4)
    other = find(res.set2, [x**2, y - x - y**2, 1 - z - y])
    assert other.saturation.is_constant()


def test_example1_split_components(ex1):
    res = zero_decomp_multi(ex1.polys, strategy=Strategy(split_components=True))
    assert not res.set3
    assert len(res.set2) == 3
    find(res.set2, [x**2 + 2 * x - 1, x**2 + 2 * y - 1, x**2 - 1 + 2 * z])
    find(res.set2, [(x - 1) ** 2, x**2 + 2 * y - 1, x**2 - 1 + 2 * z])
    find(res.set2, [x**2, y - x - y**2, 1 - z - y])


def test_example2_base_is_one_unresolved_component(ex2):
    res = zero_decomp_multi(ex2.polys)
    assert res.set2 == []
    assert len(res.set3) == 1
    assert res.set3[0].kind == UNRESOLVED
    assert any("withdrawn as empty" in note for note in res.log)
    # the unresolved component still carries the original system
    assert {f.primitive() for f in ex2.polys} <= set(res.set3[0].polys)


def test_example2_factor_initials(ex2):
    res = zero_decomp_multi(ex2.polys, strategy=Strategy(factor_initials=True))
    assert len(res.set2) == 3
    assert all(c.kind == TRIANGULAR for c in res.set2)
    find(res.set2, [1 - x, -y**4 + 1, -y**3 + z])
    find(res.set2, [x + 1, y**4 - 1, -y**3 - z])
    find(res.set2, [1 + x**2, y**4 - 1, y**3 - x * z])
    assert len(res.set3) == 1
    origin = res.set3[0]
    assert origin.contains((0, 0, 0))


def test_example3_with_reductum_fallback(ex3):
    res = zero_decomp_multi(ex3.polys)
    assert res.is_triangular
    C = wu_charset(ex3.polys).charset
    main = find(res.set2, C)
    assert main.saturation.is_scalar_multiple(x - x**2)
    find(res.set2, [x**3, x**2 + y, (-1 + 22 * x - 232 * x**2) * z - 1 + 21 * x - 211 * x**2])


def test_example3_without_fallback(ex3):
    res = zero_decomp_multi(ex3.polys, strategy=Strategy(prop3=False))
    assert len(res.set3) == 1
    assert res.set3[0].kind == UNRESOLVED


def test_prop3_fallback_builds_reductum_task(ex3):
    out = wu_charset(ex3.polys)
    task = prop3_fallback(out.polys, out.charset, 3, 12, R3.one())
    assert task is not None
    r, _ = prem_seq((z + 1) ** 12, out.charset)
    assert r.primitive() in task.polys


def test_prop3_fallback_with_zero_reductum(ex2):
    out = wu_charset(ex2.polys)
    assert prop3_fallback(out.polys, out.charset, 2, 27, R3.one()) is None


def test_factor_initials_branches(ex2):
    C = wu_charset(ex2.polys).charset
    branches = factor_initials_strategy(C, 27, R3.one())
    assert [b.factor for b in branches] == [x, x - 1, x + 1, x**2 + 1]
    assert [b.saturation for b in branches] == [
        R3.one(), x, x**2 - x, x**3 - x]
    # x^27 reduces to x^7 by the first element; the branch carries it on
    assert branches[0].remainder.is_scalar_multiple(x**7)


def test_factor_initials_with_constant_initials():
    C = [x**2 - 1, y - x, z + y]
    assert factor_initials_strategy(C, 4, R3.one()) == []


def test_update_bound_subtracts_exact_counts():
    comp = Component((x**2, y**2 - y + x, z + y - 1), R3.one(), TRIANGULAR)
    assert update_bound(BoundState(8, "updating"), comp).m == 4
    assert update_bound(BoundState(5, "updating"), comp).m == 1
    assert update_bound(BoundState(8, "fixed"), comp).m == 8
    guarded = Component((x**2, x * y - 1, z), R3.one(), TRIANGULAR)
    assert update_bound(BoundState(8, "updating"), guarded).m == 8


def test_update_bound_run_matches_fixed_run(ex1):
    fixed = zero_decomp_multi(ex1.polys)
    updating = zero_decomp_multi(ex1.polys, strategy=Strategy(update_bound=True))
    assert [c.polys for c in fixed.set2] == [c.polys for c in updating.set2]


def test_split_leaves_linear_head_alone():
    comp = Component((x - 1, y**4 - 1, z - y**3), x, TRIANGULAR)
    assert split_triangular_component(comp) == [comp]


def test_workers_give_identical_output(ex2):
    strategy = Strategy(factor_initials=True)
    seq = zero_decomp_multi(ex2.polys, strategy=strategy)
    par = zero_decomp_multi(ex2.polys, strategy=strategy, workers=2)
    assert [(c.polys, c.saturation, c.path) for c in seq.components] == \
        [(c.polys, c.saturation, c.path) for c in par.components]


def test_rank_descends_along_branches(ex3):
    res = zero_decomp_multi(ex3.polys)
    assert res.rank_descent
    for parent, child in res.rank_descent:
        assert child < parent


def test_positive_dimensional_input_rejected():
    with pytest.raises(NotZeroDimensionalError):
        zero_decomp_multi([x * y - 1, z - x])


def test_empty_system_rejected():
    with pytest.raises(UsageError):
        zero_decomp_multi([R3.zero()])


def test_explicit_bound(ex1):
    res = zero_decomp_multi(ex1.polys, bound=3)
    assert res.bound_used == 3


def test_chain_rank_prefers_longer_prefix():
    assert chain_rank([x, y]) < chain_rank([x])
