"""Decomposition of random zero-dimensional systems with known zeros.

Each system is ``{f1, f2[, f3]}`` with ``f1`` a product of powers of
``x - a``, ``f2`` a product of powers of lines ``y - b - c*x`` (and ``f3``
of planes ``z - ...``), hidden behind a unimodular change of generators.
Every zero is rational and its multiplicity is known in closed form.
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from zerodecomp.certify import certify
from zerodecomp.mzdecomp import Strategy, zero_decomp_multi
from zerodecomp.polyring import VarOrder

R2 = VarOrder(["x", "y"])
R3 = VarOrder(["x", "y", "z"])


@st.composite
def known_systems(draw):
    three = draw(st.booleans())
    R = R3 if three else R2
    gens = R.gens()
    x, y = gens[0], gens[1]
    xs = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=3, unique=True))
    es = [draw(st.integers(1, 3)) for _ in xs]
    lines = draw(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(1, 2)),
                          min_size=1, max_size=2 if three else 3))
    f1 = R.one()
    for a, e in zip(xs, es):
        f1 = f1 * (x - a) ** e
    f2 = R.one()
    for b, c, d in lines:
        f2 = f2 * (y - b - c * x) ** d
    truth = {}
    for a, e in zip(xs, es):
        for b, c, d in lines:
            key = (Fraction(a), Fraction(b + c * a))
            truth[key] = truth.get(key, 0) + e * d
    polys = [f1, f2]
    if three:
        z = gens[2]
        planes = draw(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(1, 2)),
                               min_size=1, max_size=2))
        f3 = R.one()
        for p, q, k in planes:
            f3 = f3 * (z - p * x - q * y) ** k
        lifted = {}
        for (a, yb), mult in truth.items():
            for p, q, k in planes:
                key = (a, yb, p * a + q * yb)
                lifted[key] = lifted.get(key, 0) + mult * k
        truth = lifted
        polys.append(f3)
    # unimodular mixing keeps the ideal
    u = draw(st.integers(-2, 2)) + draw(st.integers(-1, 1)) * x + draw(st.integers(-1, 1)) * y
    v = draw(st.integers(-2, 2)) + draw(st.integers(-1, 1)) * x
    g = list(polys)
    g[1] = polys[1] + u * polys[0]
    g[0] = polys[0] + v * g[1]
    if three:
        g[2] = polys[2] + draw(st.integers(-1, 1)) * g[1]
    bound = sum(truth.values())
    strategy = Strategy(factor_initials=draw(st.booleans()), split_components=draw(st.booleans()))
    return g, truth, bound, strategy


@settings(max_examples=200)
@given(known_systems())
def test_decomposition_is_disjoint_and_preserves_multiplicity(case):
    polys, truth, bound, strategy = case
    res = zero_decomp_multi(polys, bound=bound, strategy=strategy)
    for point in truth:
        owners = [c for c in res.components if c.contains(point)]
        assert len(owners) == 1, point
    cert = certify(polys, res)
    found = {z.point: z for z in cert.zeros}
    assert set(found) == set(truth)
    for point, m in truth.items():
        assert found[point].multiplicity == m
        assert found[point].component_multiplicity == m
    assert cert.disjoint
    if cert.total is not None:
        assert cert.total == bound
