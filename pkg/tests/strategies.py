"""Hypothesis strategies shared by the property suites."""

from fractions import Fraction

from hypothesis import strategies as st

from zerodecomp.polyring import Polynomial, VarOrder, is_reduced, prem_seq

R2 = VarOrder(["x", "y"])
R3 = VarOrder(["x", "y", "z"])

small_rationals = st.one_of(
    st.integers(-5, 5),
    st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)),
)


def polynomials(order, max_deg=3, max_terms=5, coeffs=small_rationals):
    n = len(order)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: Polynomial(order, t))


def nonconstant_in(order, var, max_deg=3):
    """Polynomials with positive degree in ``var`` and only variables <= var."""
    n = len(order)

    def build(terms, lead_deg, lead_coeff):
        exp = [0] * n
        exp[var] = lead_deg
        f = Polynomial(order, terms) + Polynomial.monomial(order, tuple(exp), lead_coeff)
        return f

    exps = st.tuples(*[st.integers(0, max_deg) if i <= var else st.just(0) for i in range(n)])
    return st.builds(
        build,
        st.dictionaries(exps, small_rationals, max_size=4),
        st.integers(1, max_deg),
        st.integers(1, 4),
    ).filter(lambda f: f.degree(var) >= 1 and f.cls == var)


@st.composite
def ascending_sets(draw, order, max_len=3):
    """Random ascending sets with each element reduced w.r.t. the earlier ones."""
    k = draw(st.integers(1, min(max_len, len(order))))
    chain = []
    for v in range(k):
        f = draw(nonconstant_in(order, v, max_deg=2))
        f, _ = prem_seq(f, chain)
        if f.is_zero() or f.cls != v or not all(is_reduced(f, c) for c in chain):
            f = order.var(v) ** (v + 1) + 1
        chain.append(f)
    return chain
