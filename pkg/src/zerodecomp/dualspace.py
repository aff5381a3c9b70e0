"""Local multiplicity of a rational zero through its dual space.

The dual space of an ideal ``I`` at a point ``xi`` is the space of
functionals ``v = sum v_j d_j[xi]`` with ``d_j[xi](f)`` the coefficient of
``(X - xi)**j`` in the Taylor expansion of ``f`` at ``xi`` (the scaled
partial derivative ``1/j! * D^j f (xi)``) that vanish on all of ``I``.  Its
dimension is the local multiplicity of ``xi``.

Order-bounded pieces are computed as exact nullspaces of Macaulay-style
matrices whose rows are the Taylor coefficients of ``(X - xi)**b * f_k``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, prod

from .errors import CapExceededError, PointNotZeroError, UsageError
from .linalg import nullspace, rank


def taylor_shift(f, point):
    """Coefficients of ``f`` in powers of ``X - point``: ``{exp: coeff}``."""
    point = [Fraction(p) for p in point]
    if len(point) != len(f.order):
        raise UsageError("point dimension does not match the variable order")
    out = {}
    for e, c in f.terms.items():
        # prod (y_i + p_i)^e_i, expanded one variable at a time
        partial = {(): Fraction(c)}
        for k, p in zip(e, point):
            nxt = {}
            for pre, val in partial.items():
                for j in range(k + 1):
                    coef = comb(k, j) * p ** (k - j)
                    if coef:
                        key = pre + (j,)
                        nxt[key] = nxt.get(key, 0) + val * coef
            partial = nxt
        for key, val in partial.items():
            s = out.get(key, 0) + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def apply_functional(j, point, f):
    """``d_j[point](f)``: Taylor coefficient of ``(X - point)**j``."""
    return taylor_shift(f, point).get(tuple(j), Fraction(0))


def monomials_up_to(n, alpha):
    """Exponent vectors of total degree <= alpha, graded then lexicographic."""
    out = []
    for d in range(alpha + 1):
        level = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            level.append(tuple(e))
        out.extend(sorted(level, reverse=True))
    return out


@dataclass(frozen=True)
class Functional:
    point: tuple
    coeffs: dict
    """exponent vector -> rational coefficient; finite support."""

    @property
    def order(self):
        return max((sum(j) for j in self.coeffs), default=0)

    def __call__(self, f):
        shifted = taylor_shift(f, self.point)
        return sum((v * shifted.get(j, 0) for j, v in self.coeffs.items()), Fraction(0))


@dataclass
class DualBasis:
    point: tuple
    sigma: int
    basis: list
    dims: list = field(default_factory=list)
    """``dims[a]`` is the dimension of the order-<= a piece, for
    ``a = 0 .. sigma + 1``."""

    @property
    def dimension(self):
        return len(self.basis)


def _check_zero(polys, point):
    for f in polys:
        if f.evaluate(point) != 0:
            raise PointNotZeroError(f"{f} does not vanish at ({', '.join(str(p) for p in point)})")


def macaulay_rows(polys, point, alpha):
    """Constraint rows over the order-<= alpha unknowns, and the columns."""
    n = len(point)
    cols = monomials_up_to(n, alpha)
    index = {j: i for i, j in enumerate(cols)}
    rows = []
    for f in polys:
        shifted = taylor_shift(f, point)
        if not shifted:
            continue
        low = min(sum(g) for g in shifted)
        for beta in monomials_up_to(n, alpha - low) if low <= alpha else []:
            row = {}
            for g, c in shifted.items():
                j = tuple(a + b for a, b in zip(beta, g))
                if sum(j) <= alpha:
                    row[index[j]] = c
            if row:
                rows.append(row)
    return rows, cols


def dual_dim_at_order(polys, point, alpha):
    """Dimension of the functionals of order <= alpha vanishing on the ideal."""
    point = tuple(Fraction(p) for p in point)
    _check_zero(polys, point)
    rows, cols = macaulay_rows(polys, point, alpha)
    return len(cols) - rank(rows)


def _bezout(polys):
    degs = [f.total_degree() for f in polys if not f.is_zero()]
    return prod(degs) if degs else 1


def dual_basis(polys, point, cap=None):
    """Dual space at ``point`` once the order-bounded dimensions stabilise.

    Stops at the first ``sigma`` with ``dim(order <= sigma) ==
    dim(order <= sigma + 1)``.  ``cap`` bounds sigma (default: Bezout bound
    of ``polys``); exceeding it raises CapExceededError, which is what a
    non-isolated zero produces.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise UsageError("empty system")
    point = tuple(Fraction(p) for p in point)
    _check_zero(polys, point)
    if cap is None:
        cap = _bezout(polys)
    dims = [dual_dim_at_order(polys, point, 0)]
    alpha = 0
    while True:
        dims.append(dual_dim_at_order(polys, point, alpha + 1))
        if dims[-1] == dims[-2]:
            break
        alpha += 1
        if alpha > cap:
            raise CapExceededError(
                f"dual space dimensions {dims} still growing past order {cap}; "
                "the zero may not be isolated"
            )
    rows, cols = macaulay_rows(polys, point, alpha)
    basis = []
    for vec in nullspace(rows, len(cols)):
        coeffs = {cols[i]: v for i, v in enumerate(vec) if v}
        basis.append(Functional(point, coeffs))
    return DualBasis(point, alpha, basis, dims)


def multiplicity(polys, point, cap=None):
    """Local multiplicity of the isolated zero ``point`` of ``polys``."""
    return dual_basis(polys, point, cap).dimension


def annihilates_power(polys, point, g, h, l, cap=None):
    """Whether every dual basis functional at ``point`` kills ``h * g**l``.

    Guaranteed when ``g(point) == 0`` and ``l`` is at least the multiplicity.
    """
    db = dual_basis(polys, point, cap)
    target = h * g**l
    return all(v(target) == 0 for v in db.basis)
