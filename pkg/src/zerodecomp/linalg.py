"""Exact sparse linear algebra over Q.

Rows are dicts ``column -> rational``.  Elimination is fraction-free: every
row is scaled to primitive integer form and combined with integer
multipliers, so no Fraction arithmetic happens inside the loop.
"""

from fractions import Fraction
from math import gcd, lcm


def _to_int_row(row):
    row = {c: Fraction(v) for c, v in row.items() if v}
    if not row:
        return {}
    den = lcm(*(v.denominator for v in row.values()))
    return _primitive({c: int(v * den) for c, v in row.items()})


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _combine(row, pivot_row, col):
    """``a*row - b*pivot_row`` cancelling ``col``, made primitive."""
    a, b = pivot_row[col], row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {c: a * v for c, v in row.items()}
    for c, v in pivot_row.items():
        s = out.get(c, 0) - b * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return _primitive(out)


def echelon(rows):
    """Row echelon form as ``{pivot column: integer row}``; each row's
    smallest column is its pivot."""
    pivots = {}
    for row in rows:
        row = _to_int_row(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            row = _combine(row, p, c)
    return pivots


def rank(rows):
    return len(echelon(rows))


def nullspace(rows, ncols):
    """Basis of ``{v : row . v = 0 for every row}`` in Q^ncols.

    One vector per free column, with a 1 in that column and zeros in the
    other free columns.
    """
    pivots = echelon(rows)
    # back-substitute to reduced form
    cols = sorted(pivots, reverse=True)
    for c in cols:
        pr = pivots[c]
        for other in cols:
            if other < c and c in pivots[other]:
                pivots[other] = _combine(pivots[other], pr, c)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, pr in pivots.items():
            if f in pr:
                v[c] = Fraction(-pr[f], pr[c])
        basis.append(v)
    return basis
