"""Exact rational zeros of triangular components and of general systems."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from . import upoly
from .errors import NotZeroDimensionalError, UsageError
from .mzdecomp import TRIANGULAR
from .wucharset import wu_charset


@dataclass(frozen=True)
class RationalZero:
    point: tuple
    component_ref: str = ""
    claimed_multiplicity: int = None


@dataclass
class ZeroScan:
    zeros: list = field(default_factory=list)
    complete: bool = True
    """False when some level left a factor without rational roots, so
    the component may have zeros that are not listed."""


def _triangular_order(polys, n):
    T = sorted(polys, key=lambda f: f.cls)
    if len(T) != n or any(f.cls != k for k, f in enumerate(T)):
        raise NotZeroDimensionalError(
            "back-substitution needs one polynomial per variable with main variables x_1 < ... < x_n"
        )
    return T


def _level_roots(f, k, partial):
    """Rational roots in x_k of ``f`` after fixing x_1..x_{k-1}; None if the
    specialised polynomial vanishes identically.  Also reports whether a
    factor without rational roots remains."""
    g = f.substitute(dict(enumerate(partial))) if partial else f
    if g.is_zero():
        return None, True
    dense = g.to_dense(k)
    if upoly.is_constant(dense):
        return [], True
    roots, rest = upoly.split_rational_linear(upoly.squarefree_part(dense))
    return roots, upoly.is_constant(rest)


def _ref(comp):
    return ".".join(f"{tag}:{idx}" for tag, idx in comp.path) or "root"


def rational_zeros(comp):
    """Rational points of ``MZero(T/P)`` by depth-first back-substitution.

    Raises NotZeroDimensionalError when a level specialises to the zero
    polynomial at a partial point where the saturation does not vanish
    identically.
    """
    if comp.kind != TRIANGULAR:
        raise UsageError("rational_zeros expects a triangular component; use system_zeros")
    n = len(comp.order)
    T = _triangular_order(comp.polys, n)
    scan = ZeroScan()
    ref = _ref(comp)

    def visit(partial):
        k = len(partial)
        if k == n:
            point = tuple(partial)
            if comp.saturation.evaluate(point) != 0:
                scan.zeros.append(RationalZero(point, ref))
            return
        roots, clean = _level_roots(T[k], k, partial)
        if roots is None:
            sat = comp.saturation.substitute(dict(enumerate(partial)))
            if sat.is_zero():
                return
            raise NotZeroDimensionalError(
                f"{T[k]} vanishes identically at x = {tuple(str(p) for p in partial)}"
            )
        if not clean:
            scan.complete = False
        for r in roots:
            visit(partial + [r])

    visit([])
    scan.zeros.sort(key=lambda z: z.point)
    return scan


def _charset_zeros(C, n, scan):
    """Rational zeros of C with every initial nonzero; C has n elements."""
    out = []

    def visit(partial):
        k = len(partial)
        if k == n:
            out.append(tuple(partial))
            return
        c = C[k]
        point = dict(enumerate(partial))
        init = c.initial.substitute(point) if partial else c.initial
        if init.is_zero():
            return
        roots, clean = _level_roots(c, k, partial)
        if not clean:
            scan.complete = False
        for r in roots or []:
            visit(partial + [r])

    visit([])
    return out


def system_zeros(polys, saturation=None):
    """Rational zeros of a zero-dimensional system, optionally restricted
    to ``saturation != 0``.

    Wu's zero decomposition: Zero(S) is the zeros of its characteristic set
    C off the initials, plus Zero(S + C + {I_i}) for each nonconstant
    initial.  A characteristic set with fewer than n elements contributes
    nothing: its zeros off the initials are either empty or infinite, and
    a zero-dimensional input rules out the latter.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise UsageError("empty polynomial system")
    n = len(polys[0].order)
    scan = ZeroScan()
    found = set()
    seen = set()
    stack = [tuple(polys)]
    while stack:
        S = stack.pop()
        key = frozenset(f.primitive() for f in S)
        if key in seen:
            continue
        seen.add(key)
        out = wu_charset(S)
        if out.inconsistent:
            continue
        C = out.charset
        if len(C) == n:
            for pt in _charset_zeros(C, n, scan):
                if all(f.evaluate(pt) == 0 for f in polys):
                    found.add(pt)
        for init in out.initials:
            if not init.is_constant():
                stack.append(tuple(out.polys) + tuple(C) + (init,))
    points = sorted(found)
    if saturation is not None:
        points = [p for p in points if saturation.evaluate(p) != 0]
    scan.zeros = [RationalZero(p) for p in points]
    return scan


def component_zeros(comp):
    """Rational zeros of any component, triangular or not."""
    if comp.kind == TRIANGULAR:
        return rational_zeros(comp)
    scan = system_zeros(comp.polys, comp.saturation)
    ref = _ref(comp)
    scan.zeros = [RationalZero(z.point, ref) for z in scan.zeros]
    return scan


def degree_count(comp):
    """Number of zeros of a triangular component counted with multiplicity,
    or None when it cannot be read off the degrees.

    Works when the saturation and every initial are constant or univariate
    in x_1: the factor of C_1 sharing no root with them carries the
    component, and the remaining elements have invertible initials there.
    """
    if comp.kind != TRIANGULAR:
        return None
    n = len(comp.order)
    try:
        T = _triangular_order(comp.polys, n)
    except NotZeroDimensionalError:
        return None
    guards = [comp.saturation] + [c.initial for c in T[1:]]
    bad = [Fraction(1)]
    for g in guards:
        if g.is_constant():
            continue
        if g.univariate_var() != 0:
            return None
        bad = upoly.mul(bad, g.to_dense(0))
    head = upoly.coprime_part(T[0].to_dense(0), bad)
    return upoly.degree(head) * prod(c.ldeg for c in T[1:])
