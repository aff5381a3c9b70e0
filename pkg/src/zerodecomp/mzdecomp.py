"""Zero decomposition that keeps local multiplicities.

The worklist algorithm: take a task ``[S, P]``, compute the characteristic
set ``C`` of ``S``, emit ``[C, P*J(n)]``, and for every ``i >= 2`` queue the
branch where the ``i``-th initial vanishes as ``[S + C + {r_i}, P*J(i-1)]``
with ``r_i = prem(I_i**m, C)``.  When ``r_i`` is zero the branch cannot be
split further and ``[S + C, P*J(i-1)]`` is kept as an unresolved component;
the emitted ``[C, P*J(n)]`` is then provably empty and is withdrawn.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import prod

from . import upoly
from .errors import NotZeroDimensionalError, UnsupportedInputError, UsageError
from .polyring import Polynomial, canonical_key, coprime_split, prem_seq
from .wucharset import chain_rank, wu_charset

log = logging.getLogger(__name__)

TRIANGULAR = "triangular"
UNRESOLVED = "unresolved"

# path step tags; keep the final sort independent of scheduling
_BRANCH, _FACTOR, _SPLIT = 0, 1, 2


@dataclass(frozen=True)
class Component:
    """``MZero(polys / saturation)``."""

    polys: tuple
    saturation: Polynomial
    kind: str
    provenance: tuple = ()
    path: tuple = ()

    @property
    def order(self):
        return self.saturation.order

    def contains(self, point):
        return (all(f.evaluate(point) == 0 for f in self.polys)
                and self.saturation.evaluate(point) != 0)


@dataclass(frozen=True)
class Task:
    polys: tuple
    saturation: Polynomial
    path: tuple = ()
    provenance: tuple = ()
    parent_rank: tuple = None


@dataclass
class BoundState:
    m: int
    mode: str = "fixed"

    def __post_init__(self):
        if self.m < 1:
            raise UsageError(f"zero-count bound must be positive, got {self.m}")
        if self.mode not in ("fixed", "updating"):
            raise UsageError(f"unknown bound mode {self.mode!r}")


@dataclass(frozen=True)
class Strategy:
    prop3: bool = True
    factor_initials: bool = False
    update_bound: bool = False
    split_components: bool = False

    def as_dict(self):
        return {
            "prop3": self.prop3,
            "factorInitials": self.factor_initials,
            "updateBound": self.update_bound,
            "splitComponents": self.split_components,
        }


@dataclass
class DecompositionResult:
    set2: list
    set3: list
    bound_used: int
    strategy: Strategy
    log: list = field(default_factory=list)
    rank_descent: list = field(default_factory=list)
    """(parent charset rank, child charset rank) for every resolved child."""

    @property
    def components(self):
        return self.set2 + self.set3

    @property
    def is_triangular(self):
        return not self.set3


def bezout_bound(polys):
    """Product of the total degrees of ``polys``."""
    polys = list(polys)
    if not polys:
        raise UsageError("Bezout bound of an empty system")
    for f in polys:
        if f.is_zero() or f.is_constant():
            raise UsageError(f"Bezout bound needs nonconstant polynomials, got {f}")
    return prod(f.total_degree() for f in polys)


def _norm(f):
    return f.primitive()


def _union(*groups):
    out = {}
    for g in groups:
        for f in g:
            f = _norm(f)
            if not f.is_zero():
                out.setdefault(f, None)
    return tuple(out)


def excluded_by(init, sat):
    """True when every zero of ``init`` is a zero of ``sat``.

    Checked by exact divisibility, or, for univariate ``init``, by
    divisibility of its squarefree part.  A False answer proves nothing.
    """
    if init.divides(sat):
        return True
    v = init.univariate_var()
    if v is None:
        return False
    s = Polynomial.from_dense(init.order, v, upoly.squarefree_part(init.to_dense(v)))
    return s.divides(sat)


def prop3_fallback(polys, charset, i, m, saturation):
    """Replacement task for a branch whose ``prem(I_i**m, C)`` vanished.

    Uses the reductum of ``C_i`` (the element minus its leading term in the
    main variable): on that branch the reductum vanishes too, so adjoining
    ``prem(reductum**m, C)`` changes neither zeros nor multiplicities.
    Returns None when the reductum or its remainder is zero.  ``i`` is
    1-based.
    """
    red = charset[i - 1].reductum
    if red.is_zero():
        return None
    r, _ = prem_seq(red**m, charset)
    if r.is_zero():
        return None
    return Task(_union(polys, charset, [r]), saturation)


@dataclass(frozen=True)
class FactorBranch:
    factor: Polynomial
    saturation: Polynomial
    remainder: Polynomial


def factor_initials_strategy(charset, m, saturation):
    """Branches on the coprime factors of the initials instead of on the
    initials themselves.

    Factor ``g_j`` gets the branch ``g_j = 0`` with saturation
    ``P * g_1 * ... * g_{j-1}``; each branch carries ``prem(g_j**m, C)``.
    Only initials univariate in the lowest variable are supported;
    anything else raises UnsupportedInputError.
    """
    inits = [c.initial for c in charset[1:] if not c.initial.is_constant()]
    for f in inits:
        if f.variables() != [0]:
            raise UnsupportedInputError(f"initial {f} is not univariate in the lowest variable")
    branches = []
    prefix = saturation
    for g in coprime_split(inits):
        if excluded_by(g, prefix):
            continue
        r, _ = prem_seq(g**m, charset)
        branches.append(FactorBranch(g, prefix, r))
        prefix = _norm(prefix * g)
    return branches


def update_bound(state, comp):
    """Shrink the zero-count bound after emitting a component whose zero
    count with multiplicity is certainly known.

    Only components with constant initials and constant saturation qualify;
    their count is the product of the leading degrees.
    """
    if state.mode != "updating" or comp.kind != TRIANGULAR:
        return state
    if not comp.saturation.is_constant():
        return state
    if not all(c.initial.is_constant() for c in comp.polys):
        return state
    count = prod(c.ldeg for c in comp.polys)
    return BoundState(max(1, state.m - count), state.mode)


def _fmt(polys):
    return "[" + ", ".join(str(f) for f in polys) + "]"


def _process(task, m, strategy, n):
    """Run one worklist step.  Returns ``(set2, set3, children, notes, rank)``."""
    notes = []
    out = wu_charset(task.polys)
    if out.inconsistent:
        notes.append(f"task {task.path}: inconsistent, discarded")
        return [], [], [], notes, None
    C = out.charset
    if len(C) < n:
        raise NotZeroDimensionalError(
            f"characteristic set {_fmt(C)} has {len(C)} elements for {n} variables"
        )
    rank = chain_rank(C)
    S = out.polys
    P = task.saturation
    prov = task.provenance + (f"charset C = {_fmt(C)}",)
    main = Component(tuple(C), _norm(P * out.J(n)), TRIANGULAR, prov, task.path)
    set3, children = [], []
    withdrawn = False

    def withdraw(reason):
        nonlocal withdrawn
        if not withdrawn:
            withdrawn = True
            notes.append(f"task {task.path}: component {_fmt(C)} withdrawn as empty ({reason})")

    branches = None
    if strategy.factor_initials:
        try:
            branches = factor_initials_strategy(C, m, P)
        except UnsupportedInputError as exc:
            notes.append(f"task {task.path}: factor-initials skipped ({exc})")
    if branches is not None:
        for j, br in enumerate(branches, start=1):
            step = f"factor g_{j} = {br.factor}: prem(g_{j}^{m}, C) = {br.remainder}"
            path = task.path + ((_FACTOR, j),)
            if br.remainder.is_zero():
                withdraw(f"prem(g_{j}^{m}, C) = 0")
                set3.append(Component(_union(S, C), br.saturation, UNRESOLVED, prov + (step,), path))
            else:
                children.append(Task(_union(S, C, [br.remainder]), br.saturation, path,
                                     prov + (step,), rank))
        if not withdrawn and branches:
            factors = prod((br.factor for br in branches), start=P.order.one())
            main = replace(main, saturation=_norm(P * factors))
    else:
        for i in range(2, n + 1):
            init = out.initials[i - 1]
            if init.is_constant():
                continue
            sat = _norm(P * out.J(i - 1))
            path = task.path + ((_BRANCH, i),)
            if excluded_by(init, sat):
                notes.append(f"task {task.path}: branch {i} pruned, I_{i} = {init} vanishes only where P*J({i - 1}) does")
                continue
            r, _ = prem_seq(init**m, C)
            step = f"branch {i}: r_{i} = prem(I_{i}^{m}, C) = {r}"
            if not r.is_zero():
                children.append(Task(_union(S, C, [r]), sat, path, prov + (step,), rank))
                continue
            withdraw(f"r_{i} = 0")
            fallback = prop3_fallback(S, C, i, m, sat) if strategy.prop3 else None
            if fallback is not None:
                fb_step = step + f"; reductum fallback adjoins {fallback.polys[-1]}"
                children.append(replace(fallback, path=path, provenance=prov + (fb_step,),
                                        parent_rank=rank))
            else:
                set3.append(Component(_union(S, C), sat, UNRESOLVED, prov + (step,), path))
    set2 = [] if withdrawn else [main]
    if set2 and _empty_by_head(main):
        notes.append(f"task {task.path}: component {_fmt(C)} dropped, every root of "
                     f"{C[0]} makes {main.saturation} vanish")
        set2 = []
    return set2, set3, children, notes, rank


def _empty_by_head(comp):
    """True when ``C_1`` is univariate and each of its roots is a root of
    the saturation's content in that variable, so no zero survives."""
    head = comp.polys[0]
    v = head.univariate_var()
    if v is None:
        return False
    return upoly.is_constant(upoly.coprime_part(head.to_dense(v), _content_in(comp.saturation, v)))


def _process_star(args):
    return _process(*args)


def zero_decomp_multi(polys, bound="bezout", strategy=None, *, bound_mode=None, workers=1):
    """Decompose ``MZero(polys)`` into disjoint multiplicity-preserving parts.

    ``bound`` is ``"bezout"`` or a positive integer bounding the zero count
    with multiplicity.  ``workers > 1`` processes independent tasks in a
    process pool; the result is identical to a sequential run.  Updating
    the bound forces sequential processing.
    """
    strategy = strategy or Strategy()
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise UsageError("empty polynomial system")
    order = polys[0].order
    n = len(order)
    if bound == "bezout":
        m0 = bezout_bound(polys)
    else:
        m0 = int(bound)
    mode = bound_mode or ("updating" if strategy.update_bound else "fixed")
    state = BoundState(m0, mode)
    result = DecompositionResult([], [], m0, strategy)
    wave = [Task(_union(polys), order.one(), (), ("input PS",))]
    pool = None
    if workers > 1 and mode == "fixed":
        pool = ProcessPoolExecutor(max_workers=workers)
    try:
        while wave:
            if pool is not None:
                outs = list(pool.map(_process_star, [(t, state.m, strategy, n) for t in wave]))
            else:
                outs = []
                for t in wave:
                    outs.append(_process(t, state.m, strategy, n))
                    for comp in outs[-1][0]:
                        state = update_bound(state, comp)
            nxt = []
            for task, (s2, s3, children, notes, rank) in zip(wave, outs):
                result.set2.extend(s2)
                result.set3.extend(s3)
                result.log.extend(notes)
                if task.parent_rank is not None and rank is not None:
                    result.rank_descent.append((task.parent_rank, rank))
                nxt.extend(children)
            wave = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    result.set2.sort(key=lambda c: c.path)
    result.set3.sort(key=lambda c: c.path)
    if strategy.split_components:
        result.set2 = [piece for comp in result.set2 for piece in split_triangular_component(comp)]
    log.debug("decomposition: %d triangular, %d unresolved", len(result.set2), len(result.set3))
    return result


def _content_in(f, v):
    """gcd of the coefficients of ``f`` viewed as a polynomial in the other
    variables over Q[x_v], as a monic dense list."""
    groups = {}
    for e, c in f.terms.items():
        rest = e[:v] + (0,) + e[v + 1:]
        dense = groups.setdefault(rest, [])
        while len(dense) <= e[v]:
            dense.append(0)
        dense[e[v]] += c
    g = []
    for dense in groups.values():
        g = upoly.ugcd(g, upoly.trim(dense))
        if upoly.is_constant(g) and g:
            return g
    return g


def split_triangular_component(comp):
    """Split a triangular component along the factors of its first element.

    Each factor of ``C_1`` is taken with its multiplicity; factors whose
    roots all make the saturation vanish are dropped, and in every branch
    the parts of later elements' contents that cannot vanish on the branch
    are divided out.  Returns ``[comp]`` when nothing changes.
    """
    T = list(comp.polys)
    head = T[0]
    v = head.univariate_var()
    if comp.kind != TRIANGULAR or v is None:
        return [comp]
    order = head.order
    c1 = head.to_dense(v)
    sat_content = _content_in(comp.saturation, v)
    extra = [sat_content] if not upoly.is_constant(sat_content) else []
    base = upoly.coprime_base([c1] + extra)
    pieces = []
    for b in base:
        if upoly.multiplicity_in(c1, b) == 0:
            continue
        if extra and not upoly.is_constant(upoly.ugcd(b, sat_content)):
            continue
        pieces.append(b)
    pieces.sort(key=lambda b: canonical_key(Polynomial.from_dense(order, v, upoly.primitive_int(b))))
    out = []
    for k, b in enumerate(pieces, start=1):
        e = upoly.multiplicity_in(c1, b)
        new_head = Polynomial.from_dense(order, v, upoly.primitive_int(upoly.power(b, e)))
        rest = []
        for c in T[1:]:
            unit = upoly.coprime_part(_content_in(c, v), b)
            if not upoly.is_constant(unit):
                c = c.divide_exact(Polynomial.from_dense(order, v, unit))
            rest.append(_norm(c))
        polys = (new_head, *rest)
        step = f"split on factor ({Polynomial.from_dense(order, v, upoly.primitive_int(b))})^{e}"
        out.append(Component(polys, comp.saturation, TRIANGULAR,
                             comp.provenance + (step,), comp.path + ((_SPLIT, k),)))
    if len(out) == 1 and out[0].polys == tuple(_norm(c) for c in T):
        return [comp]
    return out
