"""Wu ranks, basic sets and characteristic sets."""

from dataclasses import dataclass, field

from . import upoly
from .errors import DegenerateInputError
from .polyring import Polynomial, canonical_key, is_reduced, prem_seq


def rank(f):
    """Wu rank of a nonzero polynomial as a comparable ``(cls, ldeg)`` pair.

    Constants have class -1 and so rank below every nonconstant polynomial.
    """
    if f.is_zero():
        raise DegenerateInputError("the zero polynomial has no rank")
    return (f.cls, f.ldeg)


def rank_compare(f, g):
    """-1, 0 or 1 as ``f`` ranks lower, equal or higher than ``g``."""
    a, b = rank(f), rank(g)
    return (a > b) - (a < b)


def _tiebreak_key(f):
    init = f.initial
    return (rank(f), rank(init) if not init.is_constant() else (-1, 0), len(f.terms),
            canonical_key(f))


def chain_rank(chain):
    """Sort key for ascending sets in Wu's order (smaller key = lower rank).

    Elementwise comparison of ranks; when one set is a prefix of the other,
    the longer set is the lower one.
    """
    return tuple((0,) + rank(c) for c in chain) + ((1,),)


def is_ascending(chain):
    if len(chain) == 1 and chain[0].is_constant():
        return not chain[0].is_zero()
    for i, c in enumerate(chain):
        if c.is_constant():
            return False
        if i and c.cls <= chain[i - 1].cls:
            return False
        if not all(is_reduced(c, chain[j]) for j in range(i)):
            return False
    return True


def is_contradictory(chain):
    return len(chain) == 1 and chain[0].is_constant()


def basic_set(polys):
    """Greedy lowest-rank ascending subset of ``polys``.

    Equal ranks are broken by the rank of the initial, then by fewest
    terms, then by the canonical term sequence.  A nonzero
    constant in the input yields the contradictory set ``[c]``.
    """
    candidates = sorted(set(polys), key=_tiebreak_key)
    if not candidates:
        return []
    if candidates[0].is_constant():
        return [candidates[0]]
    chosen = []
    for f in candidates:
        if chosen and f.cls <= chosen[-1].cls:
            continue
        if all(is_reduced(f, b) for b in chosen):
            chosen.append(f)
    return chosen


@dataclass
class CharsetOutcome:
    charset: list
    initials: list
    partial_products: list
    inconsistent: bool
    polys: list = field(default_factory=list)
    """The saturated input: original polynomials plus every remainder."""
    history: list = field(default_factory=list)
    """Basic set of each outer iteration, for rank-descent checks."""

    def J(self, i):
        """Product of the first ``i`` initials (``J(0) = 1``)."""
        if i == 0:
            return self.charset[0].order.one()
        return self.partial_products[i - 1]


def _normalize(f):
    return f.primitive()


def _univariate_gcds(polys):
    """gcd over Q of each group of >= 2 members univariate in one variable.

    The gcd lies in the ideal, and adjoining it short-cuts the pseudo
    remainder sequence the loop would otherwise run on those members.
    """
    groups = {}
    for f in polys:
        v = f.univariate_var()
        if v is not None:
            groups.setdefault(v, []).append(f)
    out = []
    for v, members in sorted(groups.items()):
        if len(members) < 2:
            continue
        g = []
        for f in members:
            g = upoly.ugcd(g, f.to_dense(v))
        gp = Polynomial.from_dense(members[0].order, v, upoly.primitive_int(g))
        if gp.is_constant() or gp not in members:
            out.append(gp)
    return out


def wu_charset(polys):
    """Wu's characteristic set of a finite set of nonzero polynomials.

    Loop: take a basic set B of the working set, compute the nonzero
    successive remainders R of the other members, and continue with
    input + B + R until no remainder survives.  Keeping the input in every
    round guarantees that each input polynomial reduces to zero by the
    result.  Remainders are made integer-primitive before reinsertion, and
    members univariate in the same variable are replaced in effect by their
    gcd (see ``_univariate_gcds``).
    """
    polys = [_normalize(f) for f in polys if not f.is_zero()]
    if not polys:
        raise DegenerateInputError("characteristic set of an empty system")
    current = list(dict.fromkeys(polys))
    history = []
    while True:
        extra = _univariate_gcds(current)
        if extra:
            current = list(dict.fromkeys(current + extra))
        basis = basic_set(current)
        history.append(basis)
        if is_contradictory(basis):
            return _outcome(basis, True, current, history)
        members = set(basis)
        new = []
        for f in current:
            if f in members:
                continue
            r, _ = prem_seq(f, basis)
            if r.is_zero():
                continue
            r = _normalize(r)
            if r.is_constant():
                return _outcome([r], True, current + [r], history + [[r]])
            if r not in new:
                new.append(r)
        if not new:
            return _outcome(basis, False, current, history)
        current = list(dict.fromkeys(polys + basis + new))


def _outcome(chain, inconsistent, polys, history):
    order = chain[0].order
    if inconsistent:
        return CharsetOutcome(list(chain), [], [], True, list(polys), list(history))
    initials = [c.initial for c in chain]
    partial = []
    acc = order.one()
    for init in initials:
        acc = acc * init
        partial.append(acc)
    return CharsetOutcome(list(chain), initials, partial, False, list(polys), list(history))


def sort_polys(polys):
    return sorted(polys, key=canonical_key)
