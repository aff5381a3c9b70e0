"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ordered ``x_1 < x_2 < ... < x_n`` by a :class:`VarOrder`;
indices are 0-based internally.  Terms are stored as a dict mapping exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  Polynomials are
treated as immutable values.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import upoly
from .errors import DegenerateInputError, UnsupportedInputError, UsageError


class VarOrder:
    """Ordered tuple of distinct variable names, lowest variable first."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise UsageError("a variable order needs at least one variable")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarOrder) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarOrder({list(self.names)!r})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def var(self, which):
        i = which if isinstance(which, int) else self.index(which)
        exp = [0] * len(self.names)
        exp[i] = 1
        return Polynomial(self, {tuple(exp): 1})

    def gens(self):
        return tuple(self.var(i) for i in range(len(self.names)))

    def const(self, c):
        c = _num(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * len(self.names): c})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)


def _num(c):
    """Integral rationals are stored as ``int`` (much faster arithmetic)."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    return _num(Fraction(c))


def _term_key(exp):
    # lexicographic with x_n most significant
    return exp[::-1]


class Polynomial:
    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order, terms=None):
        self.order = order
        self.terms = {} if terms is None else {e: _num(c) for e, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, order, terms):
        obj = cls.__new__(cls)
        obj.order = order
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, order, exp, coeff=1):
        coeff = _num(coeff)
        return cls._raw(order, {tuple(exp): coeff} if coeff else {})

    # -- basic predicates -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise UsageError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.order == other.order and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.order != self.order:
                raise UsageError(f"variable orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.order.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.order, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _num(other)
            if other == 0:
                return self.order.zero()
            return Polynomial._raw(self.order, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._raw(self.order, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise UsageError("exponent must be a non-negative integer")
        result = self.order.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        return self * _num(c)

    # -- degrees and main-variable structure ------------------------------

    def degree(self, var):
        return max((e[var] for e in self.terms), default=-1)

    def total_degree(self):
        if not self.terms:
            raise DegenerateInputError("total degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def variables(self):
        """Sorted indices of variables occurring in some term."""
        occ = set()
        for e in self.terms:
            occ.update(i for i, k in enumerate(e) if k)
        return sorted(occ)

    @property
    def cls(self):
        """Index of the main variable; -1 for constants (including 0)."""
        best = -1
        for e in self.terms:
            for i in range(len(e) - 1, best, -1):
                if e[i]:
                    best = i
                    break
        return best

    def coefficients(self, var):
        """Map degree in ``var`` -> coefficient polynomial (free of ``var``)."""
        out = {}
        for e, c in self.terms.items():
            d = e[var]
            rest = e[:var] + (0,) + e[var + 1:]
            out.setdefault(d, {})[rest] = c
        return {d: Polynomial._raw(self.order, t) for d, t in out.items()}

    def leading_coeff(self, var):
        d = self.degree(var)
        t = {}
        for e, c in self.terms.items():
            if e[var] == d:
                t[e[:var] + (0,) + e[var + 1:]] = c
        return Polynomial._raw(self.order, t)

    def main_view(self):
        if not self.terms:
            raise DegenerateInputError("main variable of the zero polynomial")
        k = self.cls
        if k < 0:
            raise DegenerateInputError(f"constant {self} has no main variable")
        d = self.degree(k)
        init = self.leading_coeff(k)
        red = Polynomial._raw(self.order, {e: c for e, c in self.terms.items() if e[k] != d})
        return MainVarView(k, d, init, red)

    @property
    def ldeg(self):
        k = self.cls
        return 0 if k < 0 else self.degree(k)

    @property
    def initial(self):
        k = self.cls
        return self if k < 0 else self.leading_coeff(k)

    @property
    def reductum(self):
        return self.main_view().reductum

    def leading_term(self):
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point):
        point = [Fraction(v) for v in point]
        if len(point) != len(self.order):
            raise UsageError("point dimension does not match the variable order")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t *= v**k
            total += t
        return total

    def substitute(self, values):
        """Partial evaluation; ``values`` maps variable index -> rational."""
        values = {i: Fraction(v) for i, v in values.items()}
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, v in values.items():
                if ne[i]:
                    c = c * v ** ne[i]
                    ne[i] = 0
            if c:
                ne = tuple(ne)
                s = terms.get(ne, 0) + c
                if s:
                    terms[ne] = s
                else:
                    del terms[ne]
        return Polynomial._raw(self.order, terms)

    def derivative(self, var):
        terms = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = e[:var] + (e[var] - 1,) + e[var + 1:]
                terms[ne] = c * e[var]
        return Polynomial._raw(self.order, terms)

    # -- normalisation ----------------------------------------------------

    def primitive(self):
        """Integer coefficients with content 1 and positive leading term."""
        if not self.terms:
            return self
        coeffs = self.terms.values()
        if all(isinstance(c, int) for c in coeffs):
            g = 0
            for c in coeffs:
                g = gcd(g, c)
            if self.leading_term()[1] < 0:
                g = -g
            if g == 1:
                return self
            return Polynomial._raw(self.order, {e: c // g for e, c in self.terms.items()})
        den = lcm(*(Fraction(c).denominator for c in coeffs))
        num = 0
        for c in coeffs:
            num = gcd(num, Fraction(c).numerator)
        scale = Fraction(den, num)
        if self.leading_term()[1] < 0:
            scale = -scale
        return Polynomial._raw(self.order, {e: _num(c * scale) for e, c in self.terms.items()})

    def monic(self):
        return self * (1 / self.leading_term()[1])

    def is_scalar_multiple(self, other):
        return self.primitive() == other.primitive()

    # -- univariate bridge ------------------------------------------------

    def univariate_var(self):
        """Index of the only occurring variable, or None."""
        vs = self.variables()
        return vs[0] if len(vs) == 1 else None

    def to_dense(self, var):
        if any(k for e in self.terms for i, k in enumerate(e) if i != var):
            raise UnsupportedInputError(f"{self} is not univariate in {self.order.names[var]}")
        d = self.degree(var)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[var]] = c
        return out

    @classmethod
    def from_dense(cls, order, var, coeffs):
        terms = {}
        n = len(order)
        for d, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[var] = d
                terms[tuple(e)] = _num(c)
        return cls._raw(order, terms)

    # -- exact division ---------------------------------------------------

    def divide_exact(self, g):
        """Quotient ``self / g`` if ``g`` divides ``self`` exactly, else None."""
        g = self._coerce(g)
        if not g.terms:
            raise DegenerateInputError("division by the zero polynomial")
        ge, gc = g.leading_term()
        rem = self
        quot = {}
        while rem.terms:
            e, c = rem.leading_term()
            if any(a < b for a, b in zip(e, ge)):
                return None
            qe = tuple(a - b for a, b in zip(e, ge))
            if isinstance(c, int) and isinstance(gc, int) and c % gc == 0:
                qc = c // gc
            else:
                qc = _num(Fraction(c) / gc)
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - Polynomial._raw(self.order, {qe: qc}) * g
        return Polynomial(self.order, quot)

    def divides(self, other):
        return other.divide_exact(self) is not None

    # -- printing ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.order.names, e) if k
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


@dataclass(frozen=True)
class MainVarView:
    cls: int
    ldeg: int
    initial: Polynomial
    reductum: Polynomial


@dataclass(frozen=True)
class PremCertificate:
    """``multiplier * f == quotient * g + remainder``.

    ``multiplier`` divides ``initial(g)**exponent``; in lazy mode it equals
    that power exactly.
    """

    exponent: int
    quotient: Polynomial
    remainder: Polynomial
    multiplier: Polynomial


def total_degree(f):
    return f.total_degree()


def common_factor(a, b):
    """A common divisor of ``a`` and ``b`` that is cheap to find.

    The true gcd when both are univariate in the same variable (or
    constant); otherwise the common monomial times the integer content gcd.
    """
    order = a.order
    va, vb = a.variables(), b.variables()
    num_a = num_b = 0
    for c in a.terms.values():
        num_a = gcd(num_a, c.numerator)
    for c in b.terms.values():
        num_b = gcd(num_b, c.numerator)
    content = order.const(gcd(num_a, num_b) or 1)
    if len(set(va) | set(vb)) == 1:
        v = (va or vb)[0]
        g = upoly.ugcd(a.to_dense(v), b.to_dense(v))
        return content * Polynomial.from_dense(order, v, g)
    exps = list(a.terms) + list(b.terms)
    mono = tuple(min(e[i] for e in exps) for i in range(len(order)))
    return content * Polynomial.monomial(order, mono)


def prem(f, g, var, mode="gcd"):
    """Pseudo-remainder of ``f`` by ``g`` with respect to variable ``var``.

    Each elimination step scales the running remainder by the initial of
    ``g``; ``exponent`` counts those steps.  In ``"gcd"`` mode the step
    multiplier is ``initial / d`` with ``d`` a common factor of the initial
    and the current leading coefficient, which keeps spurious powers of
    the initial out of the remainder.  ``"lazy"`` mode uses the full initial.
    """
    g = f._coerce(g)
    dg = g.degree(var)
    if dg < 1:
        raise UsageError(f"cannot pseudo-divide by {g}: constant in {f.order.names[var]}")
    if mode not in ("gcd", "lazy"):
        raise UsageError(f"unknown prem mode {mode!r}")
    lead = g.leading_coeff(var)
    order = f.order
    r, q, a, mult = f, order.zero(), 0, order.one()
    dr = r.degree(var)
    while r.terms and dr >= dg:
        lc = r.leading_coeff(var)
        if mode == "gcd" and not lead.is_constant():
            d = common_factor(lead, lc)
            u, v = lead.divide_exact(d), lc.divide_exact(d)
        else:
            u, v = lead, lc
        shift = [0] * len(order)
        shift[var] = dr - dg
        s = v * Polynomial.monomial(order, shift)
        r = u * r - s * g
        q = u * q + s
        mult = u * mult
        a += 1
        dr = r.degree(var)
    return PremCertificate(a, q, r, mult)


def prem_seq(f, chain, mode="gcd"):
    """Successive pseudo-remainder of ``f`` w.r.t. the ascending set ``chain``.

    Reduces from the highest main variable downward.  Returns the remainder
    and the certificates, listed in the order of ``chain``.
    """
    r = f
    certs = [None] * len(chain)
    for j in range(len(chain) - 1, -1, -1):
        c = chain[j]
        cert = prem(r, c, c.cls, mode)
        certs[j] = cert
        r = cert.remainder
    return r, certs


def prem_seq_identity(f, chain, certs):
    """Evaluate ``prod M_j * f - sum Q_j C_j - r``; zero when the chained
    certificates are valid.

    Reduction runs from the top of the chain down, so the cofactor ``Q_j``
    of ``C_j`` is ``q_j`` times the multipliers of every lower element.
    """
    order = f.order
    if not chain:
        return order.zero()
    scale = order.one()
    for cert in certs:
        scale = scale * cert.multiplier
    rhs = order.zero()
    below = order.one()
    for c, cert in zip(chain, certs):
        rhs = rhs + below * cert.quotient * c
        below = below * cert.multiplier
    return scale * f - rhs - certs[0].remainder


def is_reduced(f, g):
    """``f`` reduced w.r.t. ``g``: degree of f in cls(g) below ldeg(g)."""
    k = g.cls
    if k < 0:
        return False
    return f.degree(k) < g.degree(k)


def coprime_split(polys):
    """Pairwise coprime, squarefree, integer-primitive pieces of univariate
    polynomials, with every rational linear factor split off.

    Constants are dropped.  Raises UnsupportedInputError on multivariate
    input.  Output is sorted canonically (degree, term count, coefficients).
    """
    polys = [p for p in polys if not p.is_constant()]
    if not polys:
        return []
    order = polys[0].order
    by_var = {}
    for p in polys:
        v = p.univariate_var()
        if v is None:
            raise UnsupportedInputError(f"{p} is not univariate")
        by_var.setdefault(v, []).append(p.to_dense(v))
    out = []
    for v, dense in by_var.items():
        for b in upoly.coprime_base(dense):
            out.append(Polynomial.from_dense(order, v, upoly.primitive_int(b)))
    return sorted(out, key=canonical_key)


def canonical_key(p):
    """Deterministic sort key: lower class/degree and fewer terms first."""
    return (
        p.cls,
        p.total_degree() if p.terms else -1,
        len(p.terms),
        tuple((_term_key(e), c) for e, c in sorted(p.terms.items(), key=lambda t: _term_key(t[0]))),
    )
