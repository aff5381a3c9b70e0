"""Dense univariate polynomials over Q.

A polynomial is a list of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is ``[]``.  These helpers back the squarefree and
coprime splitting of initials and the rational root enumeration used by the
back-substitution solver.
"""

from fractions import Fraction
from math import gcd, isqrt, lcm


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def is_constant(a):
    return len(a) <= 1


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    return add(a, [-c for c in b])


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def power(a, e):
    result = [Fraction(1)]
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def divmod_(a, b):
    """Euclidean division over Q; ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = [Fraction(c) for c in a]
    db = degree(b)
    lc = Fraction(b[-1])
    if len(a) < len(b):
        return [], trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lc
        if c == 0:
            continue
        q[k - db] = c
        for i, cb in enumerate(b):
            a[k - db + i] -= c * cb
    return trim(q), trim(a[:db])


def exact_div(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def monic(a):
    if not a:
        return []
    lc = a[-1]
    return [Fraction(c) / lc for c in a]


def ugcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def squarefree_part(a):
    a = trim(a)
    if is_constant(a):
        return monic(a) if a else []
    return monic(exact_div(a, ugcd(a, derivative(a))))


def evaluate(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def primitive_int(a):
    """Integer coefficients, content 1, positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    den = lcm(*(Fraction(c).denominator for c in a))
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _factorize(n):
    n = abs(n)
    factors = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p <= isqrt(n):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n):
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0")
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(a):
    """Distinct rational roots of ``a`` in increasing order.

    Rational root theorem on the primitive integer form of the squarefree
    part: a root p/q in lowest terms has p | trailing and q | leading.
    """
    s = squarefree_part(a)
    if is_constant(s):
        return []
    roots = []
    ints = primitive_int(s)
    if ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    if len(ints) == 2:
        roots.append(Fraction(-ints[0], ints[1]))
        return sorted(roots)
    n = len(ints) - 1
    seen = set()
    for q in divisors(ints[-1]):
        for p in divisors(ints[0]):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                # q^n * f(p/q) as an integer
                num, den = cand.numerator, cand.denominator
                total = 0
                for i, c in enumerate(ints):
                    total += c * num**i * den ** (n - i)
                if total == 0:
                    roots.append(cand)
    return sorted(roots)


def root_multiplicity(a, r):
    lin = [-Fraction(r), Fraction(1)]
    k = 0
    while a:
        q, rem = divmod_(a, lin)
        if rem:
            break
        a = q
        k += 1
    return k


def split_rational_linear(a):
    """Return ``(roots, cofactor)``: the distinct rational roots of a
    squarefree ``a`` and the monic cofactor with no rational roots."""
    roots = rational_roots(a)
    rest = monic(a)
    for r in roots:
        rest = exact_div(rest, [-r, Fraction(1)])
    return roots, rest


def coprime_base(polys):
    """Pairwise coprime squarefree monic nonconstant polynomials whose root
    set equals the union of the roots of ``polys``."""
    base = []
    for p in polys:
        p = squarefree_part(p)
        if is_constant(p):
            continue
        pending = [p]
        while pending:
            a = pending.pop()
            for i, b in enumerate(base):
                g = ugcd(a, b)
                if not is_constant(g):
                    del base[i]
                    for piece in (exact_div(b, g), g, exact_div(a, g)):
                        if not is_constant(piece):
                            pending.append(monic(piece))
                    break
            else:
                base.append(a)
    out = []
    for b in base:
        roots, rest = split_rational_linear(b)
        out.extend([-r, Fraction(1)] for r in roots)
        if not is_constant(rest):
            out.append(rest)
    return out


def multiplicity_in(a, b):
    """Largest e with b**e dividing a (b nonconstant, a nonzero)."""
    e = 0
    while True:
        q, r = divmod_(a, b)
        if r:
            return e
        a = q
        e += 1


def coprime_part(a, b):
    """Largest divisor of ``a`` sharing no root with ``b`` (monic)."""
    s = monic(a)
    while True:
        g = ugcd(s, b)
        if is_constant(g):
            return s
        s = exact_div(s, g)
