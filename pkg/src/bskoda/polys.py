"""Exact multivariate polynomial arithmetic over Q and prime fields.

A polynomial is an immutable tuple of (exponent vector, coefficient)
pairs, strictly decreasing under the ring's term order.  Coefficients are
`Fraction` in characteristic 0 and ints in [1, p) in characteristic p, so
structural equality coincides with mathematical equality and no floating
point enters anywhere.

Quotient rings S/Q are represented by carrying the defining polynomials
on the ring; elements stay plain polynomials in S and reduction modulo Q
happens at the ideal level.
"""

from __future__ import annotations

from fractions import Fraction

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"

ORDER_NAMES = (LEX, GREVLEX)


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class TermOrder:
    """Total order on exponent vectors, multiplicative and with 1 minimal.

    kind is "lex", "grevlex" or "block"; a block order eliminates the
    variables in `block_indices` (grevlex on the block, then grevlex on
    the remaining variables), which is what elimination needs.
    """

    __slots__ = ("kind", "block_indices")

    def __init__(self, kind=GREVLEX, block_indices=None):
        if kind not in (LEX, GREVLEX, BLOCK):
            raise ValueError("unknown term order kind: %r" % (kind,))
        if kind == BLOCK and not block_indices:
            raise ValueError("block order needs a nonempty elimination set")
        self.kind = kind
        self.block_indices = frozenset(block_indices or ())

    def key(self, exps):
        """Sort key; larger key means larger monomial."""
        if self.kind == GREVLEX:
            return _grevlex_key(exps)
        if self.kind == LEX:
            return exps
        block = tuple(e for i, e in enumerate(exps) if i in self.block_indices)
        rest = tuple(e for i, e in enumerate(exps) if i not in self.block_indices)
        return (_grevlex_key(block), _grevlex_key(rest))

    def _ident(self):
        return (self.kind, self.block_indices)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == BLOCK:
            return "TermOrder(block, %s)" % sorted(self.block_indices)
        return "TermOrder(%s)" % self.kind


def mono_cmp(a, b, order):
    """Compare exponent vectors under `order`: -1, 0 or 1."""
    if len(a) != len(b):
        raise RingMismatchError("monomial arity mismatch: %d vs %d" % (len(a), len(b)))
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


class Ring:
    """Polynomial ring k[x_1..x_n] with k = Q or F_p, optionally modulo
    defining polynomials (hypersurface or general quotient)."""

    __slots__ = ("char", "names", "order", "quotient", "assume_equidimensional",
                 "_qgb", "_dim")

    def __init__(self, char, names, order=None, quotient=(), assume_equidimensional=False):
        char = int(char)
        if char != 0 and not is_prime(char):
            raise ValueError("characteristic %d is not prime" % char)
        if char >= 2 ** 31:
            raise ValueError("characteristic too large (needs p < 2^31)")
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable name")
        self.char = char
        self.names = names
        self.order = order if order is not None else TermOrder(GREVLEX)
        self.assume_equidimensional = bool(assume_equidimensional)
        self._qgb = None
        self._dim = None
        qpolys = [q for q in quotient if not q.is_zero]
        for q in qpolys:
            if q.ring.char != char or q.ring.names != names:
                raise RingMismatchError("quotient relation lives in a different ring")
        # re-root quotient polynomials onto the ambient (relation-free) ring
        if qpolys:
            amb = Ring(char, names, self.order)
            self.quotient = tuple(amb.poly(p.terms) for p in qpolys)
        else:
            self.quotient = ()

    # -- identity ---------------------------------------------------------

    def _ident(self):
        return (self.char, self.names, self.order._ident(),
                tuple(q.terms for q in self.quotient))

    def __eq__(self, other):
        return isinstance(other, Ring) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        base = "F_%d" % self.char if self.char else "Q"
        s = "%s[%s]" % (base, ",".join(self.names))
        if self.quotient:
            s += "/(%s)" % ";".join(str(q) for q in self.quotient)
        return s

    @property
    def arity(self):
        return len(self.names)

    @property
    def is_quotient(self):
        return bool(self.quotient)

    def ambient(self):
        """The same polynomial ring without quotient relations."""
        if not self.quotient:
            return self
        return Ring(self.char, self.names, self.order)

    def with_order(self, order):
        r = Ring(self.char, self.names, order)
        if self.quotient:
            r = Ring(self.char, self.names, order,
                     quotient=[Poly(r, q.terms) for q in self.quotient],
                     assume_equidimensional=self.assume_equidimensional)
        r.assume_equidimensional = self.assume_equidimensional
        return r

    def var_index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("unknown variable %r" % name) from None

    # -- coefficient field -------------------------------------------------

    def coeff(self, c):
        """Normalize a coefficient into the ring's field."""
        if self.char:
            return int(c) % self.char
        return Fraction(c)

    def coeff_inv(self, c):
        if self.char:
            return pow(c, -1, self.char)
        return Fraction(1) / c

    # -- element constructors ----------------------------------------------

    def poly(self, items):
        """Canonical polynomial from (exponent tuple, coefficient) pairs."""
        n = self.arity
        acc = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise RingMismatchError("exponent arity %d, ring arity %d" % (len(exps), n))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            acc[exps] = acc.get(exps, 0) + c
        return self._from_dict(acc)

    def _from_dict(self, acc):
        p = self.char
        terms = []
        for exps, c in acc.items():
            c = c % p if p else Fraction(c)
            if c:
                terms.append((exps, c))
        keyf = self.order.key
        terms.sort(key=lambda t: keyf(t[0]), reverse=True)
        return Poly(self, tuple(terms))

    def zero(self):
        return Poly(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.coeff(c)
        if not c:
            return self.zero()
        return Poly(self, (((0,) * self.arity, c),))

    def gen(self, i):
        exps = [0] * self.arity
        exps[i] = 1
        return Poly(self, ((tuple(exps), self.coeff(1)),))

    def gens(self):
        return [self.gen(i) for i in range(self.arity)]

    def monomial(self, exps, c=1):
        return self.poly([(tuple(exps), c)])


def _mono_text(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def _coeff_text(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return "%d/%d" % (c.numerator, c.denominator)
    return str(int(c))


class Poly:
    """Immutable canonical polynomial; see module docstring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_term(self):
        """Single term (a scalar multiple of a monomial)."""
        return len(self.terms) == 1

    def lead(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def lead_exps(self):
        return self.lead()[0]

    def lead_coeff(self):
        return self.lead()[1]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def min_degree(self):
        """Smallest total degree among terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(sum(e) for e, _ in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.terms == other.terms
                and self.ring == other.ring)

    def __hash__(self):
        return hash((self.ring.char, self.ring.names, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for k, (exps, c) in enumerate(self.terms):
            mono = _mono_text(names, exps)
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (_coeff_text(mag), mono)
            else:
                body = _coeff_text(mag)
            sign = "-" if neg else ("" if k == 0 else "+")
            out.append(sign + body)
        return "".join(out)

    def __repr__(self):
        return "Poly(%s)" % self

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __neg__(self):
        p = self.ring.char
        if p:
            return Poly(self.ring, tuple((e, p - c) for e, c in self.terms))
        return Poly(self.ring, tuple((e, -c) for e, c in self.terms))

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return self.ring._from_dict(acc)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) - c
        return self.ring._from_dict(acc)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            acc = {}
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    key = tuple(a + b for a, b in zip(e1, e2))
                    acc[key] = acc.get(key, 0) + c1 * c2
            return self.ring._from_dict(acc)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.coeff(c)
        if not c:
            return self.ring.zero()
        p = self.ring.char
        if p:
            return Poly(self.ring, tuple((e, (k * c) % p) for e, k in self.terms))
        return self.ring._from_dict({e: k * c for e, k in self.terms})

    def mul_term(self, exps, c):
        """Multiply by c * x^exps (used heavily by division)."""
        c = self.ring.coeff(c)
        if not c:
            return self.ring.zero()
        acc = {}
        for e, k in self.terms:
            acc[tuple(a + b for a, b in zip(e, exps))] = k * c
        return self.ring._from_dict(acc)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base2 = base * base if n > 1 else base
            base = base2
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == 1:
            return self
        return self.scale(self.ring.coeff_inv(lc))


def frobenius_power(f, q):
    """f^q for q a power of the characteristic, via the Frobenius map.

    Over F_p the coefficients are fixed by x -> x^q, so only exponents
    scale; this keeps the term count constant, unlike binary powering.
    """
    p = f.ring.char
    if p == 0:
        raise ValueError("Frobenius powers need positive characteristic")
    m = q
    while m > 1 and m % p == 0:
        m //= p
    if m != 1:
        raise ValueError("%d is not a power of the characteristic %d" % (q, p))
    terms = tuple((tuple(e * q for e in exps), pow(c, q, p)) for exps, c in f.terms)
    return Poly(f.ring, terms)


def derivative(f, i):
    """Partial derivative with respect to the i-th variable."""
    acc = {}
    for exps, c in f.terms:
        e = exps[i]
        if e == 0:
            continue
        key = exps[:i] + (e - 1,) + exps[i + 1:]
        acc[key] = acc.get(key, 0) + c * e
    return f.ring._from_dict(acc)
