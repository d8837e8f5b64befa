"""Buchberger's algorithm, normal forms, membership and Krull dimension.

The reduced Groebner basis is unique for a fixed ideal and term order, so
the output here is canonical: generator-order shuffles of the input give
byte-identical bases.  A global step budget bounds every reduction loop.
"""

from __future__ import annotations

from .polys import RingMismatchError

DEFAULT_BUDGET = 10 ** 6
_default_budget = DEFAULT_BUDGET


def set_default_budget(steps):
    """Override the global reduction-step budget (None restores default)."""
    global _default_budget
    _default_budget = DEFAULT_BUDGET if steps is None else int(steps)


def _resolve_budget(steps):
    return _default_budget if steps is None else steps


class BudgetExceededError(RuntimeError):
    """The configured pair/step budget was exhausted."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps):
        self.left = steps

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceededError("reduction step budget exceeded")


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce_dict(work, reducers, ring, budget):
    """Full multivariate division of `work` (a dict) by monic reducers.

    Returns the remainder dict.  Reducers are (lead exps, tail terms)
    pairs tried in list order, which fixes the division path.
    """
    p = ring.char
    keyf = ring.order.key
    remainder = {}
    while work:
        e = max(work, key=keyf)
        c = work.pop(e)
        if not c:
            continue
        budget.spend()
        hit = None
        for le, tail in reducers:
            if _divides(le, e):
                hit = (le, tail)
                break
        if hit is None:
            remainder[e] = c
            continue
        le, tail = hit
        shift = tuple(a - b for a, b in zip(e, le))
        if p:
            for te, tc in tail:
                key = tuple(a + b for a, b in zip(te, shift))
                v = (work.get(key, 0) - c * tc) % p
                if v:
                    work[key] = v
                elif key in work:
                    del work[key]
        else:
            for te, tc in tail:
                key = tuple(a + b for a, b in zip(te, shift))
                v = work.get(key, 0) - c * tc
                if v:
                    work[key] = v
                elif key in work:
                    del work[key]
    return remainder


def _as_reducer(g):
    # g must be monic
    return (g.terms[0][0], g.terms[1:])


def _from_dict(ring, d):
    return ring._from_dict(dict(d))


def normal_form(f, basis, budget_steps=None):
    """Remainder of f on division by `basis` (GroebnerBasis or poly list).

    When `basis` is a Groebner basis the remainder is the canonical normal
    form: it is 0 exactly when f lies in the ideal.
    """
    polys = basis.generators if isinstance(basis, GroebnerBasis) else tuple(basis)
    polys = [g.monic() for g in polys if not g.is_zero]
    if f.is_zero or not polys:
        return f
    if f.ring != polys[0].ring:
        raise RingMismatchError("normal form across different rings")
    reducers = [_as_reducer(g) for g in polys]
    budget = _Budget(_resolve_budget(budget_steps))
    rem = _reduce_dict(dict(f.terms), reducers, f.ring, budget)
    return _from_dict(f.ring, rem)


def exact_div(f, g):
    """Quotient f/g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    lc = g.lead_coeff()
    le = g.lead_exps()
    work = dict(f.terms)
    quot = {}
    keyf = ring.order.key
    p = ring.char
    while work:
        e = max(work, key=keyf)
        c = work.pop(e)
        if not c:
            continue
        if not _divides(le, e):
            raise ValueError("not an exact multiple")
        shift = tuple(a - b for a, b in zip(e, le))
        q = c * ring.coeff_inv(lc) if not p else (c * pow(lc, -1, p)) % p
        quot[shift] = quot.get(shift, 0) + q
        for te, tc in g.terms[1:]:
            key = tuple(a + b for a, b in zip(te, shift))
            v = work.get(key, 0) - q * tc
            if p:
                v %= p
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return _from_dict(ring, quot)


class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, canonically sorted."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = tuple(generators)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis)
                and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "GroebnerBasis[%s]" % "; ".join(str(g) for g in self.generators)

    def normal_form(self, f, budget_steps=None):
        return normal_form(f, self, budget_steps)

    def contains(self, f, budget_steps=None):
        return self.normal_form(f, budget_steps).is_zero

    @property
    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].total_degree() == 0

    def lead_supports(self):
        return [frozenset(i for i, e in enumerate(g.lead_exps()) if e)
                for g in self.generators]


def _spoly(f, g, ring):
    fe, ge = f.lead_exps(), g.lead_exps()
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, fe)), 1)
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, ge)), 1)
    return a - b


def buchberger(gens, ring=None, budget_steps=None):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Normal pair selection (smallest lcm first) with the coprimality and
    chain criteria; the result is independent of generator order.
    """
    gens = [g for g in gens if not g.is_zero]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
    if not gens:
        return GroebnerBasis(ring, ())

    budget = _Budget(_resolve_budget(budget_steps))
    keyf = ring.order.key

    # canonical starting basis: monic, deduplicated, sorted
    seen = set()
    basis = []
    for g in sorted((g.monic() for g in gens), key=lambda g: keyf(g.lead_exps())):
        if g.terms not in seen:
            seen.add(g.terms)
            basis.append(g)

    lead = [g.lead_exps() for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(lead[i], lead[j]))

    while pairs:
        i, j = min(pairs, key=lambda ij: (keyf(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        done.add((i, j))
        lcm = lcm_of(i, j)
        # coprime leading terms: S-polynomial reduces to zero
        if lcm == tuple(a + b for a, b in zip(lead[i], lead[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lead[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done and a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], ring)
        if s.is_zero:
            continue
        reducers = [_as_reducer(g) for g in basis]
        rem = _reduce_dict(dict(s.terms), reducers, ring, budget)
        r = _from_dict(ring, rem)
        if r.is_zero:
            continue
        r = r.monic()
        basis.append(r)
        lead.append(r.lead_exps())
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))

    return _reduce_basis(basis, ring, budget)


def _reduce_basis(basis, ring, budget):
    keyf = ring.order.key
    # minimalize: drop generators whose lead is divisible by another lead
    minimal = []
    for g in sorted(basis, key=lambda g: keyf(g.lead_exps())):
        if not any(_divides(h.lead_exps(), g.lead_exps()) for h in minimal):
            minimal.append(g)
    # inter-reduce tails until stable
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            reducers = [_as_reducer(h) for h in others]
            rem = _reduce_dict(dict(g.terms), reducers, ring, budget)
            r = _from_dict(ring, rem).monic()
            if r != g:
                minimal[idx] = r
                changed = True
    minimal.sort(key=lambda g: keyf(g.lead_exps()), reverse=True)
    return GroebnerBasis(ring, tuple(minimal))


def is_member(f, ideal, budget_steps=None):
    """Ideal membership via the cached reduced basis (quotient-aware)."""
    if f.ring != ideal.ring:
        raise RingMismatchError("membership test across different rings")
    return ideal.groebner().contains(f, budget_steps)


def dim_from_supports(supports, nvars):
    """Combinatorial Krull dimension from leading-term supports.

    dim = size of the largest variable subset S such that no leading
    support is contained in S; -1 when a constant leads (unit ideal).
    """
    from itertools import combinations

    if any(not s for s in supports):
        return -1
    allvars = range(nvars)
    for k in range(nvars, -1, -1):
        for subset in combinations(allvars, k):
            sset = set(subset)
            if not any(s <= sset for s in supports):
                return k
    return -1


def krull_dim(ideal):
    """Krull dimension of (ambient ring)/ideal; -1 for the unit ideal."""
    gb = ideal.groebner()
    return dim_from_supports(gb.lead_supports(), ideal.ring.arity)
