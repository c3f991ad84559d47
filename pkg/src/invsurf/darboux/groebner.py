"""Small Buchberger engine over Q for the cofactor elimination.

Polynomials are dicts ``{exponent tuple: Fraction}``.  A monomial order is a
key function on exponent tuples; larger key means larger monomial.
"""

import heapq
from fractions import Fraction

from invsurf import errors
from invsurf._native import poly_mul


def grevlex(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def block_order(split):
    """Elimination order: grevlex on exp[:split], ties broken by grevlex on exp[split:]."""

    def key(exp):
        return (grevlex(exp[:split]), grevlex(exp[split:]))

    return key


def lex(exp):
    return exp


def _memo(key):
    cache = {}

    def cached(exp):
        v = cache.get(exp)
        if v is None:
            v = cache[exp] = key(exp)
        return v

    return cached


def leading(p, key):
    e = max(p, key=key)
    return e, p[e]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(p, q, c, shift):
    """p - c * x^shift * q, in place on p."""
    for e, v in q.items():
        ne = tuple(x + y for x, y in zip(e, shift))
        w = p.get(ne, 0) - c * v
        if w:
            p[ne] = w
        else:
            p.pop(ne, None)


def monic(p, key):
    if not p:
        return p
    _, c = leading(p, key)
    if c == 1:
        return p
    return {e: v / c for e, v in p.items()}


def reduce(p, basis, key):
    """Full normal form of p modulo ``basis`` (list of (lead exp, lead coef, poly))."""
    p = dict(p)
    rem = {}
    while p:
        e, c = leading(p, key)
        for le, lc, g in basis:
            if _divides(le, e):
                shift = tuple(x - y for x, y in zip(e, le))
                _sub_scaled(p, g, c / lc, shift)
                break
        else:
            rem[e] = c
            del p[e]
    return rem


def s_poly(f, g, key):
    ef, cf = leading(f, key)
    eg, cg = leading(g, key)
    l = _lcm(ef, eg)
    out = {}
    sf = tuple(x - y for x, y in zip(l, ef))
    sg = tuple(x - y for x, y in zip(l, eg))
    for e, v in f.items():
        out[tuple(x + y for x, y in zip(e, sf))] = v / cf
    _sub_scaled(out, g, 1 / cg, sg)
    return out


def groebner(polys, key, degree_cap=None, max_basis=None):
    """Reduced Groebner basis; returns (basis, truncated).

    Pairs whose lcm exceeds ``degree_cap`` in total degree are skipped and
    ``truncated`` is set, in which case the unreduced working basis is
    returned: it generates the ideal but may not be a Groebner basis.
    Growing past ``max_basis`` elements raises EliminationBudgetExceeded.
    """
    key = _memo(key)
    basis = []
    for p in polys:
        p = {e: Fraction(v) for e, v in p.items() if v}
        if p:
            basis.append(monic(p, key))
    seen = set()
    unique = []
    for g in basis:
        sig = tuple(sorted(g.items()))
        if sig not in seen:
            seen.add(sig)
            unique.append(g)
    basis = unique
    if max_basis is not None and len(basis) > max_basis:
        raise errors.EliminationBudgetExceeded(
            f"Groebner basis grew past {max_basis} elements", basis_size=len(basis)
        )
    if any(len(g) == 1 and not any(next(iter(g))) for g in basis):
        return [{tuple(0 for _ in next(iter(basis[0]))): Fraction(1)}], False
    leads = [leading(g, key)[0] for g in basis]
    heap = []
    pending = set()

    def add_pairs(k):
        for t in range(k):
            l = _lcm(leads[k], leads[t])
            heapq.heappush(heap, (sum(l), key(l), k, t))
            pending.add((k, t))

    for k in range(len(basis)):
        add_pairs(k)
    truncated = False
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        if all(a + b == c for a, b, c in zip(li, lj, l)):
            continue  # coprime leading monomials reduce to zero
        if _chain_skip(i, j, l, leads, pending):
            continue
        if degree_cap is not None and sum(l) > degree_cap:
            truncated = True
            continue
        s = s_poly(basis[i], basis[j], key)
        live = [(leads[k], basis[k][leads[k]], basis[k]) for k in range(len(basis))]
        r = reduce(s, live, key)
        if not r:
            continue
        r = monic(r, key)
        le = leading(r, key)[0]
        if not any(le):
            return [{le: Fraction(1)}], truncated
        basis.append(r)
        leads.append(le)
        add_pairs(len(basis) - 1)
        if max_basis is not None and len(basis) > max_basis:
            raise errors.EliminationBudgetExceeded(
                f"Groebner basis grew past {max_basis} elements", basis_size=len(basis)
            )
    if truncated:
        return basis, truncated
    return _reduce_minimal(basis, leads, key), truncated


def _chain_skip(i, j, l, leads, pending):
    """Chain criterion: skip (i, j) if some k has lead dividing l and both pairs (i,k),(j,k) done."""
    for k in range(len(leads)):
        if k in (i, j):
            continue
        if not _divides(leads[k], l):
            continue
        if (max(i, k), min(i, k)) in pending or (max(j, k), min(j, k)) in pending:
            continue
        if _lcm(leads[i], leads[k]) != l and _lcm(leads[j], leads[k]) != l:
            return True
    return False


def _reduce_minimal(basis, leads, key):
    """Reduced basis from a Groebner basis: drop redundant leads, then tail-reduce each element once."""
    keep = []
    for i, li in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if j == i or not _divides(lj, li):
                continue
            if lj != li or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    out = []
    for idx, g in enumerate(minimal):
        others = [(leading(h, key)[0], leading(h, key)[1], h) for t, h in enumerate(minimal) if t != idx]
        out.append(monic(reduce(g, others, key), key))
    out.sort(key=lambda g: key(leading(g, key)[0]))
    return out


def mul(p, q):
    return poly_mul(p, q)
