"""Semi-invariants: verification, bounded search and Jacobi multipliers."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

import mpmath

from invsurf import errors
from invsurf.darboux import groebner as gb
from invsurf.darboux.roots import rational_roots
from invsurf.exact.rational import echelon
from invsurf.exact.tower import QQ
from invsurf.poly import univariate as uv
from invsurf.poly.mpoly import MPoly, grevlex_key
from invsurf.poly.vfield import divergence, lie_derivative

IRREDUCIBILITY_NOTE = "irreducibility not certified"
DEFAULT_BUDGET = 400


@dataclass(frozen=True)
class SemiInvariant:
    psi: MPoly
    cofactor: MPoly
    degree: int


@dataclass(frozen=True)
class Verified:
    semi: SemiInvariant


@dataclass(frozen=True)
class NotSemiInvariant:
    lie: MPoly


def verify_semi_invariant(f, psi):
    """Verified(SemiInvariant) when X_f(psi) = lambda psi for a polynomial lambda."""
    if psi.is_constant():
        raise errors.ConstantInput("semi-invariants must be nonconstant")
    lie = lie_derivative(f, psi)
    lam = lie.divide_exact(psi)
    if lam is None:
        return NotSemiInvariant(lie)
    if lam and lam.degree() > f.m - 1:
        raise errors.VerificationFailed("cofactor degree exceeds m - 1")
    return Verified(SemiInvariant(psi, lam, psi.degree()))


# -- search --------------------------------------------------------------


def monomials(n, max_degree, min_degree=0):
    """Exponent tuples with min_degree <= total degree <= max_degree, largest first."""
    out = []
    for d in range(min_degree, max_degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return sorted(set(out), key=grevlex_key, reverse=True)


def _field_terms(f):
    comps = []
    for c in f.components:
        if c.field.k:
            raise errors.UnsupportedField("the search runs over rational coefficients only")
        comps.append({e: x.rational_value() for e, x in c.terms.items()})
    return comps


def _unit(nv, i):
    e = [0] * nv
    e[i] = 1
    return tuple(e)


def _add_into(table, xmon, umon, value):
    eq = table.setdefault(xmon, {})
    v = eq.get(umon, 0) + value
    if v:
        eq[umon] = v
    else:
        eq.pop(umon, None)


def cofactor_system(fterms, n, lead, lower, lam_mons):
    """Coefficient equations of X_f(psi) - lambda psi for psi = x^lead + sum c_a x^a.

    Unknowns are the c_a (indices 0..k-1, in ``lower`` order) followed by the
    lambda coefficients.  Returns a list of polynomials in the unknowns.
    """
    k = len(lower)
    nv = k + len(lam_mons)
    zero = (0,) * nv
    psi_terms = [(lead, zero)] + [(a, _unit(nv, i)) for i, a in enumerate(lower)]
    table = {}
    for alpha, umon in psi_terms:
        for i in range(n):
            if not alpha[i]:
                continue
            base = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            for delta, coef in fterms[i].items():
                xm = tuple(a + b for a, b in zip(base, delta))
                _add_into(table, xm, umon, alpha[i] * coef)
        for j, beta in enumerate(lam_mons):
            lidx = k + j
            xm = tuple(a + b for a, b in zip(alpha, beta))
            um = list(umon)
            um[lidx] += 1
            _add_into(table, xm, tuple(um), Fraction(-1))
    return [eq for _, eq in sorted(table.items()) if eq]


def _solve_triangular(polys, nl):
    """Rational points of a zero-dimensional ideal given by a lex basis in nl variables.

    Returns (points, complete); complete is False when some variable is
    unconstrained (positive-dimensional component).
    """
    complete = True

    # group by the largest variable involved (smallest index under lex)
    by_level = {}
    for p in polys:
        top = min((i for e in p for i, x in enumerate(e) if x), default=nl)
        by_level.setdefault(top, []).append(p)

    points = []

    def recurse(j, assign):
        nonlocal complete
        if j < 0:
            points.append(tuple(assign[i] for i in range(nl)))
            return
        polys_j = by_level.get(j, [])
        unis = []
        for p in polys_j:
            u = {}
            for e, c in p.items():
                val = c
                for i in range(j + 1, nl):
                    if e[i]:
                        val *= assign[i] ** e[i]
                u[e[j]] = u.get(e[j], 0) + val
            coeffs = uv.trim([u.get(d, Fraction(0)) for d in range(max(u) + 1)])
            if coeffs:
                unis.append(coeffs)
        if not unis:
            complete = False
            return
        g = unis[0]
        for u in unis[1:]:
            g = uv.gcd(g, u)
        if len(g) <= 1:
            return
        for r in rational_roots(g):
            assign[j] = r
            recurse(j - 1, assign)
        assign.pop(j, None)

    # the constant polynomial 1 means an empty variety
    if any(len(p) == 1 and not any(next(iter(p))) for p in polys):
        return [], True
    recurse(nl - 1, {})
    return points, complete


def _linear_solution(eqs, k, lam_point):
    """Solve the cofactor equations for the c unknowns with lambda fixed.

    Returns the particular solution with every free unknown set to 0, or
    None when the system is inconsistent.
    """
    rows = []
    for eq in eqs:
        row = [Fraction(0)] * (k + 1)
        for e, c in eq.items():
            val = Fraction(c)
            for j, lv in enumerate(lam_point):
                if e[k + j]:
                    val *= lv ** e[k + j]
            cidx = next((i for i in range(k) if e[i]), None)
            if cidx is None:
                row[k] -= val
            else:
                row[cidx] += val
        if any(row):
            rows.append(row)
    if not rows:
        return [Fraction(0)] * k
    ech, pivots = echelon(rows)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = ech[r]
        acc = Fraction(row[k]) - sum((row[j] * x[j] for j in range(pc + 1, k) if row[j]), Fraction(0))
        x[pc] = acc / row[pc]
    return x


@dataclass
class SearchResult:
    found: list
    complete: bool
    flags: list = field(default_factory=list)
    note: str = IRREDUCIBILITY_NOTE


def search_semi_invariants(f, d_max, budget=DEFAULT_BUDGET, degree_cap=None, raise_on_budget=False):
    """All rational semi-invariants of degree <= d_max, up to the elimination budget.

    For each leading monomial of each degree the normalized cofactor system
    is eliminated down to the cofactor coefficients (block order), the
    rational cofactors are solved for, and psi follows by linear algebra.
    Every candidate is re-verified; candidates divisible by an earlier one
    are dropped, so products of found semi-invariants never appear.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    n, m = f.n, f.m
    fterms = _field_terms(f)
    lam_mons = monomials(n, max(m - 1, 0))
    flags = []
    complete = True
    raw = []
    for d in range(1, d_max + 1):
        mons = monomials(n, d)
        cap = degree_cap if degree_cap is not None else 2 * (d + m)
        for idx, lead in enumerate(mons):
            if sum(lead) != d:
                continue
            lower = mons[idx + 1:]
            k = len(lower)
            eqs = cofactor_system(fterms, n, lead, lower, lam_mons)
            try:
                basis, truncated = gb.groebner(eqs, gb.block_order(k), degree_cap=cap, max_basis=budget)
            except errors.EliminationBudgetExceeded as exc:
                if raise_on_budget:
                    raise
                flags.append(f"budget exceeded at leading monomial {lead}: {exc}")
                complete = False
                continue
            if truncated:
                flags.append(f"degree cap {cap} reached at leading monomial {lead}")
                complete = False
            lam_ideal = [
                {e[k:]: c for e, c in g.items()} for g in basis if all(not any(e[:k]) for e in g)
            ]
            if any(len(g) == 1 and not any(next(iter(g))) for g in lam_ideal):
                continue
            try:
                lex_basis, _ = gb.groebner(lam_ideal, gb.lex, max_basis=budget) if lam_ideal else ([], False)
            except errors.EliminationBudgetExceeded as exc:
                if raise_on_budget:
                    raise
                flags.append(f"budget exceeded solving cofactors at {lead}: {exc}")
                complete = False
                continue
            try:
                points, finite = _solve_triangular(lex_basis, len(lam_mons))
            except mpmath.libmp.NoConvergence:
                flags.append(f"root isolation failed at leading monomial {lead}")
                complete = False
                continue
            if not finite:
                flags.append(f"positive-dimensional cofactor family at leading monomial {lead}")
                complete = False
            for lp in points:
                sol = _linear_solution(eqs, k, lp)
                if sol is None:
                    continue
                terms = {lead: Fraction(1)}
                for a, c in zip(lower, sol):
                    if c:
                        terms[a] = c
                raw.append(MPoly(n, terms, QQ))
    found = []
    for psi in _canonical_order(raw):
        if any(psi.divide_exact(prev.psi) is not None for prev in found):
            continue
        res = verify_semi_invariant(f, psi)
        if not isinstance(res, Verified):
            raise errors.VerificationFailed("search produced a polynomial that is not a semi-invariant")
        found.append(res.semi)
    return SearchResult(found=found, complete=complete, flags=flags)


def _canonical_order(polys):
    """Lower degree first; within a degree, larger leading monomials first."""
    out = sorted(polys, key=str)
    out.sort(key=lambda p: [grevlex_key(e) for e, _ in p.sorted_terms()], reverse=True)
    out.sort(key=lambda p: p.degree())
    return out


# -- Jacobi multipliers ----------------------------------------------------


@dataclass(frozen=True)
class Valid:
    cofactors: tuple


@dataclass(frozen=True)
class Invalid:
    residual: MPoly
    cofactors: tuple


def verify_jacobi_multiplier(f, factors):
    """Check that (prod phi_i^d_i)^-1 is a Jacobi multiplier: sum d_i lambda_i = div f."""
    total = MPoly.zero(f.n, f.field)
    cofactors = []
    for i, (phi, d) in enumerate(factors):
        res = verify_semi_invariant(f, phi)
        if not isinstance(res, Verified):
            raise errors.FactorNotSemiInvariant(f"factor {i} is not a semi-invariant", index=i)
        cofactors.append(res.semi.cofactor)
        total = total + res.semi.cofactor * Fraction(d)
    residual = total - divergence(f)
    if not residual:
        return Valid(tuple(cofactors))
    return Invalid(residual, tuple(cofactors))
