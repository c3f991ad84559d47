"""Closed-form degree bounds for semi-invariants and Jacobi multipliers, as exact arithmetic."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from invsurf.infinity.spectrum import Cond1

PASS, FAIL, NA = "Pass", "Fail", "NotApplicable"


def line_bound(m, n):
    """Number of invariant lines of a generic homogeneous degree-m field on n-space."""
    if m == 1:
        return n
    return (m ** n - 1) // (m - 1)


@dataclass
class Check:
    name: str
    status: str
    lhs: object = None
    rhs: object = None
    hypotheses: dict = field(default_factory=dict)
    note: str = ""

    def to_json(self):
        out = {"name": self.name, "status": self.status, "hypotheses": dict(self.hypotheses)}
        if self.lhs is not None:
            out["lhs"] = str(self.lhs)
        if self.rhs is not None:
            out["rhs"] = str(self.rhs)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class BoundsReport:
    m: int
    n: int
    line_count_bound: int
    curve_bound: int
    multiplier_degree_sum: int
    carnicer_degree_cap: object
    max_homogeneous_count: object
    checks: list

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "line_count_bound": self.line_count_bound,
            "curve_bound": self.curve_bound,
            "multiplier_degree_sum": self.multiplier_degree_sum,
            "carnicer_degree_cap": self.carnicer_degree_cap,
            "max_homogeneous_count": self.max_homogeneous_count,
            "checks": [c.to_json() for c in self.checks],
        }


def _pair_count_cap(bound):
    """Largest l with l(l-1)/2 <= bound."""
    l = 1
    while (l + 1) * l // 2 <= bound:
        l += 1
    return l


def _property_e_info(source):
    """(verdict, has Cond1 point) from a verdict string, a PropertyEReport or its JSON."""
    if source is None:
        return None, None
    if isinstance(source, str):
        return source, None
    if isinstance(source, dict):
        kinds = [p.get("classification", {}).get("kind") for p in source.get("points", [])]
        return source.get("verdict"), ("Cond1" in kinds) if kinds else None
    return source.verdict, any(isinstance(p.classification, Cond1) for p in source.points)


def _property_e_flag(verdict):
    if verdict is None:
        return "assumed"
    return "certified" if verdict == "Satisfied" else "not satisfied"


def bounds_report(m, n, degrees=None, exponents=None, property_e=None):
    """Evaluate every bound for degree m in dimension n and check supplied data against it.

    ``degrees`` are degrees of pairwise relatively prime semi-invariants,
    ``exponents`` the exponents d_i of a multiplier prod phi_i^(-d_i) (paired
    with ``degrees``), ``property_e`` a verdict string, a PropertyEReport or
    its JSON form.
    """
    if m < 2 or n < 2:
        raise ValueError("bounds need m >= 2 and n >= 2")
    verdict, cond1 = _property_e_info(property_e)
    bound = line_bound(m, n)
    pe = _property_e_flag(verdict)
    base_hyp = {"property_E": pe, "relative_primality": "asserted" if degrees else "unverified"}
    if n == 3:
        base_hyp["property_S"] = "automatic (n=3)"
    else:
        base_hyp["property_S"] = "assumed"
    checks = []
    degrees = list(degrees or [])

    # product of any n-1 degrees
    if len(degrees) >= n - 1:
        worst = max(prod(s) for s in combinations(degrees, n - 1))
        checks.append(Check("product_bound", PASS if worst <= bound else FAIL, worst, bound, dict(base_hyp)))
    else:
        checks.append(Check("product_bound", NA, None, bound, dict(base_hyp),
                            note=f"needs at least {n - 1} degrees"))

    # subset-sum inequality for k >= n factors
    k = len(degrees)
    if k >= n:
        total = Fraction(0)
        for sub in combinations(range(k), k + 1 - n):
            total += Fraction(1, prod(degrees[j] for j in sub))
        lhs = prod(degrees) * total
        checks.append(Check("subset_sum_bound", PASS if lhs <= bound else FAIL, lhs, bound, dict(base_hyp)))
    else:
        checks.append(Check("subset_sum_bound", NA, None, bound, dict(base_hyp),
                            note=f"needs at least {n} degrees"))

    # multiplier exponents and degree sum
    mult_sum = m + n - 1
    hyp = dict(base_hyp)
    hyp["independent_eigenvalues_point"] = (
        "unverified" if cond1 is None else ("certified" if cond1 else "not found")
    )
    if exponents is not None:
        exps = [Fraction(d) for d in exponents]
        if len(exps) != len(degrees):
            checks.append(Check("multiplier_shape", NA, None, mult_sum, hyp,
                                note="exponents and degrees differ in length"))
        else:
            ok = all(d == 1 for d in exps) and sum(degrees) == mult_sum
            lhs = sum(d * r for d, r in zip(exps, degrees))
            checks.append(Check("multiplier_shape", PASS if ok else FAIL, lhs, mult_sum, hyp,
                                note="all exponents 1 and degree sum m+n-1"))
    else:
        checks.append(Check("multiplier_shape", NA, None, mult_sum, hyp, note="no exponents supplied"))

    # dimension three, highest-degree part
    if n == 3:
        cap = m + 1
        lcap = _pair_count_cap(bound)
        hyp3 = dict(base_hyp)
        hyp3["no_stationary_points_at_infinity_of_reduction"] = "unverified"
        if degrees:
            over = [d for d in degrees if d > cap]
            checks.append(Check("homogeneous_degree_cap", FAIL if over else PASS, max(degrees), cap, hyp3))
            if len(degrees) >= 2:
                pair = sum(a * b for a, b in combinations(degrees, 2))
                checks.append(Check("homogeneous_pair_bound", PASS if pair <= bound else FAIL, pair, bound, hyp3))
            else:
                checks.append(Check("homogeneous_pair_bound", NA, None, bound, hyp3, note="needs two degrees"))
        else:
            checks.append(Check("homogeneous_degree_cap", NA, None, cap, hyp3))
            checks.append(Check("homogeneous_pair_bound", NA, None, bound, hyp3))
    else:
        cap = None
        lcap = None

    return BoundsReport(
        m=m,
        n=n,
        line_count_bound=bound,
        curve_bound=bound,
        multiplier_degree_sum=mult_sum,
        carnicer_degree_cap=cap,
        max_homogeneous_count=lcap,
        checks=checks,
    )
