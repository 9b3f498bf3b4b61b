"""Machine checks for the log-concavity claims and the exploratory searches.

Each checker returns a Report.  A report's status is "verified" or
"falsified" for claims with a definite expected outcome at the requested
scope, and "exploratory" for open-ended searches, where any violation found
is recorded as a witness instead of failing.  Reports carry no timing data
so that serialized output is byte-stable across runs.

Claim identifiers accepted by run_claim:

  main1        every cluster variable over the snake triangulation has a
               log-concave numerator; path expansion and seed mutation must
               produce the same set of variables
  coeff012     numerator coefficients are 1 or 2 (coefficient-free), and
               all 1 when boundary edges are kept as frozen variables
  gyo21        the x->1 degree matrix equals the positive part of the
               denominator matrix, seed by seed (plus the companion-matrix
               duality and denominator cross-checks)
  fpoly        every x->1 specialization is log-concave with degrees 0/1
  separation   each variable factors as a frozen monomial times its x->1
               specialization evaluated at the hatted monomials
  a2-monomials rank-2 cluster monomials: log-concave numerators, the
               binomial closed form on the middle chart, and the supporting
               binomial-coefficient inequality
  conj-an      exploratory: log-concavity of cluster monomial numerators in
               higher ranks
  conj1-a2     exploratory: expansion constants of products of rank-2
               cluster monomials, arranged chart by chart, stay nonnegative
               and log-concave
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as iter_product
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (
    LaurentPoly,
    is_log_concave,
    normalize_denominator,
    poly_to_json,
)
from .pattern import (
    DEFAULT_BUDGET,
    PatternState,
    _mat_mul,
    _pos_part,
    a_n_matrix,
    canonical_seed_key,
    check_separation,
    coefficient_free_seed,
    enumerate_exchange_graph,
    f_data,
    principal_state,
    state_step,
)
from .polygon import expand_variable, zigzag

CLAIM_IDS = (
    "main1",
    "coeff012",
    "gyo21",
    "fpoly",
    "separation",
    "a2-monomials",
    "conj-an",
    "conj1-a2",
)

_EXPLORATORY = {"conj-an", "conj1-a2"}


@dataclass
class Report:
    claim: str
    scope: Dict[str, int]
    status: str  # "verified" | "falsified" | "exploratory"
    witnesses: List[dict] = field(default_factory=list)
    stats: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.status == "verified":
            return True
        return self.status == "exploratory" and not self.witnesses

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "scope": dict(self.scope),
            "status": self.status,
            "witnesses": list(self.witnesses),
            "stats": dict(self.stats),
        }


def _settle(report: Report) -> Report:
    """Fill in verified/falsified from the witness list; exploratory stays."""
    if report.status != "exploratory":
        report.status = "falsified" if report.witnesses else "verified"
    return report


def _logcc_witness(p: LaurentPoly, **extra) -> Optional[dict]:
    res = is_log_concave(p)
    if res.ok:
        return None
    out = dict(extra)
    out["axis"] = res.axis
    out["point"] = list(res.point)
    out["poly"] = poly_to_json(p)
    return out


# ---- principal-coefficient seed sweep ----


def _principal_states(n: int, budget: Optional[int]) -> List[PatternState]:
    """Every principal seed of the rank-n pattern, with its companion matrices.

    Breadth-first over seeds up to relabeling; the companion matrices stored
    for a seed follow the labeling of the first path that reached it, which
    keeps columns aligned with cluster positions.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    state0 = principal_state(a_n_matrix(n))
    index = {canonical_seed_key(state0.seed): 0}
    states = [state0]
    frontier = [0]
    while frontier:
        nxt: List[int] = []
        for i in frontier:
            st = states[i]
            for k in range(1, n + 1):
                t = state_step(st, k)
                key = canonical_seed_key(t.seed)
                if key not in index:
                    if len(states) >= budget:
                        raise RuntimeError("exchange graph not closed within budget")
                    index[key] = len(states)
                    states.append(t)
                    nxt.append(len(states) - 1)
        frontier = nxt
    return states


# ---- claim checkers ----


def verify_main1(n: int, budget: Optional[int] = None) -> Report:
    """Numerator log-concavity for all variables over the snake triangulation.

    The variables are produced twice: by admissible-path expansion of every
    chord, and independently by exhausting seed mutation from the matching
    coefficient-free seed.  The two sets must agree, the count must be
    n(n+3)/2, and every numerator must pass the log-concavity check.
    """
    report = Report("main1", {"rank": n}, "pending")
    tri = zigzag(n)
    size = tri.size
    diag_set = {tri.pair_of(k): k for k in range(1, n + 1)}

    by_key: Dict[tuple, LaurentPoly] = {}
    for a in range(size):
        for b in range(a + 2, size):
            if a == 0 and b == size - 1:
                continue  # boundary edge, not a chord
            label = diag_set.get((a, b))
            if label is not None:
                p = LaurentPoly.variable(n, label - 1)
            else:
                p = expand_variable(tri, a, b, coefficient_free=True)
            by_key[p.key()] = p

    graph = enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(n)), budget)
    if not graph.closed:
        raise RuntimeError("exchange graph not closed within budget")
    mutated: Dict[tuple, LaurentPoly] = {}
    for s in graph.seeds:
        for x in s.cluster:
            mutated.setdefault(x.key(), x)

    expected = n * (n + 3) // 2
    if len(by_key) != expected:
        report.witnesses.append(
            {"kind": "count", "route": "paths", "expected": expected, "got": len(by_key)}
        )
    if len(mutated) != expected:
        report.witnesses.append(
            {"kind": "count", "route": "mutation", "expected": expected, "got": len(mutated)}
        )
    only_paths = sorted(set(by_key) - set(mutated))
    only_mutation = sorted(set(mutated) - set(by_key))
    for key in only_paths[:5]:
        report.witnesses.append(
            {"kind": "route-mismatch", "route": "paths-only", "poly": poly_to_json(by_key[key])}
        )
    for key in only_mutation[:5]:
        report.witnesses.append(
            {"kind": "route-mismatch", "route": "mutation-only", "poly": poly_to_json(mutated[key])}
        )

    max_coeff = 0
    for key in sorted(by_key):
        numerator = normalize_denominator(by_key[key], n).numerator
        max_coeff = max(max_coeff, max(numerator.coefficients()))
        w = _logcc_witness(numerator, kind="not-log-concave")
        if w is not None:
            report.witnesses.append(w)

    report.stats = {
        "num_variables": len(by_key),
        "num_seeds": len(graph.seeds),
        "max_numerator_coefficient": max_coeff,
    }
    return _settle(report)


def verify_coeff_bounds(n: int) -> Report:
    """Numerator coefficient bounds over the snake triangulation.

    Coefficient-free expansions may only repeat a monomial twice; keeping
    boundary edges as frozen variables must separate all paths, so every
    coefficient is 1 there.
    """
    report = Report("coeff012", {"rank": n}, "pending")
    tri = zigzag(n)
    size = tri.size
    diag_pairs = set(tri.diagonal_pairs())
    num_chords = 0
    has_two = False
    for a in range(size):
        for b in range(a + 2, size):
            if a == 0 and b == size - 1:
                continue
            if (a, b) in diag_pairs:
                continue  # plain variables, coefficient 1 trivially
            num_chords += 1
            free = expand_variable(tri, a, b, coefficient_free=True)
            kept = expand_variable(tri, a, b, coefficient_free=False)
            free_coeffs = set(free.coefficients())
            if not free_coeffs <= {1, 2}:
                report.witnesses.append(
                    {
                        "kind": "coefficient-free-out-of-range",
                        "chord": [a, b],
                        "coefficients": sorted(free_coeffs),
                        "poly": poly_to_json(free),
                    }
                )
            if 2 in free_coeffs:
                has_two = True
            kept_coeffs = set(kept.coefficients())
            if kept_coeffs != {1}:
                report.witnesses.append(
                    {
                        "kind": "kept-coefficient-not-one",
                        "chord": [a, b],
                        "coefficients": sorted(kept_coeffs),
                        "poly": poly_to_json(kept),
                    }
                )
    report.stats = {"num_chords": num_chords, "has_coefficient_two": has_two}
    return _settle(report)


def verify_fd(n: int, budget: Optional[int] = None) -> Report:
    """Degree matrix vs denominator matrix at every principal seed.

    Checks, seed by seed: the x->1 degree matrix equals the entrywise
    positive part of the denominator matrix; the initial matrix intertwines
    the two companion matrices; denominator columns match the normalized
    denominators of the actual variables; coefficient exponent vectors match
    the columns of the coefficient companion matrix.
    """
    report = Report("gyo21", {"rank": n}, "pending")
    states = _principal_states(n, budget)
    B0 = states[0].seed.B
    for idx, st in enumerate(states):
        seed = st.seed
        fm = f_data(seed).f_matrix
        if fm != _pos_part(st.D):
            report.witnesses.append(
                {
                    "kind": "degree-vs-denominator",
                    "seed_index": idx,
                    "history": list(seed.history),
                    "f_matrix": [list(r) for r in fm],
                    "d_matrix": [list(r) for r in st.D],
                }
            )
        if _mat_mul(B0, st.C) != _mat_mul(st.G, seed.B):
            report.witnesses.append(
                {
                    "kind": "companion-duality",
                    "seed_index": idx,
                    "history": list(seed.history),
                    "C": [list(r) for r in st.C],
                    "G": [list(r) for r in st.G],
                }
            )
        for i in range(n):
            d_col = tuple(st.D[j][i] for j in range(n))
            nd = normalize_denominator(seed.cluster[i], n)
            if nd.d_vector != d_col:
                report.witnesses.append(
                    {
                        "kind": "denominator-column",
                        "seed_index": idx,
                        "position": i,
                        "expected": list(nd.d_vector),
                        "got": list(d_col),
                    }
                )
            c_col = tuple(st.C[j][i] for j in range(n))
            if seed.y[i].exponents != c_col:
                report.witnesses.append(
                    {
                        "kind": "coefficient-column",
                        "seed_index": idx,
                        "position": i,
                        "y": list(seed.y[i].exponents),
                        "c": list(c_col),
                    }
                )
    report.stats = {"num_seeds": len(states)}
    return _settle(report)


def verify_fpoly_logcc(n: int, budget: Optional[int] = None) -> Report:
    """Log-concavity and 0/1 degrees of all x->1 specializations."""
    report = Report("fpoly", {"rank": n}, "pending")
    states = _principal_states(n, budget)
    fpolys: Dict[tuple, LaurentPoly] = {}
    for st in states:
        for fp in f_data(st.seed).f_polynomials:
            fpolys.setdefault(fp.key(), fp)
    for key in sorted(fpolys):
        fp = fpolys[key]
        w = _logcc_witness(fp, kind="not-log-concave")
        if w is not None:
            report.witnesses.append(w)
        fvec = fp.max_degrees()
        if not all(e in (0, 1) for e in fvec):
            report.witnesses.append(
                {"kind": "degree-out-of-range", "degrees": list(fvec), "poly": poly_to_json(fp)}
            )
    report.stats = {"num_seeds": len(states), "num_f_polynomials": len(fpolys)}
    return _settle(report)


def verify_separation(n: int, budget: Optional[int] = None) -> Report:
    """Monomial-times-specialization factorization at every principal seed."""
    report = Report("separation", {"rank": n}, "pending")
    states = _principal_states(n, budget)
    B0 = states[0].seed.B
    for idx, st in enumerate(states):
        for i, lhs, rhs in check_separation(st.seed, st.G, B0):
            report.witnesses.append(
                {
                    "kind": "separation-mismatch",
                    "seed_index": idx,
                    "history": list(st.seed.history),
                    "position": i,
                    "specialized": poly_to_json(lhs),
                    "reconstructed": poly_to_json(rhs),
                }
            )
    report.stats = {"num_seeds": len(states), "num_variables_checked": n * len(states)}
    return _settle(report)


# ---- rank-2 cluster monomials and their expansion constants ----


def _a2_variables() -> Tuple[LaurentPoly, ...]:
    x1 = LaurentPoly.variable(2, 0)
    x2 = LaurentPoly.variable(2, 1)
    v = LaurentPoly(2, {(-1, 1): 1, (-1, 0): 1})  # (x2 + 1) / x1
    u = LaurentPoly(2, {(0, -1): 1, (-1, 0): 1, (-1, -1): 1})  # (x1 + x2 + 1) / (x1 x2)
    w = LaurentPoly(2, {(1, -1): 1, (0, -1): 1})  # (x1 + 1) / x2
    return x1, x2, v, u, w


def a2_charts() -> Tuple[Tuple[LaurentPoly, LaurentPoly], ...]:
    """The five rank-2 clusters, in cyclic order; adjacent charts share a variable."""
    x1, x2, v, u, w = _a2_variables()
    return ((x1, x2), (v, x2), (v, u), (w, u), (w, x1))


@dataclass(frozen=True)
class ClusterMonomial:
    chart: int  # 1..5
    exponents: Tuple[int, int]
    value: LaurentPoly


def a2_cluster_monomial(chart: int, m1: int, m2: int) -> ClusterMonomial:
    charts = a2_charts()
    if not 1 <= chart <= len(charts):
        raise IndexError(f"chart {chart} out of range 1..{len(charts)}")
    if m1 < 0 or m2 < 0:
        raise ValueError("cluster monomial exponents must be nonnegative")
    z1, z2 = charts[chart - 1]
    return ClusterMonomial(chart, (m1, m2), (z1 ** m1) * (z2 ** m2))


def _graded_lex_key(exp: Tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


def _leading_exponent(p: LaurentPoly) -> Tuple[int, ...]:
    return max(p.terms, key=_graded_lex_key)


@dataclass(frozen=True)
class BasisElement:
    value: LaurentPoly
    degree: int
    leading: Tuple[int, int]
    aliases: Tuple[Tuple[int, Tuple[int, int]], ...]  # (chart, (m1, m2))


def _basis_element_json(elem: BasisElement) -> dict:
    return {
        "degree": elem.degree,
        "leading": list(elem.leading),
        "aliases": [[chart, list(m)] for chart, m in elem.aliases],
    }


def a2_basis(deg: int) -> List[BasisElement]:
    """All rank-2 cluster monomials of total degree at most deg, deduplicated.

    Monomials supported on a variable shared by two charts coincide as
    polynomials and are merged, keeping every (chart, exponents) alias.
    Elements are sorted by graded-lex leading exponent; leading exponents
    are pairwise distinct and carry coefficient 1, which is what makes the
    greedy expansion in a2_structure_constants well defined.
    """
    if deg < 0:
        raise ValueError("degree bound must be nonnegative")
    merged: Dict[tuple, List] = {}
    for chart in range(1, 6):
        for m1 in range(deg + 1):
            for m2 in range(deg + 1 - m1):
                cm = a2_cluster_monomial(chart, m1, m2)
                key = cm.value.key()
                entry = merged.get(key)
                if entry is None:
                    merged[key] = [cm.value, m1 + m2, [(chart, (m1, m2))]]
                else:
                    if entry[1] != m1 + m2:
                        raise RuntimeError("inconsistent degree among aliases")
                    entry[2].append((chart, (m1, m2)))
    elements = []
    for value, degree, aliases in merged.values():
        lead = _leading_exponent(value)
        if value.terms[lead] != 1:
            raise RuntimeError("basis leading coefficient is not 1")
        elements.append(BasisElement(value, degree, lead, tuple(aliases)))
    elements.sort(key=lambda e: _graded_lex_key(e.leading))
    seen_leads = set()
    for e in elements:
        if e.leading in seen_leads:
            raise RuntimeError("leading exponents collide; greedy expansion is ambiguous")
        seen_leads.add(e.leading)
    return elements


@dataclass
class StructureExpansion:
    basis: List[BasisElement]
    coefficients: Dict[int, int]  # basis index -> nonzero constant
    residual: LaurentPoly  # zero when the product fully resolved


_ELIMINATION_GUARD = 1_000_000


def a2_structure_constants(
    factors: Sequence[ClusterMonomial], deg: Optional[int] = None
) -> StructureExpansion:
    """Expand a product of rank-2 cluster monomials over the monomial basis.

    Greedy elimination on graded-lex leading terms: each step cancels the
    current leading term against the unique basis element carrying it.  A
    leftover residual means the basis bound was too small (or the expansion
    genuinely leaves the span); it is returned, not raised.
    """
    total_degree = sum(f.exponents[0] + f.exponents[1] for f in factors)
    bound = total_degree if deg is None else max(deg, total_degree)
    basis = a2_basis(bound)
    lead_index = {e.leading: i for i, e in enumerate(basis)}
    prod = LaurentPoly.const(2, 1)
    for f in factors:
        prod = prod * f.value
    coeffs: Dict[int, int] = {}
    steps = 0
    while prod:
        steps += 1
        if steps > _ELIMINATION_GUARD:
            raise RuntimeError("expansion did not terminate within the step guard")
        lead = _leading_exponent(prod)
        i = lead_index.get(lead)
        if i is None:
            break
        c = prod.terms[lead]
        coeffs[i] = coeffs.get(i, 0) + c
        prod = prod - basis[i].value.scale(c)
    coeffs = {i: c for i, c in sorted(coeffs.items()) if c != 0}
    return StructureExpansion(basis, coeffs, prod)


def _chart_tables(
    basis: List[BasisElement], coefficients: Dict[int, int]
) -> Dict[int, LaurentPoly]:
    """Arrange expansion constants as one exponent-indexed table per chart."""
    tables: Dict[int, LaurentPoly] = {}
    for chart in range(1, 6):
        entries: Dict[tuple, int] = {}
        for idx, coeff in coefficients.items():
            for alias_chart, m in basis[idx].aliases:
                if alias_chart == chart:
                    entries[m] = coeff
        if entries:
            tables[chart] = LaurentPoly(2, entries)
    return tables


def verify_a2_monomials(deg: int) -> Report:
    """Rank-2 cluster monomials up to total degree deg.

    Verified facts: every numerator is log-concave; on the middle chart the
    numerator coefficients are products of two binomial coefficients,
    C(m2, k) * C(m1 + m2 - k, l) at (k, l), with denominator exponents
    (m1 + m2, m2); and the inequality C(n, k)^2 >= C(n-1, k) * C(n+1, k)
    holds (checked for n up to 30), which is the slice-wise engine behind
    the closed form's log-concavity.
    """
    report = Report("a2-monomials", {"deg": deg}, "pending")
    num_monomials = 0
    for chart in range(1, 6):
        for m1 in range(deg + 1):
            for m2 in range(deg + 1 - m1):
                cm = a2_cluster_monomial(chart, m1, m2)
                num_monomials += 1
                nd = normalize_denominator(cm.value, 2)
                w = _logcc_witness(
                    nd.numerator, kind="not-log-concave", chart=chart, exponents=[m1, m2]
                )
                if w is not None:
                    report.witnesses.append(w)
                if chart == 3:
                    expected_terms = {}
                    for k in range(m2 + 1):
                        for l in range(m1 + m2 - k + 1):
                            coeff = math.comb(m2, k) * math.comb(m1 + m2 - k, l)
                            if coeff:
                                expected_terms[(k, l)] = coeff
                    expected = LaurentPoly(2, expected_terms)
                    if nd.numerator != expected or nd.d_vector != (m1 + m2, m2):
                        report.witnesses.append(
                            {
                                "kind": "closed-form-mismatch",
                                "chart": chart,
                                "exponents": [m1, m2],
                                "numerator": poly_to_json(nd.numerator),
                                "expected": poly_to_json(expected),
                                "d_vector": list(nd.d_vector),
                            }
                        )

    def _c(nn: int, kk: int) -> int:
        if nn < 0 or kk < 0 or kk > nn:
            return 0
        return math.comb(nn, kk)

    binom_rows = 31
    for nn in range(binom_rows):
        for kk in range(nn + 1):
            if _c(nn, kk) ** 2 < _c(nn - 1, kk) * _c(nn + 1, kk):
                report.witnesses.append(
                    {"kind": "binomial-inequality", "n": nn, "k": kk}
                )
    report.stats = {"num_monomials": num_monomials, "binomial_rows": binom_rows}
    return _settle(report)


def explore_an_monomials(n: int, deg: int, budget: Optional[int] = None) -> Report:
    """Exploratory: numerator log-concavity of cluster monomials in rank n.

    Enumerates every cluster, every monomial in its variables up to total
    degree deg.  Violations are recorded as witnesses; none is expected, but
    the claim is open, so the report stays exploratory either way.
    """
    report = Report("conj-an", {"rank": n, "deg": deg}, "exploratory")
    graph = enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(n)), budget)
    if not graph.closed:
        raise RuntimeError("exchange graph not closed within budget")
    seen: Dict[tuple, bool] = {}
    max_coeff = 0
    for idx, seed in enumerate(graph.seeds):
        for m in iter_product(range(deg + 1), repeat=n):
            total = sum(m)
            if total == 0 or total > deg:
                continue
            value = LaurentPoly.const(n, 1)
            for i, e in enumerate(m):
                if e:
                    value = value * seed.cluster[i] ** e
            key = value.key()
            if key in seen:
                continue
            seen[key] = True
            numerator = normalize_denominator(value, n).numerator
            max_coeff = max(max_coeff, max(numerator.coefficients()))
            w = _logcc_witness(
                numerator, kind="not-log-concave", seed_index=idx, exponents=list(m)
            )
            if w is not None:
                report.witnesses.append(w)
    report.stats = {
        "num_clusters": len(graph.seeds),
        "num_monomials": len(seen),
        "max_numerator_coefficient": max_coeff,
    }
    return report


def explore_a2_structure_constants(deg: int) -> Report:
    """Exploratory: expansion constants of pairwise products of basis elements.

    For every unordered pair of nonconstant basis elements whose degrees sum
    to at most deg, the product is expanded over the cluster monomial basis.
    Expected (and recorded as witnesses when violated): the expansion has no
    residual, every constant is nonnegative, and each chart's table of
    constants is log-concave.
    """
    report = Report("conj1-a2", {"deg": deg}, "exploratory")
    basis = a2_basis(deg)
    lead_index = {e.leading: i for i, e in enumerate(basis)}
    nonconstant = [i for i, e in enumerate(basis) if e.degree > 0]
    num_pairs = 0
    max_constant = 0
    num_unresolved = 0
    for ai in range(len(nonconstant)):
        for bi in range(ai, len(nonconstant)):
            i, j = nonconstant[ai], nonconstant[bi]
            if basis[i].degree + basis[j].degree > deg:
                continue
            num_pairs += 1
            prod = basis[i].value * basis[j].value
            coeffs: Dict[int, int] = {}
            steps = 0
            while prod:
                steps += 1
                if steps > _ELIMINATION_GUARD:
                    raise RuntimeError("expansion did not terminate within the step guard")
                lead = _leading_exponent(prod)
                t = lead_index.get(lead)
                if t is None:
                    break
                c = prod.terms[lead]
                coeffs[t] = coeffs.get(t, 0) + c
                prod = prod - basis[t].value.scale(c)
            coeffs = {t: c for t, c in sorted(coeffs.items()) if c != 0}
            pair_json = {
                "left": _basis_element_json(basis[i]),
                "right": _basis_element_json(basis[j]),
            }
            if prod:
                num_unresolved += 1
                report.witnesses.append(
                    {"kind": "unresolved-residual", "residual": poly_to_json(prod), **pair_json}
                )
                continue
            negatives = {t: c for t, c in coeffs.items() if c < 0}
            if negatives:
                report.witnesses.append(
                    {
                        "kind": "negative-constant",
                        "constants": [
                            [_basis_element_json(basis[t]), c] for t, c in negatives.items()
                        ],
                        **pair_json,
                    }
                )
            if coeffs:
                max_constant = max(max_constant, max(coeffs.values()))
            for chart, table in _chart_tables(basis, coeffs).items():
                if any(c <= 0 for c in table.coefficients()):
                    continue  # already witnessed above
                res = is_log_concave(table)
                if not res.ok:
                    report.witnesses.append(
                        {
                            "kind": "table-not-log-concave",
                            "chart": chart,
                            "axis": res.axis,
                            "point": list(res.point),
                            "table": poly_to_json(table),
                            **pair_json,
                        }
                    )
    report.stats = {
        "num_basis": len(basis),
        "num_pairs": num_pairs,
        "max_constant": max_constant,
        "num_unresolved": num_unresolved,
    }
    return report


def run_claim(
    claim: str, rank: int = 3, deg: int = 6, budget: Optional[int] = None
) -> Report:
    """Dispatch a claim identifier to its checker with the given scope."""
    if claim == "main1":
        return verify_main1(rank, budget)
    if claim == "coeff012":
        return verify_coeff_bounds(rank)
    if claim == "gyo21":
        return verify_fd(rank, budget)
    if claim == "fpoly":
        return verify_fpoly_logcc(rank, budget)
    if claim == "separation":
        return verify_separation(rank, budget)
    if claim == "a2-monomials":
        return verify_a2_monomials(deg)
    if claim == "conj-an":
        return explore_an_monomials(rank, deg, budget)
    if claim == "conj1-a2":
        return explore_a2_structure_constants(deg)
    raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIM_IDS)}")
