"""Seeds, mutation, and exchange-graph search for geometric-type patterns.

A seed holds n exchangeable cluster variables (exact Laurent polynomials in
an ambient ring of n + r variables, the last r being frozen), n tropical
coefficients over the free semifield on the r frozen variables, and an n-by-n
skew-symmetrizable exchange matrix.  Mutation directions and matrix indices
are 1-based in the public API, matching diagonal labels on the polygon side;
ambient variable indices are 0-based.

Alongside plain mutation this module tracks the companion data attached to a
mutation path: denominator vectors and the two integer matrices whose columns
record how coefficients and leading monomials transform.  Their recursions
are exercised against frozen expected values in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

from fractions import Fraction

from .poly import LaurentPoly, poly_from_json, poly_to_json
from .tropical import TropicalElement

Matrix = Tuple[Tuple[int, ...], ...]

DEFAULT_BUDGET = 10000


# ---- integer matrix helpers ----


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _neg_identity(n: int) -> Matrix:
    return tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))


def _j_matrix(n: int, kk: int) -> Matrix:
    """Identity with the (kk, kk) entry replaced by -1 (0-based)."""
    return tuple(
        tuple((-1 if i == kk else 1) if i == j else 0 for j in range(n)) for i in range(n)
    )


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A))
    )


def _mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _pos_part(A: Matrix) -> Matrix:
    return tuple(tuple(max(e, 0) for e in row) for row in A)


def _neg_mat(A: Matrix) -> Matrix:
    return tuple(tuple(-e for e in row) for row in A)


def _row_only(A: Matrix, kk: int) -> Matrix:
    """Zero out everything except row kk."""
    return tuple(row if i == kk else tuple(0 for _ in row) for i, row in enumerate(A))


def _col_only(A: Matrix, kk: int) -> Matrix:
    """Zero out everything except column kk."""
    return tuple(tuple(e if j == kk else 0 for j, e in enumerate(row)) for row in A)


def _as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(e) for e in row) for row in rows)


# ---- exchange matrices ----


def a_n_matrix(n: int) -> Matrix:
    """The standard tridiagonal rank-n exchange matrix.

    Superdiagonal signs alternate; the starting sign depends on the parity
    of n so that the matrix agrees with the exchange matrix of the zigzag
    triangulation under the shared labeling convention.  Its Cartan
    counterpart (2 on the diagonal, -|b_ij| off it) is the rank-n chain.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    B = [[0] * n for _ in range(n)]
    for i in range(1, n):  # 1-based position i of the superdiagonal entry (i, i+1)
        sign = (-1) ** i if n % 2 == 1 else (-1) ** (i + 1)
        B[i - 1][i] = sign
        B[i][i - 1] = -sign
    return _as_matrix(B)


def mutate_matrix(B: Matrix, k: int) -> Matrix:
    """Matrix mutation in direction k (1-based); an involution."""
    n = len(B)
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == kk or j == kk:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + max(B[i][kk], 0) * B[kk][j] + B[i][kk] * max(-B[kk][j], 0))
        out.append(tuple(row))
    return tuple(out)


def is_skew_symmetrizable(B: Sequence[Sequence[int]]) -> bool:
    """Whether some positive diagonal D makes D*B skew-symmetric."""
    n = len(B)
    for i in range(n):
        if len(B[i]) != n or B[i][i] != 0:
            return False
        for j in range(n):
            if (B[i][j] == 0) != (B[j][i] == 0):
                return False
            if B[i][j] * B[j][i] > 0:
                return False
    scale: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if scale[start] is not None:
            continue
        scale[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                implied = scale[i] * Fraction(B[i][j], -B[j][i])
                if scale[j] is None:
                    scale[j] = implied
                    stack.append(j)
                elif scale[j] != implied:
                    return False
    return True


# ---- seeds ----


@dataclass(frozen=True)
class Seed:
    """A labeled seed: cluster, tropical coefficients, exchange matrix.

    history records the mutation directions that produced the seed and is
    excluded from equality and hashing.
    """

    n: int
    num_frozen: int
    B: Matrix
    y: Tuple[TropicalElement, ...]
    cluster: Tuple[LaurentPoly, ...]
    history: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def num_vars(self) -> int:
        return self.n + self.num_frozen


def _initial_cluster(n: int, num_frozen: int) -> Tuple[LaurentPoly, ...]:
    m = n + num_frozen
    return tuple(LaurentPoly.variable(m, i) for i in range(n))


def coefficient_free_seed(B: Sequence[Sequence[int]]) -> Seed:
    """Seed over the trivial semifield (no frozen variables)."""
    Bm = _as_matrix(B)
    if not is_skew_symmetrizable(Bm):
        raise ValueError("exchange matrix is not skew-symmetrizable")
    n = len(Bm)
    y = tuple(TropicalElement.identity(0) for _ in range(n))
    return Seed(n, 0, Bm, y, _initial_cluster(n, 0))


def principal_seed(B: Sequence[Sequence[int]]) -> Seed:
    """Seed with one frozen variable per direction; y_i starts as generator i."""
    Bm = _as_matrix(B)
    if not is_skew_symmetrizable(Bm):
        raise ValueError("exchange matrix is not skew-symmetrizable")
    n = len(Bm)
    y = tuple(TropicalElement.generator(n, i) for i in range(n))
    return Seed(n, n, Bm, y, _initial_cluster(n, n))


def boundary_seed(tri) -> Seed:
    """Seed of a triangulation with its boundary edges as frozen variables.

    The ambient ring has 2n+3 variables indexed by edge label minus one, so
    cluster variables computed by mutation are directly comparable with
    coefficient-kept path expansions.
    """
    from .polygon import b_matrix_of

    ext = b_matrix_of(tri)
    n = tri.n
    Bm = _as_matrix(ext[:n])
    r = n + 3
    y = tuple(TropicalElement(tuple(ext[n + j][i] for j in range(r))) for i in range(n))
    return Seed(n, r, Bm, y, _initial_cluster(n, r))


def mutate(seed: Seed, k: int) -> Seed:
    """Seed mutation in direction k (1-based).

    The new variable is the exchange binomial divided by the old one; that
    division must be exact (InexactDivisionError here means the ambient
    arithmetic or the seed data is corrupt, and aborts the computation).
    """
    n = seed.n
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    yk = seed.y[kk]
    h = yk.one_oplus()  # 1 (+) y_k
    plus, minus = yk.split_pm()
    m = seed.num_vars
    zero_x = (0,) * n
    pos = LaurentPoly.monomial(m, zero_x + plus.exponents)
    neg = LaurentPoly.monomial(m, zero_x + minus.exponents)
    for j in range(n):
        bjk = seed.B[j][kk]
        if bjk > 0:
            pos = pos * seed.cluster[j] ** bjk
        elif bjk < 0:
            neg = neg * seed.cluster[j] ** (-bjk)
    new_x = (pos + neg).div_exact(seed.cluster[kk])

    new_y = list(seed.y)
    new_y[kk] = yk.inverse()
    for i in range(n):
        if i == kk:
            continue
        bki = seed.B[kk][i]
        yi = seed.y[i]
        if bki > 0:
            yi = yi * (yk ** bki)
        new_y[i] = yi * (h ** (-bki))

    new_cluster = list(seed.cluster)
    new_cluster[kk] = new_x
    return Seed(
        n,
        seed.num_frozen,
        mutate_matrix(seed.B, k),
        tuple(new_y),
        tuple(new_cluster),
        seed.history + (k,),
    )


# ---- companion data along mutation paths ----


def initial_d_matrix(n: int) -> Matrix:
    """Column i is the denominator vector of the initial variable x_i: -e_i."""
    return _neg_identity(n)


def d_vector_step(D: Matrix, B: Matrix, k: int) -> Matrix:
    """Denominator-vector recursion: replace column k (1-based).

    d'_k = -d_k + max(sum_i [b_ik]_+ d_i, sum_i [-b_ik]_+ d_i), the maximum
    taken componentwise; other columns are untouched.
    """
    n = len(D)
    kk = k - 1
    out = [list(row) for row in D]
    for j in range(n):
        s_plus = sum(max(B[i][kk], 0) * D[j][i] for i in range(n))
        s_minus = sum(max(-B[i][kk], 0) * D[j][i] for i in range(n))
        out[j][kk] = -D[j][kk] + max(s_plus, s_minus)
    return _as_matrix(out)


def cg_step(C: Matrix, G: Matrix, B_t: Matrix, B0: Matrix, k: int) -> Tuple[Matrix, Matrix]:
    """One mutation step of the coefficient and leading-monomial matrices.

    C' = C (J_k + [B_t]_+^{row k}) + [-C]_+^{col k} B_t
    G' = G (J_k + [B_t]_+^{col k}) - B0 [C]_+^{col k}
    where the row/col superscripts zero out all other rows/columns.
    """
    n = len(C)
    kk = k - 1
    J = _j_matrix(n, kk)
    pos_b = _pos_part(B_t)
    C2 = _mat_add(
        _mat_mul(C, _mat_add(J, _row_only(pos_b, kk))),
        _mat_mul(_col_only(_pos_part(_neg_mat(C)), kk), B_t),
    )
    G2 = _mat_sub(
        _mat_mul(G, _mat_add(J, _col_only(pos_b, kk))),
        _mat_mul(B0, _col_only(_pos_part(C), kk)),
    )
    return C2, G2


@dataclass(frozen=True)
class PatternState:
    """A seed bundled with the matrix data its mutation path accumulated.

    B0 is the exchange matrix of the starting seed; the G recursion needs it
    at every step, so it rides along unchanged.
    """

    seed: Seed
    C: Matrix
    G: Matrix
    D: Matrix
    B0: Matrix


def principal_state(B: Sequence[Sequence[int]]) -> PatternState:
    seed = principal_seed(B)
    n = seed.n
    return PatternState(seed, _identity(n), _identity(n), initial_d_matrix(n), seed.B)


def state_step(state: PatternState, k: int) -> PatternState:
    C2, G2 = cg_step(state.C, state.G, state.seed.B, state.B0, k)
    D2 = d_vector_step(state.D, state.seed.B, k)
    return PatternState(mutate(state.seed, k), C2, G2, D2, state.B0)


class FData(NamedTuple):
    f_polynomials: Tuple[LaurentPoly, ...]
    f_vectors: Tuple[Tuple[int, ...], ...]
    f_matrix: Matrix


def f_data(seed: Seed) -> FData:
    """Specialize x -> 1: the coefficient polynomials and their degree data.

    Only meaningful for seeds with one frozen variable per direction (the
    principal setup); the f-matrix holds the per-generator maximum degrees,
    column i belonging to cluster variable i.
    """
    n = seed.n
    if seed.num_frozen != n:
        raise ValueError("f-data needs a principal-coefficients seed")
    fpolys = tuple(x.substitute_ones(range(n)) for x in seed.cluster)
    fvecs = tuple(fp.max_degrees() for fp in fpolys)
    fmat = tuple(tuple(fvecs[i][j] for i in range(n)) for j in range(n))
    return FData(fpolys, fvecs, fmat)


def check_separation(seed: Seed, G: Matrix, B0: Matrix) -> List[Tuple[int, LaurentPoly, LaurentPoly]]:
    """Compare each coefficient-free variable with its monomial-times-F form.

    Returns mismatches as (index, specialized variable, reconstructed form);
    empty means the separation identity holds at this seed.
    """
    n = seed.n
    if seed.num_frozen != n:
        raise ValueError("separation check needs a principal-coefficients seed")
    mismatches = []
    for i in range(n):
        lhs = seed.cluster[i].substitute_ones(range(n, 2 * n))
        fpoly = seed.cluster[i].substitute_ones(range(n))
        hat_terms: Dict[tuple, int] = {}
        for cexp, coeff in fpoly.terms.items():
            exp = tuple(sum(cexp[t] * B0[j][t] for t in range(n)) for j in range(n))
            hat_terms[exp] = hat_terms.get(exp, 0) + coeff
        g_col = tuple(G[j][i] for j in range(n))
        rhs = LaurentPoly(n, hat_terms).shift(g_col)
        if lhs != rhs:
            mismatches.append((i, lhs, rhs))
    return mismatches


# ---- exchange graph ----


def canonical_seed_key(seed: Seed) -> tuple:
    """Canonical form under simultaneous permutation of cluster positions."""
    perm = sorted(range(seed.n), key=lambda i: seed.cluster[i].key())
    return (
        seed.n,
        seed.num_frozen,
        tuple(seed.cluster[p].key() for p in perm),
        tuple(seed.y[p].exponents for p in perm),
        tuple(tuple(seed.B[pr][pc] for pc in perm) for pr in perm),
    )


@dataclass
class ExchangeGraph:
    seeds: List[Seed]
    edges: List[Tuple[int, int, int]]  # (seed index, direction, seed index)
    closed: bool


def enumerate_exchange_graph(seed: Seed, budget: Optional[int] = None) -> ExchangeGraph:
    """Breadth-first search of seeds up to relabeling.

    Seeds are identified when they differ only by a simultaneous permutation
    of cluster entries, coefficients, and matrix rows/columns.  Stops early
    (closed=False) if more than `budget` classes appear.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    index: Dict[tuple, int] = {canonical_seed_key(seed): 0}
    seeds = [seed]
    edges: List[Tuple[int, int, int]] = []
    closed = True
    frontier = [0]
    while frontier:
        nxt: List[int] = []
        for i in frontier:
            s = seeds[i]
            for k in range(1, s.n + 1):
                t = mutate(s, k)
                key = canonical_seed_key(t)
                j = index.get(key)
                if j is None:
                    if len(seeds) >= budget:
                        closed = False
                        continue
                    j = len(seeds)
                    index[key] = j
                    seeds.append(t)
                    nxt.append(j)
                edges.append((i, k, j))
        frontier = nxt
    return ExchangeGraph(seeds, edges, closed)


def cluster_variables(seed: Seed, budget: Optional[int] = None) -> List[LaurentPoly]:
    """All cluster variables reachable from the seed, canonically sorted."""
    graph = enumerate_exchange_graph(seed, budget)
    if not graph.closed:
        raise RuntimeError("exchange graph not closed within budget")
    seen: Dict[tuple, LaurentPoly] = {}
    for s in graph.seeds:
        for x in s.cluster:
            seen.setdefault(x.key(), x)
    return [seen[key] for key in sorted(seen)]


# ---- serialization ----


def seed_to_json(seed: Seed) -> dict:
    return {
        "n": seed.n,
        "frozen": seed.num_frozen,
        "B": [list(row) for row in seed.B],
        "y": [list(t.exponents) for t in seed.y],
        "cluster": [poly_to_json(x) for x in seed.cluster],
        "history": list(seed.history),
    }


def seed_from_json(obj: Mapping) -> Seed:
    return Seed(
        int(obj["n"]),
        int(obj["frozen"]),
        _as_matrix(obj["B"]),
        tuple(TropicalElement(tuple(e)) for e in obj["y"]),
        tuple(poly_from_json(p) for p in obj["cluster"]),
        tuple(int(k) for k in obj["history"]),
    )


def graph_to_json(graph: ExchangeGraph) -> dict:
    return {
        "seeds": [seed_to_json(s) for s in graph.seeds],
        "edges": [list(e) for e in graph.edges],
    }
