"""Triangulated convex polygons and path expansions of cluster variables.

Conventions used throughout (and by the CLI file formats):

* The polygon for rank n has n + 3 vertices, labeled 0..n+2 counterclockwise.
* A triangulation carries 2n + 3 labeled edges: labels 1..n are its diagonals
  (in construction/file order) and labels n+1..2n+3 are the boundary edges,
  label n+1 being {n+2, 0} and label n+1+j being {j-1, j} for j = 1..n+2.
* Flipping diagonal k keeps the label k on the new diagonal, so mutation
  directions and diagonal labels stay aligned.

Exchange-matrix signs follow the rotation rule: two edges sharing a vertex v
inside a common triangle get +1 when sweeping the first edge onto the second
about v through the triangle interior turns counterclockwise.  On a convex
polygon with counterclockwise vertex numbering this reduces to comparing the
cyclic positions of the far endpoints after v, which is how it is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .poly import LaurentPoly

Pair = Tuple[int, int]


def _norm_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def crosses(e1: Sequence[int], e2: Sequence[int]) -> bool:
    """Whether two chords of a convex polygon cross in their interiors.

    Chords sharing an endpoint never cross; otherwise crossing means the
    endpoint pairs strictly interleave in cyclic order.
    """
    a, b = _norm_pair(*e1)
    c, d = _norm_pair(*e2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _adjacent(u: int, v: int, size: int) -> bool:
    return (u - v) % size in (1, size - 1)


@dataclass(frozen=True)
class Triangulation:
    """A labeled triangulation of the (n+3)-gon."""

    n: int
    edges: Tuple[Pair, ...]  # index = label - 1

    @property
    def size(self) -> int:
        return self.n + 3

    @property
    def num_edges(self) -> int:
        return 2 * self.n + 3

    def pair_of(self, label: int) -> Pair:
        if not 1 <= label <= self.num_edges:
            raise IndexError(f"edge label {label} out of range 1..{self.num_edges}")
        return self.edges[label - 1]

    def label_of(self, pair: Sequence[int]) -> int:
        p = _norm_pair(*pair)
        try:
            return self.edges.index(p) + 1
        except ValueError:
            raise KeyError(f"{p} is not an edge of this triangulation") from None

    def is_boundary(self, label: int) -> bool:
        return label > self.n

    def diagonal_pairs(self) -> Tuple[Pair, ...]:
        return self.edges[: self.n]


def _boundary_edges(n: int) -> List[Pair]:
    size = n + 3
    out = [_norm_pair(size - 1, 0)]
    out.extend((j - 1, j) for j in range(1, size))
    return out


def from_diagonals(n: int, diagonals: Sequence[Sequence[int]]) -> Triangulation:
    """Build a triangulation from its n diagonals, validating everything."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    size = n + 3
    if len(diagonals) != n:
        raise ValueError(f"expected {n} diagonals, got {len(diagonals)}")
    pairs: List[Pair] = []
    for d in diagonals:
        u, v = d
        if not (0 <= u < size and 0 <= v < size):
            raise ValueError(f"diagonal {d!r} has vertices outside 0..{size - 1}")
        if u == v or _adjacent(u, v, size):
            raise ValueError(f"{d!r} is not a diagonal of the {size}-gon")
        pairs.append(_norm_pair(u, v))
    if len(set(pairs)) != n:
        raise ValueError("diagonals are not distinct")
    for i in range(n):
        for j in range(i + 1, n):
            if crosses(pairs[i], pairs[j]):
                raise ValueError(f"diagonals {pairs[i]} and {pairs[j]} cross")
    return Triangulation(n, tuple(pairs) + tuple(_boundary_edges(n)))


def zigzag(n: int) -> Triangulation:
    """The snake triangulation whose exchange matrix is the standard rank-n one.

    The snake starts with the diagonal {1, n+2}; for odd n the second diagonal
    re-anchors at the low vertex ({1, n+1}), for even n at the high vertex
    ({2, n+2}).  The two shapes are mirror images; the parity choice keeps the
    sign pattern of the resulting exchange matrix aligned with a_n_matrix.
    """
    lo, hi = 1, n + 2
    diags = [(lo, hi)]
    low_anchor = n % 2 == 1
    for t in range(1, n):
        if (t % 2 == 1) == low_anchor:
            hi -= 1
        else:
            lo += 1
        diags.append((lo, hi))
    return from_diagonals(n, diags)


def fan(n: int) -> Triangulation:
    """All diagonals from vertex 0: label i carries {0, i+1}."""
    return from_diagonals(n, [(0, i + 1) for i in range(1, n + 1)])


def _faces(tri: Triangulation) -> List[Tuple[int, int, int]]:
    edge_set = set(tri.edges)
    size = tri.size
    out = []
    for p in range(size):
        for q in range(p + 1, size):
            if (p, q) not in edge_set:
                continue
            for r in range(q + 1, size):
                if (p, r) in edge_set and (q, r) in edge_set:
                    out.append((p, q, r))
    return out


def _rot_sign(size: int, v: int, far_i: int, far_j: int) -> int:
    """Sign of the sweep from edge {v, far_i} to {v, far_j} about v.

    +1 when the far endpoints occur in counterclockwise order as seen from v,
    which on a counterclockwise-numbered convex polygon is position order in
    the cyclic sequence starting right after v.
    """
    pi = (far_i - v - 1) % size
    pj = (far_j - v - 1) % size
    return 1 if pi < pj else -1


def _face_pair_sign(tri: Triangulation, e_i: Pair, e_j: Pair) -> int:
    common = set(e_i) & set(e_j)
    (v,) = common
    far_i = e_i[0] if e_i[1] == v else e_i[1]
    far_j = e_j[0] if e_j[1] == v else e_j[1]
    return _rot_sign(tri.size, v, far_i, far_j)


def b_matrix_of(tri: Triangulation) -> List[List[int]]:
    """Extended exchange matrix: 2n+3 rows (all edges) by n columns (diagonals)."""
    n = tri.n
    rows = tri.num_edges
    B = [[0] * n for _ in range(rows)]
    for face in _faces(tri):
        labels = [tri.label_of((face[0], face[1])),
                  tri.label_of((face[0], face[2])),
                  tri.label_of((face[1], face[2]))]
        sides = [tri.pair_of(lab) for lab in labels]
        for i in range(3):
            for j in range(3):
                if i == j or labels[j] > n:
                    continue
                B[labels[i] - 1][labels[j] - 1] = _face_pair_sign(tri, sides[i], sides[j])
    return B


def principal_b_matrix(tri: Triangulation) -> Tuple[Tuple[int, ...], ...]:
    """The n-by-n top block of the extended exchange matrix."""
    B = b_matrix_of(tri)
    return tuple(tuple(row) for row in B[: tri.n])


def flip(tri: Triangulation, k: int) -> Tuple[Triangulation, Tuple[int, int, int, int]]:
    """Replace diagonal k by the other diagonal of its quadrilateral.

    Returns the new triangulation (the new diagonal keeps label k) and the
    exchange quadruple (a, c, b, d) of edge labels: the flip relation reads
    x_k * x_k' = x_a * x_c + x_b * x_d, where a, c are the quadrilateral
    sides entering the positive product and b, d the negative one.
    """
    if not 1 <= k <= tri.n:
        raise IndexError(f"can only flip diagonals 1..{tri.n}, got {k}")
    u, w = tri.pair_of(k)
    edge_set = set(tri.edges)
    thirds = [
        t
        for t in range(tri.size)
        if t not in (u, w) and _norm_pair(u, t) in edge_set and _norm_pair(w, t) in edge_set
    ]
    if len(thirds) != 2:  # cannot happen on a valid triangulation
        raise ValueError(f"diagonal {k} is not inside exactly two faces")
    p, q = thirds
    plus: List[int] = []
    minus: List[int] = []
    diag = tri.pair_of(k)
    for side in (_norm_pair(u, p), _norm_pair(p, w), _norm_pair(w, q), _norm_pair(q, u)):
        sign = _face_pair_sign(tri, side, diag)
        (plus if sign > 0 else minus).append(tri.label_of(side))
    if len(plus) != 2 or len(minus) != 2:  # pragma: no cover - geometry guarantee
        raise AssertionError("quadrilateral sides did not split into opposite pairs")
    new_edges = list(tri.edges)
    new_edges[k - 1] = _norm_pair(p, q)
    quad = (min(plus), max(plus), min(minus), max(minus))
    return Triangulation(tri.n, tuple(new_edges)), quad


def enumerate_triangulations(start: Triangulation, budget: int = 100000) -> List[Triangulation]:
    """All triangulations reachable by flips (all of them, by connectivity)."""
    seen = {frozenset(start.diagonal_pairs()): start}
    queue = [start]
    while queue:
        tri = queue.pop(0)
        for k in range(1, tri.n + 1):
            nxt, _ = flip(tri, k)
            key = frozenset(nxt.diagonal_pairs())
            if key not in seen:
                if len(seen) >= budget:
                    raise RuntimeError("triangulation enumeration exceeded budget")
                seen[key] = nxt
                queue.append(nxt)
    return list(seen.values())


# ---- path expansion ----


@dataclass(frozen=True)
class TPath:
    """An admissible path: vertex sequence plus the edge labels walked."""

    vertices: Tuple[int, ...]
    edge_labels: Tuple[int, ...]


def _embed(v: int) -> Tuple[int, int]:
    # strictly convex integer embedding; vertex order 0..m-1 is counterclockwise
    return (v, v * v)


def _cross2(o: Tuple[int, int], p: Tuple[int, int], q: Tuple[int, int]) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def intersection_parameter(chord: Pair, a: int, b: int) -> Fraction:
    """Parameter t in (0,1) where chord meets the segment a -> b (exact)."""
    A, B = _embed(a), _embed(b)
    C, D = _embed(chord[0]), _embed(chord[1])
    # solve cross(A - C + t*(B - A), D - C) = 0 for t
    acdc = _cross2(C, A, D)
    badc = (B[0] - A[0]) * (D[1] - C[1]) - (B[1] - A[1]) * (D[0] - C[0])
    if badc == 0:
        raise ValueError(f"chord {chord} is parallel to segment {(a, b)}")
    return Fraction(-acdc, badc)


def diagonals_crossing(tri: Triangulation, a: int, b: int) -> List[int]:
    """Labels of diagonals crossing the chord {a, b}, nearest to a first."""
    gamma = _norm_pair(a, b)
    labs = [k for k in range(1, tri.n + 1) if crosses(tri.pair_of(k), gamma)]
    labs.sort(key=lambda k: intersection_parameter(tri.pair_of(k), a, b))
    return labs


def enumerate_t_paths(tri: Triangulation, a: int, b: int) -> List[TPath]:
    """All admissible paths from a to b, in deterministic order.

    A path walks labeled edges of the triangulation, never reusing a label,
    and ends after an odd number of steps.  Every even-numbered step must
    walk an edge crossing the chord {a, b}, and the crossing edges used
    (at any step) must appear ordered by their crossing point's distance
    from a.  Output is sorted by (length, label sequence).
    """
    size = tri.size
    if not (0 <= a < size and 0 <= b < size):
        raise ValueError(f"vertices must lie in 0..{size - 1}")
    if a == b or _adjacent(a, b, size):
        raise ValueError(f"vertices {a} and {b} do not span a diagonal")
    order = diagonals_crossing(tri, a, b)
    prox = {lab: i for i, lab in enumerate(order)}
    incident: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(size)}
    for lab in range(1, tri.num_edges + 1):
        u, w = tri.pair_of(lab)
        incident[u].append((lab, w))
        incident[w].append((lab, u))
    for v in incident:
        incident[v].sort()

    results: List[TPath] = []
    used = set()
    verts = [a]
    labs: List[int] = []

    def walk(current: int, last_cross: int) -> None:
        if current == b:
            # a crossing edge is never incident to b, so arrivals happen at
            # odd steps and no admissible path continues past b
            if len(labs) % 2 == 1:
                results.append(TPath(tuple(verts), tuple(labs)))
            return
        even_step = (len(labs) + 1) % 2 == 0
        for lab, other in incident[current]:
            if lab in used:
                continue
            ci = prox.get(lab)
            if even_step:
                if ci is None or ci <= last_cross:
                    continue
            elif ci is not None and ci <= last_cross:
                continue
            used.add(lab)
            verts.append(other)
            labs.append(lab)
            walk(other, ci if ci is not None else last_cross)
            used.remove(lab)
            verts.pop()
            labs.pop()

    walk(a, -1)
    results.sort(key=lambda P: (len(P.edge_labels), P.edge_labels))
    return results


def assert_valid_t_path(tri: Triangulation, a: int, b: int, path: TPath) -> None:
    """Independent re-check of a path against the admissibility rules.

    Validates the raw object rather than trusting the enumerator: endpoint
    and connectivity conditions, label distinctness, odd length, crossing
    parity, and the monotone crossing order (recomputed from exact
    intersection parameters).  Raises ValueError with the failed rule.
    """
    v, labs = path.vertices, path.edge_labels
    if len(v) != len(labs) + 1:
        raise ValueError("vertex/label length mismatch")
    if v[0] != a or v[-1] != b:
        raise ValueError("path endpoints differ from requested vertices")
    for i, lab in enumerate(labs):
        if _norm_pair(v[i], v[i + 1]) != tri.pair_of(lab):
            raise ValueError(f"step {i + 1} does not walk edge {lab}")
    if len(set(labs)) != len(labs):
        raise ValueError("edge labels repeat")
    if len(labs) % 2 == 0:
        raise ValueError("path length is even")
    gamma = _norm_pair(a, b)
    params = []
    for i, lab in enumerate(labs):
        edge_crosses = crosses(tri.pair_of(lab), gamma)
        if (i + 1) % 2 == 0 and not edge_crosses:
            raise ValueError(f"even step {i + 1} does not cross the expansion chord")
        if edge_crosses:
            params.append(intersection_parameter(tri.pair_of(lab), a, b))
    if any(p2 <= p1 for p1, p2 in zip(params, params[1:])):
        raise ValueError("crossing edges out of proximity order")


def tpath_monomial(tri: Triangulation, path: TPath, coefficient_free: bool = True) -> LaurentPoly:
    """The Laurent monomial of a path: odd steps multiply, even steps divide.

    Coefficient-free means boundary edges evaluate to 1 and the monomial
    lives in the n diagonal variables; otherwise all 2n+3 edge variables
    participate (variable index = label - 1).
    """
    num_vars = tri.n if coefficient_free else tri.num_edges
    exps = [0] * num_vars
    for i, lab in enumerate(path.edge_labels):
        if coefficient_free and lab > tri.n:
            continue
        exps[lab - 1] += -1 if (i + 1) % 2 == 0 else 1
    return LaurentPoly.monomial(num_vars, exps)


def expand_variable(tri: Triangulation, a: int, b: int, coefficient_free: bool = True) -> LaurentPoly:
    """The cluster variable of the chord {a, b} as a sum over admissible paths."""
    paths = enumerate_t_paths(tri, a, b)
    num_vars = tri.n if coefficient_free else tri.num_edges
    total = LaurentPoly.zero(num_vars)
    for path in paths:
        total = total + tpath_monomial(tri, path, coefficient_free)
    return total


def crossing_d_vector(tri: Triangulation, gamma: Sequence[int]) -> Tuple[int, ...]:
    """Crossing counts of the chord gamma with each diagonal (0 or 1 each).

    gamma must not itself be a diagonal of the triangulation; the caller
    owns that degenerate case (its denominator data is -e_k, not a crossing
    count).
    """
    g = _norm_pair(*gamma)
    size = tri.size
    if not (0 <= g[0] < size and 0 <= g[1] < size) or g[0] == g[1] or _adjacent(*g, size):
        raise ValueError(f"{gamma!r} is not a diagonal of the {size}-gon")
    if g in tri.diagonal_pairs():
        raise ValueError(f"{gamma!r} belongs to the triangulation")
    return tuple(1 if crosses(tri.pair_of(k), g) else 0 for k in range(1, tri.n + 1))


# ---- serialization ----


def triangulation_to_json(tri: Triangulation) -> dict:
    return {"ngon": tri.size, "diagonals": [list(p) for p in tri.diagonal_pairs()]}


def triangulation_from_json(obj: Mapping) -> Triangulation:
    ngon = int(obj["ngon"])
    if ngon < 4:
        raise ValueError("polygon must have at least 4 vertices")
    return from_diagonals(ngon - 3, [tuple(d) for d in obj["diagonals"]])


def tpath_to_json(tri: Triangulation, path: TPath, coefficient_free: bool = True) -> dict:
    from .poly import poly_to_json

    return {
        "vertices": list(path.vertices),
        "edges": list(path.edge_labels),
        "monomial": poly_to_json(tpath_monomial(tri, path, coefficient_free)),
    }
