import pytest
from fractions import Fraction

from cluster_logcc import (
    LaurentPoly,
    TPath,
    Triangulation,
    a_n_matrix,
    assert_valid_t_path,
    b_matrix_of,
    cluster_variables,
    coefficient_free_seed,
    crosses,
    crossing_d_vector,
    diagonals_crossing,
    enumerate_t_paths,
    enumerate_triangulations,
    expand_variable,
    fan,
    flip,
    from_diagonals,
    intersection_parameter,
    mutate_matrix,
    normalize_denominator,
    principal_b_matrix,
    tpath_monomial,
    triangulation_from_json,
    triangulation_to_json,
    zigzag,
)


# ---- construction and crossing ----


def test_zigzag_shapes():
    assert zigzag(1).diagonal_pairs() == ((1, 3),)
    assert zigzag(2).diagonal_pairs() == ((1, 4), (2, 4))
    assert zigzag(3).diagonal_pairs() == ((1, 5), (1, 4), (2, 4))
    assert zigzag(4).diagonal_pairs() == ((1, 6), (2, 6), (2, 5), (3, 5))


def test_fan_shape():
    assert fan(3).diagonal_pairs() == ((0, 2), (0, 3), (0, 4))


def test_edge_labels():
    tri = zigzag(3)
    assert tri.size == 6 and tri.num_edges == 9
    assert tri.pair_of(4) == (0, 5)  # first boundary edge closes the cycle
    assert tri.pair_of(5) == (0, 1)
    assert tri.pair_of(9) == (4, 5)
    assert tri.label_of((4, 1)) == 2
    assert tri.is_boundary(4) and not tri.is_boundary(3)
    with pytest.raises(KeyError):
        tri.label_of((0, 3))
    with pytest.raises(IndexError):
        tri.pair_of(10)


def test_crosses():
    assert crosses((0, 2), (1, 3))
    assert crosses((1, 4), (0, 3))
    assert not crosses((0, 2), (2, 4))  # shared endpoint
    assert not crosses((0, 2), (3, 5))
    assert not crosses((1, 3), (1, 3))


def test_from_diagonals_validation():
    from_diagonals(2, [(0, 2), (0, 3)])  # fine
    with pytest.raises(ValueError):
        from_diagonals(2, [(0, 2), (1, 3)])  # crossing
    with pytest.raises(ValueError):
        from_diagonals(2, [(0, 2)])  # wrong count
    with pytest.raises(ValueError):
        from_diagonals(2, [(0, 1), (0, 3)])  # boundary pair is not a diagonal
    with pytest.raises(ValueError):
        from_diagonals(2, [(0, 2), (0, 2)])  # duplicate
    with pytest.raises(ValueError):
        from_diagonals(2, [(0, 2), (0, 9)])  # out of range


def test_triangulation_json_roundtrip():
    tri = zigzag(4)
    obj = triangulation_to_json(tri)
    assert obj == {"ngon": 7, "diagonals": [[1, 6], [2, 6], [2, 5], [3, 5]]}
    assert triangulation_from_json(obj) == tri


# ---- exchange matrices from triangulations ----


HEXAGON_B = [
    [0, -1, 0],
    [1, 0, 1],
    [0, -1, 0],
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, -1],
    [0, 0, 1],
    [0, 0, -1],
    [-1, 1, 0],
]


def test_hexagon_extended_matrix():
    assert b_matrix_of(zigzag(3)) == HEXAGON_B


def test_hexagon_boundary_products():
    # read off the frozen parts of each exchange: p+_1 = x4, p-_1 = x5 x9,
    # p+_2 = x6 x9, p-_2 = 1, p+_3 = x7, p-_3 = x6 x8
    B = b_matrix_of(zigzag(3))
    col = lambda i: {4 + j: B[3 + j][i] for j in range(6) if B[3 + j][i]}
    assert col(0) == {4: 1, 5: -1, 9: -1}
    assert col(1) == {6: 1, 9: 1}
    assert col(2) == {6: -1, 7: 1, 8: -1}


@pytest.mark.parametrize("n", range(1, 9))
def test_zigzag_matches_standard_matrix(n):
    assert principal_b_matrix(zigzag(n)) == a_n_matrix(n)


def test_fan_matrix():
    assert principal_b_matrix(fan(3)) == ((0, 1, 0), (-1, 0, 1), (0, -1, 0))


# ---- flips ----


def test_flip_keeps_label_and_returns_quad():
    tri = zigzag(3)
    out, quad = flip(tri, 2)
    assert out.pair_of(2) == (2, 5)
    assert quad == (6, 9, 1, 3)  # x2 x2' = x6 x9 + x1 x3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_flip_is_involutive_and_tracks_matrix_mutation(n):
    for tri in enumerate_triangulations(zigzag(n)):
        B = principal_b_matrix(tri)
        for k in range(1, n + 1):
            out, quad = flip(tri, k)
            back, _ = flip(out, k)
            assert back == tri
            assert principal_b_matrix(out) == mutate_matrix(B, k)
            # the exchange quadruple matches the matrix column of k
            ext = b_matrix_of(tri)
            plus = sorted(lab for lab in range(1, 2 * n + 4)
                          if lab != k and ext[lab - 1][k - 1] > 0)
            minus = sorted(lab for lab in range(1, 2 * n + 4)
                           if lab != k and ext[lab - 1][k - 1] < 0)
            assert sorted(quad[:2]) == plus and sorted(quad[2:]) == minus


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)])
def test_flip_graph_size(n, count):
    assert len(enumerate_triangulations(zigzag(n))) == count


def test_flip_budget():
    with pytest.raises(RuntimeError):
        enumerate_triangulations(zigzag(4), budget=10)


# ---- crossing order along a chord ----


def test_intersection_parameters_increase_along_chord():
    tri = zigzag(3)
    assert diagonals_crossing(tri, 0, 3) == [1, 2, 3]
    params = [intersection_parameter(tri.pair_of(k), 0, 3) for k in (1, 2, 3)]
    assert params == sorted(params)
    assert all(isinstance(t, Fraction) and 0 < t < 1 for t in params)
    # symmetric chord read from the far end reverses the order
    assert diagonals_crossing(tri, 3, 0) == [3, 2, 1]


def test_crossing_d_vector():
    tri = zigzag(3)
    assert crossing_d_vector(tri, (0, 3)) == (1, 1, 1)
    assert crossing_d_vector(tri, (0, 2)) == (1, 1, 0)
    assert crossing_d_vector(tri, (2, 5)) == (0, 1, 0)
    with pytest.raises(ValueError):
        crossing_d_vector(tri, (1, 4))  # already a diagonal of the triangulation


# ---- admissible paths ----


def test_square_paths():
    tri = zigzag(1)
    paths = enumerate_t_paths(tri, 0, 2)
    assert [(p.vertices, p.edge_labels) for p in paths] == [
        ((0, 3, 1, 2), (2, 1, 4)),
        ((0, 1, 3, 2), (3, 1, 5)),
    ]
    assert expand_variable(tri, 0, 2).terms == {(-1,): 2}


HEXAGON_TABLE = [
    ((0, 1, 4, 3), (5, 2, 8), {(0, -1, 0): 1}),
    ((0, 5, 1, 4, 2, 3), (4, 1, 2, 3, 7), {(-1, 1, -1): 1}),
    ((0, 5, 1, 2, 4, 3), (4, 1, 6, 3, 8), {(-1, 0, -1): 1}),
    ((0, 1, 5, 4, 2, 3), (5, 1, 9, 3, 7), {(-1, 0, -1): 1}),
    ((0, 1, 5, 4, 1, 2, 4, 3), (5, 1, 9, 2, 6, 3, 8), {(-1, -1, -1): 1}),
]


def test_hexagon_long_chord_paths():
    tri = zigzag(3)
    paths = enumerate_t_paths(tri, 0, 3)
    got = [(p.vertices, p.edge_labels, dict(tpath_monomial(tri, p).terms)) for p in paths]
    assert got == HEXAGON_TABLE


def test_hexagon_long_chord_variable():
    tri = zigzag(3)
    var = expand_variable(tri, 0, 3)
    assert var.terms == {(0, -1, 0): 1, (-1, 1, -1): 1, (-1, 0, -1): 2, (-1, -1, -1): 1}
    nd = normalize_denominator(var, 3)
    assert nd.d_vector == (1, 1, 1)
    assert nd.numerator.terms == {(1, 0, 1): 1, (0, 2, 0): 1, (0, 1, 0): 2, (0, 0, 0): 1}


def test_hexagon_boundary_kept_expansion():
    tri = zigzag(3)
    kept = expand_variable(tri, 0, 3, coefficient_free=False)
    assert set(kept.coefficients()) == {1}  # boundary variables separate the paths
    assert len(kept.terms) == 5
    # boundary exponents are 0/1, diagonal exponents -1/0/1
    for exp in kept.terms:
        assert all(e in (0, 1) for e in exp[3:])
        assert all(e in (-1, 0, 1) for e in exp[:3])
    # dropping the boundary variables recovers the coefficient-free expansion
    assert kept.substitute_ones(range(3, 9)) == expand_variable(tri, 0, 3)


def test_diagonal_of_triangulation_expands_to_itself():
    tri = zigzag(3)
    paths = enumerate_t_paths(tri, 1, 4)
    assert [(p.vertices, p.edge_labels) for p in paths] == [((1, 4), (2,))]
    assert expand_variable(tri, 1, 4) == LaurentPoly.variable(3, 1)


def test_path_validation_rejects_bad_paths():
    tri = zigzag(3)
    with pytest.raises(ValueError):
        enumerate_t_paths(tri, 0, 1)  # boundary pair, not a chord
    good = enumerate_t_paths(tri, 0, 3)[1]
    with pytest.raises(ValueError):
        assert_valid_t_path(tri, 0, 3, TPath(good.vertices[::-1], good.edge_labels[::-1]))
    with pytest.raises(ValueError):  # even length
        assert_valid_t_path(tri, 0, 3, TPath((0, 1, 4, 2, 3), (5, 2, 3, 7)))
    with pytest.raises(ValueError):  # repeated label
        assert_valid_t_path(tri, 0, 3, TPath((0, 1, 4, 1, 4, 3), (5, 2, 2, 2, 8)))
    with pytest.raises(ValueError):  # second step must cross the chord
        assert_valid_t_path(tri, 0, 3, TPath((0, 1, 2, 3), (5, 6, 7)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_emitted_paths_pass_independent_validation(n):
    for tri in enumerate_triangulations(zigzag(n)):
        size = tri.size
        diag = set(tri.diagonal_pairs())
        for a in range(size):
            for b in range(a + 2, size):
                if a == 0 and b == size - 1 or (a, b) in diag:
                    continue
                paths = enumerate_t_paths(tri, a, b)
                assert paths, f"no admissible paths for chord {(a, b)}"
                for p in paths:
                    assert_valid_t_path(tri, a, b, p)
                assert paths == enumerate_t_paths(tri, a, b)  # deterministic order


# ---- expansion against mutation ----


def test_pentagon_fan_variables_match_mutation():
    tri = fan(2)
    expanded = {expand_variable(tri, a, b).key()
                for a, b in [(1, 3), (1, 4), (2, 4)]}
    expanded |= {LaurentPoly.variable(2, 0).key(), LaurentPoly.variable(2, 1).key()}
    mutated = {x.key() for x in cluster_variables(coefficient_free_seed(principal_b_matrix(tri)))}
    assert expanded == mutated


@pytest.mark.parametrize("n", [2, 3, 4])
def test_denominators_count_crossings(n):
    for tri in enumerate_triangulations(zigzag(n)):
        size = tri.size
        diag = set(tri.diagonal_pairs())
        for a in range(size):
            for b in range(a + 2, size):
                if a == 0 and b == size - 1 or (a, b) in diag:
                    continue
                var = expand_variable(tri, a, b)
                nd = normalize_denominator(var, n)
                assert nd.d_vector == crossing_d_vector(tri, (a, b))
