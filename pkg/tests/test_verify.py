import json

import pytest

from cluster_logcc import (
    LaurentPoly,
    a2_basis,
    a2_charts,
    a2_cluster_monomial,
    a2_structure_constants,
    explore_a2_structure_constants,
    explore_an_monomials,
    run_claim,
    verify_a2_monomials,
    verify_coeff_bounds,
    verify_fd,
    verify_fpoly_logcc,
    verify_main1,
    verify_separation,
)


# ---- rank-2 charts ----


def test_charts_agree_with_mutation():
    from cluster_logcc import coefficient_free_seed, mutate

    charts = a2_charts()
    seed = coefficient_free_seed(((0, 1), (-1, 0)))
    assert charts[0] == tuple(seed.cluster)
    for i in range(4):
        seed = mutate(seed, 1 + (i % 2))
        assert set(charts[i + 1]) == set(seed.cluster)


def test_adjacent_charts_share_a_variable():
    charts = a2_charts()
    for i in range(5):
        shared = set(charts[i]) & set(charts[(i + 1) % 5])
        assert len(shared) == 1


def test_cluster_monomial_values():
    assert a2_cluster_monomial(1, 2, 1).value.terms == {(2, 1): 1}  # x1^2 x2
    vu = a2_cluster_monomial(3, 1, 1)  # v * u = (x2+1)(x1+x2+1) / (x1^2 x2)
    assert vu.value == a2_charts()[2][0] * a2_charts()[2][1]
    assert vu.value.terms == {
        (-1, 0): 1, (-1, -1): 1, (-2, 1): 1, (-2, 0): 2, (-2, -1): 1,
    }
    with pytest.raises(ValueError):
        a2_cluster_monomial(1, -1, 0)
    with pytest.raises(IndexError):
        a2_cluster_monomial(6, 1, 0)


# ---- basis ----


def test_basis_counts():
    # 5 D(D+1)/2 + 1 distinct monomials of total degree at most D
    assert len(a2_basis(0)) == 1
    assert len(a2_basis(1)) == 6
    assert len(a2_basis(2)) == 16
    assert len(a2_basis(4)) == 51


def test_basis_constant_element_is_shared_by_all_charts():
    basis = a2_basis(2)
    const = [e for e in basis if e.degree == 0]
    assert len(const) == 1
    assert const[0].value == LaurentPoly.const(2, 1)
    assert sorted(c for c, _ in const[0].aliases) == [1, 2, 3, 4, 5]


def test_basis_shared_variables_have_two_aliases():
    basis = a2_basis(1)
    by_aliases = sorted(len(e.aliases) for e in basis)
    assert by_aliases == [2, 2, 2, 2, 2, 5]  # five variables, one constant


def test_basis_leading_exponents_distinct():
    basis = a2_basis(5)
    leads = [e.leading for e in basis]
    assert len(leads) == len(set(leads))
    assert all(e.value.terms[e.leading] == 1 for e in basis)


# ---- structure constants ----


def alias_set(expansion, idx):
    return set(expansion.basis[idx].aliases)


def test_product_x1_times_v():
    # x1 * (x2+1)/x1 = x2 + 1
    exp = a2_structure_constants([a2_cluster_monomial(1, 1, 0), a2_cluster_monomial(2, 1, 0)])
    assert not exp.residual
    constants = {}
    for idx, c in exp.coefficients.items():
        constants[frozenset(alias_set(exp, idx))] = c
    x2_elem = frozenset({(1, (0, 1)), (2, (0, 1))})
    one_elem = frozenset({(c, (0, 0)) for c in range(1, 6)})
    assert constants == {x2_elem: 1, one_elem: 1}


def test_product_w_times_v():
    # (x1+1)/x2 * (x2+1)/x1 = u + 1
    exp = a2_structure_constants([a2_cluster_monomial(4, 1, 0), a2_cluster_monomial(2, 1, 0)])
    assert not exp.residual
    got = {frozenset(alias_set(exp, idx)): c for idx, c in exp.coefficients.items()}
    u_elem = frozenset({(3, (0, 1)), (4, (0, 1))})
    one_elem = frozenset({(c, (0, 0)) for c in range(1, 6)})
    assert got == {u_elem: 1, one_elem: 1}


def test_product_within_one_chart_is_a_single_element():
    exp = a2_structure_constants([a2_cluster_monomial(3, 2, 1), a2_cluster_monomial(3, 0, 2)])
    assert not exp.residual
    assert len(exp.coefficients) == 1
    ((idx, c),) = exp.coefficients.items()
    assert c == 1
    assert (3, (2, 3)) in alias_set(exp, idx)


def test_expansion_reassembles_the_product():
    factors = [a2_cluster_monomial(2, 1, 1), a2_cluster_monomial(5, 1, 0)]
    exp = a2_structure_constants(factors)
    total = exp.residual
    for idx, c in exp.coefficients.items():
        total = total + exp.basis[idx].value.scale(c)
    product = factors[0].value * factors[1].value
    assert total == product


# ---- claim checkers ----


def test_main1_small_ranks():
    for n in (1, 2, 3):
        r = verify_main1(n)
        assert r.ok and r.status == "verified"
        assert r.stats["num_variables"] == n * (n + 3) // 2
    assert verify_main1(3).stats["max_numerator_coefficient"] == 2


def test_coeff_bounds():
    r = verify_coeff_bounds(3)
    assert r.ok
    assert r.stats["has_coefficient_two"] is True
    assert verify_coeff_bounds(2).stats["has_coefficient_two"] is False


def test_fd_and_friends():
    r = verify_fd(3)
    assert r.ok and r.witnesses == []
    assert r.stats["num_seeds"] == 14


def test_fpoly():
    r = verify_fpoly_logcc(3)
    assert r.ok
    # 9 variables; the three initial ones share the constant specialization
    assert r.stats["num_f_polynomials"] == 7


def test_separation_claim():
    assert verify_separation(2).ok
    assert verify_separation(3).ok


def test_a2_monomials_claim():
    r = verify_a2_monomials(6)
    assert r.ok
    assert r.stats["num_monomials"] == 5 * 28  # five charts, all (m1, m2) with sum <= 6


def test_exploratory_claims_clean_at_desk_scale():
    r = explore_an_monomials(2, 4)
    assert r.status == "exploratory" and r.ok
    r3 = explore_an_monomials(3, 3)
    assert r3.ok and r3.stats["num_clusters"] == 14
    rs = explore_a2_structure_constants(4)
    assert rs.status == "exploratory" and rs.ok
    assert rs.stats["num_unresolved"] == 0
    assert rs.stats["num_pairs"] > 0


def test_run_claim_dispatch_and_json():
    r = run_claim("main1", rank=2)
    obj = r.to_json_dict()
    assert set(obj) == {"claim", "scope", "status", "witnesses", "stats"}
    json.dumps(obj)  # serializable
    with pytest.raises(ValueError):
        run_claim("nonsense")


def test_budget_propagates():
    with pytest.raises(RuntimeError):
        verify_main1(3, budget=3)
    with pytest.raises(RuntimeError):
        verify_fd(3, budget=3)
