import random

import pytest

from graphtower import (IntPolynomial, Multigraph, QuotientSpec,
                        TowerGroupSpec, VoltageAssignment, fit_iwasawa,
                        fitting_generators, lambda1_determinant, mhg_check,
                        mu_lambda_from_poly, mu_lower_bound,
                        quotient_assignment, spanning_tree_count, tower_en)
from graphtower.errors import DisconnectedError
from graphtower.jacobian import p_valuation
from graphtower.voltage import derive

from conftest import random_abelian_instance


def z3_loop():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    loop = Multigraph.build(["v"], [("e", ("v", "v"))])
    return VoltageAssignment.build(loop, spec, {"e": [[0, 1]]})


def two_vertex_nine_edge():
    """p = 3 metacyclic tower: parallel edges with voltages σ,σ,σ,τ,τ,τ,1,1,1."""
    spec = TowerGroupSpec("metacyclic", 3)
    graph = Multigraph.build(["v", "w"], [(i, ("v", "w")) for i in range(9)])
    voltages = {i: [[0, 1]] for i in range(3)}
    voltages.update({i: [[1, 1]] for i in range(3, 6)})
    voltages.update({i: [] for i in range(6, 9)})
    return VoltageAssignment.build(graph, spec, voltages)


def test_tower_en_loop():
    report = tower_en(z3_loop(), 3)
    assert report.e == (0, 1, 2, 3)
    assert report.group_orders == (1, 3, 9, 27)


def test_tower_en_checks_criterion():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    loop = Multigraph.build(["v"], [("e", ("v", "v"))])
    trivial = VoltageAssignment.build(loop, spec, {"e": []})
    with pytest.raises(DisconnectedError):
        tower_en(trivial, 2)


def test_tower_matches_spanning_tree_count():
    report = tower_en(z3_loop(), 2)
    for n in (0, 1, 2):
        cover = derive(z3_loop(), n)
        count = spanning_tree_count(cover.graph)
        assert report.e[n] == p_valuation(count, 3) if count > 1 else True


def test_fit_exact_sequences():
    fit = fit_iwasawa((0, 1, 2, 3), 3)
    assert (fit.mu, fit.lam, fit.nu, fit.stable) == (0, 1, 0, True)
    fit = fit_iwasawa((5, 5, 5, 5), 3)
    assert (fit.mu, fit.lam, fit.nu, fit.stable) == (0, 0, 5, True)
    fit = fit_iwasawa((2, 6, 18, 54), 3)
    assert (fit.mu, fit.lam, fit.nu, fit.stable) == (2, 0, 0, True)


def test_fit_instability_reported():
    fit = fit_iwasawa((0, 5, 6, 7), 3)
    assert not fit.stable


def test_lambda1_loop():
    det = lambda1_determinant(z3_loop())
    assert det.gamma_det.low == -1
    assert det.gamma_det.coeffs == (-1, 2, -1)  # −γ⁻¹(γ−1)²
    assert det.cleared_power == 1
    assert det.f.coeffs == (0, 0, -1)
    assert mu_lambda_from_poly(det.f, 3) == (0, 2)


def test_lambda1_two_vertex_example():
    alpha = two_vertex_nine_edge()
    quotient = quotient_assignment(alpha, QuotientSpec((0, 1)))
    det = lambda1_determinant(quotient)
    # 18(2 − γ − γ⁻¹), cleared to −18T²
    assert det.gamma_det.low == -1
    assert det.gamma_det.coeffs == (-18, 36, -18)
    assert det.f.coeffs == (0, 0, -18)
    assert mu_lambda_from_poly(det.f, 3) == (2, 2)


def test_lambda1_disconnected_cover_raises():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    loop = Multigraph.build(["v"], [("e", ("v", "v"))])
    trivial = VoltageAssignment.build(loop, spec, {"e": []})
    with pytest.raises(DisconnectedError):
        lambda1_determinant(trivial)


def test_mu_lambda_from_poly():
    assert mu_lambda_from_poly(IntPolynomial.of(0, 0, -18), 3) == (2, 2)
    assert mu_lambda_from_poly(IntPolynomial.of(0, 0, 9), 3) == (2, 2)
    assert mu_lambda_from_poly(IntPolynomial.of(0, 5, 0, 1), 5) == (0, 3)
    with pytest.raises(ValueError):
        mu_lambda_from_poly(IntPolynomial(()), 3)


def test_mu_lower_bound():
    assert mu_lower_bound(two_vertex_nine_edge()) == 2
    assert mu_lower_bound(z3_loop()) == 0


def test_mhg_pinched():
    verdict = mhg_check(two_vertex_nine_edge(), QuotientSpec((0, 1)))
    assert verdict.verdict == "HOLDS"
    assert verdict.mu1 == 2 and verdict.mu_lower_bound == 2


def test_mhg_mu1_zero():
    verdict = mhg_check(z3_loop(), QuotientSpec((1,)))
    assert verdict.verdict == "HOLDS"
    assert verdict.mu1 == 0


def test_exact_sequence_lambda_shift():
    # λ of the Picard determinant is one more than the Jacobian tower slope
    alpha = z3_loop()
    det = lambda1_determinant(alpha)
    _, lam_pic = mu_lambda_from_poly(det.f, 3)
    fit = fit_iwasawa(tower_en(alpha, 3).e, 3)
    assert fit.stable
    assert fit.lam == lam_pic - 1
    assert fit.mu == mu_lambda_from_poly(det.f, 3)[0]


def test_fitting_generators_loop_over_z2():
    spec = TowerGroupSpec("abelian", 2, rank=1)
    loop = Multigraph.build(["v"], [("e", ("v", "v"))])
    alpha = VoltageAssignment.build(loop, spec, {"e": [[0, 1]]})
    gens = fitting_generators(alpha, 1)
    values = {chi.exponents: v for chi, v in gens.components}
    assert values[(0,)].is_zero()
    assert values[(1,)].as_int() == 4
    assert gens.regular == 0  # singular over the full ring (trivial character)


def test_fitting_components_match_h_values():
    from graphtower import h_at_one
    rng = random.Random(81)
    for _ in range(5):
        alpha, level = random_abelian_instance(rng)
        gens = fitting_generators(alpha, level)
        values = {chi.exponents: v for chi, v in gens.components}
        for chi, _ in gens.components:
            assert values[chi.exponents] == h_at_one(
                alpha, level, chi.conjugate())


def test_fitting_projection_compatibility():
    rng = random.Random(82)
    checked = 0
    while checked < 4:
        alpha, level = random_abelian_instance(rng)
        if level < 2:
            continue
        high = fitting_generators(alpha, level)
        low = fitting_generators(alpha, level - 1)
        p = alpha.spec.p
        high_map = {chi.exponents: v for chi, v in high.components}
        for chi, value in low.components:
            pulled = tuple(p * e for e in chi.exponents)
            assert high_map[pulled] == value.lift(level)
        checked += 1
