"""Quadrics, cubics, and the assembled image ideal.

Essential-cubic counts are frozen from the closed-form first-syzygy-row
values (0, 0, 1, 4, 10 for d = 4..8); the degree-2/3 oracles recompute the
ideal slices from scratch as pullback kernels.
"""

from fractions import Fraction

import pytest

from wachspress import (
    ambient_ring,
    buchberger,
    build_ideal,
    cubics,
    image_ideal_oracle,
    numerators,
    pullback,
    quadric_basis,
    quadrics,
    tau,
)
from wachspress.ideals import (
    LeadTermFailure,
    center_basis,
    diagonal_monomials,
    diagonal_support_check,
    lambda_rank,
    lambda_vectors,
    linear_syzygy_dimension,
    pairing_matrix_rank,
)
from wachspress.verify import _span_equal
from conftest import fixture_cone


EXPECTED_ESSENTIAL = {4: 0, 5: 0, 6: 1, 7: 4, 8: 10}


def test_square_quadric_basis(square_cone):
    basis = quadric_basis(square_cone)
    ring = ambient_ring(4)
    x1, x2, x3, x4 = ring.gens()
    assert len(basis) == 1
    assert basis[0] == x1 * x3 - x2 * x4


def test_quadric_basis_staircase_leads():
    for d in (4, 5, 6, 7, 8):
        basis = quadric_basis(fixture_cone(d))
        assert len(basis) == d - 3
        for k, q in enumerate(basis, start=3):
            exp = [0] * d
            exp[0] = 1
            exp[k - 1] = 1
            assert q.lead_monomial() == tuple(exp)
            assert q.lead_coeff() > 0
            coeffs = list(q.terms.values())
            assert all(c.denominator == 1 for c in coeffs)


def test_all_quadrics_pull_back_to_zero():
    for d in (4, 5, 6, 7):
        cone = fixture_cone(d)
        nums = numerators(cone)
        for q in quadrics(cone):
            assert pullback(q, nums).is_zero()


def test_quadrics_have_diagonal_support():
    for d in (4, 5, 6, 7, 8):
        cone = fixture_cone(d)
        qs = quadrics(cone)
        assert diagonal_support_check(qs, d)
        monos = set(diagonal_monomials(d))
        for q in qs:
            assert set(q.terms) <= monos


def test_lambda_vectors_are_syzygies_of_tau():
    # each Lambda_k satisfies Lambda_k . tau = Q_k, and Q_k lies in the ideal
    for d in (4, 5, 6):
        cone = fixture_cone(d)
        ring = ambient_ring(d)
        t = tau(cone, ring)
        nums = numerators(cone)
        for k, lam in enumerate(lambda_vectors(cone, ring), start=1):
            q = sum((lam[c] * t.components[c] for c in range(3)), ring.zero())
            assert pullback(q, nums).is_zero()


def test_hexagon_odd_even_cubic(hexagon_cone):
    ring = ambient_ring(6)
    x1, x2, x3, x4, x5, x6 = ring.gens()
    ws = cubics(hexagon_cone, ring)
    w135 = ws[(1, 3, 5)].normalized()
    assert w135 == x1 * x3 * x5 - x2 * x4 * x6


def test_cubic_count_is_binomial():
    from math import comb

    for d in (4, 5, 6, 7):
        ws = cubics(fixture_cone(d))
        assert len(ws) == comb(d, 3)


def test_all_cubics_pull_back_to_zero():
    for d in (4, 5, 6):
        cone = fixture_cone(d)
        nums = numerators(cone)
        for w in cubics(cone).values():
            assert pullback(w, nums).is_zero()


def test_essential_cubic_counts():
    for d, expect in EXPECTED_ESSENTIAL.items():
        ideal = build_ideal(fixture_cone(d))
        assert len(ideal.essential_cubics) == expect
        assert len(ideal.quadric_basis) == d - 3
        from math import comb

        assert len(ideal.redundant_triples) == comb(d, 3) - expect


def test_ideal_generators_all_vanish_on_image():
    for d in (4, 5, 6, 7):
        cone = fixture_cone(d)
        ideal = build_ideal(cone)
        nums = numerators(cone)
        for g in ideal.generators:
            assert pullback(g, nums).is_zero()


def test_degree2_oracle_matches_quadric_span():
    for d in (4, 5, 6, 7):
        cone = fixture_cone(d)
        ring = ambient_ring(d)
        nums = numerators(cone)
        oracle = image_ideal_oracle(cone, 2, ring, nums)
        assert len(oracle) == d - 3
        basis = quadric_basis(cone, ring)
        same, info = _span_equal(oracle, list(basis), ring, 2)
        assert same, info


def test_degree3_oracle_matches_generated_slice():
    for d in (4, 5, 6):
        cone = fixture_cone(d)
        ring = ambient_ring(d)
        nums = numerators(cone)
        oracle = image_ideal_oracle(cone, 3, ring, nums)
        ideal = build_ideal(cone, ring)
        slice3 = [g * v for g in ideal.quadric_basis for v in ring.gens()]
        slice3 += [w for _, w in ideal.essential_cubics]
        same, info = _span_equal(oracle, slice3, ring, 3)
        assert same, info


def test_center_has_dimension_d_minus_3():
    for d in (4, 5, 6, 7, 8):
        cone = fixture_cone(d)
        basis = center_basis(cone)
        assert len(basis) == d - 3
        # every center vector pairs to zero with each lifted coordinate row
        for vec in basis:
            for c in range(3):
                total = sum(vec[i] * cone.lifted[i][c] for i in range(d))
                assert total == 0


def test_pairing_matrix_certifies_quadric_dimension():
    for d in (4, 5, 6, 7, 8):
        rank, corank = pairing_matrix_rank(fixture_cone(d))
        assert rank == 2 * d
        assert corank == d


def test_lambda_rank_is_d():
    for d in (4, 5, 6, 7):
        assert lambda_rank(fixture_cone(d)) == d


def test_no_linear_syzygies_among_quadrics():
    for d in (5, 6, 7, 8):
        ring = ambient_ring(d)
        basis = list(quadric_basis(fixture_cone(d), ring))
        assert linear_syzygy_dimension(basis, ring) == 0


def test_linear_syzygy_negative_control():
    # x1x3 and x1x4 share the factor x1: x4 (x1x3) - x3 (x1x4) = 0
    ring = ambient_ring(4)
    x1, x2, x3, x4 = ring.gens()
    assert linear_syzygy_dimension([x1 * x3, x1 * x4], ring) == 1


def test_full_and_trimmed_cubic_inventories_agree():
    # Groebner bases from all C(d,3) cubics and from the essential ones match
    for d in (5, 6):
        cone = fixture_cone(d)
        ideal = build_ideal(cone)
        all_gens = list(ideal.quadric_basis) + [
            w.normalized() for w in cubics(cone).values()
        ]
        trimmed = ideal.generators
        assert list(buchberger(all_gens)) == list(buchberger(trimmed))


def test_lead_term_failure_on_degenerate_cone_data(square_cone):
    # zeroed alphas collapse every quadric, so the staircase pivot is gone
    from wachspress.geometry import ConeData

    broken = ConeData(
        polygon=square_cone.polygon,
        lifted=square_cone.lifted,
        normals=square_cone.normals,
        alphas=(Fraction(0),) * 4,
    )
    with pytest.raises(LeadTermFailure):
        quadric_basis(broken)
