"""Tests for the two lifting criteria and the lifting subgroup report."""

import pytest
from hypothesis import given, settings, strategies as st

from dccover.cover import GeneratorMatrix, build_cover
from dccover.dcycle import DCAut, in_span, span_basis
from dccover.fpoly import FpPoly, modulus_divisors, poly_one
from dccover.lift import (
    Inconsistent,
    is_minimal_cover,
    lift_by_propagation,
    lifted_generators,
    lifting_report,
    lifting_swaps,
    lifts_by_invariance,
)
from dccover.permgrp import PermGroup, transitivity_profile
from dccover.reflex import divisor_info

SEXTIC5 = FpPoly(5, (3, 0, 4, 0, 2, 0, 1))
QUINTIC3 = FpPoly(3, (1, 1, 1, 2, 0, 1))

CUBIC_ROWS = [
    (FpPoly(7, (1, 1, 1)), "AT", 84, True),
    (FpPoly(7, (2, 4, 1)), "HT", 42, True),
    (FpPoly(7, (4, 2, 1)), "HT", 42, True),
    (FpPoly(7, (5, 1)), "HT", 294, False),
    (FpPoly(7, (3, 1)), "HT", 294, False),
    (FpPoly(7, (6, 1)), "AT", 588, True),
    (poly_one(7), "AT", 16464, True),
]


def small_cases():
    out = []
    for p in (3, 5):
        for n in (3, 4, 5, 6):
            for eps in (0, 1):
                for g in modulus_divisors(n, eps, p):
                    out.append((g, n, eps))
    return out


def aut_strategy(n):
    return st.builds(
        DCAut,
        st.just(n),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 1),
        st.integers(0, n - 1),
    )


# -- the row-space criterion ----------------------------------------------------


def test_twisted_rotation_always_lifts():
    for g, n, eps in small_cases():
        m = GeneratorMatrix.from_poly(g, n)
        rot = DCAut.rotation(n)
        if eps:
            rot = rot * DCAut.edge_swap(n, 0)
        assert lifts_by_invariance(rot, m), (g.to_text(), n, eps)


def test_full_swap_always_lifts():
    for g, n, eps in small_cases():
        m = GeneratorMatrix.from_poly(g, n)
        assert lifts_by_invariance(DCAut.full_swap(n), m)


def test_periodic_swap_lifts_exactly_when_step_divides_the_support_step():
    for g, n, eps in small_cases():
        d = divisor_info(g, n, eps).step
        m = GeneratorMatrix.from_poly(g, n)
        for k in range(1, n + 1):
            if n % k:
                continue
            got = lifts_by_invariance(DCAut.periodic_swap(n, 0, k), m)
            assert got == (d % k == 0), (g.to_text(), n, eps, k, d)


def test_single_swap_against_a_linear_divisor():
    m = GeneratorMatrix.from_poly(FpPoly(7, (5, 1)), 3)
    assert not lifts_by_invariance(DCAut.edge_swap(3, 0), m)


def test_reflection_cases_on_cubic_divisors():
    refl_full = DCAut.reflection(3) * DCAut.full_swap(3)
    m_unit = GeneratorMatrix.from_poly(FpPoly(7, (1, 1, 1)), 3)
    m_lin = GeneratorMatrix.from_poly(FpPoly(7, (5, 1)), 3)
    assert lifts_by_invariance(refl_full, m_unit)
    assert not lifts_by_invariance(refl_full, m_lin)


def test_type2_reflection_tail_on_the_sextic():
    m = GeneratorMatrix.from_poly(SEXTIC5, 8)
    tail = DCAut(8, swaps=0b00110011)  # edge pairs {0, 1, 4, 5}
    assert lifts_by_invariance(DCAut.reflection(8) * tail, m)
    assert not lifts_by_invariance(DCAut.reflection(8) * DCAut.full_swap(8), m)
    rep = lifting_report(divisor_info(SEXTIC5, 8, 0))
    assert rep.tau_l == tail


def test_swap_kernel_dimension_is_the_support_step():
    for g, n, eps in small_cases():
        info = divisor_info(g, n, eps)
        basis = lifting_swaps(GeneratorMatrix.from_poly(g, n))
        assert len(basis) == info.step, (g.to_text(), n, eps)
        for i in range(info.step):
            mask = sum(1 << j for j in range(i, n, info.step))
            assert in_span(basis, mask)


def test_every_swap_lifts_only_for_the_constant_divisor():
    for g, n, eps in small_cases():
        basis = lifting_swaps(GeneratorMatrix.from_poly(g, n))
        assert (len(basis) == n) == g.is_one


# -- propagation ------------------------------------------------------------------


def test_propagation_rejects_a_non_lifting_swap_with_a_witness():
    cov = build_cover(FpPoly(7, (5, 1)), 3, 0)
    res = lift_by_propagation(DCAut.edge_swap(3, 0), cov)
    assert isinstance(res, Inconsistent)
    assert res.expected != res.got
    assert cov.layer(res.expected) == cov.layer(res.got)


def test_propagation_lift_is_a_graph_automorphism():
    cov = build_cover(FpPoly(7, (1, 1, 1)), 3, 0)
    lift = lift_by_propagation(DCAut.rotation(3), cov)
    assert isinstance(lift, list)
    transitivity_profile([lift], cov)  # raises if an edge breaks
    assert sorted(lift) == list(range(cov.order))


def test_propagation_base_image_validation():
    cov = build_cover(FpPoly(7, (1, 1, 1)), 3, 0)
    rot = DCAut.rotation(3)
    with pytest.raises(ValueError):
        lift_by_propagation(rot, cov, base_image=0)  # lies over layer 0, not 1


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(small_cases()[:40]), st.data())
def test_propagation_agrees_with_invariance(case, data):
    g, n, eps = case
    aut = data.draw(aut_strategy(n))
    m = GeneratorMatrix.from_poly(g, n)
    cov = build_cover(g, n, eps)
    predicted = lifts_by_invariance(aut, m)
    got = lift_by_propagation(aut, cov)
    assert isinstance(got, list) == predicted


def test_basepoint_independence():
    cov = build_cover(FpPoly(7, (5, 1)), 3, 0)
    rot = DCAut.rotation(3)
    tau0 = DCAut.edge_swap(3, 0)
    for v in range(cov.fiber_size):
        base = rot.vertex_image(0) * cov.fiber_size + v
        assert isinstance(lift_by_propagation(rot, cov, base), list)
        base = tau0.vertex_image(0) * cov.fiber_size + v
        assert isinstance(lift_by_propagation(tau0, cov, base), Inconsistent)


# -- lifting subgroup reports -----------------------------------------------------


def test_cubic_reports_match_the_verified_group_orders():
    for g, sym, lifted, minimal in CUBIC_ROWS:
        info = divisor_info(g, 3, 0)
        rep = lifting_report(info)
        assert rep.arc_transitive == (sym == "AT")
        assert rep.lifted_order == lifted
        assert rep.minimal_cover == minimal
        cov = build_cover(g, 3, 0)
        G = PermGroup(lifted_generators(rep, cov))
        assert G.order() == lifted
        prof = transitivity_profile(G, cov)
        assert prof["vertex_transitive"] and prof["edge_transitive"]
        assert prof["arc_transitive"] == (sym == "AT")
        assert prof["arc_orbits"] == (1 if sym == "AT" else 2)


def test_base_group_order_matches_the_dart_action():
    for g, n, eps in [
        (FpPoly(7, (1, 1, 1)), 3, 0),
        (FpPoly(7, (5, 1)), 3, 0),
        (SEXTIC5, 8, 0),
        (QUINTIC3, 8, 0),
        (FpPoly(3, (1, 1)), 3, 1),
    ]:
        rep = lifting_report(divisor_info(g, n, eps))
        G = PermGroup([a.arc_perm() for a in rep.generators], 4 * n)
        assert G.order() == rep.base_order, (g.to_text(), n, eps)


def test_worked_sextic_and_quintic_reports():
    rep = lifting_report(divisor_info(SEXTIC5, 8, 0))
    assert rep.info.step == 2
    assert rep.info.core == FpPoly(5, (3, 4, 2, 1))
    assert rep.info.core_refl.kind == "type2"
    assert rep.info.core_refl.scale == 3
    assert rep.arc_transitive and rep.stabilizer == "Z2^2:Z2"
    assert rep.base_order == 64 and rep.lifted_order == 1600
    rep = lifting_report(divisor_info(QUINTIC3, 8, 0))
    assert not rep.arc_transitive and rep.tau_l is None
    assert rep.stabilizer == "Z2^1"
    assert rep.base_order == 16 and rep.lifted_order == 432


def test_minimality_of_the_cubic_covers():
    got = [is_minimal_cover(divisor_info(g, 3, 0)) for g, _, _, _ in CUBIC_ROWS]
    assert got == [True, True, True, False, False, True, True]


def test_every_report_generator_lifts_across_the_sweep():
    for g, n, eps in small_cases():
        rep = lifting_report(divisor_info(g, n, eps))
        m = GeneratorMatrix.from_poly(g, n)
        assert all(lifts_by_invariance(a, m) for a in rep.generators)
        assert len(rep.generators) == rep.info.step + 1 + (1 if rep.arc_transitive else 0)


def test_lifted_generators_requires_the_matching_cover():
    rep = lifting_report(divisor_info(FpPoly(7, (5, 1)), 3, 0))
    other = build_cover(FpPoly(7, (3, 1)), 3, 0)
    with pytest.raises(ValueError):
        lifted_generators(rep, other)
