"""Tests for cover graphs built from banded generator matrices."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dccover.cover import (
    CoverGraph,
    GeneratorMatrix,
    NonSimpleCover,
    build_cover,
    check_simple,
    extremal_cover,
)
from dccover.fpoly import FpPoly, modulus_divisors, poly_one
from dccover.permgrp import PermGroup, transitivity_profile

SEXTIC5 = FpPoly(5, (3, 0, 4, 0, 2, 0, 1))
QUINTIC3 = FpPoly(3, (1, 1, 1, 2, 0, 1))


def divisor_strategy():
    cases = []
    for p in (3, 5, 7):
        for n in range(3, 7):
            for eps in (0, 1):
                for g in modulus_divisors(n, eps, p):
                    cases.append((g, n, eps))
    return st.sampled_from(cases)


# -- generator matrices -------------------------------------------------------


def test_banded_matrix_of_the_sextic():
    m = GeneratorMatrix.from_poly(SEXTIC5, 8)
    assert m.rows == ((3, 0, 4, 0, 2, 0, 1, 0), (0, 3, 0, 4, 0, 2, 0, 1))
    assert m.r == 2 and m.n == 8
    assert m.column(0) == (3, 0)
    assert m.column(7) == (0, 1)


def test_constant_divisor_gives_identity_matrix():
    m = GeneratorMatrix.from_poly(poly_one(7), 3)
    assert m.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_matrix_validation():
    with pytest.raises(ValueError):
        GeneratorMatrix(4, ((1, 0),))
    with pytest.raises(ValueError):
        GeneratorMatrix(5, ())
    with pytest.raises(ValueError):
        GeneratorMatrix(5, ((1, 2), (1, 2, 3)))
    with pytest.raises(ValueError):
        GeneratorMatrix.from_poly(SEXTIC5, 6)


def test_zero_column_is_caught():
    bad = GeneratorMatrix(5, ((1, 0, 2), (2, 0, 1)))
    assert check_simple(bad) == 1
    with pytest.raises(NonSimpleCover) as err:
        CoverGraph(bad)
    assert err.value.column == 1
    good = GeneratorMatrix.from_poly(SEXTIC5, 8)
    assert check_simple(good) is None


# -- cover construction --------------------------------------------------------


def test_worked_example_orders():
    assert build_cover(SEXTIC5, 8, 0).order == 200
    assert build_cover(QUINTIC3, 8, 0).order == 216
    assert build_cover(poly_one(7), 3, 0).order == 1029
    assert build_cover(FpPoly(5, (1, 1, 1)), 3, 0).order == 15


def test_explicit_neighbors_in_the_sextic_cover():
    cov = build_cover(SEXTIC5, 8, 0)
    # Vertex (0, 0): forward by column 0 = (3, 0), back by column 7 = (0, 1).
    assert cov.neighbors(0) == [28, 27, 195, 180]
    assert cov.vertex_id((3, 0), 1) == 28
    assert cov.vertex_of(195) == ((0, 4), 7)


def test_vertex_roundtrip_and_layers():
    cov = build_cover(SEXTIC5, 8, 0)
    for vid in (0, 7, 63, 199):
        fiber, layer = cov.vertex_of(vid)
        assert cov.vertex_id(fiber, layer) == vid
        assert cov.layer(vid) == layer
    with pytest.raises(ValueError):
        cov.vertex_id((1,), 0)


def test_dart_tracks_invert_each_other():
    cov = build_cover(QUINTIC3, 8, 0)
    for vid in range(0, cov.order, 17):
        for t in range(4):
            w = cov.dart_end(vid, t)
            assert cov.dart_end(w, cov.dart_inverse_track(t)) == vid


def test_darts_project_onto_base_darts():
    cov = build_cover(SEXTIC5, 8, 0)
    n = cov.n
    for vid in (0, 31, 112):
        layer = cov.layer(vid)
        got = {cov.base_dart(vid, t) for t in range(4)}
        expect = {
            0 * n + layer,
            1 * n + layer,
            2 * n + (layer - 1) % n,
            3 * n + (layer - 1) % n,
        }
        assert got == expect


def test_build_cover_validation():
    with pytest.raises(ValueError):
        build_cover(SEXTIC5, 2, 0)
    with pytest.raises(ValueError):
        build_cover(SEXTIC5, 8, 2)
    with pytest.raises(ValueError):
        build_cover(FpPoly(5, (3, 0, 4, 0, 2, 0, 2)), 8, 0)  # not monic
    with pytest.raises(ValueError):
        build_cover(SEXTIC5, 8, 1)  # divides x^8 - 1, not x^8 + 1
    with pytest.raises(ValueError):
        build_cover(FpPoly(5, (1, 1)), 3, 0)  # x + 1 does not divide x^3 - 1


@settings(max_examples=60, deadline=None)
@given(divisor_strategy())
def test_cover_invariants_across_divisors(case):
    g, n, eps = case
    cov = build_cover(g, n, eps)
    assert cov.order == n * cov.p ** cov.r
    adj = cov.adjacency()
    assert all(len(nbrs) == 4 for nbrs in adj)
    assert all(len(set(nbrs)) == 4 for nbrs in adj)  # simple
    assert cov.is_connected()
    # Undirected consistency.
    for u in range(0, cov.order, max(1, cov.order // 40)):
        for v in adj[u]:
            assert u in adj[v]


def test_translations_are_regular_deck_transformations():
    cov = build_cover(SEXTIC5, 8, 0)
    trans = cov.translations()
    assert len(trans) == cov.r
    prof = transitivity_profile(trans, cov)  # raises if not automorphisms
    assert prof["vertex_orbits"] == cov.n
    G = PermGroup(trans)
    assert G.order() == cov.fiber_size
    # Transitive on each fiber: the orbit of vertex 0 is the layer-0 fiber.
    assert G.orbit(0) == list(range(cov.fiber_size))
    # Commuting generators.
    a, b = (np.asarray(t) for t in trans)
    assert np.array_equal(a[b], b[a])


# -- extremal families ----------------------------------------------------------


def test_block_families_match_the_generic_construction():
    for kind, p, r, blocks in (
        ("pm1", 5, 2, 3),
        ("pm1", 3, 3, 2),
        ("pm1", 7, 1, 5),
        ("pmtheta", 5, 2, 2),
        ("pmtheta", 5, 1, 4),
        ("pmtheta", 13, 3, 2),
    ):
        fam = extremal_cover(kind, p, r, blocks)
        gen = build_cover(fam.g, fam.n, fam.eps)
        assert fam.edges() == gen.edges(), (kind, p, r, blocks)
        assert fam.order == r * blocks * p**r
        assert fam.is_connected()
        assert all(len(set(nbrs)) == 4 for nbrs in fam.adjacency())


def test_pm1_single_row_is_all_ones():
    fam = extremal_cover("pm1", 7, 1, 5)
    assert fam.matrix.rows == ((1, 1, 1, 1, 1),)
    assert fam.g == FpPoly(7, (1, 1, 1, 1, 1))


def test_extremal_validation():
    with pytest.raises(ValueError):
        extremal_cover("pm1", 5, 1, 1)
    with pytest.raises(ValueError):
        extremal_cover("pm1", 5, 2, 1)
    with pytest.raises(ValueError):
        extremal_cover("pmtheta", 7, 2, 2)  # 7 = 3 mod 4
    with pytest.raises(ValueError):
        extremal_cover("pmtheta", 5, 2, 3)  # odd block count
    with pytest.raises(ValueError):
        extremal_cover("pmtheta", 13, 1, 2)  # n = 2
    with pytest.raises(ValueError):
        extremal_cover("blocks", 5, 2, 2)
