import random

import pytest
from hypothesis import given, settings

from monores.errors import MonomialError, NotArtinianError
from monores.ideals import contains, intersect_all, irreducible, minimalize
from monores.newton import compute_newton_polyhedron, integral_closure_of_power
from monores.residue import (annihilator, briancon_skoda_witness,
                             enumerate_essential_sets, verify_chain)

from conftest import TWO_FACETS, artinian_sets, random_artinian
from oracles import annihilator_brute, essential_alphas_by_facets

TWO_FACETS_ANN = ((0, 9), (2, 4), (8, 3), (10, 1), (14, 0))


def test_two_facets_essential_sets():
    sets = enumerate_essential_sets(TWO_FACETS)
    assert [s.indices for s in sets] == [(0, 1), (0, 2), (1, 2), (2, 4)]
    assert [s.alpha for s in sets] == [(14, 1), (10, 3), (8, 4), (2, 9)]
    assert all(s.determinant != 0 for s in sets)


def test_two_facets_annihilator():
    rep = annihilator(TWO_FACETS)
    assert rep.annihilator.generators == TWO_FACETS_ANN
    assert not rep.equals_ideal and not rep.complete_intersection
    assert [t.basis_label for t in rep.terms] == [s.indices for s in rep.essential_sets]
    assert all(t.constant_nonzero and min(t.alpha) > 0 for t in rep.terms)


def test_pure_powers():
    A = [(3, 0, 0), (0, 5, 0), (0, 0, 2)]
    (s,) = enumerate_essential_sets(A)
    assert s.indices == (0, 1, 2) and s.alpha == (3, 5, 2)
    rep = annihilator(A)
    assert rep.annihilator == rep.ideal
    assert rep.equals_ideal and rep.complete_intersection


def test_three_point_segment():
    A = [(3, 0), (2, 1), (0, 3)]
    expected = intersect_all([irreducible((5, 1)), irreducible((3, 3)), irreducible((2, 4))])
    rep = annihilator(A)
    assert rep.annihilator == expected
    assert rep.annihilator.generators == ((0, 4), (2, 3), (3, 1), (5, 0))
    assert list(rep.annihilator.generators) == annihilator_brute(A, 8)


def test_zero_determinant_set_is_excluded():
    A = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 2, 0)]
    P = compute_newton_polyhedron(A)
    (f,) = P.compact_facets()
    assert f.normal == (1, 1, 1) and f.offset == 3
    assert set(f.on_facet) == {0, 1, 2, 3}
    indices = [s.indices for s in enumerate_essential_sets(A)]
    assert (0, 1, 3) not in indices
    assert indices == [(0, 1, 2), (0, 2, 3), (1, 2, 3)]


def test_non_artinian_is_rejected():
    with pytest.raises(NotArtinianError):
        annihilator([(1, 0, 1), (0, 1, 1)])
    with pytest.raises(NotArtinianError):
        enumerate_essential_sets([(2, 1), (0, 3)])


def test_witness():
    assert briancon_skoda_witness(TWO_FACETS) == (15, 0)
    assert briancon_skoda_witness([(3, 0), (0, 3)]) == (5, 0)
    assert briancon_skoda_witness([(1, 0), (0, 1)]) == (1, 0)
    with pytest.raises(MonomialError):
        briancon_skoda_witness([(3,), (5,)])


def test_chain_examples():
    ch = verify_chain(TWO_FACETS)
    assert ch.mu == 2 and ch.left_strict and ch.right_strict
    assert ch.witness == (15, 0)
    assert ch.closure_power == integral_closure_of_power(TWO_FACETS, 2)

    ch = verify_chain([(3, 0), (0, 3)])
    assert ch.left_strict and not ch.right_strict

    ch = verify_chain([(1, 0), (0, 1)])
    assert ch.closure_power.generators == ((0, 2), (1, 1), (2, 0))
    assert contains(ch.annihilator, (1, 0))

    ch = verify_chain([(3,), (5,)])
    assert ch.mu == 1 and ch.witness is None
    assert ch.closure_power == ch.annihilator == ch.ideal
    assert ch.ideal.generators == ((3,),)


@settings(max_examples=120, deadline=None)
@given(artinian_sets(max_entry=6, max_extra=4))
def test_annihilator_matches_brute_force(A):
    rep = annihilator(A)
    assert sorted({s.alpha for s in rep.essential_sets}) == essential_alphas_by_facets(A)
    top = max(max(s.alpha) for s in rep.essential_sets)
    assert list(rep.annihilator.generators) == annihilator_brute(A, top)


@settings(max_examples=120, deadline=None)
@given(artinian_sets(max_entry=6, max_extra=4))
def test_barycenter_property(A):
    rep = annihilator(A)
    P = rep.polyhedron
    n = P.dimension
    for s in rep.essential_sets:
        f = P.facets[s.facet_index]
        assert f.compact
        assert all(f.value(P.points[i]) == f.offset for i in s.indices)
        assert f.value(s.alpha) == n * f.offset


@settings(max_examples=120, deadline=None)
@given(artinian_sets(max_entry=6, max_extra=4))
def test_equality_iff_complete_intersection(A):
    rep = annihilator(A)
    n = len(A[0])
    pure = sum(1 for g in rep.ideal.generators if sum(1 for x in g if x) == 1)
    assert rep.equals_ideal == (len(rep.ideal.generators) == n == pure)


def interior_point(rng, A, P):
    """A lattice point strictly inside the polyhedron (off every compact facet)."""
    base = rng.choice(A)
    while True:
        x = tuple(v + rng.randint(0, 3) for v in base)
        if all(f.value(x) > f.offset for f in P.compact_facets()):
            return x
        base = x


def test_interior_points_do_not_matter():
    rng = random.Random(7)
    for _ in range(60):
        A = random_artinian(rng, rng.choice((2, 3)), max_entry=7)
        P = compute_newton_polyhedron(A)
        before = annihilator(A).annihilator
        B = A + [interior_point(rng, A, P) for _ in range(rng.randint(1, 3))]
        assert annihilator(B).annihilator == before


def test_two_facets_does_not_depend_on_fourth_point():
    without = [a for a in TWO_FACETS if a != (1, 5)]
    assert annihilator(without).annihilator == annihilator(TWO_FACETS).annihilator


def test_adding_diagram_points_shrinks():
    # (1, 2) and (2, 1) sit on the segment from (3, 0) to (0, 3)
    A = [(3, 0), (0, 3)]
    base = annihilator(A).annihilator
    more = annihilator(A + [(1, 2)]).annihilator
    full = annihilator(A + [(1, 2), (2, 1)]).annihilator
    assert more.issubset(base) and more != base
    assert full.issubset(more) and full != more
