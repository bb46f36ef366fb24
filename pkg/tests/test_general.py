from itertools import combinations

from hypothesis import given, settings, strategies as st

from monores.general import (KNOWN, UNKNOWN, ZERO, enumerate_projected_terms,
                             partial_annihilator, project_exponents)
from monores.ideals import minimalize, variety_is_origin
from monores.newton import integral_closure_of_power
from monores.residue import annihilator

from conftest import TWO_FACETS, CODIM_ONE, OFF_ORIGIN, artinian_sets, point_sets
from oracles import brute_facets, dot, leibniz_det


def known_labels(report):
    return {(t.index_set, t.members): t.contribution.generators for t in report.known_terms}


def test_projection():
    assert project_exponents(OFF_ORIGIN, (0,)) == ([(6,), (3,), (2,)], [0, 1, 2])
    assert project_exponents(CODIM_ONE, (2,)) == ([(1,)], [0, 0])
    assert project_exponents(TWO_FACETS, (0, 1))[0] == TWO_FACETS


def test_off_origin():
    rep = partial_annihilator(OFF_ORIGIN)
    assert rep.partial_annihilator.generators == ((2, 6), (5, 3), (9, 1))
    assert rep.complete and rep.unknown_count == 0
    assert known_labels(rep) == {
        ((0, 1), (0, 1)): ((0, 3), (9, 0)),
        ((0, 1), (1, 2)): ((0, 6), (5, 0)),
        ((0,), (2,)): ((2, 0),),
        ((1,), (0,)): ((0, 1),),
    }


def test_codim_one():
    rep = partial_annihilator(CODIM_ONE)
    assert rep.codim == 1 and rep.mu == 2
    assert rep.partial_annihilator == minimalize(3, CODIM_ONE)
    assert rep.partial_annihilator.generators == ((0, 1, 1), (1, 0, 1))
    assert not rep.complete and rep.unknown_count == 2
    assert {(t.index_set, t.members) for t in rep.unknown_terms} == {((0, 2), (0, 1)), ((1, 2), (0, 1))}
    assert known_labels(rep) == {
        ((0, 1), (0, 1)): ((0, 1, 0), (1, 0, 0)),
        ((2,), (0,)): ((0, 0, 1),),
        ((2,), (1,)): ((0, 0, 1),),
    }


def test_artinian_reduces_to_residue_core():
    rep = partial_annihilator(TWO_FACETS)
    assert rep.complete
    assert rep.partial_annihilator == annihilator(TWO_FACETS).annihilator
    full = [t for t in rep.terms if t.index_set == (0, 1) and t.status == KNOWN]
    assert [t.members for t in full] == [s.indices for s in annihilator(TWO_FACETS).essential_sets]


def test_generator_sensitivity():
    # (2, 7) lies on the unbounded facet x = 2 and adds new essential sets
    before = {(t.index_set, t.members, t.status) for t in enumerate_projected_terms(OFF_ORIGIN)}
    after = partial_annihilator(OFF_ORIGIN + [(2, 7)])
    assert {(t.index_set, t.members, t.status) for t in after.terms} != before
    assert after.warnings and not after.complete
    stripped = partial_annihilator(OFF_ORIGIN + [(2, 7)], strip_redundant=True)
    assert stripped.points == tuple(OFF_ORIGIN)
    assert stripped.partial_annihilator == partial_annihilator(OFF_ORIGIN).partial_annihilator


def test_single_monomial():
    rep = partial_annihilator([(2, 1)])
    assert rep.codim == 1 and rep.mu == 1
    assert rep.partial_annihilator.generators == ((2, 1),)
    assert rep.complete and rep.unknown_count == 0


def classify_brute(A, I, B):
    """Status of the term (B, I) from first principles."""
    proj = [tuple(a[i] for i in I) for a in A]
    img = [proj[j] for j in B]
    if len(set(img)) < len(I) or leibniz_det(img) == 0:
        return ZERO
    witnesses = [rho for rho, c in brute_facets(proj).items()
                 if all(dot(rho, b) == c for b in img)]
    if not witnesses:
        return ZERO
    return KNOWN if any(all(rho) for rho in witnesses) else UNKNOWN


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: point_sets(n=n, max_entry=5, max_size=5)))
def test_classification_matches_brute_force(A):
    terms = enumerate_projected_terms(A)
    for t in terms:
        assert classify_brute(A, t.index_set, t.members) == t.status
        assert (t.contribution is not None) == (t.status == KNOWN)
    labels = [(t.index_set, t.members) for t in terms]
    assert len(labels) == len(set(labels))
    n = len(A[0])
    rep = partial_annihilator(A)
    expected = {(I, B) for k in range(rep.codim, rep.mu + 1)
                for I in combinations(range(n), k) for B in combinations(range(len(A)), k)}
    assert set(labels) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: point_sets(n=n, max_entry=5, max_size=5)))
def test_closure_of_power_inside_partial(A):
    rep = partial_annihilator(A)
    assert integral_closure_of_power(A, rep.mu).issubset(rep.partial_annihilator)
    if rep.complete:
        assert rep.unknown_count == 0


@settings(max_examples=60, deadline=None)
@given(artinian_sets(max_entry=6, max_extra=4))
def test_artinian_partial_equals_annihilator(A):
    assert variety_is_origin(A)
    rep = partial_annihilator(A)
    assert rep.complete
    assert rep.partial_annihilator == annihilator(A).annihilator
