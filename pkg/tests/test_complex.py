from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leraycheck.complex import (
    ComplexError,
    GroundSetMismatch,
    SimplicialComplex,
    from_mask,
    intersection,
    union,
)
from leraycheck.generators import paper_join_family

from . import oracles

SC = SimplicialComplex


def complexes(max_n=6):
    """Hypothesis strategy: random facet lists on a small ground set."""
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.sets(st.integers(0, n - 1), max_size=n), max_size=6).map(
            lambda fs: SC.from_facets(n, fs)
        )
    )


def faces(x):
    return {from_mask(f) for f in x.face_masks()}


# -- construction -------------------------------------------------------------

def test_from_facets_void():
    x = SC.from_facets(3, [])
    assert x.is_void and x.facets == [] and x.face_masks() == frozenset()


def test_from_facets_empty_complex():
    x = SC.from_facets(3, [[]])
    assert not x.is_void
    assert x.facets == [()]
    assert faces(x) == {()}


def test_from_facets_triangle_boundary():
    x = SC.from_facets(3, [{0, 1}, {1, 2}, {0, 2}])
    assert len(x.facets) == 3


def test_from_facets_discards_nonmaximal():
    x = SC.from_facets(4, [[0, 1, 2], [0, 1], [3], [2]])
    assert x.facets == [(3,), (0, 1, 2)]


def test_from_facets_rejects_out_of_range():
    with pytest.raises(ComplexError):
        SC.from_facets(3, [[0, 3]])


# -- membership and faces -----------------------------------------------------

def test_member():
    assert not SC.void(3).member(())
    assert SC.empty(3).member(())
    bd = SC.boundary_of_simplex(3)
    assert not bd.member((0, 1, 2))
    assert bd.member((0, 2))


def test_faces_of_dim():
    bd = SC.boundary_of_simplex(3)
    assert bd.faces_of_dim(1) == [(0, 1), (0, 2), (1, 2)]
    assert bd.faces_of_dim(2) == []
    assert SC.empty(3).faces_of_dim(-1) == [()]
    assert SC.void(3).faces_of_dim(-1) == []


# -- induced, link, star ----------------------------------------------------------

def test_induced_examples():
    bd = SC.boundary_of_simplex(3)
    assert bd.induced(range(3)) == bd
    assert bd.induced([0, 1]) == SC.simplex(3, [0, 1])
    assert bd.induced([]) == SC.empty(3)
    assert SC.void(3).induced([0]).is_void


def test_link_examples():
    bd = SC.boundary_of_simplex(3)
    # oracle: enumerate τ with τ ∪ {0} a face and τ ∩ {0} = ∅
    expected = oracles.link_faces(faces(bd), (0,))
    assert expected == {(), (1,), (2,)}
    assert faces(bd.link([0])) == expected
    assert bd.link([]) == bd
    assert bd.link([0, 1, 2]).is_void


def test_star_examples():
    bd = SC.boundary_of_simplex(3)
    assert faces(bd.star([0])) == {(), (0,), (1,), (2,), (0, 1), (0, 2)}
    assert bd.star([]) == bd
    assert bd.star([0, 1, 2]).is_void


def test_intersection_union_examples():
    x = SC.from_facets(4, [[0, 1, 2], [2, 3]])
    assert x & x == x
    assert x | SC.void(4) == x
    assert (x & SC.void(4)).is_void
    x1, x2 = paper_join_family([2, 2])
    cyc = x1 & x2
    assert cyc == SC.from_facets(4, [[0, 2], [0, 3], [1, 2], [1, 3]])
    with pytest.raises(GroundSetMismatch):
        x & SC.empty(3)


def test_join_examples():
    y = SC.from_facets(2, [[0], [1]])
    assert SC.empty(1).join(y) == SC.from_facets(3, [[1], [2]])
    four_cycle = y.join(y)
    assert four_cycle == SC.from_facets(4, [[0, 2], [0, 3], [1, 2], [1, 3]])
    assert SC.void(2).join(y).is_void


def test_simplex_and_boundary():
    assert SC.boundary_of_simplex(4, [0]) == SC.empty(4)
    assert len(SC.simplex(3).facets) == 1
    assert SC.boundary_of_simplex(4).dim == 2
    with pytest.raises(ComplexError):
        SC.boundary_of_simplex(3, [])


def test_alexander_dual_examples():
    two_points = SC.from_facets(2, [[0], [1]])
    # oracle: τ ⊆ {0,1} with complement a non-face
    fs = faces(two_points)
    expected = {t for t in oracles.all_subsets(range(2)) if tuple(sorted(set(range(2)) - set(t))) not in fs}
    # two points on two vertices are the boundary of an edge, so the dual is {∅}
    assert expected == {()}
    assert faces(two_points.alexander_dual()) == expected
    for n in (2, 3, 4):
        assert SC.boundary_of_simplex(n).alexander_dual() == SC.empty(n)
    with pytest.raises(ComplexError):
        SC.void(3).alexander_dual()
    with pytest.raises(ComplexError):
        SC.simplex(3).alexander_dual()


def test_alexander_dual_matches_definition(small_corpus):
    for x in small_corpus:
        if x.is_full_simplex():
            continue
        fs = faces(x)
        n = x.n
        expected = {t for t in oracles.all_subsets(range(n)) if tuple(sorted(set(range(n)) - set(t))) not in fs}
        assert faces(x.alexander_dual()) == expected


# -- properties ---------------------------------------------------------------------

@given(complexes())
def test_downward_closed_and_antichain(x):
    fs = faces(x)
    for f in fs:
        for r in range(len(f)):
            for sub in combinations(f, r):
                assert x.member(sub)
    masks = list(x.facet_masks)
    for a in masks:
        for b in masks:
            assert a == b or a & ~b != 0


@given(complexes(), st.data())
def test_induced_composes(x, data):
    s = data.draw(st.sets(st.integers(0, x.n - 1)))
    t = data.draw(st.sets(st.integers(0, x.n - 1)))
    assert x.induced(s).induced(t) == x.induced(s & t)


@given(complexes(), st.data())
def test_induced_matches_definition(x, data):
    s = data.draw(st.sets(st.integers(0, x.n - 1)))
    assert faces(x.induced(s)) == oracles.induced_faces(faces(x), s)


@given(complexes(), st.data())
def test_link_of_link(x, data):
    if x.is_void:
        return
    face = data.draw(st.sampled_from(sorted(faces(x))))
    cut = data.draw(st.integers(0, len(face)))
    a, b = face[:cut], face[cut:]
    assert x.link(face) == x.link(a).link(b)


@given(complexes(), st.data())
def test_link_is_star_minus_a(x, data):
    if x.is_void:
        return
    face = set(data.draw(st.sampled_from(sorted(faces(x)))))
    star = faces(x.star(face))
    assert faces(x.link(face)) == {t for t in star if not set(t) & face}
    assert faces(x.link(face)) == oracles.link_faces(faces(x), face)


@settings(max_examples=60)
@given(complexes(), st.data())
def test_alexander_dual_involution(x, data):
    if x.is_void or x.is_full_simplex():
        return
    assert x.alexander_dual().alexander_dual() == x


@given(st.data())
def test_lattice_laws(data):
    n = data.draw(st.integers(1, 5))
    strat = st.lists(st.sets(st.integers(0, n - 1)), max_size=4).map(lambda fs: SC.from_facets(n, fs))
    x, y, z = data.draw(strat), data.draw(strat), data.draw(strat)
    assert x & y == y & x and x | y == y | x
    assert (x & y) & z == x & (y & z) and (x | y) | z == x | (y | z)
    assert x & (y | z) == (x & y) | (x & z)
    assert x | (y & z) == (x | y) & (x | z)
    assert faces(x & y) == faces(x) & faces(y)
    assert faces(x | y) == faces(x) | faces(y)


def test_nary_helpers():
    fam = paper_join_family([2, 2, 2])
    assert intersection(*fam) == fam[0] & fam[1] & fam[2]
    assert union(*fam) == SC.boundary_of_simplex(6)
