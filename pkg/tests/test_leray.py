import pytest

from leraycheck.complex import GroundSetTooLarge, SimplicialComplex, VoidComplexError
from leraycheck.generators import flag_complex, paper_join_family
from leraycheck.leray import (
    PConditionTable,
    check_P,
    eq5_bound,
    leray_links_witness,
    leray_number,
    leray_number_via_links,
    leray_witness,
)
from leraycheck.complex import intersection, union
from leraycheck.linalg import GF2, GF3, QQ

from . import oracles
from .conftest import FIELDS, corpus

SC = SimplicialComplex


def faces(x):
    return {tuple(f) for d in x.faces_by_dim() for f in x.faces_of_dim(d)}


def test_simplex_is_zero():
    for n in (1, 3, 5):
        assert leray_number(SC.simplex(n)) == 0
        assert leray_number_via_links(SC.simplex(n)) == 0
    # a simplex on a proper vertex subset still has no homology anywhere
    assert leray_number(SC.simplex(5, [1, 3])) == 0
    assert leray_number(SC.empty(4)) == 0


def test_void_rejected():
    with pytest.raises(VoidComplexError):
        leray_number(SC.void(3))
    with pytest.raises(VoidComplexError):
        leray_number_via_links(SC.void(3))


@pytest.mark.parametrize("a", [2, 3, 4, 5])
def test_sphere(a):
    bd = SC.boundary_of_simplex(a)
    assert leray_number(bd) == a - 1
    res = leray_links_witness(bd)
    assert res.value == a - 1 and res.witness == ()


@pytest.mark.parametrize("a", [[2, 2], [3, 2], [2, 3, 2]])
def test_join_family(a):
    fam = paper_join_family(a)
    for xi, ai in zip(fam, a):
        assert leray_number(xi) == ai - 1
    assert leray_number(intersection(*fam)) == sum(a) - len(a)
    assert leray_number(union(*fam)) == sum(a) - 1


def test_chordal_path():
    path = flag_complex(4, [(0, 1), (1, 2), (2, 3)])
    assert leray_number(path) <= 1
    square = flag_complex(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert leray_number(square) == 2


def test_witness_is_genuine():
    x = SC.from_facets(5, [[0, 1], [1, 2], [0, 2], [3, 4]])
    res = leray_witness(x)
    assert res.value == 2 and res.degree == 1
    assert oracles.reduced_betti(oracles.induced_faces(faces(x), res.witness), 2)[1] > 0


@pytest.mark.parametrize("fld", FIELDS)
def test_routes_agree_with_bruteforce(small_corpus, fld):
    for x in small_corpus:
        expected = oracles.leray(faces(x), x.n, fld.p)
        assert leray_number(x, fld) == expected
        assert leray_number_via_links(x, fld) == expected


def test_monotone_under_induced(small_corpus):
    for x in small_corpus[:20]:
        lx = leray_number(x)
        for s in oracles.all_subsets(range(x.n)):
            assert leray_number(x.induced(s)) <= lx


def test_check_P_endpoints(small_corpus):
    for x in small_corpus[:20]:
        n = x.n
        lx = leray_number(x)
        for d in range(0, n + 2):
            assert check_P(x, d, n, 0) == (lx <= d)
            assert check_P(x, d, 0, n) == (lx <= d)


def test_P_table_matches_direct(small_corpus):
    for x in small_corpus[:12]:
        n = x.n
        table = PConditionTable(x)
        for d in range(0, n + 1):
            for k in range(0, n + 1):
                for m in range(0, n + 1):
                    assert table.holds(d, k, m) == check_P(x, d, k, m)


def test_claim_shift_small(small_corpus):
    for x in small_corpus[:20]:
        n = x.n
        table = PConditionTable(x)
        for d in range(0, n + 1):
            for k in range(0, n):
                for m in range(1, n + 1):
                    assert table.holds(d, k, m) == table.holds(d, k + 1, m - 1)


def test_eq5_bound(pair_corpus):
    for x, y in pair_corpus[:15]:
        lxy = leray_number(x & y)
        bound = eq5_bound(x, y)
        assert lxy <= bound <= leray_number(x) + leray_number(y)


def test_max_n_guard():
    big = SC.empty(30)
    with pytest.raises(GroundSetTooLarge, match="--max-n"):
        leray_number(big)
    assert leray_number(big, max_n=None) == 0
    with pytest.raises(GroundSetTooLarge):
        check_P(SC.empty(15), 0, 0, 0)


def test_field_dependent_leray():
    rp2 = SC.from_facets(
        6,
        [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)],
    )
    assert leray_number(rp2, GF2) == 3 == oracles.leray(faces(rp2), 6, 2)
    assert oracles.leray(faces(rp2), 6, None) == 2
    # over Q and GF(3) the worst induced subcomplex is a cycle
    assert leray_number(rp2, QQ) == leray_number(rp2, GF3) == 2
    assert leray_number_via_links(rp2, QQ) == 2
