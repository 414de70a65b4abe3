import pytest

from leraycheck.complex import ComplexError, SimplicialComplex
from leraycheck.generators import paper_join_family
from leraycheck.homology import BettiVector, boundary_matrix, reduced_betti, relative_betti
from leraycheck.linalg import GF2, GF3, QQ, FieldSpec

from . import oracles
from .conftest import FIELDS

SC = SimplicialComplex

# 6-vertex real projective plane
RP2 = SC.from_facets(
    6,
    [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)],
)


def faces(x):
    return {tuple(f) for d in x.faces_by_dim() for f in x.faces_of_dim(d)}


def test_boundary_matrix_examples():
    d0 = boundary_matrix(SC.from_facets(2, [[0], [1]]), 0, QQ)
    assert d0.to_dense() == [[1, 1]]
    d1 = boundary_matrix(SC.simplex(2), 1, QQ)
    assert d1.to_dense() == [[-1], [1]]
    assert boundary_matrix(SC.simplex(2), 1, GF2).to_dense() == [[1], [1]]
    d2 = boundary_matrix(SC.simplex(3), 2, QQ)
    # rows {0,1}, {0,2}, {1,2}
    assert d2.to_dense() == [[1], [-1], [1]]
    with pytest.raises(ComplexError):
        boundary_matrix(SC.void(2), 0)


@pytest.mark.parametrize("fld", FIELDS)
def test_boundary_squares_to_zero(small_corpus, fld):
    for x in small_corpus + [RP2]:
        for i in range(1, x.dim + 1):
            prod = boundary_matrix(x, i, fld).matmul(boundary_matrix(x, i + 1, fld))
            if fld.p is not None:
                prod = prod.reduce_mod(fld.p)
            assert prod.entries == {}


def test_void_and_empty():
    assert reduced_betti(SC.void(3)).is_zero()
    assert reduced_betti(SC.void(3))[-1] == 0
    hv = reduced_betti(SC.empty(3))
    assert hv[-1] == 1 and hv.nonzero() == {-1: 1}


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("fld", FIELDS)
def test_sphere(a, fld):
    hv = reduced_betti(SC.boundary_of_simplex(a), fld)
    assert hv.nonzero() == {a - 2: 1}


def test_projective_plane_field_sensitivity():
    # frozen from an integral Smith-form computation: H_1 = Z/2, H_2 = 0
    assert reduced_betti(RP2, GF2).nonzero() == {1: 1, 2: 1}
    assert reduced_betti(RP2, QQ).is_zero()
    assert reduced_betti(RP2, GF3).is_zero()


@pytest.mark.parametrize("fld", FIELDS)
def test_betti_matches_bruteforce(small_corpus, fld):
    for x in small_corpus:
        expected = oracles.reduced_betti(faces(x), fld.p)
        got = reduced_betti(x, fld)
        assert {d: got[d] for d in expected} == expected


@pytest.mark.parametrize("fld", FIELDS)
def test_euler_identity(small_corpus, fld):
    for x in small_corpus + [RP2]:
        assert reduced_betti(x, fld).euler() == x.reduced_euler_characteristic()


def test_cone_acyclic(small_corpus):
    for x in small_corpus:
        cone = SC.simplex(1).join(x)
        for fld in (GF2, GF3):
            assert reduced_betti(cone, fld).is_zero()


def test_join_betti_product(small_corpus):
    xs = [x for x in small_corpus if x.n <= 4][:10]
    for x in xs:
        for y in xs[:5]:
            j = x.join(y)
            hx, hy, hj = reduced_betti(x), reduced_betti(y), reduced_betti(j)
            for k in range(-1, j.dim + 1):
                expected = sum(hx[i] * hy[k - 1 - i] for i in range(-1, k + 1))
                assert hj[k] == expected


@pytest.mark.parametrize("a", [[2, 2], [3, 2], [2, 2, 2]])
def test_join_family_field_independent(a):
    fam = paper_join_family(a)
    for x in fam:
        assert reduced_betti(x, GF2) == reduced_betti(x, GF3) == reduced_betti(x, QQ)


def test_relative_examples():
    y = SC.simplex(2)
    assert all(v == 0 for v in relative_betti(y, y).values())
    rel = relative_betti(y, SC.from_facets(2, [[0], [1]]))
    assert rel == {0: 0, 1: 1}
    with pytest.raises(ComplexError):
        relative_betti(y, SC.void(2))
    with pytest.raises(ComplexError):
        relative_betti(SC.from_facets(2, [[0]]), y)


def test_relative_euler_and_les_bounds(pair_corpus):
    for x, y in pair_corpus:
        a = x & y
        for fld in (GF2, GF3):
            rel = relative_betti(y, a, fld)
            hy, ha = reduced_betti(y, fld), reduced_betti(a, fld)
            euler = sum((-1) ** k * v for k, v in rel.items())
            assert euler == y.reduced_euler_characteristic() - a.reduced_euler_characteristic()
            for k in range(0, y.dim + 2):
                h = rel.get(k, 0)
                assert h <= hy[k] + ha[k - 1]
                assert ha[k - 1] <= h + hy[k - 1]


def test_betti_vector_access():
    hv = BettiVector((1, 0, 2))
    assert hv[-1] == 1 and hv[1] == 2 and hv[7] == 0 and hv[-5] == 0
    assert hv.top_degree == 1
    assert hv.euler() == -1 - 2


def test_odd_prime_large():
    assert reduced_betti(RP2, FieldSpec(2147483647)).is_zero()


def _smith_invariants(x, d):
    """Nonzero invariant factors of the integral boundary matrix out of degree d."""
    from sympy import ZZ, Matrix
    from sympy.matrices.normalforms import smith_normal_form

    m = boundary_matrix(x, d, QQ)
    if m.n_rows == 0 or m.n_cols == 0:
        return []
    s = smith_normal_form(Matrix(m.to_dense()), domain=ZZ)
    return [abs(s[i, i]) for i in range(min(s.shape)) if s[i, i] != 0]


def test_universal_coefficients_via_smith_form(small_corpus):
    """Field Betti numbers follow from the integral invariant factors."""
    cases = [RP2] + [x for x in small_corpus if x.n <= 5][:12]
    for x in cases:
        by_dim = x.faces_by_dim()
        inv = {d: _smith_invariants(x, d) for d in range(0, x.dim + 1)}
        for fld in (GF2, GF3, QQ):
            def rk(d):
                if d not in inv:
                    return 0
                return sum(1 for e in inv[d] if fld.p is None or e % fld.p)

            got = reduced_betti(x, fld)
            for d in range(-1, x.dim + 1):
                assert got[d] == len(by_dim.get(d, ())) - rk(d) - rk(d + 1)
