from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from axial.linalg import (
    Subspace,
    char_poly,
    det,
    eigenspace,
    full_space,
    identity,
    intersect,
    kernel,
    mat,
    mat_vec,
    perp_space,
    rref,
    semisimple_spectrum,
    solve,
    unit_vec,
    vec,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_rref_identity():
    m = identity(3)
    reduced, rank, pivots = rref(m)
    assert reduced == m
    assert rank == 3
    assert pivots == [0, 1, 2]


def test_rref_zero():
    m = mat([[0] * 4, [0] * 4])
    reduced, rank, _ = rref(m)
    assert reduced == m
    assert rank == 0


def test_rref_dependent_rows():
    reduced, rank, _ = rref(mat([[1, 2], [2, 4]]))
    assert reduced == mat([[1, 2], [0, 0]])
    assert rank == 1


def test_kernel_identity_and_zero():
    assert kernel(identity(4)).is_zero()
    assert kernel(mat([[0] * 3 for _ in range(3)])).dim == 3


def test_kernel_line():
    assert kernel(mat([[1, 1]])).basis == (vec([1, -1]),)


def test_eigenspace_diagonal():
    m = mat([[1, 0, 0], [0, 0, 0], [0, 0, F(1, 4)]])
    assert eigenspace(m, F(1, 4)).basis == (unit_vec(3, 2),)
    assert eigenspace(m, F(1, 2)).is_zero()


def test_intersect_basics():
    s = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    t = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert intersect(s, s) == s
    assert intersect(s, Subspace(3)).is_zero()
    assert intersect(s, t).basis == (unit_vec(3, 1),)


def test_intersect_dimension_mismatch():
    with pytest.raises(ValueError):
        intersect(Subspace(2, [[1, 0]]), Subspace(3, [[1, 0, 0]]))


def test_perp_full_and_zero():
    g = identity(3)
    assert perp_space(full_space(3), g).is_zero()
    assert perp_space(Subspace(3), g).dim == 3


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(fractions, min_size=4, max_size=4), min_size=1, max_size=3))
def test_perp_involution(vectors):
    # with a nondegenerate form, (S-perp)-perp recovers S
    g = mat([[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 3]])
    s = Subspace(4, vectors)
    assert perp_space(perp_space(s, g), g) == s


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.lists(fractions, min_size=4, max_size=4), min_size=1, max_size=4)
)
def test_rank_nullity(rows):
    m = mat(rows)
    _, rank, _ = rref(m)
    assert kernel(m).dim + rank == 4


def test_solve_and_det():
    a = mat([[2, 1], [1, 3]])
    assert det(a) == 5
    x = solve(a, vec([3, 4]))
    assert mat_vec(a, x) == vec([3, 4])
    assert solve(mat([[1, 1], [1, 1]]), vec([0, 1])) is None


def test_char_poly_companion():
    # companion matrix of t^2 - t - 1
    m = mat([[0, 1], [1, 1]])
    assert char_poly(m) == [F(-1), F(-1), F(1)]


def test_spectrum_diagonal():
    res = semisimple_spectrum(mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert res.ok
    dims = {str(lam): space.dim for lam, space in res.eigenpairs}
    assert dims == {"1": 1, "0": 2}


def test_spectrum_jordan_block_flagged():
    res = semisimple_spectrum(mat([[0, 1], [0, 0]]))
    assert not res.ok
    assert res.defect == 1


def test_spectrum_irrational_flagged():
    res = semisimple_spectrum(mat([[0, 2], [1, 0]]))  # eigenvalues +-sqrt(2)
    assert not res.ok
    assert res.defect == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(fractions, min_size=3, max_size=3), min_size=3, max_size=3))
def test_spectrum_exactness(rows):
    res = semisimple_spectrum(mat(rows))
    if res.ok:
        total = 0
        for lam, space in res.eigenpairs:
            total += space.dim
            for b in space.basis:
                assert mat_vec(mat(rows), b) == vec([lam * x for x in b])
        assert total == 3


def test_subspace_membership_and_coordinates():
    s = Subspace(3, [[1, 2, 0], [0, 0, 1]])
    v = vec([2, 4, 5])
    assert s.contains(v)
    coords = s.coordinates(v)
    assert coords == vec([2, 5])
    assert not s.contains(vec([1, 0, 0]))
    assert s.coordinates(vec([1, 0, 0])) is None
