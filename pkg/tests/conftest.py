from fractions import Fraction as F

import pytest

from axial.algebra import Algebra, diagonal_algebra
from axial.fusion import check_axis, monster_law
from axial.linalg import unit_vec
from axial.matsuo import (
    double_axes_and_flip,
    double_transposition_perm,
    matsuo_algebra,
    symmetric_transpositions,
)


@pytest.fixture(scope="session")
def s3_data():
    return symmetric_transpositions(3)


@pytest.fixture(scope="session")
def s4_data():
    return symmetric_transpositions(4)


@pytest.fixture(scope="session")
def q2_flip(s4_data):
    """The 4-dimensional flip subalgebra of the S4 Matsuo algebra at 1/4."""
    sigma = double_transposition_perm(4, 1, 2, 3, 4)
    return double_axes_and_flip(s4_data, F(1, 4), sigma)


@pytest.fixture(scope="session")
def q2(q2_flip):
    return q2_flip.algebra


@pytest.fixture(scope="session")
def q2_law():
    return monster_law(F(1, 2), F(1, 4))


@pytest.fixture(scope="session")
def q2_axes(q2, q2_law):
    """s1, s2, d1, d2 verified under the Monster (1/2, 1/4) law."""
    axes = [check_axis(q2, unit_vec(4, i), q2_law) for i in range(4)]
    assert all(a is not None for a in axes)
    return axes


@pytest.fixture(scope="session")
def matsuo_s3_quarter(s3_data):
    return matsuo_algebra(s3_data, F(1, 4))


@pytest.fixture(scope="session")
def two_b():
    """The 2-dimensional algebra of two orthogonal idempotents."""
    return diagonal_algebra(2)


def make_triple_2b_fixture() -> Algebra:
    """Seven-dimensional algebra with three pairwise-orthogonal axes.

    Basis a1 a2 a3 u w1 w2 w3.  The a_i are Monster (1/4, 1/32) axes with
    a_i a_j = 0; u spans the joint zero component; each w_i spans the joint
    eigenspace with 1/4 at position i and 1/32 elsewhere.  The action
    u w_i = 11/16 w_i makes a1 + a2 + a3 + u the unit, and the products
    w_i^2 = 8 a_i + a_j + a_k + 22 u and w_i w_j = w_k make the square
    pairings (w_i^2, u) = 22 and the triple pairing (w1 w2, w3) = 32 nonzero;
    the constructor verifies the form is Frobenius and the unit equations.
    """
    quarter, small = F(1, 4), F(1, 32)
    gamma = []
    for i in range(3):
        gamma.append((i, i, i, 1))
    gamma.append((3, 3, 3, 1))
    for i in range(3):
        wi = 4 + i
        gamma.append((i, wi, wi, quarter))
        for j in range(3):
            if j != i:
                gamma.append((j, wi, wi, small))
        gamma.append((3, wi, wi, F(11, 16)))
        for j in range(3):
            gamma.append((wi, wi, j, 8 if j == i else 1))
        gamma.append((wi, wi, 3, 22))
    gamma.extend([(4, 5, 6, 1), (4, 6, 5, 1), (5, 6, 4, 1)])
    gram = [[F(0)] * 7 for _ in range(7)]
    for i in range(4):
        gram[i][i] = F(1)
    for i in range(4, 7):
        gram[i][i] = F(32)
    return Algebra.from_gamma(7, gamma, gram=gram, unit=[1, 1, 1, 1, 0, 0, 0])


@pytest.fixture(scope="session")
def triple_2b():
    return make_triple_2b_fixture()
