import itertools
from fractions import Fraction as F

import pytest

from axial.algebra import AlgebraError, diagonal_algebra, direct_sum
from axial.decomp import (
    PairingProbe,
    SquareProbe,
    complement_in,
    decompose_joint,
    extension_space,
    generate_probes,
    partial_decomposition,
    sign_kernel,
)
from axial.fusion import MONSTER_QUARTER, check_axis, jordan_law
from axial.linalg import Subspace, identity, subspace_sum, unit_vec, vec
from axial.matsuo import matsuo_algebra


def test_single_axis_components_are_eigenspaces(q2, q2_axes):
    a = q2_axes[2]
    dec = decompose_joint(q2, [a])
    assert dec.complete
    for (lam,), space in dec.components.items():
        assert space == a.eigenspace(lam)


def test_precondition_identifies_pair(matsuo_s3_quarter):
    law = jordan_law(F(1, 4))
    axes = [check_axis(matsuo_s3_quarter, unit_vec(3, i), law) for i in (0, 1)]
    with pytest.raises(AlgebraError, match="axis 0 does not fix axis 1"):
        decompose_joint(matsuo_s3_quarter, axes)


def test_triple_2b_complete(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    assert dec.complete
    assert sum(space.dim for space in dec.components.values()) == 7
    assert dec.zero_component.dim == 1
    # module property over the zero component on every part, checked exactly
    u = dec.zero_component
    for space in dec.components.values():
        for x in u.basis:
            for y in space.basis:
                assert space.contains(triple_2b.product(x, y))


def test_components_invariant_under_taus(triple_2b):
    from axial.linalg import mat_vec

    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    for axis in axes:
        for space in dec.components.values():
            for b in space.basis:
                assert space.contains(mat_vec(axis.miyamoto, b))


def test_partial_decomposition_complete_case(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = partial_decomposition(triple_2b, axes)
    assert dec.a_sharp is not None and dec.a_sharp.is_zero()


def test_partial_decomposition_matsuo_pair(matsuo_s3_quarter, two_b):
    """Non-orthogonal mutually-fixing pair: the component sum is proper.

    The two generating axes of the 3-transposition algebra have trivial sign
    involutions under the ambient Monster law, so they fix each other even
    though their product is nonzero; the direct 2B summand provides the joint
    zero part, and everything else lands in the orthogonal complement.
    """
    total = direct_sum(matsuo_s3_quarter, two_b)
    axes = [check_axis(total, unit_vec(5, i), MONSTER_QUARTER) for i in (0, 1)]
    assert all(a is not None for a in axes)
    assert all(a.miyamoto == identity(5) for a in axes)
    dec = partial_decomposition(total, axes)
    assert not dec.complete
    assert dec.zero_component.dim == 2
    assert dec.a_circ.dim < 5
    assert dec.a_sharp is not None and not dec.a_sharp.is_zero()
    assert dec.a_circ.dim + dec.a_sharp.dim == 5
    pair_span = Subspace(5, [axes[0].vector, axes[1].vector])
    assert dec.a_sharp.contains_subspace(pair_span)
    # the complement is a module over the zero component
    u = dec.zero_component
    for x in u.basis:
        for y in dec.a_sharp.basis:
            assert dec.a_sharp.contains(total.product(x, y))


def test_complement_in(triple_2b):
    outer = Subspace(7, [unit_vec(7, i) for i in range(4)])
    inner = Subspace(7, [unit_vec(7, 0)])
    comp = complement_in(triple_2b, outer, inner)
    assert comp.dim == 3
    assert complement_in(triple_2b, outer, outer).is_zero()
    assert complement_in(triple_2b, outer, Subspace(7)) == outer
    with pytest.raises(AlgebraError):
        complement_in(triple_2b, inner, outer)


def test_extension_space_zero_action():
    # u acts as zero on w: psi is unconstrained, all of End(W)
    alg = diagonal_algebra(3)
    u = Subspace(3, [unit_vec(3, 0)])
    w = Subspace(3, [unit_vec(3, 1), unit_vec(3, 2)])
    ext = extension_space(alg, u, w, identity(1))
    assert ext.dim == 4
    assert ext.contains_identity()


def test_extension_space_scalar_line(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    u = dec.zero_component
    q, t = F(1, 4), F(1, 32)
    for key in [(q, t, t), (t, q, t), (t, t, q)]:
        w = dec.components[key]
        ext = extension_space(triple_2b, u, w, identity(u.dim))
        assert ext.dim == 1
        assert ext.contains_identity()


def test_extension_space_checks_phi(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    u = dec.zero_component  # spanned by the idempotent u
    w = dec.components[(F(1, 4), F(1, 32), F(1, 32))]
    not_multiplicative = ((F(2),),)  # u -> 2u is not an algebra map
    with pytest.raises(AlgebraError):
        extension_space(triple_2b, u, w, not_multiplicative)


def test_sign_kernel_trivial_cases(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    q, t = F(1, 4), F(1, 32)
    comps = [dec.components[k] for k in [(q, t, t), (t, q, t), (t, t, q)]]
    # no probes: the full sign group survives
    res = sign_kernel(triple_2b, comps, [])
    assert len(res.admissible) == 8
    # a single square probe certifies a component without cutting signs
    u = dec.zero_component.basis[0]
    res = sign_kernel(
        triple_2b, comps[:1], [SquareProbe(0, comps[0].basis[0], u)]
    )
    assert res.admissible == [(1,), (-1,)]
    assert res.certified == {0}


def test_sign_kernel_triple_probe(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    q, t = F(1, 4), F(1, 32)
    comps = [dec.components[k] for k in [(q, t, t), (t, q, t), (t, t, q)]]
    probes = generate_probes(triple_2b, dec.zero_component, comps, seed=3)
    res = sign_kernel(triple_2b, comps, probes)
    assert set(res.admissible) == {
        (1, 1, 1),
        (1, -1, -1),
        (-1, 1, -1),
        (-1, -1, 1),
    }
    # closure under coordinatewise products: it is a subgroup
    for s1 in res.admissible:
        for s2 in res.admissible:
            assert tuple(a * b for a, b in zip(s1, s2)) in res.admissible


def test_sign_kernel_long_probe_parity(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    q, t = F(1, 4), F(1, 32)
    comps = [dec.components[k] for k in [(q, t, t), (t, q, t), (t, t, q)]]
    probe = PairingProbe(
        (0, 1, 2),
        (comps[0].basis[0], comps[1].basis[0], comps[2].basis[0]),
        "long",
    )
    assert probe.parity(3) == (1, 1, 1)
    res = sign_kernel(triple_2b, comps, [probe])
    # ((w1 w2)(w1 w3), w1): w1w2 = w3, w1w3 = w2, w3w2 = w1, (w1, w1) = 32
    value = next(r.value for r in res.records)
    assert value == 32
    assert len(res.admissible) == 4


def test_sign_kernel_skips_vanishing_probe(triple_2b):
    axes = [check_axis(triple_2b, unit_vec(7, i), MONSTER_QUARTER) for i in range(3)]
    dec = decompose_joint(triple_2b, axes)
    q, t = F(1, 4), F(1, 32)
    comps = [dec.components[k] for k in [(q, t, t), (t, q, t), (t, t, q)]]
    # (w1^2, a1) pairing with u drawn from an orthogonal line: w1^2 has no
    # component pairing with w2, so (w1 w1, w2) = 0
    vanishing = PairingProbe((0, 0, 1), (comps[0].basis[0], comps[0].basis[0], comps[1].basis[0]))
    res = sign_kernel(triple_2b, comps, [vanishing])
    assert not res.records[0].used
    assert len(res.admissible) == 8
