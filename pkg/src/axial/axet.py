"""Closed axis sets, the Miyamoto group, twins, Jordan axes, pair classes.

Group elements act on coordinate vectors as matrices; when the axis set spans
the algebra the action on axes is faithful and elements are handled as
permutations with one matrix witness each, which keeps exact arithmetic off
the hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from axial.algebra import Algebra, AlgebraError
from axial.fusion import (
    Axis,
    FusionLaw,
    MONSTER_QUARTER,
    check_axis,
    is_automorphism,
    jordan_law,
)
from axial.groebner import DEFAULT_CAPS, POSITIVE_DIMENSIONAL, SolverCaps
from axial.linalg import (
    Mat,
    Subspace,
    Vec,
    identity,
    intersect,
    kernel,
    mat,
    mat_from_cols,
    mat_mul,
    mat_sub,
    mat_vec,
    solve,
    unit_vec,
    vscale,
)
from axial.search import axes_from_idempotents, naive_idempotents

# Identity lengths of the two-generated algebras of Monster type (1/4, 1/32),
# the only classification data this library builds in.
NS_UNIT_LENGTHS: dict[str, Fraction] = {
    "2A": Fraction(12, 5),
    "2B": Fraction(2),
    "3A": Fraction(116, 35),
    "3C": Fraction(32, 11),
    "4A": Fraction(4),
    "4B": Fraction(19, 5),
    "5A": Fraction(32, 7),
    "6A": Fraction(51, 10),
}


class ClosureCapExceeded(AlgebraError):
    """Axis-set closure exceeded the configured cap."""


@dataclass
class Axet:
    """A set of axes closed under all of their graded involutions."""

    axes: tuple[Axis, ...]
    closed: bool = True

    def __len__(self):
        return len(self.axes)

    def vectors(self) -> list[Vec]:
        return [a.vector for a in self.axes]

    def taus(self) -> list[Mat]:
        out = []
        for a in self.axes:
            if a.miyamoto is None:
                raise ValueError("axis without a graded involution in the axet")
            out.append(a.miyamoto)
        return out

    def spans(self, dim: int) -> bool:
        return Subspace(dim, self.vectors()).dim == dim


def transport_axis(axis: Axis, g: Mat, g_inv: Mat) -> Axis:
    """Image of a verified axis under a verified automorphism.

    Eigendata and involutions move by conjugation, which preserves every
    certified property exactly.
    """
    n = len(axis.vector)
    new_eigendata = tuple(
        (lam, Subspace(n, [mat_vec(g, b) for b in space.basis]))
        for lam, space in axis.eigendata
    )

    def conj(m):
        return mat_mul(mat_mul(g, m), g_inv)

    return Axis(
        vector=mat_vec(g, axis.vector),
        law=axis.law,
        eigendata=new_eigendata,
        primitive=axis.primitive,
        miyamoto=conj(axis.miyamoto) if axis.miyamoto is not None else None,
        sigma=conj(axis.sigma) if axis.sigma is not None else None,
    )


def close_axet(alg: Algebra, seed_axes: Sequence[Axis], cap: int = 512, verify: bool = False) -> Axet:
    """Orbit closure of the seeds under the involutions of all found axes.

    New axes are produced by conjugation transport; `verify=True` re-runs the
    full axis check on every image as well.
    """
    if not seed_axes:
        raise ValueError("need at least one seed axis")
    law = seed_axes[0].law
    if any(a.law != law for a in seed_axes):
        raise ValueError("seed axes must share one fusion law")
    axes: list[Axis] = []
    seen: dict[Vec, int] = {}
    for a in seed_axes:
        if a.vector not in seen:
            seen[a.vector] = len(axes)
            axes.append(a)
    changed = True
    while changed:
        changed = False
        taus = []
        tau_seen = set()
        for a in axes:
            if a.miyamoto is not None and a.miyamoto not in tau_seen:
                tau_seen.add(a.miyamoto)
                taus.append(a.miyamoto)
        for g in taus:
            for a in list(axes):
                w = mat_vec(g, a.vector)
                if w in seen:
                    continue
                image = transport_axis(a, g, g)  # involutions are self-inverse
                if verify:
                    confirmed = check_axis(alg, image.vector, law)
                    if confirmed is None:
                        raise AlgebraError("closure image failed the axis check")
                    image = confirmed
                seen[image.vector] = len(axes)
                axes.append(image)
                changed = True
                if len(axes) > cap:
                    raise ClosureCapExceeded(f"axis closure exceeded cap {cap}")
    return Axet(tuple(axes), closed=True)


@dataclass
class MiyGroup:
    """The group generated by the axet's involutions.

    `elements` maps the permutation of the axet to one matrix witness; when
    the axet does not span, the fallback stores matrices directly and the
    permutation keys are synthetic.
    """

    generators: list[Mat]
    elements: dict[tuple[int, ...], Mat]
    order: int
    faithful: bool


def miyamoto_group(alg: Algebra, axet: Axet, cap: int = 200_000) -> MiyGroup:
    """Enumerate the Miyamoto group through its action on the axet."""
    if not axet.closed:
        raise ValueError("axet must be closed")
    n = alg.dim
    taus = axet.taus()
    vectors = axet.vectors()
    index = {v: i for i, v in enumerate(vectors)}
    faithful = axet.spans(n)

    unique_taus: list[Mat] = []
    seen_taus = set()
    for t in taus:
        if t not in seen_taus:
            seen_taus.add(t)
            unique_taus.append(t)

    if faithful:
        def to_perm(g: Mat) -> tuple[int, ...]:
            out = []
            for v in vectors:
                w = mat_vec(g, v)
                if w not in index:
                    raise AlgebraError("involution does not preserve the axet")
                out.append(index[w])
            return tuple(out)

        gen_perms = [(to_perm(g), g) for g in unique_taus]
        ident = tuple(range(len(vectors)))
        elements: dict[tuple[int, ...], Mat] = {ident: identity(n)}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for q, gmat in gen_perms:
                    composed = tuple(q[p[i]] for i in range(len(p)))
                    if composed not in elements:
                        elements[composed] = mat_mul(gmat, elements[p])
                        nxt.append(composed)
                        if len(elements) > cap:
                            raise ClosureCapExceeded("group enumeration cap exceeded")
            frontier = nxt
        return MiyGroup(unique_taus, elements, len(elements), True)

    # Unfaithful fallback: enumerate matrices directly under the cap.
    elements_m: dict[Mat, None] = {identity(n): None}
    frontier_m = [identity(n)]
    while frontier_m:
        nxt = []
        for m in frontier_m:
            for g in unique_taus:
                prod = mat_mul(g, m)
                if prod not in elements_m:
                    elements_m[prod] = None
                    nxt.append(prod)
                    if len(elements_m) > cap:
                        raise ClosureCapExceeded("group enumeration cap exceeded")
        frontier_m = nxt
    synthetic = {(i,): m for i, m in enumerate(elements_m)}
    return MiyGroup(unique_taus, synthetic, len(elements_m), False)


def twins_of(alg: Algebra, a: Axis, caps: SolverCaps = DEFAULT_CAPS) -> list[Axis]:
    """All axes sharing a's involution, found inside a + Ann(minus part).

    The search space is the annihilator of the negated eigenspace, so the
    quadratic solve runs in a few variables even in large algebras.  A
    positive-dimensional restricted variety is surfaced as an error carrying
    the basis, for manual relation injection.
    """
    minus = a.minus_space()
    ann = alg.annihilator(minus)
    if ann.is_zero():
        return []
    result = naive_idempotents(alg, subspace=ann, offset=a.vector, caps=caps)
    if result.status == POSITIVE_DIMENSIONAL:
        raise AlgebraError(
            "twin variety is positive-dimensional; inject extra relations "
            f"(basis size {len(result.basis)})"
        )
    twins = []
    for axis in axes_from_idempotents(alg, result, a.law):
        if axis.vector != a.vector and axis.miyamoto == a.miyamoto:
            twins.append(axis)
    return twins


def tau_realizer(
    alg: Algebra, tau: Mat, law: FusionLaw, caps: SolverCaps = DEFAULT_CAPS
) -> list[Axis]:
    """Axes whose involution equals the given automorphism.

    A realizing axis x satisfies x - lam*1 in Ann([A, tau]) for lam the
    negated eigenvalue of the law, so candidates are searched on that affine
    coset (within the span of Ann and the unit when the negated eigenvalue is
    not unique); each rational idempotent is filtered through the axis check
    and a tau comparison.  Realizers of the identity are Jordan axes; prefer
    `jordan_axes`, which searches the much smaller fixed subalgebra.
    """
    one = alg.require_unit()
    n = alg.dim
    if not is_automorphism(alg, tau):
        raise AlgebraError("tau is not an algebra automorphism")
    if mat_mul(tau, tau) != identity(n):
        raise AlgebraError("tau is not an involution")
    commutator_image = Subspace(
        n, [mat_vec(mat_sub(tau, identity(n)), unit_vec(n, j)) for j in range(n)]
    )
    ann = alg.annihilator(commutator_image)
    _, minus = law.c2_grading()
    if len(minus) == 1:
        (lam,) = minus
        result = naive_idempotents(
            alg, subspace=ann, offset=vscale(lam, one), caps=caps
        )
    else:
        space = Subspace(n, ann.basis + (one,))
        result = naive_idempotents(alg, subspace=space, caps=caps)
    if result.status == POSITIVE_DIMENSIONAL:
        raise AlgebraError("realizer variety is positive-dimensional")
    found = []
    for axis in axes_from_idempotents(alg, result, law):
        if axis.miyamoto == tau:
            found.append(axis)
    return found


def fixed_subalgebra(alg: Algebra, group: MiyGroup) -> Subspace:
    """Common fixed space of the group generators (hence of the group)."""
    n = alg.dim
    space = Subspace(n, identity(n))
    for g in group.generators:
        space = intersect(space, kernel(mat_sub(g, identity(n))))
    return space


def jordan_axes(
    alg: Algebra,
    group: MiyGroup,
    law: FusionLaw = MONSTER_QUARTER,
    caps: SolverCaps = DEFAULT_CAPS,
) -> list[Axis]:
    """Axes with trivial negated part, searched in the group's fixed space.

    Returned axes satisfy the Jordan law at the middle eigenvalue.  For
    Monster type (1/4, 1/32) the two-generated classification puts every such
    axis inside the fixed subalgebra, so the search is complete; for other
    laws it reports the Jordan axes of the fixed subalgebra only.
    """
    plus, minus = law.c2_grading()
    if not minus:
        raise ValueError("law carries no sign grading")
    inner = [v for v in law.values if v not in (Fraction(1), Fraction(0)) and v not in minus]
    if len(inner) != 1:
        raise ValueError("law does not single out a middle eigenvalue")
    alpha = inner[0]
    fixed = fixed_subalgebra(alg, group)
    if fixed.is_zero():
        return []
    result = naive_idempotents(alg, subspace=fixed, caps=caps)
    if result.status == POSITIVE_DIMENSIONAL:
        raise AlgebraError("fixed-space idempotent variety is positive-dimensional")
    found = []
    for point in result.points:
        if check_axis(alg, point, jordan_law(alpha)) is None:
            continue
        # re-certify under the ambient law so the axis carries the trivial
        # tau and the sign involution on the middle eigenspace
        axis = check_axis(alg, point, law)
        if axis is not None:
            found.append(axis)
    return found


@dataclass
class PairClass:
    """Invariants of a two-generated subalgebra, with an optional label."""

    subalgebra_dim: int
    tau_product_order: Optional[int]
    form_value: Optional[Fraction]
    unit_length: Optional[Fraction]
    label: Optional[str] = None


def _matrix_order(m: Mat, cap: int = 64) -> Optional[int]:
    n = len(m)
    ident = identity(n)
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = mat_mul(power, m)
    return None


def classify_pair(
    alg: Algebra,
    a: Axis,
    b: Axis,
    reference: Optional[dict[str, dict]] = None,
) -> PairClass:
    """Record the invariants of <<a, b>> and label them when unambiguous.

    Built-in labelling knowledge is limited to the identity-length row for
    Monster type (1/4, 1/32) and the fact that a zero product means 2B; richer
    matching requires a loaded reference table.
    """
    if a.vector == b.vector:
        raise ValueError("the two axes must be distinct")
    sub = alg.subalgebra_closure([a.vector, b.vector])
    tau_order = None
    if a.miyamoto is not None and b.miyamoto is not None:
        tau_order = _matrix_order(mat_mul(a.miyamoto, b.miyamoto))
    form_value = None
    if alg.gram is not None:
        form_value = alg.form_value(a.vector, b.vector)
    unit_length = None
    if alg.gram is not None and alg.find_unit() is not None:
        try:
            one_b = alg.unit_of_subalgebra(sub)
            unit_length = alg.form_value(one_b, one_b)
        except AlgebraError:
            unit_length = None

    label = None
    if reference:
        matches = [
            name
            for name, row in reference.items()
            if _row_matches(row, sub.dim, tau_order, form_value, unit_length)
        ]
        if len(matches) == 1:
            label = matches[0]
    if label is None and alg.product(a.vector, b.vector) == tuple([Fraction(0)] * alg.dim):
        label = "2B"
    if label is None and unit_length is not None and a.law == MONSTER_QUARTER:
        matches = [name for name, val in NS_UNIT_LENGTHS.items() if val == unit_length]
        if len(matches) == 1:
            label = matches[0]
    return PairClass(sub.dim, tau_order, form_value, unit_length, label)


def _row_matches(row: dict, dim, tau_order, form_value, unit_length) -> bool:
    checks = [
        ("dim", dim),
        ("tau_order", tau_order),
        ("form_value", form_value),
        ("unit_length", unit_length),
    ]
    for key, actual in checks:
        if key in row and actual is not None and row[key] != actual:
            return False
    return True


@dataclass
class AutGroup:
    """Automorphisms realized as permutations of a spanning axet."""

    matrices: list[Mat]
    perms: list[tuple[int, ...]]

    @property
    def order(self) -> int:
        return len(self.matrices)


def aut_from_axis_permutations(alg: Algebra, axet: Axet) -> AutGroup:
    """All algebra automorphisms permuting a spanning closed axis set.

    Candidate permutations are pruned by form values (an edge-colored graph
    isomorphism constraint), then each surviving assignment of a spanning
    subset determines a unique linear map which is verified exactly:
    multiplicative, bijective on the axet, form-preserving.
    """
    n = alg.dim
    vectors = axet.vectors()
    m = len(vectors)
    if not axet.spans(n):
        raise AlgebraError("axet does not span the algebra")

    # greedy spanning subset
    basis_positions: list[int] = []
    current = Subspace(n)
    for i, v in enumerate(vectors):
        bigger = Subspace(n, list(current.basis) + [v])
        if bigger.dim > current.dim:
            basis_positions.append(i)
            current = bigger
        if current.dim == n:
            break

    if alg.gram is not None:
        color = [[alg.form_value(vectors[i], vectors[j]) for j in range(m)] for i in range(m)]
    else:
        color = None
    zero_product = [
        [alg.product(vectors[i], vectors[j]) == tuple([Fraction(0)] * n) for j in range(m)]
        for i in range(m)
    ]

    index = {v: i for i, v in enumerate(vectors)}
    basis_cols = mat_from_cols([vectors[i] for i in basis_positions])
    matrices: list[Mat] = []
    perms: list[tuple[int, ...]] = []

    def consistent(assigned: list[int], candidate: int) -> bool:
        pos = len(assigned)
        i_new = basis_positions[pos]
        for prev, img in enumerate(assigned):
            i_old = basis_positions[prev]
            if color is not None:
                if color[i_old][i_new] != color[img][candidate]:
                    return False
            if zero_product[i_old][i_new] != zero_product[img][candidate]:
                return False
        if color is not None and color[i_new][i_new] != color[candidate][candidate]:
            return False
        return True

    # coordinates of each standard basis vector in the spanning subset,
    # computed once; the candidate map is image_cols applied to these
    basis_coords = []
    for j in range(n):
        coords = solve(basis_cols, unit_vec(n, j))
        assert coords is not None
        basis_coords.append(coords)

    def extend(assigned: list[int]):
        if len(assigned) == len(basis_positions):
            image_cols = mat_from_cols([vectors[k] for k in assigned])
            g = mat_from_cols([mat_vec(image_cols, coords) for coords in basis_coords])
            if not is_automorphism(alg, g):
                return
            perm = []
            for v in vectors:
                w = mat_vec(g, v)
                if w not in index:
                    return
                perm.append(index[w])
            if len(set(perm)) != m:
                return
            if alg.gram is not None:
                gt = tuple(zip(*g))
                if mat_mul(mat(gt), mat_mul(alg.gram, g)) != alg.gram:
                    return
            matrices.append(g)
            perms.append(tuple(perm))
            return
        used = set(assigned)
        for candidate in range(m):
            if candidate in used:
                continue
            if consistent(assigned, candidate):
                extend(assigned + [candidate])

    extend([])
    return AutGroup(matrices, perms)
