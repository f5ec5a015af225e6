"""Fusion laws, axis verification, graded involutions, derivation spaces.

An axis is certified here by explicit exact checks: idempotency, a semisimple
adjoint with spectrum inside the law, eigenspace products landing where the
star table says, and a 1-dimensional principal eigenspace.  The certificate
carries the eigenspace decomposition together with the graded involution
matrices it entitles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from axial.algebra import Algebra
from axial.linalg import (
    Mat,
    Subspace,
    Vec,
    eigenspace,
    frac,
    identity,
    is_zero_vec,
    kernel,
    mat,
    mat_from_cols,
    mat_vec,
    solve,
    subspace_sum,
    unit_vec,
    vec,
)

ONE = Fraction(1)
ZERO = Fraction(0)


class FusionLaw:
    """A finite symmetric star table on a set of eigenvalues containing 1.

    The table is stored on unordered pairs; `star(l, m)` looks both ways.
    Laws where 1 * l differs from {l} (l != 0) or 1 * 0 is nonempty are
    rejected rather than reinterpreted.
    """

    __slots__ = ("values", "_star")

    def __init__(self, values, star: Mapping):
        vals = tuple(sorted({frac(v) for v in values}, reverse=True))
        if ONE not in vals:
            raise ValueError("a fusion law must contain the eigenvalue 1")
        table: dict[tuple[Fraction, Fraction], frozenset] = {}
        for key, out in star.items():
            lam, mu = (frac(key[0]), frac(key[1]))
            if lam not in vals or mu not in vals:
                raise ValueError(f"star entry {key} uses values outside the law")
            out_set = frozenset(frac(x) for x in out)
            if not out_set <= set(vals):
                raise ValueError(f"star value {key} -> {set(out)} leaves the law")
            pair = (lam, mu) if lam >= mu else (mu, lam)
            if pair in table and table[pair] != out_set:
                raise ValueError(f"asymmetric star table at {pair}")
            table[pair] = out_set
        for lam in vals:
            pair = (ONE, lam) if ONE >= lam else (lam, ONE)
            expected = frozenset() if lam == ZERO else frozenset([lam])
            if table.setdefault(pair, expected) != expected:
                raise ValueError("law violates 1*l = {l} (l != 0), 1*0 = empty")
        self.values = vals
        self._star = table

    def star(self, lam, mu) -> frozenset:
        lam, mu = frac(lam), frac(mu)
        pair = (lam, mu) if lam >= mu else (mu, lam)
        return self._star.get(pair, frozenset())

    def is_seress(self) -> bool:
        """0 is an eigenvalue and 0 * l is contained in {l} for every l."""
        if ZERO not in self.values:
            return False
        return all(self.star(ZERO, lam) <= {lam} for lam in self.values)

    def c2_grading(self) -> tuple[frozenset, frozenset]:
        """The sign grading with maximal negative part.

        Returns (plus, minus); minus is empty for trivially graded laws.
        """
        candidates = [v for v in self.values if v != ONE]
        best_minus: frozenset = frozenset()
        for size in range(len(candidates), 0, -1):
            for subset in itertools.combinations(sorted(candidates), size):
                minus = frozenset(subset)
                plus = frozenset(self.values) - minus
                ok = True
                for lam, mu in itertools.combinations_with_replacement(self.values, 2):
                    out = self.star(lam, mu)
                    same_part = (lam in minus) == (mu in minus)
                    if same_part and not out <= plus:
                        ok = False
                        break
                    if not same_part and not out <= minus:
                        ok = False
                        break
                if ok:
                    best_minus = minus
                    break
            if best_minus:
                break
        return frozenset(self.values) - best_minus, best_minus

    def __eq__(self, other):
        return (
            isinstance(other, FusionLaw)
            and self.values == other.values
            and self._star == other._star
        )

    def __hash__(self):
        return hash((self.values, frozenset(self._star.items())))

    def __repr__(self):
        vals = ",".join(str(v) for v in self.values)
        return f"FusionLaw({{{vals}}})"


def monster_law(alpha, beta) -> FusionLaw:
    """The Monster-type law on {1, 0, alpha, beta}."""
    a, b = frac(alpha), frac(beta)
    if len({ONE, ZERO, a, b}) != 4:
        raise ValueError("alpha, beta must be distinct and avoid 1, 0")
    star = {
        (ONE, ONE): {ONE},
        (ONE, ZERO): set(),
        (ONE, a): {a},
        (ONE, b): {b},
        (ZERO, ZERO): {ZERO},
        (ZERO, a): {a},
        (ZERO, b): {b},
        (a, a): {ONE, ZERO},
        (a, b): {b},
        (b, b): {ONE, ZERO, a},
    }
    return FusionLaw([ONE, ZERO, a, b], star)


def jordan_law(eta) -> FusionLaw:
    """The Jordan-type law on {1, 0, eta}."""
    e = frac(eta)
    if e in (ONE, ZERO):
        raise ValueError("eta must avoid 1 and 0")
    star = {
        (ONE, ONE): {ONE},
        (ONE, ZERO): set(),
        (ONE, e): {e},
        (ZERO, ZERO): {ZERO},
        (ZERO, e): {e},
        (e, e): {ONE, ZERO},
    }
    return FusionLaw([ONE, ZERO, e], star)


MONSTER_QUARTER = monster_law(Fraction(1, 4), Fraction(1, 32))


@dataclass(frozen=True)
class Axis:
    """A verified axis: idempotent, semisimple, fusion-checked, primitive."""

    vector: Vec
    law: FusionLaw
    eigendata: tuple[tuple[Fraction, Subspace], ...]
    primitive: bool
    miyamoto: Optional[Mat]
    sigma: Optional[Mat]

    def eigenspace(self, lam) -> Subspace:
        lam = frac(lam)
        for mu, space in self.eigendata:
            if mu == lam:
                return space
        return Subspace(len(self.vector))

    def spectrum(self) -> tuple[Fraction, ...]:
        return tuple(lam for lam, _ in self.eigendata)

    def minus_space(self) -> Subspace:
        """Sum of the eigenspaces in the negative part of the grading."""
        _, minus = self.law.c2_grading()
        spaces = [space for lam, space in self.eigendata if lam in minus]
        return subspace_sum(spaces, ambient=len(self.vector))

    def is_jordan_type(self) -> bool:
        """No eigenvalue in the negative part of the grading (trivial tau)."""
        return self.minus_space().is_zero()

    def __eq__(self, other):
        return isinstance(other, Axis) and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)


def _graded_involution(
    eigendata: Sequence[tuple[Fraction, Subspace]], negated: frozenset, n: int
) -> Mat:
    """The linear map acting as +1 / -1 on the graded eigenspace split."""
    cols: list[Vec] = []
    basis: list[Vec] = []
    for lam, space in eigendata:
        sign = -1 if lam in negated else 1
        for b in space.basis:
            basis.append(b)
            cols.append(tuple(sign * x for x in b))
    change = mat_from_cols(basis)
    signed = mat_from_cols(cols)
    # tau = signed . change^{-1}, assembled column by column
    columns = []
    for j in range(n):
        coords = solve(change, unit_vec(n, j))
        assert coords is not None
        columns.append(mat_vec(signed, coords))
    return mat_from_cols(columns)


def check_axis_verbose(
    alg: Algebra, v: Vec, law: FusionLaw
) -> tuple[Optional[Axis], Optional[str]]:
    """Verify the axis conditions, returning (axis, None) or (None, reason)."""
    v = vec(v)
    n = alg.dim
    if is_zero_vec(v):
        return None, "not_idempotent: zero vector"
    if alg.product(v, v) != v:
        return None, "not_idempotent"
    ad = alg.ad_matrix(v)
    eigendata = []
    total = 0
    for lam in law.values:
        space = eigenspace(ad, lam)
        if not space.is_zero():
            eigendata.append((lam, space))
            total += space.dim
    if total != n:
        return None, f"bad_spectrum: eigenspaces for the law span {total} of {n}"
    for (lam, sl), (mu, sm) in itertools.combinations_with_replacement(eigendata, 2):
        allowed = law.star(lam, mu)
        target = subspace_sum(
            [space for nu, space in eigendata if nu in allowed], ambient=n
        )
        for x in sl.basis:
            for y in sm.basis:
                if not target.contains(alg.product(x, y)):
                    return None, f"fusion_violation: {lam} * {mu}"
    one_space = next((s for lam, s in eigendata if lam == ONE), None)
    if one_space is None or one_space.dim != 1:
        return None, "not_primitive"
    plus, minus = law.c2_grading()
    miyamoto = None
    if minus:
        present_minus = frozenset(lam for lam, _ in eigendata) & minus
        if present_minus:
            miyamoto = _graded_involution(eigendata, minus, n)
        else:
            miyamoto = identity(n)
    sigma = None
    if minus and all(lam not in minus for lam, _ in eigendata):
        # Jordan-type axis inside a larger graded law: negate the middle
        # eigenvalue part (the alpha eigenspace for Monster-type laws).
        inner = [lam for lam, _ in eigendata if lam not in (ONE, ZERO)]
        if inner:
            sigma = _graded_involution(eigendata, frozenset(inner), n)
    axis = Axis(
        vector=v,
        law=law,
        eigendata=tuple(eigendata),
        primitive=True,
        miyamoto=miyamoto,
        sigma=sigma,
    )
    return axis, None


def check_axis(alg: Algebra, v: Vec, law: FusionLaw) -> Optional[Axis]:
    """Certify v as a primitive axis for the law, or return None."""
    axis, _ = check_axis_verbose(alg, v, law)
    return axis


def miyamoto_involution(ax: Axis) -> Mat:
    """The graded involution of a verified axis (identity for Jordan axes)."""
    if ax.miyamoto is None:
        raise ValueError("the axis law carries no sign grading")
    return ax.miyamoto


def is_automorphism(alg: Algebra, g: Mat) -> bool:
    """Exact multiplicativity check on all basis pairs, plus invertibility."""
    n = alg.dim
    cols = [mat_vec(g, unit_vec(n, j)) for j in range(n)]
    if Subspace(n, cols).dim != n:
        return False
    for i in range(n):
        for j in range(i, n):
            lhs = mat_vec(g, vec(dict_to_vec(alg.basis_product(i, j), n)))
            rhs = alg.product(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def dict_to_vec(sparse_row, n: int) -> Vec:
    out = [Fraction(0)] * n
    for k, c in sparse_row:
        out[k] = c
    return tuple(out)


def derivation_space(alg: Algebra) -> Subspace:
    """Solutions d of the Leibniz identity on all basis pairs, as n^2 vectors.

    A zero space certifies that the automorphism group (an algebraic group in
    characteristic zero) is finite.
    """
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(i, n):
            pij = dict_to_vec(alg.basis_product(i, j), n)
            # unknowns d[r][c] flattened row-major; equation vector per output k
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                # d applied to e_i e_j
                for m, coeff in enumerate(pij):
                    if coeff:
                        row[k * n + m] += coeff
                # minus d(e_i) e_j: d(e_i) = sum_r d[r][i] e_r
                for r in range(n):
                    gamma_rj = alg.basis_product(r, j)
                    for kk, c in gamma_rj:
                        if kk == k:
                            row[r * n + i] -= c
                # minus e_i d(e_j)
                for r in range(n):
                    gamma_ir = alg.basis_product(i, r)
                    for kk, c in gamma_ir:
                        if kk == k:
                            row[r * n + j] -= c
                rows.append(tuple(row))
    return kernel(mat(rows))


def infer_fusion_law(alg: Algebra, v: Vec) -> Optional[FusionLaw]:
    """Read the star table of an idempotent off its eigenbasis products.

    Returns None when the adjoint is not semisimple with rational spectrum.
    Used to discover laws empirically (for example the nearly-Monster laws
    that show up inside joint-zero subalgebras).
    """
    from axial.linalg import semisimple_spectrum

    v = vec(v)
    if is_zero_vec(v) or alg.product(v, v) != v:
        return None
    spectrum = semisimple_spectrum(alg.ad_matrix(v))
    if not spectrum.ok:
        return None
    eigendata = spectrum.eigenpairs
    assert eigendata is not None
    values = [lam for lam, _ in eigendata]
    star = {}
    n = alg.dim
    for (lam, sl), (mu, sm) in itertools.combinations_with_replacement(eigendata, 2):
        support = set()
        for x in sl.basis:
            for y in sm.basis:
                p = alg.product(x, y)
                if not is_zero_vec(p):
                    support |= _eigen_support(p, eigendata, n)
        star[(lam, mu)] = support
    try:
        return FusionLaw(values, star)
    except ValueError:
        return None


def _eigen_support(p: Vec, eigendata, n: int) -> set[Fraction]:
    columns = []
    owners = []
    for lam, space in eigendata:
        for b in space.basis:
            columns.append(b)
            owners.append(lam)
    coords = solve(mat_from_cols(columns), p)
    assert coords is not None
    return {owners[i] for i, c in enumerate(coords) if c}
