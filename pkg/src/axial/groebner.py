"""Buchberger engine over Q under lex order, with exact point enumeration.

All searches in the library bottom out here: idempotent systems are handed in
as generators, a reduced lexicographic Groebner basis is computed, and for
zero-dimensional ideals every rational point is extracted by eliminant
factoring and back substitution.  Solutions that would live in a proper
extension of Q are never approximated; the irreducible eliminant factors are
returned as witnesses instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from axial._backend import kernels
from axial.linalg import Vec, kernel as matrix_kernel, mat
from axial.mpoly import Exponent, MPoly
from axial.univariate import irreducible_factors


class CapExceeded(Exception):
    """A configured resource cap was hit; the result would be incomplete."""


@dataclass(frozen=True)
class SolverCaps:
    """Hard limits for a single Groebner computation."""

    max_basis: int = 512
    max_degree: int = 64
    max_pairs: int = 250_000


DEFAULT_CAPS = SolverCaps()

FINITE = "finite"
POSITIVE_DIMENSIONAL = "positive_dimensional"
NEEDS_EXTENSION = "needs_extension"


@dataclass
class SolveResult:
    """Rational solutions of a polynomial system, or the reason they stop.

    `points` is complete over the algebraic closure exactly when the status is
    `finite` and `eliminant_factors` is empty: then every eliminant along the
    extraction split into linear factors.
    """

    status: str
    points: list[Vec] = field(default_factory=list)
    eliminant_factors: list[tuple[int, ...]] = field(default_factory=list)
    basis: list[MPoly] = field(default_factory=list)

    @property
    def complete_over_closure(self) -> bool:
        return self.status == FINITE and not self.eliminant_factors


def _normal_form(p: MPoly, basis: Sequence[MPoly]) -> MPoly:
    if not p.terms or not basis:
        return p
    divisors = []
    for g in basis:
        lead_exp, lead_coeff = g.lead()
        tail = [(e, c) for e, c in g.terms.items() if e != lead_exp]
        divisors.append((lead_exp, lead_coeff, tail))
    reduced = kernels.normal_form(p.terms, divisors)
    return MPoly(p.nvars, reduced, _clean=False)


def normal_form(p: MPoly, basis: Sequence[MPoly]) -> MPoly:
    """Fully reduce p modulo the basis (every term of the result is reduced)."""
    return _normal_form(p, [g for g in basis if g])


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    ef, cf = f.lead()
    eg, cg = g.lead()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = MPoly(f.nvars, {tuple(l - a for l, a in zip(lcm, ef)): 1 / cf}, _clean=False)
    mg = MPoly(g.nvars, {tuple(l - a for l, a in zip(lcm, eg)): 1 / cg}, _clean=False)
    return mf * f - mg * g


def _lcm_exp(e1: Exponent, e2: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _is_product(e1: Exponent, e2: Exponent) -> bool:
    return all(min(a, b) == 0 for a, b in zip(e1, e2))


def buchberger(gens: Sequence[MPoly], caps: SolverCaps = DEFAULT_CAPS) -> list[MPoly]:
    """Reduced lexicographic Groebner basis of the ideal the generators span.

    Raises CapExceeded instead of returning a silently truncated basis when a
    resource limit is hit.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("empty generator list")
    nvars = gens[0].nvars
    basis: list[MPoly] = []
    for g in gens:
        r = _normal_form(g, basis)
        if r:
            basis.append(r.monic())

    def lead(i):
        return basis[i].lead()[0]

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = 0
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (sum(_lcm_exp(lead(p[0]), lead(p[1]))), _lcm_exp(lead(p[0]), lead(p[1]))),
        )
        pairs.discard((i, j))
        processed += 1
        if processed > caps.max_pairs:
            raise CapExceeded(f"pair limit {caps.max_pairs} exceeded")
        if _is_product(lead(i), lead(j)):
            continue
        s = s_polynomial(basis[i], basis[j])
        r = _normal_form(s, basis)
        if not r:
            continue
        if r.total_degree() > caps.max_degree:
            raise CapExceeded(f"degree limit {caps.max_degree} exceeded")
        basis.append(r.monic())
        if len(basis) > caps.max_basis:
            raise CapExceeded(f"basis size limit {caps.max_basis} exceeded")
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    return _autoreduce(basis, nvars)


def _autoreduce(basis: list[MPoly], nvars: int) -> list[MPoly]:
    # Minimal basis: drop generators whose lead is divisible by another lead.
    basis = sorted((g for g in basis if g), key=lambda g: g.lead()[0])
    minimal = []
    for idx, g in enumerate(basis):
        eg = g.lead()[0]
        divisible = False
        for jdx, h in enumerate(basis):
            if jdx == idx:
                continue
            eh = h.lead()[0]
            if eh == eg and jdx < idx:
                divisible = True
                break
            if eh != eg and kernels.exp_divides(eh, eg):
                divisible = True
                break
        if not divisible:
            minimal.append(g)
    # Reduced basis: each element fully reduced against the others, monic.
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _normal_form(g, others)
        if r:
            reduced.append(r.monic())
    reduced.sort(key=lambda g: g.lead()[0], reverse=True)
    if not reduced:
        return [MPoly.zero(nvars)]
    return reduced


def is_groebner_basis(basis: Sequence[MPoly]) -> bool:
    """Directly checkable certificate: every S-polynomial reduces to zero."""
    nonzero = [g for g in basis if g]
    for f, g in itertools.combinations(nonzero, 2):
        if _normal_form(s_polynomial(f, g), nonzero):
            return False
    return True


def ideal_dimension_zero(gb: Sequence[MPoly]) -> bool:
    """Standard zero-dimensionality test on a Groebner basis.

    True iff for every variable some leading term is a pure power of it.  A
    basis containing a nonzero constant (empty variety) counts as
    zero-dimensional.
    """
    nonzero = [g for g in gb if g]
    if not nonzero:
        return False
    nvars = nonzero[0].nvars
    if nvars == 0:
        return True
    covered = set()
    for g in nonzero:
        exp = g.lead()[0]
        support = [i for i, e in enumerate(exp) if e]
        if not support:
            return True  # 1 is in the ideal
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == nvars


def _contains_nonzero_constant(polys: Sequence[MPoly]) -> bool:
    return any(p and p.is_constant() for p in polys)


def enumerate_points(gb: Sequence[MPoly], caps: SolverCaps = DEFAULT_CAPS) -> SolveResult:
    """All rational points of a zero-dimensional ideal, by lex elimination.

    The least variable's eliminant is factored over Z; rational roots are
    substituted back breadth-first, recomputing a basis for each branch.
    Irreducible factors of degree >= 2 found along consistent branches are
    collected as extension witnesses and flagged via the status.
    """
    gb = [g for g in gb if g]
    if not gb:
        raise ValueError("empty basis")
    basis = list(gb)
    if not _contains_nonzero_constant(basis) and not ideal_dimension_zero(basis):
        return SolveResult(POSITIVE_DIMENSIONAL, basis=basis)
    nvars = basis[0].nvars
    points: list[Vec] = []
    factors: list[tuple[int, ...]] = []
    _extract(basis, list(range(nvars)), {}, points, factors, caps)
    points.sort()
    status = NEEDS_EXTENSION if factors else FINITE
    return SolveResult(status, points, factors, list(gb))


def _extract(gens, active, fixed, points, factors, caps):
    if _contains_nonzero_constant(gens):
        return
    if not active:
        nvars = gens[0].nvars if gens else len(fixed)
        points.append(tuple(fixed[i] for i in range(nvars)))
        return
    gb = buchberger(gens, caps) if gens else []
    if _contains_nonzero_constant(gb):
        return
    if not gb or all(not g for g in gb):
        # Zero ideal on the remaining variables: positive-dimensional section.
        raise CapExceeded("unexpected positive-dimensional branch")
    last = active[-1]
    univariate = [g for g in gb if g.variables_used() <= {last}]
    if not univariate:
        raise CapExceeded("no eliminant found; branch not zero-dimensional")
    elim = min(univariate, key=lambda g: g.lead()[0])
    coeffs = elim.univariate_coeffs(last)
    for factor, _mult in irreducible_factors(coeffs):
        if len(factor) == 2:
            b, a = factor
            root = Fraction(-b, a)
            substituted = [g.substitute({last: root}) for g in gb]
            substituted = [g for g in substituted if g]
            new_fixed = dict(fixed)
            new_fixed[last] = root
            _extract(substituted, active[:-1], new_fixed, points, factors, caps)
        else:
            if factor not in factors:
                factors.append(factor)


@dataclass(frozen=True)
class ConstantCertificate:
    """A rational combination of polynomials equal to a nonzero constant.

    Witnesses that the polynomials have no common root over any field where
    the constant stays nonzero; the integer content of the numerator names the
    characteristics that must be excluded.
    """

    coefficients: tuple[int, ...]
    constant: Fraction


def certify_no_common_root(polys: Sequence[MPoly]) -> Optional[ConstantCertificate]:
    """Search for an integer combination of univariate polynomials equal to a
    nonzero constant.

    The combination must kill every coefficient of degree >= 1, a small exact
    linear system; among the kernel vectors the one touching the most
    polynomials with the smallest integer entries and a nonzero constant term
    is returned, sign-normalized so the constant is positive.  Absence of such
    a combination returns None.
    """
    if len(polys) < 2:
        raise ValueError("need at least two polynomials")
    variables = set()
    for p in polys:
        variables |= p.variables_used()
    if len(variables) > 1:
        raise ValueError("polynomials must share a single variable")
    var = variables.pop() if variables else 0
    coeff_lists = [p.univariate_coeffs(var) if p else [Fraction(0)] for p in polys]
    degree = max(len(c) for c in coeff_lists) - 1
    if degree < 1:
        return None
    rows = []
    for d in range(1, degree + 1):
        rows.append([c[d] if d < len(c) else Fraction(0) for c in coeff_lists])
    null = matrix_kernel(mat(rows))
    if null.is_zero():
        return None
    constants = [c[0] for c in coeff_lists]
    best = None
    for combo in itertools.product(range(-3, 4), repeat=null.dim):
        if all(c == 0 for c in combo):
            continue
        v = [Fraction(0)] * len(polys)
        for c, basis_vec in zip(combo, null.basis):
            if c:
                for k, entry in enumerate(basis_vec):
                    v[k] += c * entry
        if all(x == 0 for x in v):
            continue
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        content = 0
        for x in ints:
            content = gcd(content, abs(x))
        ints = [x // content for x in ints]
        constant = sum((i * c for i, c in zip(ints, constants)), Fraction(0))
        if not constant:
            continue
        if constant < 0:
            ints = [-x for x in ints]
            constant = -constant
        support = sum(1 for x in ints if x)
        key = (
            -support,
            max(abs(x) for x in ints),
            sum(abs(x) for x in ints),
            tuple(ints),
        )
        if best is None or key < best[0]:
            best = (key, tuple(ints), constant)
    if best is None:
        return None
    _, ints, constant = best
    check = sum((p.scale(c) for p, c in zip(polys, ints)), MPoly.zero(polys[0].nvars))
    assert check.is_constant() and check.constant_term() == constant
    return ConstantCertificate(ints, constant)


def content_primes(value: Fraction) -> list[int]:
    """Prime factors of the numerator of a certificate constant.

    These are the positive characteristics in which the certificate fails,
    i.e. where the certified system could acquire common roots.
    """
    n = abs(value.numerator)
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


__all__ = [
    "CapExceeded",
    "SolverCaps",
    "DEFAULT_CAPS",
    "SolveResult",
    "FINITE",
    "POSITIVE_DIMENSIONAL",
    "NEEDS_EXTENSION",
    "normal_form",
    "s_polynomial",
    "buchberger",
    "is_groebner_basis",
    "ideal_dimension_zero",
    "enumerate_points",
    "ConstantCertificate",
    "certify_no_common_root",
    "content_primes",
]
