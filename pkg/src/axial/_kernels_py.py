"""Pure-Python hot kernels: exact row reduction and sparse polynomial reduction.

`axial._kernels` is the compiled twin with the same contract; `axial._backend`
picks whichever is available.  Both operate on plain Python data (lists of
Fractions, dicts keyed by exponent tuples) so results are bit-identical.
"""

from fractions import Fraction
from math import gcd

IMPLEMENTATION = "pure"

_ZERO = Fraction(0)


def _integer_rows(rows):
    """Scale each row to coprime integers (row scaling leaves the RREF alone)."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            d = x.denominator
            denom = denom * d // gcd(denom, d)
        ints = [int(x * denom) for x in row] if denom != 1 else [int(x) for x in row]
        content = 0
        for v in ints:
            content = gcd(content, v)
        if content > 1:
            ints = [v // content for v in ints]
        out.append(ints)
    return out


def _reduce_content(row):
    content = 0
    for v in row:
        content = gcd(content, v)
        if content == 1:
            return
    if content > 1:
        for j, v in enumerate(row):
            row[j] = v // content


def rref(rows):
    """Reduce a list of Fraction rows to reduced row-echelon form, in place.

    Returns the list of pivot column indices.  Zero rows sink to the bottom.
    Elimination runs fraction-free on integer rows (cross-multiplication with
    content reduction); pivot rows are divided back out at the end, so the
    result is the exact canonical RREF.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    work = _integer_rows(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        row_r = work[r]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = work[i]
            v = row_i[c]
            if v:
                # scale the whole row so earlier pivot entries stay consistent
                for j in range(c):
                    if row_i[j]:
                        row_i[j] = row_i[j] * p
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * p - v * row_r[j]
                _reduce_content(row_i)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for idx, c in enumerate(pivots):
        p = work[idx][c]
        rows[idx][:] = [Fraction(v, p) for v in work[idx]]
    for idx in range(len(pivots), nrows):
        rows[idx][:] = [_ZERO] * ncols
    return pivots


def exp_mul(e1, e2):
    """Product of two monomials (exponent-wise sum)."""
    return tuple(a + b for a, b in zip(e1, e2))


def exp_divides(e1, e2):
    """Whether monomial e1 divides e2."""
    for a, b in zip(e1, e2):
        if a > b:
            return False
    return True


def exp_div(e1, e2):
    """Quotient monomial e1 / e2 (caller guarantees divisibility)."""
    return tuple(a - b for a, b in zip(e1, e2))


def normal_form(terms, divisors):
    """Full normal form of a sparse polynomial modulo a divisor list.

    `terms` maps exponent tuples to nonzero Fractions; the leading term is the
    lex-largest key.  Each divisor is a triple (lead_exp, lead_coeff,
    tail_items) with tail_items the remaining (exp, coeff) pairs.  Every term
    of the result is reduced: no divisor leading monomial divides it.
    """
    work = dict(terms)
    remainder = {}
    while work:
        exp = max(work)
        coeff = work.pop(exp)
        reduced = False
        for lead_exp, lead_coeff, tail in divisors:
            if exp_divides(lead_exp, exp):
                shift = exp_div(exp, lead_exp)
                factor = coeff / lead_coeff
                for texp, tcoeff in tail:
                    nexp = exp_mul(texp, shift)
                    c = work.get(nexp, _ZERO) - factor * tcoeff
                    if c:
                        work[nexp] = c
                    elif nexp in work:
                        del work[nexp]
                reduced = True
                break
        if not reduced:
            remainder[exp] = coeff
    return remainder
