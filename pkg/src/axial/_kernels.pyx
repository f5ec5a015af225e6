# cython: language_level=3
"""Compiled hot kernels: exact row reduction and sparse polynomial reduction.

Same contract as `axial._kernels_py`; the arithmetic stays exact (Python big
integers and Fractions), Cython strips the interpreter overhead from the
inner loops.
"""

from fractions import Fraction
from math import gcd

IMPLEMENTATION = "compiled"

_ZERO = Fraction(0)


cdef list _integer_rows(list rows):
    """Scale each row to coprime integers (row scaling leaves the RREF alone)."""
    cdef list out = []
    cdef list row, ints
    cdef object denom, x, content, d
    for row in rows:
        denom = 1
        for x in row:
            d = x.denominator
            denom = denom * d // gcd(denom, d)
        if denom != 1:
            ints = [int(x * denom) for x in row]
        else:
            ints = [int(x) for x in row]
        content = 0
        for x in ints:
            content = gcd(content, x)
        if content > 1:
            ints = [x // content for x in ints]
        out.append(ints)
    return out


cdef void _reduce_content(list row):
    cdef object content = 0, v
    cdef Py_ssize_t j, n = len(row)
    for j in range(n):
        content = gcd(content, row[j])
        if content == 1:
            return
    if content > 1:
        for j in range(n):
            row[j] = row[j] // content


def rref(list rows):
    """Reduce a list of Fraction rows to reduced row-echelon form, in place.

    Returns the list of pivot column indices.  Zero rows sink to the bottom.
    Elimination runs fraction-free on integer rows (cross-multiplication with
    content reduction); pivot rows are divided back out at the end, so the
    result is the exact canonical RREF.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef list work = _integer_rows(rows)
    cdef list pivots = []
    cdef list row_r, row_i, target
    cdef Py_ssize_t r = 0, c, i, j, idx, pivot_row
    cdef object p, v, entry
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if (<list>work[i])[c]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        row_r = <list>work[r]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = <list>work[i]
            v = row_i[c]
            if v:
                # scale the whole row so earlier pivot entries stay consistent
                for j in range(c):
                    entry = row_i[j]
                    if entry:
                        row_i[j] = entry * p
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * p - v * row_r[j]
                _reduce_content(row_i)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for idx in range(len(pivots)):
        row_r = <list>work[idx]
        p = row_r[pivots[idx]]
        target = <list>rows[idx]
        for j in range(ncols):
            target[j] = Fraction(row_r[j], p)
    for idx in range(len(pivots), nrows):
        target = <list>rows[idx]
        for j in range(ncols):
            target[j] = _ZERO
    return pivots


def exp_mul(tuple e1, tuple e2):
    """Product of two monomials (exponent-wise sum)."""
    cdef Py_ssize_t n = len(e1), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = e1[i] + e2[i]
    return tuple(out)


def exp_divides(tuple e1, tuple e2):
    """Whether monomial e1 divides e2."""
    cdef Py_ssize_t n = len(e1), i
    for i in range(n):
        if e1[i] > e2[i]:
            return False
    return True


def exp_div(tuple e1, tuple e2):
    """Quotient monomial e1 / e2 (caller guarantees divisibility)."""
    cdef Py_ssize_t n = len(e1), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = e1[i] - e2[i]
    return tuple(out)


def normal_form(dict terms, list divisors):
    """Full normal form of a sparse polynomial modulo a divisor list.

    `terms` maps exponent tuples to nonzero Fractions; the leading term is the
    lex-largest key.  Each divisor is a triple (lead_exp, lead_coeff,
    tail_items) with tail_items the remaining (exp, coeff) pairs.  Every term
    of the result is reduced: no divisor leading monomial divides it.
    """
    cdef dict work = dict(terms)
    cdef dict remainder = {}
    cdef tuple exp, lead_exp, texp, nexp, shift, div
    cdef object coeff, lead_coeff, factor, tcoeff, c
    cdef list tail
    cdef bint reduced
    while work:
        exp = max(work)
        coeff = work.pop(exp)
        reduced = False
        for div in divisors:
            lead_exp = <tuple>div[0]
            if exp_divides(lead_exp, exp):
                lead_coeff = div[1]
                tail = <list>div[2]
                shift = exp_div(exp, lead_exp)
                factor = coeff / lead_coeff
                for item in tail:
                    texp = <tuple>(<tuple>item)[0]
                    tcoeff = (<tuple>item)[1]
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
