"""Independent brute-force solver for 3-variable polynomial systems.

Used to cross-check the Groebner route; nothing here imports from the
package.  Elimination goes through Sylvester resultants whose determinants
are computed by evaluation at integer nodes plus Lagrange interpolation,
rational roots come from the rational root theorem, and every candidate
point is verified by substitution into the original system, so spurious
resultant roots are harmless.
"""

from fractions import Fraction


class OPoly:
    """Minimal sparse polynomial in 3 variables: exponent tuple -> Fraction."""

    NVARS = 3

    def __init__(self, terms=None):
        self.terms = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(exp)] = c

    @classmethod
    def var(cls, i):
        exp = tuple(1 if j == i else 0 for j in range(cls.NVARS))
        return cls({exp: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return OPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) - c
        return OPoly(out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return OPoly(out)

    def scale(self, c):
        return OPoly({e: Fraction(c) * v for e, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=0)

    def substitute(self, i, value):
        out = {}
        for exp, c in self.terms.items():
            v = c * Fraction(value) ** exp[i]
            rest = exp[:i] + (0,) + exp[i + 1 :]
            out[rest] = out.get(rest, Fraction(0)) + v
        return OPoly(out)

    def evaluate(self, point):
        total = Fraction(0)
        for exp, c in self.terms.items():
            value = c
            for x, e in zip(point, exp):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    def univariate_coeffs(self, i):
        """Coefficient list in variable i; requires the others to be absent."""
        for exp in self.terms:
            if any(e and j != i for j, e in enumerate(exp) if j != i):
                raise ValueError("not univariate")
        out = [Fraction(0)] * (self.degree_in(i) + 1)
        for exp, c in self.terms.items():
            out[exp[i]] = c
        return out


def det_fraction(rows):
    """Exact determinant; rows are scaled to integers, then Bareiss runs."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = []
    scale = Fraction(1)
    for r in rows:
        denom = 1
        for x in r:
            denom = _lcm(denom, Fraction(x).denominator)
        scale *= denom
        m.append([int(Fraction(x) * denom) for x in r])
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return Fraction(sign * m[n - 1][n - 1], 1) / scale


def interpolate(xs, ys):
    """Coefficients (lowest first) of the polynomial through (xs, ys)."""
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
        s = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += s * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class OracleInconclusive(Exception):
    """An eliminant degenerated; the caller should resample the system."""


def _list_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _total_degree(p):
    return max((sum(e) for e in p.terms), default=0)


def _nodes(count):
    """Integer interpolation nodes straddling zero to keep magnitudes small."""
    out = []
    t = 0
    while len(out) < count:
        out.append(Fraction(t))
        if t >= 0:
            t = -(t + 1)
        else:
            t = -t
    return out


def _sylvester_rows(fr, gr):
    df, dg = len(fr) - 1, len(gr) - 1
    size = df + dg
    rows = []
    for shift in range(dg):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(fr)):
            row[shift + k] = c
        rows.append(row)
    for shift in range(df):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(gr)):
            row[shift + k] = c
        rows.append(row)
    return rows


def resultant_univariate(f, g, elim, keep):
    """res_elim(f, g) as a coefficient list in `keep`.

    Both polynomials may only involve the variables elim and keep.  The
    Sylvester determinant is evaluated at integer nodes in `keep` and
    interpolated back.
    """
    df, dg = f.degree_in(elim), g.degree_in(elim)
    if df == 0 and dg == 0:
        return [Fraction(0)]  # pair carries no elimination information
    if df == 0 or dg == 0:
        base, power = (f, dg) if df == 0 else (g, df)
        base_coeffs = base.univariate_coeffs(keep)
        out = [Fraction(1)]
        for _ in range(power):
            out = _list_mul(out, base_coeffs)
        return out
    bound = min(
        df * g.degree_in(keep) + dg * f.degree_in(keep),
        _total_degree(f) * _total_degree(g),
    )
    nodes = _nodes(bound + 1)
    values = []
    for t in nodes:
        fs = f.substitute(keep, t)
        gs = g.substitute(keep, t)
        fr = [Fraction(0)] * (df + 1)
        for exp, c in fs.terms.items():
            fr[exp[elim]] = c
        gr = [Fraction(0)] * (dg + 1)
        for exp, c in gs.terms.items():
            gr[exp[elim]] = c
        values.append(det_fraction(_sylvester_rows(fr, gr)))
    return interpolate(nodes, values)


def resultant_bivariate(f, g, elim):
    """res_elim(f, g) as an OPoly in the two remaining variables.

    Evaluated on an integer grid over the remaining variables and
    reassembled by nested interpolation.
    """
    df, dg = f.degree_in(elim), g.degree_in(elim)
    others = [i for i in range(3) if i != elim]
    if df == 0 and dg == 0:
        return OPoly()  # pair carries no elimination information
    if df == 0 or dg == 0:
        base, power = (f, dg) if df == 0 else (g, df)
        out = OPoly({(0, 0, 0): 1})
        for _ in range(power):
            out = out * base
        return out
    total_bound = _total_degree(f) * _total_degree(g)
    bounds = [
        min(df * g.degree_in(o) + dg * f.degree_in(o), total_bound) for o in others
    ]
    o1, o2 = others
    nodes1, nodes2 = _nodes(bounds[0] + 1), _nodes(bounds[1] + 1)
    grid_cols = {}
    for t1 in nodes1:
        values = []
        for t2 in nodes2:
            fs = f.substitute(o1, t1).substitute(o2, t2)
            gs = g.substitute(o1, t1).substitute(o2, t2)
            fr = [Fraction(0)] * (df + 1)
            for exp, c in fs.terms.items():
                fr[exp[elim]] = c
            gr = [Fraction(0)] * (dg + 1)
            for exp, c in gs.terms.items():
                gr[exp[elim]] = c
            values.append(det_fraction(_sylvester_rows(fr, gr)))
        grid_cols[t1] = interpolate(nodes2, values)
    out = OPoly()
    width = max(len(c) for c in grid_cols.values())
    for k2 in range(width):
        column = [
            grid_cols[t1][k2] if k2 < len(grid_cols[t1]) else Fraction(0)
            for t1 in nodes1
        ]
        coeffs = interpolate(nodes1, column)
        for k1, c in enumerate(coeffs):
            if c:
                exp = [0, 0, 0]
                exp[o1], exp[o2] = k1, k2
                out = out + OPoly({tuple(exp): c})
    return out


def rational_roots_of(coeffs):
    """Rational roots of a univariate polynomial; None for the zero poly.

    Eliminant coefficients grow huge, which makes the naive divisor scan of
    the rational root theorem infeasible; root extraction is delegated to
    sympy and every reported root is re-verified by exact substitution here.
    The multivariate elimination itself never touches sympy.
    """
    import sympy

    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return None
    roots = set()
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
        coeffs = coeffs[shift:]
    if len(coeffs) == 1:
        return roots
    x = sympy.Symbol("x")
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x
    )
    for root in poly.ground_roots():
        cand = Fraction(int(root.p), int(root.q))
        if sum(c * cand**k for k, c in enumerate(coeffs)) == 0:
            roots.add(cand)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


def solve_three_vars(system):
    """All rational solutions of three polynomials in variables x, y, z.

    A single nonzero eliminant at each stage is a complete (super)set of the
    projections of the rational solutions, since every candidate is verified
    by substitution at the end.
    """
    candidates_x = set()
    got = False
    bivariate = []
    for a in range(3):
        for b in range(a + 1, 3):
            r = resultant_bivariate(system[a], system[b], 2)
            if not r.is_zero():
                bivariate.append(r)
    for r in bivariate:
        if r.degree_in(1) == 0:
            roots = rational_roots_of(r.univariate_coeffs(0))
            if roots is not None:
                got = True
                candidates_x |= roots
    if not got:
        for a in range(len(bivariate)):
            for b in range(a + 1, len(bivariate)):
                coeffs = resultant_univariate(bivariate[a], bivariate[b], 1, 0)
                roots = rational_roots_of(coeffs)
                if roots is not None:
                    got = True
                    candidates_x |= roots
                    break
            if got:
                break
    if not got:
        raise OracleInconclusive("x-eliminant identically zero")
    solutions = set()
    for x0 in candidates_x:
        gs = [f.substitute(0, x0) for f in system]
        candidates_y = _eliminate_last(gs, elim=2, keep=1)
        for y0 in candidates_y:
            hs = [g.substitute(1, y0) for g in gs]
            candidates_z = set()
            got_z = False
            for h in hs:
                if h.is_zero():
                    continue
                roots = rational_roots_of(h.univariate_coeffs(2))
                if roots is not None:
                    got_z = True
                    candidates_z |= roots
            if not got_z:
                raise OracleInconclusive("z-eliminant identically zero")
            for z0 in candidates_z:
                point = (x0, y0, z0)
                if all(f.evaluate(point) == 0 for f in system):
                    solutions.add(point)
    return solutions


def _eliminate_last(gs, elim, keep):
    got = False
    candidates = set()
    for a in range(len(gs)):
        for b in range(a + 1, len(gs)):
            if gs[a].is_zero() or gs[b].is_zero():
                continue
            coeffs = resultant_univariate(gs[a], gs[b], elim, keep)
            roots = rational_roots_of(coeffs)
            if roots is not None:
                got = True
                candidates |= roots
    for g in gs:
        if not g.is_zero() and g.degree_in(elim) == 0:
            roots = rational_roots_of(g.univariate_coeffs(keep))
            if roots is not None:
                got = True
                candidates |= roots
    if not got:
        raise OracleInconclusive("middle eliminant identically zero")
    return candidates


def oracle_idempotents(gamma_entries):
    """Rational idempotents of a 3-dim algebra from its structure constants.

    Builds the coordinate equations of u^2 = u with its own symbolics.
    """
    table = {}
    for i, j, k, c in gamma_entries:
        key = (min(i, j), max(i, j))
        table.setdefault(key, {})[k] = Fraction(c)
    xs = [OPoly.var(i) for i in range(3)]
    system = []
    for k in range(3):
        poly = OPoly()
        for (i, j), row in table.items():
            c = row.get(k)
            if not c:
                continue
            term = xs[i] * xs[j]
            if i != j:
                term = term.scale(2)
            poly = poly + term.scale(c)
        poly = poly - xs[k]
        system.append(poly)
    return solve_three_vars(system)
