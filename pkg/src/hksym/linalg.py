"""Exact integer/rational linear algebra on plain list-of-list matrices.

Everything here works over Python ints and fractions.Fraction; no floats.
Matrices are lists of rows. Vectors are lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(ai[t] * bj[t] for t in range(k)) for bj in bt] for ai in a]


def mat_vec(a, v):
    return [sum(ai[j] * v[j] for j in range(len(v))) for ai in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_neg(a):
    return [[-x for x in r] for r in a]


def mat_eq(a, b):
    return a == b


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def gram_product(u, gram, v):
    return dot(mat_vec(gram, v), u)


def det_bareiss(m):
    """Exact determinant of an integer matrix (fraction-free Gaussian elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m):
    """Inverse of a square matrix, entries returned as Fractions."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve_rational(m, rhs):
    """Solve m*x = rhs over Q. Returns (particular solution, nullspace basis) or None.

    m is a matrix (rows may outnumber columns), rhs a vector; both may hold
    ints or Fractions.
    """
    rows, cols = len(m), len(m[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(m, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x0 = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x0[c] = a[i][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(v)
    return x0, basis


def hnf_row(m):
    """Row-style Hermite normal form of an integer matrix.

    Returns (H, U) with U unimodular, U*m = H, H in row echelon form with
    positive pivots and reduced entries above them. Zero rows of H sink to
    the bottom.
    """
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        u[r], u[piv] = u[piv], u[r]
        while True:
            nz = [i for i in range(r + 1, rows) if a[i][c] != 0]
            if not nz:
                break
            for i in nz:
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            nz = [i for i in range(r + 1, rows) if a[i][c] != 0]
            if nz:
                i = min(nz, key=lambda t: abs(a[t][c]))
                a[r], a[i] = a[i], a[r]
                u[r], u[i] = u[i], u[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    return a, u


def smith_normal_form(m):
    """Smith normal form with transforms: returns (u, d, v) with u*m*v = d.

    d is diagonal (padded with zeros), elementary divisors d1 | d2 | ...;
    u and v are unimodular.
    """
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    n = min(rows, cols)
    while t < n:
        # find a nonzero pivot
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # make pivot divide the rest of the block
        p = a[t][t]
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, -1)
            continue
        if p < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def elementary_divisors(m):
    _, d, _ = smith_normal_form(m)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


def integer_kernel(m):
    """Basis of the integer kernel {x : m*x = 0}, as a list of column vectors.

    The kernel of an integer matrix is automatically saturated.
    """
    rows, cols = len(m), len(m[0]) if m else 0
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    u, d, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(rows, cols)) if d[i][i] != 0)
    # kernel basis = last cols-rank columns of v
    return [[v[i][j] for i in range(cols)] for j in range(rank, cols)]


def solve_integer(m, rhs):
    """One integer solution of m*x = rhs, or None if none exists."""
    rows, cols = len(m), len(m[0]) if m else 0
    u, d, v = smith_normal_form(m)
    c = mat_vec(u, rhs)
    y = [0] * cols
    for i in range(min(rows, cols)):
        di = d[i][i]
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
    for i in range(min(rows, cols), rows):
        if c[i] != 0:
            return None
    return mat_vec(v, y)


def lll_reduce(gram, delta=Fraction(99, 100)):
    """LLL reduction working on a Gram matrix only.

    Returns (new_gram, U) with new_gram = U * gram * U^T, U unimodular.
    Exact rational arithmetic; used as preprocessing for enumeration, all
    decisions downstream stay on exact data.
    """
    n = len(gram)
    u = identity(n)
    g = [[Fraction(x) for x in row] for row in gram]

    def inner(i, j):
        # row_i(U) * gram * row_j(U)^T, maintained directly in g
        return g[i][j]

    # maintain g = U G U^T under row operations on U
    def row_sub(i, j, q):
        # U_i -= q U_j
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]
        for k in range(n):
            g[i][k] -= q * g[j][k]
        for k in range(n):
            g[k][i] -= q * g[k][j]

    def row_swap(i, j):
        u[i], u[j] = u[j], u[i]
        g[i], g[j] = g[j], g[i]
        for row in g:
            row[i], row[j] = row[j], row[i]

    # Gram-Schmidt data recomputed lazily
    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        b = [Fraction(0)] * n
        for i in range(n):
            b[i] = g[i][i]
            for j in range(i):
                mu[i][j] = g[i][j]
                for k in range(j):
                    mu[i][j] -= mu[i][k] * mu[j][k] * b[k]
                mu[i][j] = mu[i][j] / b[j] if b[j] != 0 else Fraction(0)
                b[i] -= mu[i][j] ** 2 * b[j]
        return mu, b

    k = 1
    mu, b = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                row_sub(k, j, q)
                mu, b = gso()
        if b[k] >= (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            k += 1
        else:
            row_swap(k, k - 1)
            mu, b = gso()
            k = max(k - 1, 1)
    gi = [[x for x in row] for row in g]
    return gi, u


def ldl(gram):
    """Exact LDL^T data for a symmetric rational Gram matrix.

    Returns (d, mu) with d[i] the GS norms (Fractions) and mu lower
    triangular (mu[i][j], j < i). Raises ValueError when a pivot is <= 0,
    reporting indefiniteness.
    """
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = Fraction(gram[i][i])
        for j in range(i):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[i][k] * mu[j][k] * d[k]
            mu[i][j] = s / d[j]
            d[i] -= mu[i][j] ** 2 * d[j]
        if d[i] <= 0:
            raise ValueError(f"matrix not positive definite (pivot {i})")
    return d, mu


def is_positive_definite(gram):
    try:
        ldl(gram)
        return True
    except ValueError:
        return False


def _sqrt_window(p, q, num, den):
    """Conservative integer window [lo, hi] containing all integers v with
    |v - p/q| <= sqrt(num/den); q>0, num>=0, den>0. Candidates still need an
    exact acceptance test (the window may overshoot by one on either side).
    """
    t = isqrt(q * q * num * den) // den  # floor(q * sqrt(num/den))
    lo = (p - t - 1) // q
    hi = (p + t) // q + 1
    return lo, hi


def enumerate_short_vectors(gram, bound, *, strict_min=1, include_zero=False):
    """All x in Z^n with 0 < x^T gram x <= bound, one per {x,-x} pair.

    gram must be positive definite (ints or Fractions). Sign convention:
    the first nonzero coordinate of each reported vector is positive.
    Output is sorted lexicographically. Fincke-Pohst enumeration with exact
    integer interval boundaries.
    """
    n = len(gram)
    if n == 0:
        return [([], 0)] if include_zero else []
    d, mu = ldl(gram)
    # per-column integer scaling of mu: mu[i][j] = mnum[i][j] / mden[j]
    mden = []
    for j in range(n):
        m = 1
        for i in range(j + 1, n):
            m = m * mu[i][j].denominator // gcd(m, mu[i][j].denominator)
        mden.append(m)
    mnum = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            mnum[i][j] = int(mu[i][j] * mden[j])
    dn = [f.numerator for f in d]
    dd = [f.denominator for f in d]

    results = []
    x = [0] * n
    # cs[j] = sum_{k>j} mnum[k][j]*x[k]  (center*mden[j], negated below)
    # iterative depth-first from level n-1 down to 0
    bound = Fraction(bound)

    def recurse(j, rem):
        # rem = remaining bound (Fraction), center c = s/mden[j]
        s = 0
        for k in range(j + 1, n):
            if x[k]:
                s += mnum[k][j] * x[k]
        md = mden[j]
        # d_j (x + s/md)^2 <= rem  ->  |x - (-s)/md| <= sqrt(rem/d_j)
        num = rem.numerator * dd[j]
        den = rem.denominator * dn[j]
        lo, hi = _sqrt_window(-s, md, num, den)
        if j == 0:
            for v in range(lo, hi + 1):
                t = rem - d[0] * (Fraction(md * v + s, md)) ** 2
                if t < 0:
                    continue
                x[0] = v
                # sign normalization: first nonzero coordinate positive
                nz = next((i for i in range(n) if x[i] != 0), None)
                if nz is None:
                    if include_zero:
                        results.append((x[:], 0))
                    continue
                if x[nz] < 0:
                    continue
                norm = bound - t
                if norm >= strict_min:
                    results.append((x[:], norm))
            x[0] = 0
            return
        for v in range(lo, hi + 1):
            t = rem - d[j] * (Fraction(md * v + s, md)) ** 2
            if t < 0:
                continue
            x[j] = v
            recurse(j - 1, t)
        x[j] = 0

    recurse(n - 1, bound)
    out = []
    for vec, norm in results:
        out.append((vec, int(norm) if norm == int(norm) else Fraction(norm)))
    out.sort(key=lambda t: t[0])
    return out


def enumerate_coset_vectors(gram, shift, bound):
    """All x in shift + Z^n with x^T gram x <= bound (gram pos. definite).

    shift is a rational vector; returns (x, norm) pairs with x rational
    lists, sorted lexicographically. No sign normalization (a coset is not
    symmetric under negation in general).
    """
    n = len(gram)
    if n == 0:
        return [([], 0)] if bound >= 0 else []
    d, mu = ldl(gram)
    shift = [Fraction(s) for s in shift]
    results = []
    y = [Fraction(0)] * n
    bound = Fraction(bound)

    def recurse(j, rem):
        cc = Fraction(0)
        for k in range(j + 1, n):
            cc += mu[k][j] * y[k]
        # enumerate y_j = shift_j + t, t integral, with d_j (y_j + cc)^2 <= rem
        a = -(shift[j] + cc)
        num = rem / d[j]
        lo, hi = _sqrt_window(a.numerator, a.denominator,
                              num.numerator, num.denominator)
        for t in range(lo, hi + 1):
            yj = shift[j] + t
            r2 = rem - d[j] * (yj + cc) ** 2
            if r2 < 0:
                continue
            y[j] = yj
            if j == 0:
                results.append((y[:], bound - r2))
            else:
                recurse(j - 1, r2)
        y[j] = Fraction(0)

    recurse(n - 1, bound)
    out = [([x for x in vec], int(nm) if nm == int(nm) else nm) for vec, nm in results]
    out.sort(key=lambda t: t[0])
    return out


def brute_force_short_vectors(gram, bound):
    """Oracle: box enumeration of 0 < x^T gram x <= bound (ranks <= 5 or so)."""
    from itertools import product as iproduct

    n = len(gram)
    ginv = rational_inverse(gram)
    # coordinate bound: x_i^2 <= bound * (G^-1)_ii
    ranges = []
    for i in range(n):
        m = isqrt(int(Fraction(bound) * ginv[i][i]) + 1) + 1
        ranges.append(range(-m, m + 1))
    out = []
    for x in iproduct(*ranges):
        nz = next((t for t in range(n) if x[t] != 0), None)
        if nz is None or x[nz] < 0:
            continue
        norm = gram_product(list(x), gram, list(x))
        if 0 < norm <= bound:
            out.append((list(x), norm))
    out.sort(key=lambda t: t[0])
    return out
