"""Exact linear algebra over the rationals and the integers.

Kernels of rational systems are computed by fraction-free elimination on
denominator-cleared integer rows; integer (lattice) kernels go through
Smith normal form.  All bases are canonicalized (Hermite form, positive
leading entries, fixed column order) so repeated runs print identical
output.
"""

from fractions import Fraction
from math import gcd


def _content(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    return g


def make_primitive(row):
    """Divide an integer row by its content; first nonzero entry > 0."""
    g = _content(row)
    if g == 0:
        return list(row)
    row = [x // g for x in row]
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def clear_denominators(row):
    """Scale a row of rationals to a primitive integer row."""
    lcm = 1
    fr = [Fraction(x) for x in row]
    for x in fr:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    return make_primitive([int(x * lcm) for x in fr])


def int_echelon(rows, ncols):
    """Fraction-free row echelon form of integer rows.

    Returns (echelon_rows, pivot_cols); rows are primitive, pivots
    positive, elimination order is left to right (deterministic).
    """
    work = [make_primitive(list(r)) for r in rows]
    work = [r for r in work if any(r)]
    echelon = []
    pivots = []
    for c in range(ncols):
        hit = None
        for i, row in enumerate(work):
            if row[c]:
                hit = i
                break
        if hit is None:
            continue
        piv = work.pop(hit)
        for i, row in enumerate(work):
            if row[c]:
                p, q = piv[c], row[c]
                g = gcd(p, q)
                new = [x * (p // g) - y * (q // g) for x, y in zip(row, piv)]
                work[i] = make_primitive(new)
        work = [r for r in work if any(r)]
        echelon.append(piv)
        pivots.append(c)
    return echelon, pivots


def rational_kernel_basis(rows, ncols):
    """Basis of {x : A x = 0} over Q, one vector per free column.

    Rows may hold ints or Fractions.  Basis vectors come back as
    primitive integer vectors, ordered by free column, first nonzero
    entry positive.
    """
    cleared = [clear_denominators(r) for r in rows]
    echelon, pivots = int_echelon(cleared, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            s = sum(Fraction(row[c]) * x[c] for c in range(pc + 1, ncols) if x[c])
            x[pc] = -s / row[pc]
        basis.append(clear_denominators(x))
    return basis


class RowSpan:
    """Incrementally maintained reduced row space over Q."""

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = {}  # pivot column -> fully reduced row, pivot entry 1

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for p, row in self._rows.items():
            if v[p]:
                coef = v[p]
                v = [a - coef * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert a vector; True iff it enlarged the span."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = v[p]
        v = [x / inv for x in v]
        for q, row in self._rows.items():
            if row[p]:
                coef = row[p]
                self._rows[q] = [a - coef * b for a, b in zip(row, v)]
        self._rows[p] = v
        return True

    def contains(self, vec):
        return not any(self.reduce(vec))

    def rows(self):
        """Reduced basis rows ordered by pivot column (deterministic)."""
        return [self._rows[p] for p in sorted(self._rows)]


def smith_normal_form(rows, ncols):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, V) with diag the list of diagonal entries of S = U A V
    (nonzero entries first) and V the full n x n right transform, stored
    as a list of columns.
    """
    A = [[int(x) for x in r] for r in rows]
    m, n = len(A), ncols
    vcols = [[int(i == j) for i in range(n)] for j in range(n)]

    def swap_cols(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        vcols[a], vcols[b] = vcols[b], vcols[a]

    def addmul_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        vcols[dst] = [x - q * y for x, y in zip(vcols[dst], vcols[src])]

    k = 0
    while k < min(m, n):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        A[k], A[piv[0]] = A[piv[0]], A[k]
        if piv[1] != k:
            swap_cols(k, piv[1])
        if A[k][k] < 0:
            A[k] = [-x for x in A[k]]
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, m):
                if A[i][k]:
                    q = A[i][k] // A[k][k]
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
                    if A[i][k]:
                        A[k], A[i] = A[i], A[k]
                        dirty = True
            for j in range(k + 1, n):
                if A[k][j]:
                    q = A[k][j] // A[k][k]
                    addmul_col(j, k, q)
                    if A[k][j]:
                        swap_cols(k, j)
                        dirty = True
            if A[k][k] < 0:
                A[k] = [-x for x in A[k]]
        k += 1
    diag = [A[i][i] for i in range(min(m, n))]
    diag += [0] * (n - len(diag))
    return diag, vcols


def integer_kernel_basis(rows, ncols):
    """Canonical basis of the saturated lattice {x in Z^n : A x = 0}.

    Smith normal form supplies a basis; Hermite reduction of that basis
    plus sign normalization makes the result unique.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    diag, vcols = smith_normal_form(rows, ncols)
    kernel = [vcols[j] for j in range(ncols) if j >= len(diag) or diag[j] == 0]
    return hnf_rows(kernel, ncols)


def integer_kernel_hnf(rows, ncols):
    """Saturated integer kernel by Hermite reduction of the transpose.

    Row-reduce [A^T | I] unimodularly; rows whose left block vanishes
    carry a basis of {x in Z^n : A x = 0} in their right block.  Better
    behaved than full Smith form on wide matrices; used where only the
    kernel (not the diagonal) is needed.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    if m == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    aug = []
    for i in range(ncols):
        aug.append([rows[k][i] for k in range(m)] + [int(i == j) for j in range(ncols)])
    reduced = hnf_rows(aug, m + ncols)
    kernel = [row[m:] for row in reduced if not any(row[:m])]
    return hnf_rows(kernel, ncols)


def hnf_rows(vectors, ncols):
    """Row Hermite normal form of an integer row set (zero rows dropped)."""
    rows = [list(map(int, v)) for v in vectors]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(rows[i][c]))
            base = nz[0]
            for i in nz[1:]:
                q = rows[i][c] // rows[base][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[base])]
        nz = [i for i in range(r, len(rows)) if rows[i][c]]
        if not nz:
            continue
        rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return [row for row in rows[:r]]


def lll_reduce(basis, delta=Fraction(99, 100)):
    """Lattice-reduce linearly independent integer vectors (exact LLL).

    Classical incremental formulation: Gram-Schmidt data is updated in
    place on size reductions and swaps instead of being recomputed.
    Exactness of callers only depends on the output being another basis
    of the same lattice.
    """
    b = [list(map(int, v)) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(u, v):
        return sum(Fraction(x) * y for x, y in zip(u, v))

    mu = [[Fraction(0)] * n for _ in range(n)]
    norms = [Fraction(0)] * n
    star = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            if norms[j] == 0:
                raise ValueError("lll_reduce requires independent vectors")
            mu[i][j] = dot(b[i], star[j]) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        star.append(v)
        norms[i] = dot(v, v)
    del star

    def size_reduce(k, j):
        q = round(mu[k][j])
        if q:
            b[k] = [x - q * y for x, y in zip(b[k], b[j])]
            mu[k][j] -= q
            for i in range(j):
                mu[k][i] -= q * mu[j][i]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            b[k], b[k - 1] = b[k - 1], b[k]
            old = mu[k][k - 1]
            pivot = norms[k] + old * old * norms[k - 1]
            if pivot == 0:
                raise ValueError("lll_reduce requires independent vectors")
            mu[k][k - 1] = old * norms[k - 1] / pivot
            norms[k] = norms[k - 1] * norms[k] / pivot
            norms[k - 1] = pivot
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - old * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
    return b
