"""Exact integer linear algebra used throughout the package.

Everything here works with plain Python integers, so there is no precision
ceiling anywhere.  Matrices are tuples of tuples (immutable) or lists of
lists (scratch space); vectors are tuples or lists of ints.
"""

from math import gcd


def xgcd(a, b):
    """Extended gcd: returns (g, x, y) with x*a + y*b == g and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    k = len(b)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(ra[t] * bc[t] for t in range(k)) for bc in bt) for ra in a
    )


def mat_vec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def rank(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rk = 0
    col = 0
    while rk < len(work) and col < ncols:
        piv = None
        for r in range(rk, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        work[rk], work[piv] = work[piv], work[rk]
        prow = work[rk]
        for r in range(rk + 1, len(work)):
            if work[r][col]:
                f, p = work[r][col], prow[col]
                work[r] = [p * x - f * y for x, y in zip(work[r], prow)]
                g = gcd_all(work[r])
                if g > 1:
                    work[r] = [x // g for x in work[r]]
        rk += 1
        col += 1
    return rk


def det(a):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class EchelonLattice:
    """A sublattice of Z^dim kept as an integer row-echelon basis.

    Rows are indexed by their pivot column.  Insertion uses gcd exchanges,
    so the represented lattice only ever grows; ``insert`` reports whether
    it actually grew.  ``hnf_rows`` returns the canonical Hermite basis
    (positive pivots, entries above each pivot reduced into [0, pivot)),
    which is unique for the lattice and therefore reproducible bit for bit.
    """

    def __init__(self, dim):
        self.dim = dim
        self.pivot_rows = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    def _leading(self, v, start=0):
        for j in range(start, self.dim):
            if v[j]:
                return j
        return None

    def reduce(self, vec):
        """Residue of vec after reduction against the current basis."""
        v = list(vec)
        j = self._leading(v)
        while j is not None:
            row = self.pivot_rows.get(j)
            if row is None:
                return v
            q = v[j] // row[j]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
            if v[j]:
                return v
            j = self._leading(v, j + 1)
        return v

    def insert(self, vec):
        """Add vec to the lattice; True iff the lattice grew."""
        v = list(vec)
        changed = False
        j = self._leading(v)
        while j is not None:
            row = self.pivot_rows.get(j)
            if row is None:
                if v[j] < 0:
                    v = [-x for x in v]
                self.pivot_rows[j] = v
                return True
            a, b = v[j], row[j]
            if a % b == 0:
                q = a // b
                v = [x - q * y for x, y in zip(v, row)]
            else:
                g, x, y = xgcd(b, a)
                new_row = [x * r + y * w for r, w in zip(row, v)]
                v = [(b // g) * w - (a // g) * r for r, w in zip(row, v)]
                self.pivot_rows[j] = new_row
                changed = True
            j = self._leading(v, j + 1)
        return changed

    def member(self, vec):
        return not any(self.reduce(vec))

    def content(self):
        """gcd of all basis entries; 0 for the zero lattice."""
        g = 0
        for row in self.pivot_rows.values():
            g = gcd(g, gcd_all(row))
            if g == 1:
                return 1
        return g

    def hnf_rows(self):
        # increasing pivot order: row i has zeros left of its pivot, so
        # reducing with it never disturbs columns fixed earlier
        cols = sorted(self.pivot_rows)
        rows = [list(self.pivot_rows[c]) for c in cols]
        for i in range(len(rows)):
            p = rows[i][cols[i]]
            for k in range(i):
                q = rows[k][cols[i]] // p
                if q:
                    rows[k] = [x - q * y for x, y in zip(rows[k], rows[i])]
        return tuple(tuple(r) for r in rows)


def hnf(rows, dim):
    """Canonical Hermite row basis of the lattice spanned by the rows."""
    lat = EchelonLattice(dim)
    for r in rows:
        lat.insert(r)
    return lat.hnf_rows()


def smith_normal_form(mat):
    """Smith normal form with transforms: returns (U, D, V), U*mat*V == D.

    U and V are unimodular, D is diagonal with nonnegative entries in a
    divisibility chain d1 | d2 | ...
    """
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def combine_rows(i, j, x, y, z, w):
        # rows i, j <- (x*ri + y*rj, z*ri + w*rj); x*w - y*z == +-1
        ai, aj = a[i], a[j]
        a[i] = [x * p + y * q for p, q in zip(ai, aj)]
        a[j] = [z * p + w * q for p, q in zip(ai, aj)]
        ui, uj = u[i], u[j]
        u[i] = [x * p + y * q for p, q in zip(ui, uj)]
        u[j] = [z * p + w * q for p, q in zip(ui, uj)]

    def combine_cols(i, j, x, y, z, w):
        for row in a:
            p, q = row[i], row[j]
            row[i], row[j] = x * p + y * q, z * p + w * q
        for row in v:
            p, q = row[i], row[j]
            row[i], row[j] = x * p + y * q, z * p + w * q

    t = 0
    size = min(m, n)
    while t < size:
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = a[i][j]
                if e and (best is None or abs(e) < best):
                    piv, best = (i, j), abs(e)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    p, e = a[t][t], a[i][t]
                    if e % p == 0:
                        q = e // p
                        combine_rows(t, i, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(p, e)
                        combine_rows(t, i, x, y, -(e // g), p // g)
            for j in range(t + 1, n):
                if a[t][j]:
                    p, e = a[t][t], a[t][j]
                    if e % p == 0:
                        q = e // p
                        combine_cols(t, j, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(p, e)
                        combine_cols(t, j, x, y, -(e // g), p // g)
            if all(a[i][t] == 0 for i in range(t + 1, m)) and all(
                a[t][j] == 0 for j in range(t + 1, n)
            ):
                # pivot must divide the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t] != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                combine_rows(t, bad, 1, 1, 0, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    U = tuple(tuple(r) for r in u)
    D = tuple(tuple(r) for r in a)
    V = tuple(tuple(r) for r in v)
    return U, D, V


def kernel_basis(mat):
    """Primitive integer basis of {x : mat @ x == 0} (right kernel)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return ()
    if m == 0:
        return identity_matrix(n)
    _, d, v = smith_normal_form(mat)
    r = sum(1 for i in range(min(m, n)) if d[i][i])
    return tuple(tuple(v[i][j] for i in range(n)) for j in range(r, n))
