"""Pure-Python kernel for arithmetic over a small finite field.

Matrices are flat row-major lists of element indices in [0, q).  The same
interface is implemented in Cython (`_ops_c.pyx`); `btharm.kernels` selects
the backend at import time.  Semantics of the two backends are identical and
tested against each other.
"""


class Kernel:
    backend = "py"

    def __init__(self, q, add_table, mul_table, inv_table):
        self.q = q
        self.add = add_table        # flat q*q
        self.mul = mul_table        # flat q*q
        self.inv = inv_table        # length q, inv[0] unused
        q2 = q
        self.neg = [next(b for b in range(q2) if add_table[a * q2 + b] == 0)
                    for a in range(q2)]

    def conv(self, a, b):
        """Coefficient convolution (polynomial product), lowest degree first."""
        if not a or not b:
            return []
        q, add, mul = self.q, self.add, self.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = x * q
            for j, y in enumerate(b):
                if y:
                    k = i + j
                    out[k] = add[out[k] * q + mul[row + y]]
        return out

    def rref(self, mat, nrows, ncols):
        """Reduced row echelon form.

        Returns (flat_rref, pivot_columns).  Zero rows are dropped, so the
        result has len(pivots) rows; the flat form is the canonical key of
        the row space.
        """
        q, add, mul, inv, neg = self.q, self.add, self.mul, self.inv, self.neg
        rows = [list(mat[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
        pivots = []
        r = 0
        for c in range(ncols):
            pr = None
            for i in range(r, len(rows)):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r]
            s = inv[piv[c]]
            if s != 1:
                for j in range(c, ncols):
                    piv[j] = mul[s * q + piv[j]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = neg[rows[i][c]]
                    ri = rows[i]
                    for j in range(c, ncols):
                        if piv[j]:
                            ri[j] = add[ri[j] * q + mul[f * q + piv[j]]]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        flat = []
        for i in range(r):
            flat.extend(rows[i])
        return flat, tuple(pivots)

    def matmul(self, a, b, m, k, n):
        q, add, mul = self.q, self.add, self.mul
        out = [0] * (m * n)
        for i in range(m):
            arow = i * k
            orow = i * n
            for t in range(k):
                x = a[arow + t]
                if x == 0:
                    continue
                xrow = x * q
                brow = t * n
                for j in range(n):
                    y = b[brow + j]
                    if y:
                        out[orow + j] = add[out[orow + j] * q + mul[xrow + y]]
        return out

    def matinv(self, a, n):
        """Inverse of an n x n matrix, or None if singular."""
        q, add, mul, inv, neg = self.q, self.add, self.mul, self.inv, self.neg
        rows = [list(a[i * n:(i + 1) * n]) + [0] * n for i in range(n)]
        for i in range(n):
            rows[i][n + i] = 1
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, n):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                return None
            rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r]
            s = inv[piv[c]]
            if s != 1:
                for j in range(2 * n):
                    piv[j] = mul[s * q + piv[j]]
            for i in range(n):
                if i != r and rows[i][c]:
                    f = neg[rows[i][c]]
                    ri = rows[i]
                    for j in range(2 * n):
                        if piv[j]:
                            ri[j] = add[ri[j] * q + mul[f * q + piv[j]]]
            r += 1
        out = []
        for i in range(n):
            out.extend(rows[i][n:])
        return out
