# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython kernel for arithmetic over a small finite field.

Mirror of ops_py.Kernel; matrices are flat row-major lists of element
indices.  Sizes are tiny (q <= 9, dimensions <= ~16) so everything fits in
fixed stack buffers.
"""

DEF MAXQ = 16
DEF MAXN = 64          # max matrix side
DEF MAXLEN = 4096      # max flat matrix / convolution length


cdef class Kernel:
    cdef int q
    cdef int add[MAXQ * MAXQ]
    cdef int mul[MAXQ * MAXQ]
    cdef int inv[MAXQ]
    cdef int neg[MAXQ]
    cdef public str backend

    def __init__(self, q, add_table, mul_table, inv_table):
        cdef int i, a, b
        if q > MAXQ:
            raise ValueError("field too large for compiled kernel")
        self.q = q
        self.backend = "c"
        for i in range(q * q):
            self.add[i] = add_table[i]
            self.mul[i] = mul_table[i]
        for i in range(q):
            self.inv[i] = inv_table[i]
        for a in range(q):
            for b in range(q):
                if self.add[a * q + b] == 0:
                    self.neg[a] = b
                    break

    def conv(self, a, b):
        cdef int la = len(a), lb = len(b)
        cdef int out[MAXLEN]
        cdef int i, j, x, y, k, q = self.q
        if la == 0 or lb == 0:
            return []
        if la + lb - 1 > MAXLEN:
            raise ValueError("convolution too long for compiled kernel")
        for i in range(la + lb - 1):
            out[i] = 0
        for i in range(la):
            x = a[i]
            if x == 0:
                continue
            for j in range(lb):
                y = b[j]
                if y:
                    k = i + j
                    out[k] = self.add[out[k] * q + self.mul[x * q + y]]
        return [out[i] for i in range(la + lb - 1)]

    def rref(self, mat, nrows, ncols):
        cdef int rows[MAXLEN]
        cdef int i, j, c, r, pr, s, f, q = self.q
        cdef int m = nrows, n = ncols
        if m * n > MAXLEN:
            raise ValueError("matrix too large for compiled kernel")
        for i in range(m * n):
            rows[i] = mat[i]
        pivots = []
        r = 0
        for c in range(n):
            pr = -1
            for i in range(r, m):
                if rows[i * n + c]:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(n):
                    rows[r * n + j], rows[pr * n + j] = rows[pr * n + j], rows[r * n + j]
            s = self.inv[rows[r * n + c]]
            if s != 1:
                for j in range(c, n):
                    rows[r * n + j] = self.mul[s * q + rows[r * n + j]]
            for i in range(m):
                if i != r and rows[i * n + c]:
                    f = self.neg[rows[i * n + c]]
                    for j in range(c, n):
                        if rows[r * n + j]:
                            rows[i * n + j] = self.add[
                                rows[i * n + j] * q + self.mul[f * q + rows[r * n + j]]]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return [rows[i] for i in range(r * n)], tuple(pivots)

    def matmul(self, a, b, m, k, n):
        cdef int ab[MAXLEN]
        cdef int bb[MAXLEN]
        cdef int out[MAXLEN]
        cdef int i, j, t, x, y, q = self.q
        if m * k > MAXLEN or k * n > MAXLEN or m * n > MAXLEN:
            raise ValueError("matrix too large for compiled kernel")
        for i in range(m * k):
            ab[i] = a[i]
        for i in range(k * n):
            bb[i] = b[i]
        for i in range(m * n):
            out[i] = 0
        for i in range(m):
            for t in range(k):
                x = ab[i * k + t]
                if x == 0:
                    continue
                for j in range(n):
                    y = bb[t * n + j]
                    if y:
                        out[i * n + j] = self.add[
                            out[i * n + j] * q + self.mul[x * q + y]]
        return [out[i] for i in range(m * n)]

    def matinv(self, a, n):
        cdef int rows[MAXLEN]
        cdef int i, j, c, r, pr, s, f, q = self.q
        cdef int w = 2 * n
        if n > MAXN or n * w > MAXLEN:
            raise ValueError("matrix too large for compiled kernel")
        for i in range(n):
            for j in range(n):
                rows[i * w + j] = a[i * n + j]
            for j in range(n):
                rows[i * w + n + j] = 1 if i == j else 0
        r = 0
        for c in range(n):
            pr = -1
            for i in range(r, n):
                if rows[i * w + c]:
                    pr = i
                    break
            if pr < 0:
                return None
            if pr != r:
                for j in range(w):
                    rows[r * w + j], rows[pr * w + j] = rows[pr * w + j], rows[r * w + j]
            s = self.inv[rows[r * w + c]]
            if s != 1:
                for j in range(w):
                    rows[r * w + j] = self.mul[s * q + rows[r * w + j]]
            for i in range(n):
                if i != r and rows[i * w + c]:
                    f = self.neg[rows[i * w + c]]
                    for j in range(w):
                        if rows[r * w + j]:
                            rows[i * w + j] = self.add[
                                rows[i * w + j] * q + self.mul[f * q + rows[r * w + j]]]
            r += 1
        return [rows[i * w + n + j] for i in range(n) for j in range(n)]
