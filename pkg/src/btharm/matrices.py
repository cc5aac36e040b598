"""Square matrices over F_q((pi)): products, adjugate inverses, determinant
valuations, reduction mod pi^m, and the Iwasawa decomposition
g = (integral, unit determinant) x (upper triangular).

Everything is exact where the inputs are exact; only division by a
non-monomial determinant truncates.  The building action never performs that
division (it works with adjugates up to homothety), so canonical forms of
lattices stay exact.
"""

from __future__ import annotations

from btharm.errors import NonIntegral, OutOfPrecision, Singular
from btharm.series import DEFAULT_PREC, TruncSeries


class MatK:
    """(n+1) x (n+1) matrix of truncated Laurent series."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.field = field
        self.n = n
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        one = TruncSeries.one(field)
        zero = TruncSeries.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def diagonal(cls, field, entries):
        zero = TruncSeries.zero(field)
        n = len(entries)
        return cls(field, [[entries[i] if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def diag_pi_powers(cls, field, exponents):
        return cls.diagonal(field, [TruncSeries.pi_power(field, s)
                                    for s in exponents])

    @classmethod
    def scalar(cls, field, n, s):
        return cls.diagonal(field, [s] * n)

    @classmethod
    def from_int_rows(cls, field, rows):
        """Exact matrix from rows of {exponent: coeff-index} dicts or ints."""
        conv = []
        for r in rows:
            cr = []
            for x in r:
                if isinstance(x, TruncSeries):
                    cr.append(x)
                elif isinstance(x, dict):
                    cr.append(TruncSeries.from_terms(field, x))
                else:
                    cr.append(TruncSeries.constant(field, x))
            conv.append(cr)
        return cls(field, conv)

    @classmethod
    def from_kappa(cls, field, flat, n):
        """Constant lift of a residue matrix given as flat indices."""
        return cls(field, [[TruncSeries.constant(field, flat[i * n + j])
                            for j in range(n)] for i in range(n)])

    # -- basic algebra -------------------------------------------------------

    def __mul__(self, other):
        n = self.n
        zero = TruncSeries.zero(self.field)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for t in range(n):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return MatK(self.field, out)

    def __add__(self, other):
        return MatK(self.field, [[a + b for a, b in zip(ra, rb)]
                                 for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatK(self.field, [[-a for a in r] for r in self.rows])

    def transpose(self):
        return MatK(self.field, list(zip(*self.rows)))

    def shift(self, s):
        return MatK(self.field, [[a.shift(s) for a in r] for r in self.rows])

    def is_exact(self):
        return all(a.prec is None for r in self.rows for a in r)

    def min_val(self):
        """Smallest certain entry valuation; None for the zero matrix."""
        vals = []
        for r in self.rows:
            for a in r:
                if a.coeffs:
                    vals.append(a.val)
                elif a.is_truncated_zero:
                    raise OutOfPrecision("entry with unknown valuation")
        return min(vals) if vals else None

    def det(self):
        """Determinant by expansion over column subsets (n+1 <= ~6)."""
        n = self.n
        field = self.field
        memo = {}

        def rec(cols):
            # row index is determined by how many columns remain
            if not cols:
                return TruncSeries.one(field)
            got = memo.get(cols)
            if got is not None:
                return got
            row = n - len(cols)
            acc = TruncSeries.zero(field)
            sign = 1
            for idx, c in enumerate(cols):
                a = self.rows[row][c]
                if a.coeffs or a.is_truncated_zero:
                    term = a * rec(cols[:idx] + cols[idx + 1:])
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
            memo[cols] = acc
            return acc

        return rec(tuple(range(n)))

    def det_val(self):
        """Valuation of the determinant; Singular on exact zero."""
        d = self.det()
        if d.is_exact_zero:
            raise Singular("singular matrix")
        return d.valuation()

    def adjugate(self):
        """Adjugate matrix: adj(g) * g = det(g) * I, exact for exact input."""
        n = self.n
        field = self.field
        if n == 1:
            return MatK.identity(field, 1)
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows = [r for r in range(n) if r != j]
                cols = [c for c in range(n) if c != i]
                sub = MatK(field, [[self.rows[r][c] for c in cols] for r in rows])
                m = sub.det()
                out[i][j] = m if (i + j) % 2 == 0 else -m
        return MatK(field, out)

    def inverse(self, target_prec=DEFAULT_PREC):
        """Inverse via adjugate over series and division by the determinant."""
        d = self.det()
        if d.is_exact_zero:
            raise Singular("singular matrix")
        dinv = d.inverse(target_prec)
        adj = self.adjugate()
        return MatK(self.field, [[a * dinv for a in r] for r in adj.rows])

    # -- reductions ----------------------------------------------------------

    def reduce_mod(self, m):
        """Reduction to a residue matrix over O/pi^m (entries of degree < m)."""
        n = self.n
        ent = []
        for r in self.rows:
            row = []
            for a in r:
                if a.coeffs and a.val < 0:
                    raise NonIntegral(f"entry {a!r} has negative valuation")
                if a.is_truncated_zero and a.prec < 0:
                    raise OutOfPrecision("entry integrality uncertain")
                if a.prec is not None and a.prec < m:
                    raise OutOfPrecision(
                        f"reduction mod pi^{m} needs precision {m}")
                row.append(tuple(a.coeff_idx(k) for k in range(m)))
            ent.append(tuple(row))
        return ResidueMat(self.field, m, tuple(ent))

    def residue_flat(self):
        """Flat index matrix of the reduction mod pi (entries must be integral)."""
        return [e[0] for row in self.reduce_mod(1).entries for e in row]

    # -- Iwasawa decomposition ------------------------------------------------

    def iwasawa(self, work_prec=DEFAULT_PREC):
        """g = k * b with k integral of unit determinant, b upper triangular.

        Column pivoting on minimal-valuation entries, smallest row index on
        ties.  Raises OutOfPrecision when a pivot valuation is uncertain.
        """
        n = self.n
        field = self.field
        b = [list(r) for r in self.rows]
        # record the row operations L with L g = b; then k = L^{-1}
        kinv_ops = []
        for c in range(n):
            pivot = None
            pval = None
            for i in range(c, n):
                a = b[i][c]
                if a.coeffs and (pval is None or a.val < pval):
                    pivot, pval = i, a.val
            if pivot is None:
                raise Singular("column with no usable pivot")
            for i in range(c, n):
                a = b[i][c]
                if a.is_truncated_zero and a.prec <= pval:
                    raise OutOfPrecision("pivot valuation uncertain")
            if pivot != c:
                b[c], b[pivot] = b[pivot], b[c]
                kinv_ops.append(("swap", (c, pivot)))
            pv = b[c][c]
            for i in range(c + 1, n):
                a = b[i][c]
                if not a.coeffs:
                    b[i][c] = TruncSeries(field, 0, (), a.prec)
                    continue
                mu = a * pv.inverse(work_prec - pv.val)
                b[i] = [x - mu * y for x, y in zip(b[i], b[c])]
                # the exact multiplier kills the pivot column entry exactly
                b[i][c] = TruncSeries.zero(field) if (a.prec is None and mu.prec is None) \
                    else TruncSeries(field, 0, (), work_prec)
                kinv_ops.append(("elim", (i, c, mu)))
        bmat = MatK(field, b)
        # k = op_1^{-1} ... op_N^{-1}, assembled by left-multiplying the
        # inverted operations onto the identity in reverse order
        krows = [list(r) for r in MatK.identity(field, n).rows]
        for kind, data in reversed(kinv_ops):
            if kind == "swap":
                i, j = data
                krows[i], krows[j] = krows[j], krows[i]
            else:
                i, c, mu = data
                krows[i] = [x + mu * y for x, y in zip(krows[i], krows[c])]
        return MatK(field, krows), bmat

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        return [[a.to_json() for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, field, rows):
        return cls(field, [[TruncSeries.from_json(field, a) for a in r]
                           for r in rows])

    def __eq__(self, other):
        return (isinstance(other, MatK) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(repr(a) for a in r) for r in self.rows)
        return f"MatK[{body}]"


class ResidueMat:
    """Matrix over O/pi^m: entries are degree-< m coefficient tuples."""

    __slots__ = ("field", "m", "entries")

    def __init__(self, field, m, entries):
        self.field = field
        self.m = m
        self.entries = entries

    @property
    def n(self):
        return len(self.entries)

    def kappa_flat(self):
        """Flat index matrix of the mod-pi part."""
        return [e[0] for row in self.entries for e in row]

    @property
    def invertible(self):
        """Unit determinant in O/pi^m (iff the mod-pi part is invertible)."""
        n = self.n
        return self.field.kernel.matinv(self.kappa_flat(), n) is not None

    def __eq__(self, other):
        return (isinstance(other, ResidueMat) and self.m == other.m
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.m, self.entries))

    def __repr__(self):
        return f"ResidueMat(m={self.m}, {self.entries})"


def mat_mul(a, b):
    return a * b


def mat_inv(g, target_prec=DEFAULT_PREC):
    return g.inverse(target_prec)


def det_val(g):
    return g.det_val()


def iwasawa(g):
    return g.iwasawa()


def reduce_mod(g, m):
    return g.reduce_mod(m)


def random_series(field, rng, lo=-2, hi=2):
    """Random exact Laurent polynomial with exponents in [lo, hi]."""
    terms = {k: rng.randrange(field.q) for k in range(lo, hi + 1)}
    return TruncSeries.from_terms(field, terms)


def random_invertible(field, n, rng, lo=-2, hi=2, max_tries=200):
    """Random invertible matrix with Laurent polynomial entries.

    Entries have exponents in [lo, hi] with uniform coefficients; rejection
    sampling enforces an exactly nonzero determinant.
    """
    for _ in range(max_tries):
        g = MatK(field, [[random_series(field, rng, lo, hi) for _ in range(n)]
                         for _ in range(n)])
        if not g.det().is_exact_zero:
            return g
    raise RuntimeError("failed to sample an invertible matrix")


def random_integral_unimodular(field, n, rng, hi=2, max_tries=400):
    """Random element of GL_n(O): integral entries, determinant a unit."""
    for _ in range(max_tries):
        g = MatK(field, [[random_series(field, rng, 0, hi) for _ in range(n)]
                         for _ in range(n)])
        d = g.det()
        if d.coeffs and d.val == 0:
            return g
    raise RuntimeError("failed to sample a unimodular matrix")
