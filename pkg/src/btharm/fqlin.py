"""Linear algebra over the residue field: subspaces, flags, enumeration.

A subspace of F_q^m is identified with its reduced row echelon basis, stored
as a tuple of row tuples of element indices; that tuple is the canonical key.
The full space is rref of the identity, the zero space the empty tuple.
"""

from __future__ import annotations

from functools import lru_cache


def rref_rows(field, rows, ncols):
    """Canonical RREF row tuple of the span of `rows`."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return ()
    flat = [x for r in rows for x in r]
    out, pivots = field.kernel.rref(flat, len(rows), ncols)
    k = len(pivots)
    return tuple(tuple(out[i * ncols:(i + 1) * ncols]) for i in range(k))


def subspace_dim(sub):
    return len(sub)


def full_space(field, m):
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def contains(field, big, small, m):
    """Row-space containment test."""
    if not small:
        return True
    joint = rref_rows(field, list(big) + list(small), m)
    return len(joint) == len(big)


def transport(field, sub, mat_flat, m):
    """Image of a row space under right multiplication by an m x m matrix."""
    if not sub:
        return ()
    rows = field.kernel.matmul([x for r in sub for x in r], mat_flat,
                               len(sub), m, m)
    return rref_rows(field, [rows[i * m:(i + 1) * m] for i in range(len(sub))], m)


def kappa_inv(field, mat_flat, m):
    out = field.kernel.matinv(mat_flat, m)
    if out is None:
        raise ZeroDivisionError("singular residue matrix")
    return out


@lru_cache(maxsize=None)
def _tuples(q, length):
    if length == 0:
        return ((),)
    shorter = _tuples(q, length - 1)
    return tuple(t + (c,) for t in shorter for c in range(q))


def subspaces_of_dim(field, m, d):
    """All subspaces of F_q^m of dimension d, as canonical RREF tuples.

    Enumerated directly in echelon form: choose pivot columns, then the free
    entries (zero below later pivots, arbitrary elsewhere to the right).
    """
    return _subspaces_cached(field, m, d)


@lru_cache(maxsize=None)
def _subspaces_cached(field, m, d):
    from itertools import combinations

    q = field.q
    if d == 0:
        return ((),)
    out = []
    for pivots in combinations(range(m), d):
        free_pos = []
        for i in range(d):
            for c in range(pivots[i] + 1, m):
                if c not in pivots:
                    free_pos.append((i, c))
        for assignment in _tuples(q, len(free_pos)):
            rows = [[0] * m for _ in range(d)]
            for i in range(d):
                rows[i][pivots[i]] = 1
            for (i, c), v in zip(free_pos, assignment):
                rows[i][c] = v
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def proper_nonzero_subspaces(field, m):
    out = []
    for d in range(1, m):
        out.extend(subspaces_of_dim(field, m, d))
    return out


def flags_with_dims(field, m, dims):
    """All strictly decreasing chains of subspaces with the given dimensions."""
    if not dims:
        return ((),)
    out = []

    def rec(prefix, remaining):
        if not remaining:
            out.append(tuple(prefix))
            return
        d = remaining[0]
        big = prefix[-1] if prefix else full_space(field, m)
        for sub in subspaces_of_dim(field, m, d):
            if contains(field, big, sub, m) and len(sub) < len(big):
                rec(prefix + [sub], remaining[1:])

    rec([], list(dims))
    return tuple(out)


def all_flags(field, m, k):
    """All flags F_1 > ... > F_k of proper nonzero subspaces of F_q^m."""
    out = []

    def rec(prefix, depth, mindim):
        if depth == 0:
            out.append(tuple(prefix))
            return
        big = prefix[-1] if prefix else None
        hi = (len(big) if big else m) - 1
        for d in range(depth, hi + 1):
            for sub in subspaces_of_dim(field, m, d):
                if big is None or contains(field, big, sub, m):
                    rec(prefix + [sub], depth - 1, d)

    # descending dims: F_1 has the largest dimension
    def rec2(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        big = prefix[-1] if prefix else full_space(field, m)
        for d in range(remaining, len(big)):
            for sub in subspaces_of_dim(field, m, d):
                if contains(field, big, sub, m):
                    rec2(prefix + [sub], remaining - 1)

    out = []
    rec2([], k)
    return tuple(out)


def gaussian_binomial(m, d, q):
    """Number of d-dimensional subspaces of F_q^m."""
    num = 1
    den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def lines_of_quotient(field, big, small, m):
    """Subspaces W with small < W <= big and dim W = dim small + 1.

    These are the lines of big/small, lifted: W = small + <v> for v running
    over coset representatives; canonicalized and deduplicated.
    """
    seen = {}
    for v in _vectors_in(field, big, m):
        cand = rref_rows(field, list(small) + [v], m)
        if len(cand) == len(small) + 1:
            seen.setdefault(cand, True)
    return list(seen)


def intermediate_subspaces(field, big, small, m, d):
    """Subspaces W with small < W < big (strict) of dimension d."""
    out = []
    for sub in subspaces_of_dim(field, m, d):
        if contains(field, big, sub, m) and contains(field, sub, small, m):
            out.append(sub)
    return out


def _vectors_in(field, sub, m):
    """All nonzero vectors of a row space."""
    q = field.q
    k = len(sub)
    out = []
    for coeffs in _tuples(q, k):
        if not any(coeffs):
            continue
        vec = [0] * m
        for c, row in zip(coeffs, sub):
            if c:
                for j in range(m):
                    if row[j]:
                        vec[j] = field.add_idx(vec[j], field.mul_idx(c, row[j]))
        out.append(tuple(vec))
    return out
