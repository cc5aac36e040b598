"""The residue field F_q, q = p^e, with table-based exact arithmetic.

Elements are indices in [0, q): the element with polynomial-basis coordinates
(c_0, ..., c_{e-1}) has index sum c_i p^i.  Extension fields use a fixed
built-in defining polynomial so that runs are reproducible; prime fields need
none.  Full addition/multiplication/inverse tables are precomputed (q <= 9 in
the supported range), and the hot matrix kernels operate directly on indices
through `btharm.kernels`.
"""

from __future__ import annotations

from btharm.kernels import Kernel

# monic defining polynomials, coefficients ascending (c_0 .. c_e)
DEFINING_POLYS = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (2, 2, 1),        # x^2 + 2x + 2
}

_SMALL_PRIMES = (2, 3, 5, 7)

_CACHE = {}


def _is_prime(p):
    if p < 2:
        return False
    return all(p == r or p % r for r in range(2, p))


class GF:
    """Field descriptor for F_q with precomputed operation tables."""

    def __init__(self, p, e=1, poly=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            self.poly = None
        else:
            if poly is None:
                poly = DEFINING_POLYS.get((p, e))
                if poly is None:
                    raise ValueError(f"no built-in defining polynomial for q={self.q}")
            poly = tuple(c % p for c in poly)
            if len(poly) != e + 1 or poly[-1] != 1:
                raise ValueError("defining polynomial must be monic of degree e")
            self.poly = poly
        self._build_tables()
        self.kernel = Kernel(self.q, self._add_flat, self._mul_flat, self._inv_flat)

    # -- construction of the tables -------------------------------------

    def _coords(self, idx):
        p, e = self.p, self.e
        out = []
        for _ in range(e):
            out.append(idx % p)
            idx //= p
        return tuple(out)

    def _index(self, coords):
        p = self.p
        idx = 0
        for c in reversed(coords):
            idx = idx * p + (c % p)
        return idx

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        coords = [self._coords(i) for i in range(q)]
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            for b in range(q):
                add[a * q + b] = self._index(
                    tuple((x + y) % p for x, y in zip(coords[a], coords[b])))
                mul[a * q + b] = self._index(self._polymul(coords[a], coords[b]))
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
            else:
                raise ValueError("defining polynomial is not irreducible")
        neg = [0] * q
        for a in range(q):
            for b in range(q):
                if add[a * q + b] == 0:
                    neg[a] = b
                    break
        self._add_flat = add
        self._mul_flat = mul
        self._inv_flat = inv
        self._neg_flat = neg

    def _polymul(self, ca, cb):
        p, e = self.p, self.e
        if e == 1:
            return ((ca[0] * cb[0]) % p,)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic defining polynomial
        for d in range(2 * e - 2, e - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(e):
                    prod[d - e + i] = (prod[d - e + i] - c * self.poly[i]) % p
        return tuple(prod[:e])

    # -- element access ---------------------------------------------------

    def elem(self, idx):
        return FqElem(self, idx % self.q if self.e == 1 else idx)

    def from_coords(self, coords):
        return FqElem(self, self._index(coords))

    @property
    def zero(self):
        return FqElem(self, 0)

    @property
    def one(self):
        return FqElem(self, 1)

    def elements(self):
        return [FqElem(self, i) for i in range(self.q)]

    # raw index helpers used by the inner loops
    def add_idx(self, a, b):
        return self._add_flat[a * self.q + b]

    def mul_idx(self, a, b):
        return self._mul_flat[a * self.q + b]

    def neg_idx(self, a):
        return self._neg_flat[a]

    def inv_idx(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self._inv_flat[a]

    def descriptor(self):
        """JSON-serializable field descriptor {p, e, poly}."""
        return {"p": self.p, "e": self.e,
                "poly": list(self.poly) if self.poly else None}

    def __eq__(self, other):
        return (isinstance(other, GF) and self.p == other.p
                and self.e == other.e and self.poly == other.poly)

    def __hash__(self):
        return hash((self.p, self.e, self.poly))

    def __repr__(self):
        return f"GF({self.q})" if self.e > 1 else f"GF({self.p})"


def gf(q_or_p, e=None):
    """Field cache: gf(q) for a prime power, or gf(p, e)."""
    if e is None:
        p, e = q_or_p, 1
        for r in _SMALL_PRIMES:
            if q_or_p % r == 0:
                p = r
                e = 0
                n = q_or_p
                while n % r == 0:
                    n //= r
                    e += 1
                if n != 1:
                    raise ValueError(f"{q_or_p} is not a prime power")
                break
        else:
            p, e = q_or_p, 1
    else:
        p = q_or_p
    key = (p, e)
    if key not in _CACHE:
        _CACHE[key] = GF(p, e)
    return _CACHE[key]


def field_from_descriptor(d):
    f = gf(d["p"], d["e"])
    if d.get("poly") and tuple(d["poly"]) != (f.poly or tuple(d["poly"])):
        return GF(d["p"], d["e"], tuple(d["poly"]))
    return f


class FqElem:
    """An element of F_q, wrapping its index in the fixed polynomial basis."""

    __slots__ = ("field", "idx")

    def __init__(self, field, idx):
        if not 0 <= idx < field.q:
            raise ValueError(f"index {idx} out of range for {field}")
        self.field = field
        self.idx = idx

    @property
    def p(self):
        return self.field.p

    @property
    def e(self):
        return self.field.e

    @property
    def coords(self):
        return self.field._coords(self.idx)

    def __bool__(self):
        return self.idx != 0

    def __add__(self, other):
        return FqElem(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FqElem(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul_idx(self.idx, other.idx))

    def inverse(self):
        return FqElem(self.field, self.field.inv_idx(self.idx))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, FqElem) and self.field == other.field
                and self.idx == other.idx)

    def __hash__(self):
        return hash((self.field.q, self.idx))

    def __repr__(self):
        if self.e == 1:
            return str(self.idx)
        return f"x{self.coords}"


def fq_inv(x):
    """Multiplicative inverse in F_q; zero input raises ZeroDivisionError."""
    return x.inverse()
