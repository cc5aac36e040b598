"""Truncated Laurent series over F_q: elements of the local field F_q((pi)).

A series carries an absolute precision `prec`: all coefficients at exponents
< prec are known exactly.  `prec is None` means the element is an exact
Laurent polynomial (every unlisted coefficient is zero), which is the common
case here — group elements, lattice bases and canonical forms are all exact.
Inverses of non-monomials are genuinely truncated.

Three states:

* exact zero      -- coeffs (), prec None;
* truncated zero  -- coeffs (), prec finite: the element is O(pi^prec) and
                     its valuation is unknown (`val` is only a lower bound);
* normal          -- leading coefficient (at exponent `val`) nonzero.

Operations that need a certain valuation (inversion, pivot selection,
integral reduction) raise OutOfPrecision on truncated zeros instead of
guessing.
"""

from __future__ import annotations

from btharm.errors import OutOfPrecision

#: default absolute precision for operations that must truncate (1/det etc.)
DEFAULT_PREC = 24


def _minp(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncSeries:
    """Immutable truncated Laurent series over a fixed F_q."""

    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field, val, coeffs, prec=None):
        # normalize: strip leading/trailing zeros, clip at prec
        coeffs = list(coeffs)
        if prec is not None and val + len(coeffs) > prec:
            del coeffs[max(0, prec - val):]
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        if i:
            val += i
            del coeffs[:i]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.prec = prec
        if not coeffs:
            self.val = prec if prec is not None else 0
        else:
            self.val = val

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, 0, (), None)

    @classmethod
    def one(cls, field):
        return cls(field, 0, (1,), None)

    @classmethod
    def pi_power(cls, field, s):
        return cls(field, s, (1,), None)

    @classmethod
    def constant(cls, field, idx):
        return cls(field, 0, (idx % field.q,), None)

    @classmethod
    def from_terms(cls, field, terms, prec=None):
        """Build from {exponent: coefficient-index}."""
        if not terms:
            return cls(field, 0, (), prec)
        lo = min(terms)
        hi = max(terms)
        coeffs = [0] * (hi - lo + 1)
        for k, v in terms.items():
            coeffs[k - lo] = v % field.q
        return cls(field, lo, coeffs, prec)

    # -- state ------------------------------------------------------------

    @property
    def is_exact(self):
        return self.prec is None

    @property
    def is_exact_zero(self):
        return self.prec is None and not self.coeffs

    @property
    def is_truncated_zero(self):
        return self.prec is not None and not self.coeffs

    @property
    def is_zeroish(self):
        """Zero as far as the known coefficients go."""
        return not self.coeffs

    def valuation(self):
        """Exact valuation; raises on both kinds of zero."""
        if self.is_exact_zero:
            raise ZeroDivisionError("valuation of exact zero")
        if self.is_truncated_zero:
            raise OutOfPrecision(f"valuation unknown: element is O(pi^{self.prec})")
        return self.val

    @property
    def val_lower_bound(self):
        return self.val if self.coeffs else (self.prec if self.prec is not None else None)

    def coeff_idx(self, exponent):
        """Coefficient index at an exponent, raising if beyond precision."""
        if self.prec is not None and exponent >= self.prec:
            raise OutOfPrecision(f"coefficient at pi^{exponent} beyond O(pi^{self.prec})")
        k = exponent - self.val
        if not self.coeffs or k < 0 or k >= len(self.coeffs):
            return 0
        return self.coeffs[k]

    def coefficient(self, exponent):
        return self.field.elem(self.coeff_idx(exponent))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        neg = self.field._neg_flat
        return TruncSeries(self.field, self.val,
                           [neg[c] for c in self.coeffs], self.prec)

    def __add__(self, other):
        f = self.field
        prec = _minp(self.prec, other.prec)
        if not self.coeffs:
            return TruncSeries(f, other.val, other.coeffs, prec)
        if not other.coeffs:
            return TruncSeries(f, self.val, self.coeffs, prec)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if prec is not None:
            hi = min(hi, prec)
        out = [0] * max(hi - lo, 0)
        for k in range(self.val, min(self.val + len(self.coeffs), hi)):
            out[k - lo] = self.coeffs[k - self.val]
        add = f._add_flat
        q = f.q
        for k in range(other.val, min(other.val + len(other.coeffs), hi)):
            out[k - lo] = add[out[k - lo] * q + other.coeffs[k - other.val]]
        return TruncSeries(f, lo, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if self.is_exact_zero or other.is_exact_zero:
            return TruncSeries.zero(f)
        # valuation-additive precision propagation; val doubles as a lower
        # bound for truncated zeros
        pa = None if self.prec is None else self.prec + other.val
        pb = None if other.prec is None else other.prec + self.val
        prec = _minp(pa, pb)
        if not self.coeffs or not other.coeffs:
            return TruncSeries(f, 0, (), prec)
        out = f.kernel.conv(list(self.coeffs), list(other.coeffs))
        return TruncSeries(f, self.val + other.val, out, prec)

    def scale_idx(self, cidx):
        """Multiply by a scalar given as a coefficient index."""
        if cidx == 0:
            return TruncSeries(self.field, 0, (), self.prec)
        if cidx == 1:
            return self
        mul = self.field._mul_flat
        q = self.field.q
        return TruncSeries(self.field, self.val,
                           [mul[cidx * q + c] for c in self.coeffs], self.prec)

    def shift(self, s):
        """Multiply by pi^s."""
        if self.is_exact_zero:
            return self
        return TruncSeries(self.field, self.val + s, self.coeffs,
                           None if self.prec is None else self.prec + s)

    def inverse(self, target_prec=DEFAULT_PREC):
        """Multiplicative inverse to absolute precision target_prec.

        The result has valuation -val(self); for a truncated input the target
        must satisfy target_prec <= prec - 2*val, else OutOfPrecision.
        """
        if self.is_exact_zero:
            raise ZeroDivisionError("inverse of exact zero")
        if self.is_truncated_zero:
            raise OutOfPrecision("inverse of a series with unknown valuation")
        v = self.val
        if self.prec is not None and target_prec > self.prec - 2 * v:
            raise OutOfPrecision(
                f"need O(pi^{target_prec}) but input precision allows only "
                f"O(pi^{self.prec - 2 * v})")
        f = self.field
        if self.prec is None and len(self.coeffs) == 1:
            # exact monomial: the inverse is exact
            return TruncSeries(f, -v, (f.inv_idx(self.coeffs[0]),), None)
        q, add, mul, neg = f.q, f._add_flat, f._mul_flat, f._neg_flat
        nterms = target_prec + v  # relative coefficients of the inverse
        if nterms <= 0:
            return TruncSeries(f, -v, (), target_prec)
        u = self.coeffs
        w0 = f.inv_idx(u[0])
        w = [w0]
        for m in range(1, nterms):
            acc = 0
            for i in range(1, min(m, len(u) - 1) + 1):
                ui = u[i]
                if ui:
                    acc = add[acc * q + mul[ui * q + w[m - i]]]
            w.append(mul[w0 * q + neg[acc]])
        return TruncSeries(f, -v, w, target_prec)

    def truncate(self, prec):
        return TruncSeries(self.field, self.val, self.coeffs,
                           _minp(self.prec, prec))

    def residue_idx(self):
        """Constant coefficient index; requires prec >= 1 when truncated."""
        if self.prec is not None and self.prec < 1:
            raise OutOfPrecision("residue needs precision >= 1")
        return self.coeff_idx(0)

    # -- predicates and comparisons ----------------------------------------

    def agrees_with(self, other, upto):
        """Equality of all coefficients at exponents < upto (must be known)."""
        for s in (self, other):
            if s.prec is not None and s.prec < upto:
                raise OutOfPrecision(f"comparison through pi^{upto - 1} exceeds precision")
        lo = min(self.val, other.val)
        return all(self.coeff_idx(k) == other.coeff_idx(k) for k in range(lo, upto))

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.field == other.field
                and self.val == other.val and self.coeffs == other.coeffs
                and self.prec == other.prec)

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def key(self):
        """Hashable content key for exact series (used in canonical forms)."""
        if self.prec is not None:
            raise OutOfPrecision("canonical keys require exact entries")
        return (self.val, self.coeffs)

    def to_json(self):
        return {"val": self.val if self.coeffs else None,
                "coeffs": [list(self.field._coords(c)) for c in self.coeffs],
                "prec": self.prec}

    @classmethod
    def from_json(cls, field, d):
        coeffs = [field._index(tuple(c)) for c in d["coeffs"]]
        return cls(field, d["val"] or 0, coeffs, d["prec"])

    def __repr__(self):
        if self.is_exact_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.val + i
            cs = "" if (c == 1 and k != 0) else str(self.field.elem(c))
            if k == 0:
                parts.append(cs or "1")
            elif k == 1:
                parts.append(f"{cs}pi" if cs else "pi")
            else:
                parts.append(f"{cs}pi^{k}" if cs else f"pi^{k}")
        if self.prec is not None:
            parts.append(f"O(pi^{self.prec})")
        return " + ".join(parts) if parts else "0"


def series_mul(a, b):
    """Product with valuation-additive precision propagation."""
    return a * b


def series_inv(a, target_prec=DEFAULT_PREC):
    """Inverse to a requested absolute precision."""
    return a.inverse(target_prec)
