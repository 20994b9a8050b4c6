"""Dense univariate polynomials over a finite field.

Coefficients are stored little-endian as an int64 array of element indices.
Reduction mod x^Q - x (Q the field order) uses the exponent rule
k -> ((k - 1) mod (Q - 1)) + 1 for k >= Q, which never sends a positive
exponent to 0 and therefore preserves the induced function on the whole
field, including at 0.  Two reduced polynomials are equal iff they induce
the same function.
"""

from __future__ import annotations

import numpy as np

from .gf import Field, FieldElement

# Lagrange interpolation materialises a Q x Q basis matrix per field.
INTERP_LIMIT = 2048


def _comb_mod_p(t: int, k: int, p: int) -> int:
    """Binomial coefficient C(t, k) mod p via base-p digits (Lucas)."""
    out = 1
    while t or k:
        td, kd = t % p, k % p
        if kd > td:
            return 0
        num = den = 1
        for i in range(kd):
            num = num * (td - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, p - 2, p) % p if p > 2 else out * num % p
        t //= p
        k //= p
    return out


class Poly:
    """Polynomial over a Field; the zero polynomial has an empty coefficient vector."""

    __slots__ = ("field", "idx")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
            arr = coeffs
        else:
            vals = []
            for c in coeffs:
                if isinstance(c, FieldElement):
                    if c.field != field:
                        raise TypeError("coefficient from a different field")
                    vals.append(c.index)
                else:
                    k = int(c)
                    if not 0 <= k < field.order:
                        raise ValueError(f"coefficient index {k} out of range")
                    vals.append(k)
            arr = np.array(vals, dtype=np.int64)
        nz = np.nonzero(arr)[0]
        self.idx = arr[: nz[-1] + 1].copy() if len(nz) else np.empty(0, dtype=np.int64)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, [1])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: Field, exp: int, coeff=1) -> "Poly":
        c = field.element(coeff)
        arr = np.zeros(exp + 1, dtype=np.int64)
        arr[exp] = c.index
        return cls(field, arr)

    @classmethod
    def from_text(cls, field: Field, text: str) -> "Poly":
        """Parse the comma-separated little-endian index encoding."""
        text = text.strip()
        if not text:
            return cls(field)
        return cls(field, [int(s) for s in text.split(",")])

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.idx) - 1

    def coefficient(self, k: int) -> FieldElement:
        if 0 <= k < len(self.idx):
            return FieldElement(self.field, int(self.idx[k]))
        return self.field.zero

    def terms(self):
        """Nonzero (exponent, coefficient) pairs, ascending."""
        return [(int(k), FieldElement(self.field, int(self.idx[k]))) for k in np.nonzero(self.idx)[0]]

    def to_text(self) -> str:
        return ",".join(str(int(c)) for c in self.idx)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and np.array_equal(self.idx, other.idx)
        )

    def __bool__(self):
        return len(self.idx) > 0

    def __repr__(self):
        return f"Poly(GF({self.field.descriptor()}), [{self.to_text()}])"

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.field != self.field:
            raise TypeError("point from a different field")
        acc = self.field.zero
        for k in range(len(self.idx) - 1, -1, -1):
            acc = acc * x + FieldElement(self.field, int(self.idx[k]))
        return acc

    def eval_indices(self, u: np.ndarray) -> np.ndarray:
        """Vectorised Horner evaluation on an array of element indices."""
        T = self.field.tables
        u = np.asarray(u, dtype=np.int64)
        acc = np.zeros_like(u)
        for k in range(len(self.idx) - 1, -1, -1):
            acc = T.add(T.mul(acc, u), np.int64(self.idx[k]))
        return acc

    def eval_terms(self, u: np.ndarray) -> np.ndarray:
        """Vectorised evaluation via nonzero terms (cheap for sparse polynomials)."""
        T = self.field.tables
        u = np.asarray(u, dtype=np.int64)
        acc = np.zeros_like(u)
        for k in np.nonzero(self.idx)[0]:
            acc = T.add(acc, T.mul(np.int64(self.idx[k]), T.pow(u, int(k))))
        return acc

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if other.field != self.field:
            raise TypeError("mixed fields")
        a, b = self.idx, other.idx
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 0:
            return Poly(self.field, a)
        T = self.field.tables
        out = a.copy()
        out[: len(b)] = T.add(a[: len(b)], b)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.field.tables.neg[self.idx])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = self.field.element(c)
        if not c or not self:
            return Poly(self.field)
        return Poly(self.field, self.field.tables.mul(self.idx, np.int64(c.index)))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self:
            return Poly(self.field)
        return Poly(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.idx]))

    def __mul__(self, other: "Poly") -> "Poly":
        """Plain (unreduced) product via per-digit convolution."""
        if other.field != self.field:
            raise TypeError("mixed fields")
        if not self or not other:
            return Poly(self.field)
        f = self.field
        T = f.tables
        D = f.degree
        A = T.dig[self.idx]
        B = T.dig[other.idx]
        la, lb = len(self.idx), len(other.idx)
        C = np.zeros((la + lb - 1, 2 * D - 1), dtype=np.int64)
        for u in range(D):
            if not A[:, u].any():
                continue
            for v in range(D):
                if B[:, v].any():
                    C[:, u + v] += np.convolve(A[:, u], B[:, v])
        # fold digit powers y^(D+k) back below the element modulus
        if D > 1:
            red = _reduction_rows(f)
            for k in range(2 * D - 2, D - 1, -1):
                col = C[:, k]
                if col.any():
                    C[:, :D] += col[:, None] * red[k - D]
        C = C[:, :D] % f.p
        return Poly(f, C @ T.pw)

    def reduce(self) -> "Poly":
        """Canonical representative of the induced function (degree < Q)."""
        f = self.field
        Q = f.order
        if len(self.idx) <= Q:
            return Poly(f, self.idx)
        T = f.tables
        kk = np.arange(len(self.idx), dtype=np.int64)
        tgt = np.where(kk < Q, kk, (kk - 1) % (Q - 1) + 1)
        acc = np.zeros((Q, f.degree), dtype=np.int64)
        np.add.at(acc, tgt, T.dig[self.idx])
        return Poly(f, (acc % f.p) @ T.pw)

    def mul_mod(self, other: "Poly") -> "Poly":
        return (self * other).reduce()

    def frobenius(self) -> "Poly":
        """p-th power of the polynomial, reduced: coefficients c -> c^p, exponents k -> kp."""
        f = self.field
        if not self:
            return Poly(f)
        T = f.tables
        Q = f.order
        kk = np.nonzero(self.idx)[0].astype(np.int64) * f.p
        tgt = np.where(kk < Q, kk, (kk - 1) % (Q - 1) + 1)
        acc = np.zeros((Q, f.degree), dtype=np.int64)
        np.add.at(acc, tgt, T.dig[T.frob[self.idx[np.nonzero(self.idx)[0]]]])
        return Poly(f, (acc % f.p) @ T.pw)

    def _small_pow(self, k: int) -> "Poly":
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result.mul_mod(base)
            k >>= 1
            if k:
                base = base.mul_mod(base)
        return result

    def pow_mod(self, k: int) -> "Poly":
        """k-th power mod x^Q - x, splitting the exponent in base p.

        Digits at p^j are handled on the j-fold Frobenius image, which costs
        no convolutions, so pure p-power exponents reduce to coefficient maps.
        """
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return Poly.one(self.field)
        base = self.reduce()
        result = None
        p = self.field.p
        while k:
            k, d = divmod(k, p)
            if d:
                piece = base._small_pow(d)
                result = piece if result is None else result.mul_mod(piece)
            if k:
                base = base.frobenius()
        return result

    def compose_mod(self, inner: "Poly") -> "Poly":
        """Reduced composition self(inner(x)); exploits sparse outer terms."""
        if inner.field != self.field:
            raise TypeError("mixed fields")
        f = self.field
        out = Poly(f)
        inner_r = inner.reduce()
        acc = None
        cur = 0
        for e, c in self.terms():
            if e == 0:
                out = out + Poly(f, [c])
                continue
            if acc is None:
                acc = inner_r.pow_mod(e)
            elif e % cur == 0 and e // cur > 1:
                acc = acc.pow_mod(e // cur)
            else:
                acc = acc.mul_mod(inner_r.pow_mod(e - cur))
            cur = e
            out = out + acc.scale(c)
        return out.reduce()

    # -- interpolation ----------------------------------------------------------

    @classmethod
    def interpolate(cls, field: Field, pairs) -> "Poly":
        """Unique polynomial of degree < Q through all Q points (x_i, y_i).

        The abscissae must exhaust the field; duplicates or gaps are rejected.
        """
        Q = field.order
        y_by_x = np.full(Q, -1, dtype=np.int64)
        count = 0
        for xv, yv in pairs:
            xi = field.element(xv).index
            if y_by_x[xi] >= 0:
                raise ValueError(f"duplicate abscissa {xi}")
            y_by_x[xi] = field.element(yv).index
            count += 1
        if count != Q:
            raise ValueError(f"interpolation table must cover all {Q} abscissae")
        T = field.tables
        basis = _lagrange_basis(field)
        prod = T.mul(y_by_x[:, None], basis)
        return cls(field, T.sum_terms(prod))


def _reduction_rows(field: Field) -> np.ndarray:
    """Digits of x^(D+k) mod the field modulus, k = 0..D-2 (cached on tables)."""
    T = field.tables
    rows = getattr(T, "_redrows", None)
    if rows is None:
        D = field.degree
        rows = np.zeros((max(D - 1, 0), D), dtype=np.int64)
        cur = field.element(field._index([0] * (D - 1) + [1]))  # x^(D-1)
        xgen = field.from_coeffs([0, 1]) if D > 1 else field.one
        for k in range(D - 1):
            cur = cur * xgen  # now x^(D+k) reduced
            rows[k] = np.array(cur.coeffs, dtype=np.int64)
        T._redrows = rows
    return rows


def _lagrange_basis(field: Field) -> np.ndarray:
    """Matrix whose row i holds the coefficients of the Lagrange basis poly at x_i.

    Row i is the synthetic quotient prod(x - x_j) / (x - x_i), scaled by the
    inverse of its value at x_i.  Cached per field.
    """
    T = field.tables
    basis = getattr(T, "_lagrange", None)
    if basis is not None:
        return basis
    Q = field.order
    if Q > INTERP_LIMIT:
        raise ValueError(f"interpolation limited to fields of order <= {INTERP_LIMIT}")
    xs = np.arange(Q, dtype=np.int64)
    # master polynomial prod_j (x - x_j), built incrementally
    master = np.zeros(Q + 1, dtype=np.int64)
    master[0] = 1
    deg = 0
    for c in range(Q):
        shifted = np.zeros(deg + 2, dtype=np.int64)
        shifted[1:] = master[: deg + 1]
        shifted[:-1] = T.sub(shifted[:-1], T.mul(master[: deg + 1], np.int64(c)))
        master[: deg + 2] = shifted
        deg += 1
    B = np.zeros((Q, Q), dtype=np.int64)
    B[:, Q - 1] = master[Q]
    for k in range(Q - 1, 0, -1):
        B[:, k - 1] = T.add(np.int64(master[k]), T.mul(xs, B[:, k]))
    den = np.zeros(Q, dtype=np.int64)
    for k in range(Q - 1, -1, -1):
        den = T.add(T.mul(den, xs), B[:, k])
    B = T.mul(T.inv_of(den)[:, None], B)
    T._lagrange = B
    return B


def family_poly(field: Field, s: int, t: int, a: FieldElement) -> Poly:
    """Coefficient form of x * (x^s - a)^t via binomial expansion.

    Returned as the literal degree-(st+1) expansion; reduce() folds it mod
    x^Q - x when a canonical representative is needed.
    """
    if s < 1 or t < 1:
        raise ValueError("family exponents must be positive")
    a = field.element(a)
    if not a:
        raise ValueError("family constant a must be nonzero")
    na = -a
    arr = np.zeros(s * t + 2, dtype=np.int64)
    for k in range(t + 1):
        c = _comb_mod_p(t, k, field.p)
        coeff = (na ** k) * field.element(c)
        arr[1 + s * (t - k)] = coeff.index
    return Poly(field, arr)
