"""The permutation family f(x) = x(x^s - a)^t on F_{q^n}.

Provides the s-th power non-residue criterion, the pointwise closed-form
inverse, its symbolic (scale, g, h) decomposition, the inverse of the
linearized binomial x^{q^m} - ax, and the gcd identity used to select
branches in the t = 2 specialisation.  All divided exponents such as
(q^{im}-1)/(q^m-1) are assembled as geometric sums in exact integers.
"""

from __future__ import annotations

import math

import numpy as np

from .gf import Field, FieldElement
from .poly import Poly, family_poly


class NotPermutationError(ValueError):
    """An inverse was requested where the permutation criterion fails."""


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"{num} not divisible by {den}")
    return q


def poly_from_terms(field: Field, terms) -> Poly:
    """Dense reduced polynomial from (exponent, coefficient) pairs.

    Exponents >= Q are folded by the x^Q - x rule before densifying, so
    arbitrarily large printed exponents stay cheap.
    """
    Q = field.order
    acc: dict[int, int] = {}
    for exp, coeff in terms:
        c = field.element(coeff)
        if not c:
            continue
        k = exp if exp < Q else (exp - 1) % (Q - 1) + 1
        acc[k] = field._add_idx(acc.get(k, 0), c.index)
    if not acc:
        return Poly(field)
    arr = np.zeros(max(acc) + 1, dtype=np.int64)
    for k, v in acc.items():
        arr[k] = v
    return Poly(field, arr)


class PPParams:
    """Validated parameters (m, s, t) with st = q^m - 1, plus derived gcd data."""

    def __init__(self, field: Field, m: int, s: int, t: int):
        if not 1 <= m <= field.n:
            raise ValueError(f"m must lie in [1, {field.n}], got {m}")
        if s < 1 or t < 1:
            raise ValueError("s and t must be positive")
        target = field.q ** m - 1
        if s * t != target:
            raise ValueError(f"s*t = {s * t} but q^m - 1 = {target}")
        self.field = field
        self.m = m
        self.s = s
        self.t = t
        group = field.order - 1
        self.d = math.gcd(m, field.n)
        self.s_bar = math.gcd(s, group)
        self.u = math.gcd(t, group // self.s_bar)
        q = field.q
        nd = field.n // self.d
        # (q^{im}-1)/(q^m-1) and (q^{(i-1)m}-1)/t for i = 1..n/d
        self._E = [sum(q ** (m * l) for l in range(i)) for i in range(1, nd + 1)]
        self._G = [_exact_div(q ** ((i - 1) * m) - 1, t) for i in range(1, nd + 1)]
        self._norm_exp = sum(q ** (self.d * l) for l in range(nd))
        self._crit_exp = group // self.s_bar

    def __eq__(self, other):
        return (
            isinstance(other, PPParams)
            and (self.field, self.m, self.s, self.t) == (other.field, other.m, other.s, other.t)
        )

    def __hash__(self):
        return hash((self.field, self.m, self.s, self.t))

    def __repr__(self):
        return f"PPParams(GF({self.field.descriptor()}), m={self.m}, s={self.s}, t={self.t})"

    # -- scalar operations ----------------------------------------------------

    def _unit(self, a) -> FieldElement:
        a = self.field.element(a)
        if not a:
            raise ValueError("a must be nonzero")
        return a

    def subfield_norm(self, a) -> FieldElement:
        """Norm of a onto the subfield of order q^d."""
        return self.field.element(a) ** self._norm_exp

    def criterion_power(self, a) -> FieldElement:
        """a^((q^n-1)/s_bar); f permutes the field iff this is not 1."""
        return self._unit(a) ** self._crit_exp

    def is_permutation(self, a) -> bool:
        return self.criterion_power(a) != self.field.one

    def evaluate(self, a, x) -> FieldElement:
        """f(x) = x (x^s - a)^t."""
        a = self._unit(a)
        x = self.field.element(x)
        return x * (x ** self.s - a) ** self.t

    def h_value(self, a, y) -> FieldElement:
        """The n/d-term sum h(y) = sum_i a^{-(q^{im}-1)/(q^m-1)} y^{(q^{(i-1)m}-1)/t}."""
        a = self._unit(a)
        y = self.field.element(y)
        ainv = a.inverse()
        acc = self.field.zero
        for E, G in zip(self._E, self._G):
            acc = acc + (ainv ** E) * (y ** G)
        return acc

    def inverse_value(self, a, y) -> FieldElement:
        """Pointwise inverse: the unique x with f(x) = y.

        Rejected up front when the criterion fails, since the denominator
        N(y^s) - N(a) is only provably nonzero for permutations.
        """
        a = self._unit(a)
        if not self.is_permutation(a):
            raise NotPermutationError(f"a={a.index} is an s-th power; f is not a permutation")
        y = self.field.element(y)
        if not y:
            return self.field.zero
        n_a = self.subfield_norm(a)
        den = self.subfield_norm(y ** self.s) - n_a
        factor = (n_a / den) * self.h_value(a, y)
        return y * factor ** self.t

    def family_polynomial(self, a) -> Poly:
        """Coefficient form of f itself."""
        return family_poly(self.field, self.s, self.t, self._unit(a))

    def closed_inverse(self, a) -> "ClosedInverse":
        """Symbolic decomposition f^{-1}(y) = y (scale * g(y) * h(y))^t."""
        a = self._unit(a)
        crit = self.criterion_power(a)
        one = self.field.one
        if crit == one:
            raise NotPermutationError(f"a={a.index} is an s-th power; f is not a permutation")
        n_a = self.subfield_norm(a)
        scale = n_a / (one - crit)
        nu = self._norm_exp
        g_terms = tuple(
            (nu * self.s * (l - 1), n_a ** (self.u - l)) for l in range(1, self.u + 1)
        )
        ainv = a.inverse()
        h_terms = tuple((G, ainv ** E) for E, G in zip(self._E, self._G))
        return ClosedInverse(self.field, a, self.t, scale, g_terms, h_terms)

    def inverse_polynomial(self, a) -> Poly:
        """Reduced coefficient form of the inverse, from the symbolic decomposition."""
        return self.closed_inverse(a).as_poly()

    # -- vectorised sweeps ------------------------------------------------------

    def a_indices(self) -> np.ndarray:
        return np.arange(1, self.field.order, dtype=np.int64)

    def criterion_mask(self, a_indices=None) -> np.ndarray:
        """Boolean criterion verdict for an array of nonzero a indices."""
        T = self.field.tables
        a = self.a_indices() if a_indices is None else np.asarray(a_indices, dtype=np.int64)
        return T.pow(a, self._crit_exp) != 1

    def images_for(self, a_indices=None) -> np.ndarray:
        """Images of every field point under f, one row per a."""
        T = self.field.tables
        a = self.a_indices() if a_indices is None else np.asarray(a_indices, dtype=np.int64)
        x = np.arange(self.field.order, dtype=np.int64)
        xs = T.pow(x, self.s)
        diff = T.sub(xs[None, :], a[:, None])
        return T.mul(x[None, :], T.pow(diff, self.t))

    def inverse_values(self, a) -> np.ndarray:
        """Pointwise inverse at every field point, as an index array."""
        a = self._unit(a)
        if not self.is_permutation(a):
            raise NotPermutationError(f"a={a.index} is an s-th power; f is not a permutation")
        T = self.field.tables
        y = np.arange(self.field.order, dtype=np.int64)
        n_a = self.subfield_norm(a)
        ainv = a.inverse()
        stack = np.stack(
            [T.mul(np.int64((ainv ** E).index), T.pow(y, G)) for E, G in zip(self._E, self._G)]
        )
        h_vals = T.sum_terms(stack)
        den = T.sub(T.pow(y, self.s * self._norm_exp), np.int64(n_a.index))
        factor = T.mul(T.mul(np.int64(n_a.index), T.inv_of(den)), h_vals)
        return T.mul(y, T.pow(factor, self.t))


class ClosedInverse:
    """The (scale, g, h, t) decomposition of the inverse of x(x^s - a)^t.

    Term lists keep the literal exponents (which may exceed Q - 1); the g and
    h properties densify them verbatim, while as_poly folds everything mod
    x^Q - x.
    """

    __slots__ = ("field", "a", "t", "scale", "g_terms", "h_terms")

    def __init__(self, field, a, t, scale, g_terms, h_terms):
        self.field = field
        self.a = a
        self.t = t
        self.scale = scale
        self.g_terms = g_terms
        self.h_terms = h_terms

    @property
    def g(self) -> Poly:
        arr = np.zeros(max(e for e, _ in self.g_terms) + 1, dtype=np.int64)
        for e, c in self.g_terms:
            arr[e] = c.index
        return Poly(self.field, arr)

    @property
    def h(self) -> Poly:
        arr = np.zeros(max(e for e, _ in self.h_terms) + 1, dtype=np.int64)
        for e, c in self.h_terms:
            arr[e] = c.index
        return Poly(self.field, arr)

    def _eval_terms(self, terms, y: FieldElement) -> FieldElement:
        acc = self.field.zero
        for e, c in terms:
            acc = acc + c * (y ** e)
        return acc

    def evaluate(self, y) -> FieldElement:
        y = self.field.element(y)
        inner = self.scale * self._eval_terms(self.g_terms, y) * self._eval_terms(self.h_terms, y)
        return y * inner ** self.t

    def as_poly(self) -> Poly:
        """Reduced coefficient vector of y (scale * g(y) * h(y))^t."""
        gr = poly_from_terms(self.field, self.g_terms)
        hr = poly_from_terms(self.field, self.h_terms)
        powed = gr.mul_mod(hr).pow_mod(self.t)
        return powed.scale(self.scale ** self.t).shift(1).reduce()

    def __repr__(self):
        return (
            f"ClosedInverse(a={self.a.index}, t={self.t}, scale={self.scale.index}, "
            f"g={len(self.g_terms)} terms, h={len(self.h_terms)} terms)"
        )


# ---------------------------------------------------------------------------
# Linearized binomial L(x) = x^{q^m} - ax


def _linearized_checks(field: Field, m: int, a, allow_m_equal_n: bool):
    hi = field.n if allow_m_equal_n else field.n - 1
    if not 1 <= m <= hi:
        raise ValueError(f"m must lie in [1, {hi}] (allow_m_equal_n={allow_m_equal_n})")
    a = field.element(a)
    if not a:
        raise ValueError("a must be nonzero")
    return a


def linearized_poly(field: Field, m: int, a, allow_m_equal_n: bool = False) -> Poly:
    """Coefficients of L(x) = x^{q^m} - ax (folded mod x^Q - x if m = n)."""
    a = _linearized_checks(field, m, a, allow_m_equal_n)
    return poly_from_terms(field, [(1, -a), (field.q ** m, field.one)])


def linearized_is_permutation(field: Field, m: int, a, allow_m_equal_n: bool = False) -> bool:
    """L permutes the field iff the norm of a onto the gcd subfield is not 1."""
    a = _linearized_checks(field, m, a, allow_m_equal_n)
    d = math.gcd(m, field.n)
    return field.norm(a, d) != field.one


def linearized_inverse(field: Field, m: int, a, allow_m_equal_n: bool = False) -> Poly:
    """Inverse of L(x) = x^{q^m} - ax as a reduced q-polynomial.

    L^{-1}(x) = N/(1-N) * sum_i a^{-(q^{im}-1)/(q^m-1)} x^{q^{(i-1)m}} with
    N the norm of a onto the subfield of order q^d, d = gcd(m, n).
    """
    a = _linearized_checks(field, m, a, allow_m_equal_n)
    d = math.gcd(m, field.n)
    n_a = field.norm(a, d)
    one = field.one
    if n_a == one:
        raise NotPermutationError(f"norm of a={a.index} is 1; L is not a permutation")
    factor = n_a / (one - n_a)
    q = field.q
    ainv = a.inverse()
    terms = []
    for i in range(1, field.n // d + 1):
        E = sum(q ** (m * l) for l in range(i))
        terms.append((q ** ((i - 1) * m), factor * ainv ** E))
    return poly_from_terms(field, terms)


def linearized_images(field: Field, m: int, a_indices) -> np.ndarray:
    """Images of every field point under L, one row per a."""
    T = field.tables
    a = np.asarray(a_indices, dtype=np.int64)
    x = np.arange(field.order, dtype=np.int64)
    xq = T.pow(x, field.q ** m)
    return T.sub(xq[None, :], T.mul(a[:, None], x[None, :]))


def norm_mask(field: Field, d: int, a_indices) -> np.ndarray:
    """Boolean mask: norm onto the order-q^d subfield differs from 1."""
    exp = sum(field.q ** (d * l) for l in range(field.n // d))
    return field.tables.pow(np.asarray(a_indices, dtype=np.int64), exp) != 1


# ---------------------------------------------------------------------------
# gcd identity for odd bases


def gcd_halfpower(a: int, m: int, n: int) -> int:
    """gcd((a^m - 1)/2, a^n - 1) in closed form for odd a >= 3.

    Equals a^d - 1 when m/d is even and (a^d - 1)/2 when m/d is odd,
    where d = gcd(m, n).
    """
    if a < 3 or a % 2 == 0:
        raise ValueError("base must be odd and >= 3")
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    d = math.gcd(m, n)
    v = a ** d - 1
    return v if (m // d) % 2 == 0 else v // 2
