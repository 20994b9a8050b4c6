"""Brute-force ground truth: evaluation tables, bijectivity, table inversion.

Everything here is exhaustive and capped: entry points refuse fields larger
than the oracle cap (default 2^16, overridable via PPINV_ORACLE_CAP or a
per-call argument) so a misconfigured sweep fails fast.
"""

from __future__ import annotations

import os

import numpy as np

from .gf import Field, FieldElement
from .poly import Poly

DEFAULT_CAP = 1 << 16
CAP_ENV_VAR = "PPINV_ORACLE_CAP"


class CapExceededError(ValueError):
    """An exhaustive check was requested beyond the configured oracle cap."""


def oracle_cap(cap: int | None = None) -> int:
    """Effective cap: explicit argument, else environment, else default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_CAP


def _check_cap(field: Field, cap: int | None):
    limit = oracle_cap(cap)
    if field.order > limit:
        raise CapExceededError(f"field order {field.order} exceeds oracle cap {limit}")


class PermTable:
    """Full evaluation table of a map on a field, in enumeration order."""

    __slots__ = ("field", "images")

    def __init__(self, field: Field, images):
        images = np.asarray(images, dtype=np.int64)
        if images.shape != (field.order,):
            raise ValueError(f"table must have exactly {field.order} entries")
        if len(images) and (images.min() < 0 or images.max() >= field.order):
            raise ValueError("image index out of range")
        self.field = field
        self.images = images

    def __eq__(self, other):
        return (
            isinstance(other, PermTable)
            and self.field == other.field
            and np.array_equal(self.images, other.images)
        )

    def __len__(self):
        return len(self.images)

    def image(self, x) -> FieldElement:
        return FieldElement(self.field, int(self.images[self.field.element(x).index]))

    def is_bijection(self) -> bool:
        """Occupancy count in one pass: every index hit exactly once."""
        counts = np.bincount(self.images, minlength=self.field.order)
        return bool((counts == 1).all())

    def inverted(self) -> "PermTable":
        if not self.is_bijection():
            raise ValueError("cannot invert a non-bijective table")
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(len(self.images), dtype=np.int64)
        return PermTable(self.field, inv)

    def pairs(self):
        return [(int(k), int(v)) for k, v in enumerate(self.images)]

    def to_csv(self) -> str:
        return "\n".join(f"{k},{v}" for k, v in self.pairs()) + "\n"

    @classmethod
    def from_csv(cls, field: Field, text: str) -> "PermTable":
        images = np.full(field.order, -1, dtype=np.int64)
        for line in text.strip().splitlines():
            k, v = (int(s) for s in line.split(","))
            images[k] = v
        if (images < 0).any():
            raise ValueError("CSV table does not cover the whole field")
        return cls(field, images)


def tabulate(field: Field, fn, cap: int | None = None) -> PermTable:
    """Evaluate fn at every field element, in index order."""
    _check_cap(field, cap)
    images = np.empty(field.order, dtype=np.int64)
    for k, x in enumerate(field.elements()):
        images[k] = fn(x).index
    return PermTable(field, images)


def inverse_poly_by_interpolation(table: PermTable) -> Poly:
    """Reduced polynomial inducing the inverse permutation, by Lagrange interpolation."""
    inv = table.inverted()
    return Poly.interpolate(table.field, enumerate(inv.images))


def check_composition_identity(field: Field, f, g, cap: int | None = None) -> bool:
    """True iff g(f(x)) = x for every x in the field."""
    _check_cap(field, cap)
    return all(g(f(x)) == x for x in field.elements())
