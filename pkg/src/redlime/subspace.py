"""Vectors and subspaces of F^n in canonical red/lime form.

A nonzero vector *terminates* at its last nonzero position and *originates*
at its first. A position is *red* (right-standard) for a subspace W when
some member of W terminates there, and *lime* (left-standard) when some
member originates there. For each red index i, W holds exactly one member
that terminates with a 1 at i and is zero at every other red index; these
red-basic elements, in index order, form the red basis. That basis is the
canonical form a Subspace stores: two Subspace values describe the same set
of vectors exactly when they compare equal. LimeBasis is the originating
mirror, derivable on demand.

Positions are 1-based at every public interface.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import DomainError, UsageError
from .fields import FieldSpec, Scalar


class Vector:
    """An immutable tuple of same-field scalars; positions are 1-based."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: Iterable[Scalar]):
        entries = tuple(entries)
        if not entries:
            raise UsageError("a vector needs at least one entry")
        for e in entries:
            if not isinstance(e, Scalar) or e.field != field:
                raise UsageError("vector entries must be scalars of the vector's field")
        self.field = field
        self.entries = entries

    @classmethod
    def from_values(cls, field: FieldSpec, values) -> "Vector":
        """Build a vector by coercing ints/Fractions through the field."""
        return cls(field, tuple(field.scalar(v) for v in values))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Vector":
        return cls(field, (field.zero,) * n)

    @classmethod
    def standard_basis(cls, field: FieldSpec, n: int, k: int) -> "Vector":
        """E_k in F^n: a 1 in position k, zeros elsewhere."""
        if not 1 <= k <= n:
            raise UsageError(f"position {k} outside 1..{n}")
        z, o = field.zero, field.one
        return cls(field, tuple(o if p == k else z for p in range(1, n + 1)))

    def entry(self, i: int) -> Scalar:
        """The entry in position i (1-based)."""
        if not 1 <= i <= len(self.entries):
            raise UsageError(f"position {i} outside 1..{len(self.entries)}")
        return self.entries[i - 1]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check_compatible(self, other: "Vector"):
        if not isinstance(other, Vector):
            raise UsageError(f"expected a Vector, got {type(other).__name__}")
        if other.field != self.field:
            raise UsageError(f"mixed fields: {self.field} vs {other.field}")
        if len(other.entries) != len(self.entries):
            raise UsageError("mismatched vector lengths")

    def __add__(self, other):
        self._check_compatible(other)
        return Vector(self.field, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_compatible(other)
        return Vector(self.field, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __rmul__(self, c):
        if not isinstance(c, Scalar):
            return NotImplemented
        if c.field != self.field:
            raise UsageError(f"mixed fields: {c.field} vs {self.field}")
        return Vector(self.field, tuple(c * e for e in self.entries))

    def __neg__(self):
        return Vector(self.field, tuple(-e for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def __repr__(self):
        return f"Vector({self.field}, {self.entries!r})"


def terminating_index(v: Vector) -> Optional[int]:
    """Position of the last nonzero entry; None for the zero vector."""
    p = _last_nonzero(v.entries)
    return None if p is None else p + 1


def originating_index(v: Vector) -> Optional[int]:
    """Position of the first nonzero entry; None for the zero vector."""
    p = _first_nonzero(v.entries)
    return None if p is None else p + 1


# ---------------------------------------------------------------------------
# internal mutable-row kernels (0-based); public surfaces convert to 1-based

def _last_nonzero(row, below: Optional[int] = None) -> Optional[int]:
    start = (len(row) if below is None else below) - 1
    for p in range(start, -1, -1):
        if row[p]:
            return p
    return None


def _first_nonzero(row, start: int = 0) -> Optional[int]:
    for p in range(start, len(row)):
        if row[p]:
            return p
    return None


def _insert_red(basis: dict, row: list) -> Optional[int]:
    """Absorb one row into a red-basis dict keyed by 0-based terminal position.

    Returns the new key when the row enlarged the span, else None. The dict
    stays canonical throughout: each stored row terminates with a 1 at its
    key and is zero at every other key.
    """
    t = _last_nonzero(row)
    while t is not None and t in basis:
        piv = basis[t]
        c = row[t]
        for p in range(t + 1):  # piv vanishes past t
            if piv[p]:
                row[p] = row[p] - c * piv[p]
        t = _last_nonzero(row, below=t)
    if t is None:
        return None
    c = row[t]
    if not c.is_one():
        inv = c.inverse()
        for p in range(t + 1):
            if row[p]:
                row[p] = row[p] * inv
    for i in basis:  # clear surviving red entries below t
        if i < t and row[i]:
            piv = basis[i]
            c = row[i]
            for p in range(i + 1):
                if piv[p]:
                    row[p] = row[p] - c * piv[p]
    for i, piv in basis.items():  # clear the new red position from older rows
        if i > t and piv[t]:
            c = piv[t]
            for p in range(t + 1):
                if row[p]:
                    piv[p] = piv[p] - c * row[p]
    basis[t] = row
    return t


def _insert_lime(basis: dict, row: list) -> Optional[int]:
    """Mirror of _insert_red on the originating side (keys: 0-based origins)."""
    n = len(row)
    o = _first_nonzero(row)
    while o is not None and o in basis:
        piv = basis[o]
        c = row[o]
        for p in range(o, n):  # piv vanishes before o
            if piv[p]:
                row[p] = row[p] - c * piv[p]
        o = _first_nonzero(row, start=o)
    if o is None:
        return None
    c = row[o]
    if not c.is_one():
        inv = c.inverse()
        for p in range(o, n):
            if row[p]:
                row[p] = row[p] * inv
    for i in basis:  # clear surviving lime entries past o
        if i > o and row[i]:
            piv = basis[i]
            c = row[i]
            for p in range(i, n):
                if piv[p]:
                    row[p] = row[p] - c * piv[p]
    for i, piv in basis.items():  # clear the new lime position from older rows
        if i < o and piv[o]:
            c = piv[o]
            for p in range(o, n):
                if row[p]:
                    piv[p] = piv[p] - c * row[p]
    basis[o] = row
    return o


def _validate_canonical(field, ambient, indices, vectors, side: str):
    if len(indices) != len(vectors):
        raise UsageError("index and vector counts differ")
    prev = 0
    for i in indices:
        if not isinstance(i, int) or not prev < i <= ambient:
            raise UsageError(f"{side} indices must be strictly increasing within 1..{ambient}")
        prev = i
    index_set = set(indices)
    for i, v in zip(indices, vectors):
        if not isinstance(v, Vector) or v.field != field or len(v.entries) != ambient:
            raise UsageError(f"{side}-basic element has the wrong field or length")
        if not v.entries[i - 1].is_one():
            raise UsageError(f"{side}-basic element for index {i} must carry a 1 there")
        outside = range(i, ambient) if side == "red" else range(0, i - 1)
        for p in outside:
            if v.entries[p]:
                raise UsageError(
                    f"{side}-basic element for index {i} must vanish at position {p + 1}")
        for l in index_set:
            if l != i and v.entries[l - 1]:
                raise UsageError(
                    f"{side}-basic element for index {i} must vanish at {side} index {l}")


class Subspace:
    """A subspace held as its red basis; structural equality is set equality."""

    __slots__ = ("field", "ambient", "red_indices", "red_basis")

    def __init__(self, field: FieldSpec, ambient: int,
                 red_indices: Sequence[int], red_basis: Sequence[Vector]):
        if ambient < 1:
            raise UsageError("ambient dimension must be at least 1")
        red_indices = tuple(red_indices)
        red_basis = tuple(red_basis)
        _validate_canonical(field, ambient, red_indices, red_basis, "red")
        self.field = field
        self.ambient = ambient
        self.red_indices = red_indices
        self.red_basis = red_basis

    @classmethod
    def zero_subspace(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full_space(cls, field: FieldSpec, ambient: int) -> "Subspace":
        basis = tuple(Vector.standard_basis(field, ambient, k) for k in range(1, ambient + 1))
        return cls(field, ambient, tuple(range(1, ambient + 1)), basis)

    @property
    def dimension(self) -> int:
        return len(self.red_indices)

    def is_zero(self) -> bool:
        return not self.red_indices

    def __contains__(self, x: Vector) -> bool:
        return contains_vector(self, x)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_leq(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.red_indices == other.red_indices
                and self.red_basis == other.red_basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.red_indices, self.red_basis))

    def __repr__(self):
        return f"Subspace({self.field}, n={self.ambient}, red={list(self.red_indices)})"


class LimeBasis:
    """Canonical originating-side basis: each vector starts with a 1 at its
    lime index and is zero at every other lime index."""

    __slots__ = ("field", "ambient", "lime_indices", "vectors")

    def __init__(self, field: FieldSpec, ambient: int,
                 lime_indices: Sequence[int], vectors: Sequence[Vector]):
        if ambient < 1:
            raise UsageError("ambient dimension must be at least 1")
        lime_indices = tuple(lime_indices)
        vectors = tuple(vectors)
        _validate_canonical(field, ambient, lime_indices, vectors, "lime")
        self.field = field
        self.ambient = ambient
        self.lime_indices = lime_indices
        self.vectors = vectors

    @classmethod
    def empty(cls, field: FieldSpec, ambient: int) -> "LimeBasis":
        return cls(field, ambient, (), ())

    @property
    def dimension(self) -> int:
        return len(self.lime_indices)

    def __eq__(self, other):
        if not isinstance(other, LimeBasis):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.lime_indices == other.lime_indices
                and self.vectors == other.vectors)

    def __hash__(self):
        return hash((self.field, self.ambient, self.lime_indices, self.vectors))

    def __repr__(self):
        return f"LimeBasis({self.field}, n={self.ambient}, lime={list(self.lime_indices)})"


def _subspace_from_dict(field, ambient, basis: dict) -> Subspace:
    idx = sorted(basis)
    return Subspace(field, ambient, tuple(i + 1 for i in idx),
                    tuple(Vector(field, basis[i]) for i in idx))


def _lime_from_dict(field, ambient, basis: dict) -> LimeBasis:
    idx = sorted(basis)
    return LimeBasis(field, ambient, tuple(i + 1 for i in idx),
                     tuple(Vector(field, basis[i]) for i in idx))


def _common_field_ambient(generators, ambient, field):
    if generators:
        g0 = generators[0]
        if field is not None and field != g0.field:
            raise UsageError(f"generators are over {g0.field}, not {field}")
        if ambient is not None and ambient != len(g0.entries):
            raise UsageError(f"generators have length {len(g0.entries)}, not {ambient}")
        field, ambient = g0.field, len(g0.entries)
        for g in generators[1:]:
            if g.field != field:
                raise UsageError("mixed fields among generators")
            if len(g.entries) != ambient:
                raise UsageError("mismatched generator lengths")
    elif field is None or ambient is None:
        raise UsageError("an empty generator list needs an explicit field and ambient")
    return field, ambient


def span_red_basis(generators: Sequence[Vector], ambient: Optional[int] = None,
                   field: Optional[FieldSpec] = None) -> Subspace:
    """Canonical red basis of span(generators), by incremental insertion.

    Each generator is reduced against the basis built so far until its
    terminal position is new, scaled to terminate with 1, cleaned at the
    remaining red positions, and inserted; the new red position is then
    cleared from the other basis vectors. The span is preserved at every
    step, and zero generators are skipped.
    """
    generators = list(generators)
    field, ambient = _common_field_ambient(generators, ambient, field)
    basis: dict = {}
    for g in generators:
        _insert_red(basis, list(g.entries))
    return _subspace_from_dict(field, ambient, basis)


def lime_basis(w: Subspace) -> LimeBasis:
    """Canonical lime basis of the same span, derived from the red basis.

    The span always has as many lime indices as red ones.
    """
    basis: dict = {}
    for v in w.red_basis:
        _insert_lime(basis, list(v.entries))
    return _lime_from_dict(w.field, w.ambient, basis)


def append_lime(basis: LimeBasis, y: Vector) -> LimeBasis:
    """Absorb one vector into a canonical lime basis.

    If y lies in the current span the basis is returned unchanged; otherwise
    y is pre-reduced until its leading position is not yet lime, scaled to
    originate with 1, cleaned at the later lime positions, and inserted, and
    the new lime position is cleared from the earlier basis vectors. The
    span grows by exactly the one new vector.
    """
    if y.field != basis.field:
        raise UsageError(f"mixed fields: {basis.field} vs {y.field}")
    if len(y.entries) != basis.ambient:
        raise UsageError("vector length does not match the basis ambient")
    work = {i - 1: list(v.entries) for i, v in zip(basis.lime_indices, basis.vectors)}
    if _insert_lime(work, list(y.entries)) is None:
        return basis
    return _lime_from_dict(basis.field, basis.ambient, work)


def _check_member_args(w: Subspace, x: Vector):
    if x.field != w.field:
        raise UsageError(f"mixed fields: {w.field} vs {x.field}")
    if len(x.entries) != w.ambient:
        raise UsageError("vector length does not match the subspace ambient")


def contains_vector(w: Subspace, x: Vector) -> bool:
    """Membership test: x belongs to w exactly when x equals the combination
    of red-basic elements whose coefficients are x's entries at the red
    positions."""
    _check_member_args(w, x)
    acc = [w.field.zero] * w.ambient
    for i, bv in zip(w.red_indices, w.red_basis):
        c = x.entries[i - 1]
        if c:
            for p, e in enumerate(bv.entries):
                if e:
                    acc[p] = acc[p] + c * e
    return tuple(acc) == x.entries


def coordinates(w: Subspace, x: Vector) -> tuple:
    """Coefficients of a member in the red basis: its entries at the red
    positions, in index order. DomainError if x is not a member."""
    if not contains_vector(w, x):
        raise DomainError("vector is not a member of the subspace")
    return tuple(x.entries[i - 1] for i in w.red_indices)


def element_from_red_entries(w: Subspace, coefficients) -> Vector:
    """The unique member whose red-position entries are the given scalars."""
    coeffs = [w.field.scalar(c) for c in coefficients]
    if len(coeffs) != w.dimension:
        raise UsageError(f"expected {w.dimension} coefficients, got {len(coeffs)}")
    acc = [w.field.zero] * w.ambient
    for c, bv in zip(coeffs, w.red_basis):
        if c:
            for p, e in enumerate(bv.entries):
                if e:
                    acc[p] = acc[p] + c * e
    return Vector(w.field, acc)


def dimension(w: Subspace) -> int:
    """Number of red indices; equals the number of lime indices and the
    common length of all coordinate systems."""
    return w.dimension


def _check_comparable(w: Subspace, v: Subspace):
    if not isinstance(v, Subspace):
        raise UsageError(f"expected a Subspace, got {type(v).__name__}")
    if w.field != v.field:
        raise UsageError(f"mixed fields: {w.field} vs {v.field}")
    if w.ambient != v.ambient:
        raise UsageError("mismatched ambient dimensions")


def subspace_leq(w: Subspace, v: Subspace) -> bool:
    """True iff w is contained in v."""
    _check_comparable(w, v)
    return all(contains_vector(v, b) for b in w.red_basis)


def subspace_eq(w: Subspace, v: Subspace) -> bool:
    """True iff w and v are the same set of vectors (identical red bases)."""
    _check_comparable(w, v)
    return w == v


def is_coordinate_system(vectors: Sequence[Vector], w: Subspace) -> bool:
    """True iff the list spans w, starts with a nonzero vector, and no entry
    lies in the span of its predecessors; equivalently, every member of w
    has exactly one expression as a combination of the list."""
    vectors = list(vectors)
    for v in vectors:
        _check_member_args(w, v)
    basis: dict = {}
    for v in vectors:
        if _insert_red(basis, list(v.entries)) is None:
            return False
    return _subspace_from_dict(w.field, w.ambient, basis) == w
