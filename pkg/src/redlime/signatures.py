"""Per-position classification of subspaces and its calculus.

Every position of a subspace gets one of four marks: ``b`` (both red and
lime), ``r`` (red only), ``l`` (lime only), ``n`` (neither). A mark string
is *feasible* — realized by some subspace — exactly when its l's and r's
pair up like matched parentheses: equal counts, and strictly more r's than
l's to the right of every l. Feasible signatures are realized by
coefficient-pattern subspaces in which each l/r pair shares one free
coefficient, each b carries its own, and n-positions are pinned to zero.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ParseError, UsageError
from .fields import FieldSpec
from .subspace import (Subspace, Vector, lime_basis, span_red_basis,
                       _last_nonzero)


class Mark(enum.Enum):
    """Status of one position: red side = terminating, lime side = originating."""

    RED_ONLY = "r"
    LIME_ONLY = "l"
    BOTH = "b"
    NEITHER = "n"


@dataclass(frozen=True)
class Signature:
    """An ordered mark per position; arbitrary strings are representable,
    feasibility is a separate predicate."""

    marks: tuple

    def __post_init__(self):
        if not self.marks or any(not isinstance(m, Mark) for m in self.marks):
            raise UsageError("a signature is a nonempty tuple of marks")

    @classmethod
    def from_string(cls, text: str) -> "Signature":
        try:
            marks = tuple(Mark(ch) for ch in text)
        except ValueError:
            raise ParseError(f"signature may only contain r/l/b/n: {text!r}") from None
        if not marks:
            raise ParseError("empty signature string")
        return cls(marks)

    def count(self, mark: Mark) -> int:
        return sum(1 for m in self.marks if m is mark)

    def __len__(self):
        return len(self.marks)

    def __str__(self):
        return "".join(m.value for m in self.marks)

    def __repr__(self):
        return f"Signature({str(self)!r})"


def signature_from_indices(red, lime, n: int) -> Signature:
    """Assemble the mark string from a red index set and a lime index set."""
    red, lime = set(red), set(lime)
    marks = []
    for p in range(1, n + 1):
        if p in red:
            marks.append(Mark.BOTH if p in lime else Mark.RED_ONLY)
        else:
            marks.append(Mark.LIME_ONLY if p in lime else Mark.NEITHER)
    return Signature(tuple(marks))


def signature(w: Subspace) -> Signature:
    """The subspace's mark string; b- and r-counts sum to the dimension, as
    do b- and l-counts."""
    return signature_from_indices(w.red_indices, lime_basis(w).lime_indices, w.ambient)


def sub_terminal_index(v: Vector) -> int:
    """Position of the second-to-last nonzero entry, or 0 when the vector
    has fewer than two nonzero entries."""
    t = _last_nonzero(v.entries)
    if t is None:
        return 0
    s = _last_nonzero(v.entries, below=t)
    return 0 if s is None else s + 1


def truncate_right(w: Subspace) -> Subspace:
    """Drop the last coordinate of every member, yielding a subspace of
    F^(n-1). At most one position changes status, and only by gaining red."""
    if w.ambient <= 1:
        raise UsageError("cannot truncate an ambient of 1")
    shortened = [Vector(w.field, v.entries[:-1]) for v in w.red_basis]
    return span_red_basis(shortened, w.ambient - 1, w.field)


def is_feasible(sig: Signature) -> bool:
    """True iff l's and r's balance like matched parentheses: equal counts
    overall, and strictly more r's than l's to the right of every l."""
    rho = lam = 0
    for mark in reversed(sig.marks):
        if mark is Mark.RED_ONLY:
            rho += 1
        elif mark is Mark.LIME_ONLY:
            if rho <= lam:
                return False
            lam += 1
    return rho == lam


def subspace_from_pattern(pattern: Sequence, field: FieldSpec) -> Subspace:
    """Span of one indicator generator per distinct pattern label.

    ``pattern`` assigns each position a label; equal labels share one free
    coefficient and a label of 0/None pins the position to zero. The
    generators are the 0/1 indicator vectors of the label supports.
    """
    pattern = list(pattern)
    if not pattern:
        raise UsageError("empty pattern")
    n = len(pattern)
    order = []
    support: dict = {}
    for pos, label in enumerate(pattern):
        if label is None or label == 0:
            continue
        if label not in support:
            support[label] = []
            order.append(label)
        support[label].append(pos)
    zero, one = field.zero, field.one
    generators = []
    for label in order:
        row = [zero] * n
        for p in support[label]:
            row[p] = one
        generators.append(Vector(field, row))
    return span_red_basis(generators, n, field)


def synthesize(sig: Signature, field: FieldSpec) -> Subspace:
    """A witness subspace with the requested signature.

    l- and r-positions are paired nearest-first with a stack (l opens, r
    closes) and each pair shares a fresh coefficient; every b-position gets
    its own. Pair supports are disjoint, so the span's terminating indices
    are exactly the b's and r's and its originating indices the b's and l's.
    """
    if not is_feasible(sig):
        raise DomainError(f"infeasible signature {sig}")
    labels = itertools.count(1)
    pattern: list = [None] * len(sig.marks)
    stack: list = []
    for pos, mark in enumerate(sig.marks):
        if mark is Mark.BOTH:
            pattern[pos] = next(labels)
        elif mark is Mark.LIME_ONLY:
            stack.append(pos)
        elif mark is Mark.RED_ONLY:
            opener = stack.pop()
            label = next(labels)
            pattern[opener] = label
            pattern[pos] = label
    return subspace_from_pattern(pattern, field)


@dataclass(frozen=True)
class Permutation:
    """A bijection on positions 1..n; images[i-1] is where position i goes."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise UsageError("images must be a bijection on 1..n")

    def image_of(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise UsageError(f"position {i} outside 1..{len(self.images)}")
        return self.images[i - 1]

    def apply(self, v: Vector) -> Vector:
        """Relocate entries: the image vector carries v's entry i at image_of(i)."""
        if len(v.entries) != len(self.images):
            raise UsageError("vector length does not match the permutation size")
        out = [v.field.zero] * len(self.images)
        for i, e in enumerate(v.entries):
            out[self.images[i] - 1] = e
        return Vector(v.field, out)

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self.images, start=1))


def permute_presenting_positions(w: Subspace, positions) -> tuple:
    """Relocate k presenting positions to the tail of the coordinate list.

    Requires the restriction of w onto the given positions to be all of F^k.
    Returns the order-preserving permutation that sends those positions to
    the last k slots together with the image subspace, for which each of the
    last k positions is red; when k equals dim w they are all of its red
    positions.
    """
    positions = sorted(set(positions))
    n = w.ambient
    for p in positions:
        if not isinstance(p, int) or not 1 <= p <= n:
            raise UsageError(f"position {p} outside 1..{n}")
    k = len(positions)
    if k == 0:
        return Permutation(tuple(range(1, n + 1))), w
    restricted = [Vector(w.field, tuple(v.entries[p - 1] for p in positions))
                  for v in w.red_basis]
    if span_red_basis(restricted, k, w.field).dimension != k:
        raise DomainError("the subspace does not present as the full space there")
    chosen = set(positions)
    images = [0] * n
    slot = 0
    for q in range(1, n + 1):
        if q not in chosen:
            slot += 1
            images[q - 1] = slot
    for offset, p in enumerate(positions, start=1):
        images[p - 1] = n - k + offset
    perm = Permutation(tuple(images))
    moved = span_red_basis([perm.apply(v) for v in w.red_basis], n, w.field)
    return perm, moved
