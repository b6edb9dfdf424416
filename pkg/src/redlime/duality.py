"""Orthogonal complements under the standard symmetric bilinear form.

The lime indices of the complement of W are exactly the non-red indices of
W, and its lime basis can be read directly off W's red basis (and the red
basis of the complement off W's lime basis) with no system solving: each
basis element of the complement is supported on one non-red position plus
the red positions, so it overlaps every red-basic element in at most two
positions.
"""

from __future__ import annotations

from .errors import UsageError
from .fields import Scalar
from .subspace import LimeBasis, Subspace, Vector, lime_basis


def dot(x: Vector, y: Vector) -> Scalar:
    """Standard symmetric bilinear form: the sum of entrywise products."""
    if x.field != y.field:
        raise UsageError(f"mixed fields: {x.field} vs {y.field}")
    if len(x.entries) != len(y.entries):
        raise UsageError("mismatched vector lengths")
    acc = x.field.zero
    for a, b in zip(x.entries, y.entries):
        if a and b:
            acc = acc + a * b
    return acc


def lime_of_complement_from_red(w: Subspace) -> LimeBasis:
    """Read the lime basis of the complement off w's red basis.

    For each non-red position o, the complement's lime-basic element carries
    a 1 at o, the negated o-th entry of each red-basic element at the red
    index where that element terminates (for red indices past o), and zeros
    elsewhere.
    """
    field, n = w.field, w.ambient
    red = set(w.red_indices)
    zero = field.zero
    out_indices = []
    out_vectors = []
    for o in range(1, n + 1):
        if o in red:
            continue
        z = [zero] * n
        z[o - 1] = field.one
        for i, bv in zip(w.red_indices, w.red_basis):
            if i > o:
                a = bv.entries[o - 1]
                if a:
                    z[i - 1] = -a
        out_indices.append(o)
        out_vectors.append(Vector(field, z))
    return LimeBasis(field, n, tuple(out_indices), tuple(out_vectors))


def red_of_complement_from_lime(w: Subspace) -> Subspace:
    """Read the red basis of the complement off w's lime basis (the mirror
    construction, anchored at the non-lime positions)."""
    field, n = w.field, w.ambient
    lb = lime_basis(w)
    lime = set(lb.lime_indices)
    zero = field.zero
    out_indices = []
    out_vectors = []
    for o in range(1, n + 1):
        if o in lime:
            continue
        z = [zero] * n
        z[o - 1] = field.one
        for i, bv in zip(lb.lime_indices, lb.vectors):
            if i < o:
                a = bv.entries[o - 1]
                if a:
                    z[i - 1] = -a
        out_indices.append(o)
        out_vectors.append(Vector(field, z))
    return Subspace(field, n, tuple(out_indices), tuple(out_vectors))


def complement(w: Subspace) -> Subspace:
    """The set of vectors orthogonal to all of w, in canonical red form.

    Computed by read-off, never by solving a linear system. Satisfies
    dim w + dim complement(w) = n and complement(complement(w)) = w.
    """
    return red_of_complement_from_lime(w)
