"""Triple Massey products with indeterminacy and a canonical verdict.

<[a1],[a2],[a3]> is defined when a1*a2 and a2*a3 are exact; with primitives
d(a12) = a1*a2 and d(a23) = a2*a3 the representative is

    a1*a23 + (-1)^{p1+1} a12*a3

living in degree p1+p2+p3-1.  The verdict compares the representative's
class against the indeterminacy subspace [a1]*H^{p2+p3-1} + [a3]*H^{p1+p2-1},
so it does not depend on the primitive choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import CohomologySummary, compute
from .errors import NotACocycle, NotDefined
from .exactla import Subspace


@dataclass
class MasseyResult:
    defined: bool
    degree: int
    representative: object = None      # element of the underlying DGA
    primitives: tuple = None           # (a12, a23)
    indeterminacy: Subspace = None     # inside H^degree, rep coordinates
    vanishes: bool = None
    representative_class: tuple = None  # rep coordinates of the class
    reason: str = None                 # set when not defined


def triple(obj, a1, a2, a3, summary: CohomologySummary = None,
           primitives=None, max_degree=None) -> MasseyResult:
    """Triple Massey product of three homogeneous cocycles.

    `obj` may be any validated DGA or TabularDGA (any model works, not just a
    minimal one).  A precomputed cohomology summary covering the product
    degree may be passed in; `primitives` optionally overrides the primitive
    choices (their correctness is checked).
    """
    degrees = []
    for a in (a1, a2, a3):
        if a.is_zero() or not a.is_homogeneous():
            raise NotACocycle("Massey arguments must be homogeneous and nonzero")
        d = a.degree()
        if d <= 0:
            raise NotACocycle("Massey arguments must have positive degree")
        degrees.append(d)
    p1, p2, p3 = degrees
    n = p1 + p2 + p3 - 1
    if summary is None:
        bound = max_degree if max_degree is not None else n
        if bound < n:
            raise ValueError("max_degree below the product degree")
        summary = compute(obj, bound, with_cup=False)
    for a in (a1, a2, a3):
        if not summary.is_cocycle(a):
            raise NotACocycle("Massey arguments must be closed")

    prod12 = a1 * a2
    prod23 = a2 * a3
    if primitives is not None:
        a12, a23 = primitives
        if summary.ctx.d(a12) != prod12 or summary.ctx.d(a23) != prod23:
            raise ValueError("supplied primitives do not bound the products")
    else:
        a12 = summary.is_exact(prod12)
        if a12 is None:
            raise NotDefined("[a1][a2] is a nonzero class")
        a23 = summary.is_exact(prod23)
        if a23 is None:
            raise NotDefined("[a2][a3] is a nonzero class")

    sign = Fraction(1 if (p1 + 1) % 2 == 0 else -1)
    rep = a1 * a23 + (a12 * a3) * sign
    _, rep_class = summary.class_coords(rep, degree=n)

    indet_vecs = []
    for h in summary.representatives[p2 + p3 - 1]:
        _, v = summary.class_coords(a1 * h, degree=n)
        if any(v):
            indet_vecs.append(v)
    for h in summary.representatives[p1 + p2 - 1]:
        _, v = summary.class_coords(a3 * h, degree=n)
        if any(v):
            indet_vecs.append(v)
    indet = Subspace(summary.betti[n], indet_vecs)

    return MasseyResult(
        defined=True,
        degree=n,
        representative=rep,
        primitives=(a12, a23),
        indeterminacy=indet,
        vanishes=indet.member(rep_class),
        representative_class=rep_class,
    )


def try_triple(obj, a1, a2, a3, **kw):
    """Like triple(), but returns an undefined MasseyResult instead of raising."""
    try:
        return triple(obj, a1, a2, a3, **kw)
    except NotDefined as exc:
        n = a1.degree() + a2.degree() + a3.degree() - 1
        return MasseyResult(defined=False, degree=n, reason=str(exc))
