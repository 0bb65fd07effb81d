"""Free graded-commutative algebras over Q.

Monomials are kept in a normal form: factors sorted by (degree, ordinal),
odd generators with exponent exactly 1.  Reordering picks up the Koszul sign
(-1)^{|u||v|} per transposition of odd factors, and the square of an odd
generator is zero.  Elements are finite maps from normal-form monomials to
nonzero rational coefficients, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import MixedAlgebra

# A monomial is a tuple of (generator index, exponent) pairs, sorted by the
# algebra's (degree, ordinal) key.  The empty tuple is the unit.
Monomial = tuple


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    ordinal: int


class Algebra:
    """A free graded-commutative algebra on named generators of degree >= 1."""

    def __init__(self, generators):
        gens = []
        seen = set()
        for ordinal, (name, degree) in enumerate(generators):
            if degree < 1:
                raise ValueError(f"generator {name!r} has degree {degree} < 1")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
            gens.append(Generator(name, int(degree), ordinal))
        self.generators = tuple(gens)
        self._by_name = {g.name: g for g in self.generators}
        # normal-form factor order
        self._sorted = sorted(range(len(gens)),
                              key=lambda i: (gens[i].degree, i))
        self._basis_cache = {}

    def __repr__(self):
        inner = ",".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"Algebra({inner})"

    def generator(self, name):
        return self._by_name[name]

    def sort_key(self, index):
        return (self.generators[index].degree, index)

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): Fraction(1)})

    def gen(self, name):
        """The generator as an element."""
        g = self._by_name[name]
        return Element(self, {((g.ordinal, 1),): Fraction(1)})

    def element(self, terms):
        """Element from a {monomial: coefficient} mapping; normalizes zeros."""
        clean = {}
        for mono, coeff in terms.items():
            c = Fraction(coeff)
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + c
        return Element(self, {m: c for m, c in clean.items() if c})

    def monomial_degree(self, mono):
        return sum(self.generators[g].degree * e for g, e in mono)

    def monomial_str(self, mono):
        if not mono:
            return "1"
        parts = []
        for g, e in mono:
            name = self.generators[g].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def mul_monomials(self, m1, m2):
        """Product of two normal-form monomials: (monomial, sign) or None."""
        gens = self.generators
        out = []
        sign = 1
        i = j = 0
        # total degree of the not-yet-consumed part of m1
        rem1 = sum(gens[g].degree * e for g, e in m1)
        n1, n2 = len(m1), len(m2)
        while i < n1 and j < n2:
            g1, e1 = m1[i]
            g2, e2 = m2[j]
            k1 = (gens[g1].degree, g1)
            k2 = (gens[g2].degree, g2)
            if k1 < k2:
                out.append((g1, e1))
                rem1 -= gens[g1].degree * e1
                i += 1
            elif k1 > k2:
                if (gens[g2].degree * e2) % 2 and rem1 % 2:
                    sign = -sign
                out.append((g2, e2))
                j += 1
            else:
                # same generator; odd generators square to zero
                if gens[g1].degree % 2:
                    return None
                out.append((g1, e1 + e2))
                rem1 -= gens[g1].degree * e1
                i += 1
                j += 1
        out.extend(m1[i:])
        out.extend(m2[j:])
        return tuple(out), sign

    def degree_basis(self, k):
        """All normal-form monomials of degree k, deterministically ordered."""
        if k < 0:
            raise ValueError("degree must be >= 0")
        cached = self._basis_cache.get(k)
        if cached is not None:
            return cached
        order = self._sorted
        gens = self.generators
        out = []

        def rec(pos, rem, acc):
            if rem == 0:
                out.append(tuple(acc))
                return
            if pos == len(order):
                return
            gi = order[pos]
            d = gens[gi].degree
            rec(pos + 1, rem, acc)
            top = min(rem // d, 1) if d % 2 else rem // d
            for e in range(1, top + 1):
                acc.append((gi, e))
                rec(pos + 1, rem - e * d, acc)
                acc.pop()

        rec(0, k, [])
        out.sort()
        self._basis_cache[k] = out
        return out


class Element:
    """A Q-linear combination of normal-form monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Common degree of all monomials; None for zero, raises if mixed."""
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self):
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self):
        parts = {}
        for m, c in self.terms.items():
            d = self.algebra.monomial_degree(m)
            parts.setdefault(d, {})[m] = c
        return {d: Element(self.algebra, t) for d, t in sorted(parts.items())}

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise MixedAlgebra("elements belong to different algebras")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Element(self.algebra, terms)

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = Fraction(other)
            if not c:
                return self.algebra.zero()
            return Element(self.algebra, {m: k * c for m, k in self.terms.items()})
        self._check(other)
        alg = self.algebra
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = alg.mul_monomials(m1, m2)
                if hit is None:
                    continue
                mono, sign = hit
                s = terms.get(mono, Fraction(0)) + sign * c1 * c2
                if s:
                    terms[mono] = s
                elif mono in terms:
                    del terms[mono]
        return Element(alg, terms)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        acc = self.algebra.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        return (isinstance(other, Element)
                and self.algebra is other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            ms = self.algebra.monomial_str(m)
            if ms == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append(f"-{ms}")
            else:
                parts.append(f"{c}*{ms}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    __repr__ = __str__
