"""Differentials on free CDGAs, and finite tabular DGAs.

A Differential is given on generators and extended by the graded Leibniz
rule d(a*b) = (da)*b + (-1)^{|a|} a*(db).  Validation checks d о d = 0 on
generators, which suffices by Leibniz.

TabularDGA is the finite-dimensional counterpart used as a morphism target:
a basis with a product table and a (possibly zero) differential, e.g. a
cohomology algebra (H^*, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import (InhomogeneousDifferential, MixedAlgebra, WrongDegree)
from .gca import Algebra, Element


class Differential:
    """Degree +1 derivation, defined by its generator images."""

    def __init__(self, algebra: Algebra, images):
        """images maps generator names to Elements (missing names mean zero)."""
        self.algebra = algebra
        imgs = {}
        for g in algebra.generators:
            e = images.get(g.name)
            if e is None:
                e = algebra.zero()
            if e.algebra is not algebra:
                raise MixedAlgebra(f"image of {g.name} lives in another algebra")
            if not e.is_homogeneous():
                raise InhomogeneousDifferential(
                    f"d({g.name}) mixes degrees: {e}")
            d = e.degree()
            if d is not None and d != g.degree + 1:
                raise WrongDegree(
                    f"d({g.name}) has degree {d}, expected {g.degree + 1}")
            imgs[g.ordinal] = e
        unknown = set(images) - {g.name for g in algebra.generators}
        if unknown:
            raise KeyError(f"images for unknown generators: {sorted(unknown)}")
        self.images = imgs

    def of_generator(self, index):
        return self.images[index]


@dataclass
class ValidationReport:
    d2_failures: list = field(default_factory=list)  # (name, witness Element)
    inhomogeneous: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.d2_failures and not self.inhomogeneous


class DGA:
    """A free CDGA together with a differential."""

    def __init__(self, algebra: Algebra, differential: Differential):
        if differential.algebra is not algebra:
            raise MixedAlgebra("differential defined on another algebra")
        self.algebra = algebra
        self.differential = differential

    @classmethod
    def build(cls, generators, images_exprs):
        """DGA from (name, degree) pairs and a {name: Element} image map."""
        alg = Algebra(generators)
        return cls(alg, Differential(alg, images_exprs))

    def d(self, e: Element) -> Element:
        """Leibniz extension of the generator images."""
        if e.algebra is not self.algebra:
            raise MixedAlgebra("element belongs to another algebra")
        alg = self.algebra
        out = alg.zero()
        for mono, coeff in e.terms.items():
            prefix_deg = 0
            for pos, (gi, exp) in enumerate(mono):
                dg = self.differential.of_generator(gi)
                if not dg.is_zero():
                    prefix = Element(alg, {mono[:pos]: Fraction(1)})
                    rest_mono = ((gi, exp - 1),) if exp > 1 else ()
                    tail = Element(alg, {rest_mono + mono[pos + 1:]: Fraction(1)})
                    sign = -1 if prefix_deg % 2 else 1
                    out = out + prefix * dg * tail * Fraction(sign * exp * coeff)
                prefix_deg += alg.generators[gi].degree * exp
        return out

    def validate(self, max_degree=None) -> ValidationReport:
        """Check d о d = 0 and homogeneity on every generator."""
        report = ValidationReport()
        for g in self.algebra.generators:
            img = self.differential.of_generator(g.ordinal)
            if not img.is_homogeneous():
                report.inhomogeneous.append(g.name)
                continue
            if max_degree is not None and g.degree + 2 > max_degree:
                continue
            dd = self.d(img)
            if not dd.is_zero():
                report.d2_failures.append((g.name, dd))
        return report

    def is_minimal(self):
        """No linear part in any d(generator); degree-1 generators closed."""
        for g in self.algebra.generators:
            img = self.differential.of_generator(g.ordinal)
            if g.degree == 1 and not img.is_zero():
                return False
            for mono in img.terms:
                if len(mono) == 1 and mono[0][1] == 1:
                    return False
        return True

    def zero(self):
        return self.algebra.zero()

    def one(self):
        return self.algebra.one()

    def gen(self, name):
        return self.algebra.gen(name)


def apply_d(dga: DGA, e: Element) -> Element:
    return dga.d(e)


def validate(dga: DGA, max_degree=None) -> ValidationReport:
    return dga.validate(max_degree)


class TabularDGA:
    """A finite-dimensional DGA given by a basis, product table, differential.

    basis: list of (label, degree); exactly one degree-0 label (the unit).
    products: {(label_i, label_j): {label_k: coeff}} for i, j nonunit; pairs
    not listed in either order are zero.  The table is completed by graded
    commutativity, and products with the unit are implied.
    differential: {label: {label: coeff}} (omitted labels are closed).
    """

    def __init__(self, basis, products=None, differential=None):
        self.labels = [str(lab) for lab, _ in basis]
        self.degrees = [int(deg) for _, deg in basis]
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        units = [i for i, d in enumerate(self.degrees) if d == 0]
        if len(units) != 1:
            raise ValueError("degree-0 piece must be spanned by a single unit")
        self.unit = units[0]
        self.max_degree = max(self.degrees)
        self._by_degree = {}
        for i, d in enumerate(self.degrees):
            self._by_degree.setdefault(d, []).append(i)

        self.table = {}
        products = products or {}
        for (la, lb), val in products.items():
            ia, ib = self.index[la], self.index[lb]
            entry = {self.index[lk]: Fraction(c) for lk, c in val.items()
                     if Fraction(c)}
            for k in entry:
                if self.degrees[k] != self.degrees[ia] + self.degrees[ib]:
                    raise WrongDegree(
                        f"product {la}*{lb} hits {self.labels[k]} of wrong degree")
            self.table[(ia, ib)] = entry
            flip = (ib, ia)
            sign = -1 if (self.degrees[ia] % 2 and self.degrees[ib] % 2) else 1
            flipped = {k: sign * c for k, c in entry.items()}
            if flip in self.table and flip != (ia, ib):
                if self.table[flip] != flipped:
                    raise ValueError(
                        f"product table not graded-commutative at {la},{lb}")
            elif flip != (ia, ib):
                self.table[flip] = flipped

        self.diff = {}
        differential = differential or {}
        for lab, val in differential.items():
            i = self.index[lab]
            entry = {self.index[lk]: Fraction(c) for lk, c in val.items()
                     if Fraction(c)}
            for k in entry:
                if self.degrees[k] != self.degrees[i] + 1:
                    raise WrongDegree(f"d({lab}) has a wrong-degree component")
            if entry:
                self.diff[i] = entry

    def degree_indices(self, k):
        return self._by_degree.get(k, [])

    def zero(self):
        return TabElement(self, {})

    def one(self):
        return TabElement(self, {self.unit: Fraction(1)})

    def gen(self, label):
        return TabElement(self, {self.index[label]: Fraction(1)})

    basis_element = gen

    def mul_basis(self, i, j):
        if i == self.unit:
            return {j: Fraction(1)}
        if j == self.unit:
            return {i: Fraction(1)}
        return self.table.get((i, j), {})

    def d(self, e):
        if e.algebra is not self:
            raise MixedAlgebra("element belongs to another tabular algebra")
        out = {}
        for i, c in e.coeffs.items():
            for k, dc in self.diff.get(i, {}).items():
                s = out.get(k, Fraction(0)) + c * dc
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return TabElement(self, out)

    def validate(self):
        """Associativity, graded commutativity, Leibniz, d^2 = 0.

        Products that would land above the top basis degree are taken to be
        zero, which is consistent for algebras truncated at a top class.
        """
        problems = []
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                pij = self.mul_basis(i, j)
                sign = -1 if (self.degrees[i] % 2 and self.degrees[j] % 2) else 1
                pji = {k: sign * c for k, c in self.mul_basis(j, i).items()}
                if pij != pji:
                    problems.append(f"commutativity fails at "
                                    f"{self.labels[i]},{self.labels[j]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if (self.degrees[i] + self.degrees[j] + self.degrees[k]
                            > self.max_degree):
                        continue
                    left = self._mul_dicts(self.mul_basis(i, j), {k: Fraction(1)})
                    right = self._mul_dicts({i: Fraction(1)}, self.mul_basis(j, k))
                    if left != right:
                        problems.append(
                            "associativity fails at "
                            f"{self.labels[i]},{self.labels[j]},{self.labels[k]}")
        for i in range(n):
            ddi = self.d(self.d(self.gen(self.labels[i])))
            if not ddi.is_zero():
                problems.append(f"d^2 nonzero on {self.labels[i]}")
        for i in range(n):
            for j in range(n):
                ei, ej = self.gen(self.labels[i]), self.gen(self.labels[j])
                lhs = self.d(ei * ej)
                sign = -1 if self.degrees[i] % 2 else 1
                rhs = self.d(ei) * ej + (ei * self.d(ej)) * Fraction(sign)
                if lhs != rhs:
                    problems.append(f"Leibniz fails at "
                                    f"{self.labels[i]},{self.labels[j]}")
        return problems

    def _mul_dicts(self, a, b):
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, ck in self.mul_basis(i, j).items():
                    s = out.get(k, Fraction(0)) + ca * cb * ck
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out


class TabElement:
    """A linear combination of tabular basis classes."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        degs = {self.algebra.degrees[i] for i in self.coeffs}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        return len({self.algebra.degrees[i] for i in self.coeffs}) <= 1

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise MixedAlgebra("elements belong to different tabular algebras")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = out.get(i, Fraction(0)) + c
            if s:
                out[i] = s
            elif i in out:
                del out[i]
        return TabElement(self.algebra, out)

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        return self + (-other)

    def __neg__(self):
        return TabElement(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = Fraction(other)
            if not c:
                return self.algebra.zero()
            return TabElement(self.algebra,
                              {i: k * c for i, k in self.coeffs.items()})
        self._check(other)
        alg = self.algebra
        out = {}
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                for k, ck in alg.mul_basis(i, j).items():
                    s = out.get(k, Fraction(0)) + ci * cj * ck
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return TabElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        acc = self.algebra.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = self.algebra.one() * other
        return (isinstance(other, TabElement)
                and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            lab = self.algebra.labels[i]
            if c == 1:
                parts.append(lab)
            elif c == -1:
                parts.append(f"-{lab}")
            else:
                parts.append(f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__
