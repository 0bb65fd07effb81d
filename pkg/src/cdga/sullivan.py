"""Sullivan minimal models, quasi-isomorphisms, and formality verdicts.

Minimal models are built stage by stage for targets with H^0 = Q, H^1 = 0:
at degree k, closed generators are added to surject onto H^k of the target,
then generators of degree k whose differentials kill the kernel of
H^{k+1}(model) -> H^{k+1}(target).

The s-formality check uses the canonical splitting C^i = ker(d|V^i) with
the echelon complement as N^i.  The definition quantifies existentially
over splittings, so a failed check is reported Inconclusive, never
NonFormal; NonFormal verdicts come from non-vanishing Massey products.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactla
from .cohomology import compute, context_for
from .dga import DGA, Differential
from .errors import (BoundTooLow, ModelTooLarge, NotAChainMap, NotMinimal,
                     NotSimplyConnected)
from .exactla import Matrix, Subspace
from .gca import Algebra, Element
from .massey import try_triple

DEFAULT_DIM_BUDGET = 6000
DEFAULT_GEN_BUDGET = 300


class DgaMorphism:
    """A degree-0 algebra morphism DGA -> DGA/TabularDGA on generators."""

    def __init__(self, domain: DGA, codomain, images):
        """images maps generator names of the domain to codomain elements."""
        self.domain = domain
        self.codomain = codomain
        self.images = {}
        for g in domain.algebra.generators:
            img = images.get(g.name)
            if img is None:
                raise KeyError(f"no image for generator {g.name}")
            if not img.is_zero() and img.degree() != g.degree:
                raise ValueError(f"image of {g.name} has the wrong degree")
            self.images[g.ordinal] = img

    def __call__(self, e: Element):
        out = self.codomain.zero()
        for mono, coeff in e.terms.items():
            term = self.codomain.one()
            for gi, exp in mono:
                img = self.images[gi]
                for _ in range(exp):
                    term = term * img
            out = out + term * Fraction(coeff)
        return out

    def chain_map_failures(self):
        """Generators on which phi(d g) != d(phi g)."""
        bad = []
        for g in self.domain.algebra.generators:
            lhs = self(self.domain.d(self.domain.gen(g.name)))
            rhs = self.codomain.d(self.images[g.ordinal])
            if lhs != rhs:
                bad.append(g.name)
        return bad

    def check_chain_map(self):
        bad = self.chain_map_failures()
        if bad:
            raise NotAChainMap(f"fails on generators: {', '.join(bad)}")


def is_quasi_iso(f: DgaMorphism, max_degree, domain_summary=None,
                 codomain_summary=None):
    """(bool, per-degree report) for H^k(f) being an isomorphism, k <= bound."""
    f.check_chain_map()
    ds = domain_summary or compute(f.domain, max_degree + 1, with_cup=False)
    cs = codomain_summary or compute(f.codomain, max_degree + 1, with_cup=False)
    report = []
    ok = True
    for k in range(max_degree + 1):
        cols = [cs.class_coords(f(r), degree=k)[1] for r in ds.representatives[k]]
        m = Matrix([[col[r] for col in cols] for r in range(cs.betti[k])],
                   cols=len(cols))
        iso = (ds.betti[k] == cs.betti[k] and m.rank() == ds.betti[k])
        report.append({"degree": k, "domain_betti": ds.betti[k],
                       "codomain_betti": cs.betti[k], "rank": m.rank(),
                       "isomorphism": iso})
        ok = ok and iso
    return ok, report


@dataclass
class SullivanModel:
    dga: DGA
    morphism: DgaMorphism
    target: object
    built_degree: int
    stage_ledger: dict = field(default_factory=dict)

    def generator_ledger(self):
        """degree -> number of generators of that degree."""
        out = {}
        for g in self.dga.algebra.generators:
            out[g.degree] = out.get(g.degree, 0) + 1
        return dict(sorted(out.items()))


def _transplant(new_alg: Algebra, e: Element) -> Element:
    # generator lists are append-only, so monomial indices stay valid
    return Element(new_alg, dict(e.terms))


def _guard_dims(alg: Algebra, up_to, max_dim):
    for k in range(up_to + 1):
        if len(alg.degree_basis(k)) > max_dim:
            raise ModelTooLarge(
                f"degree-{k} piece has dimension > {max_dim}; "
                "the target is too rationally hyperbolic for this bound")


def minimal_model(target, max_degree, max_dim=DEFAULT_DIM_BUDGET,
                  max_gens=DEFAULT_GEN_BUDGET) -> SullivanModel:
    """Staged minimal model of a 1-connected DGA or TabularDGA."""
    if max_degree < 2:
        raise BoundTooLow("max_degree must be >= 2")
    target_summary = compute(target, max_degree + 1, with_cup=False)
    if target_summary.betti[0] != 1:
        raise NotSimplyConnected("target is not connected (H^0 != Q)")
    if target_summary.betti[1] != 0:
        raise NotSimplyConnected("target has H^1 != 0")

    gens = []            # (name, degree), append-only
    d_images = {}        # name -> Element (of the latest algebra)
    phi_images = {}      # name -> target element
    ledger = {}
    counters = {}

    def build():
        alg = Algebra(gens)
        imgs = {name: _transplant(alg, e) for name, e in d_images.items()}
        return DGA(alg, Differential(alg, imgs))

    def fresh_name(prefix, degree):
        n = counters.get((prefix, degree), 0)
        counters[(prefix, degree)] = n + 1
        return f"{prefix}{degree}_{n}"

    model = build()
    for k in range(2, max_degree + 1):
        ledger[k] = {"surjective": [], "kernel": []}
        _guard_dims(model.algebra, k + 2, max_dim)
        summary = compute(model, k + 1, with_cup=False)
        phi = DgaMorphism(model, target, phi_images)

        # (a) closed generators to surject onto H^k(target)
        img_vecs = [target_summary.class_coords(phi(r), degree=k)[1]
                    for r in summary.representatives[k]]
        img = Subspace(target_summary.betti[k], img_vecs)
        full = Subspace(target_summary.betti[k],
                        Matrix.identity(target_summary.betti[k]).data)
        for v in exactla.quotient_basis(full, img):
            name = fresh_name("w", k)
            gens.append((name, k))
            phi_images[name] = target_summary.rep_combination(k, v)
            ledger[k]["surjective"].append(name)
        if ledger[k]["surjective"]:
            model = build()
            summary = compute(model, k + 1, with_cup=False)
            phi = DgaMorphism(model, target, phi_images)
        if len(gens) > max_gens:
            raise ModelTooLarge(f"more than {max_gens} generators")

        # (b) generators of degree k killing ker H^{k+1}(phi)
        cols = [target_summary.class_coords(phi(r), degree=k + 1)[1]
                for r in summary.representatives[k + 1]]
        m = Matrix([[col[r] for col in cols]
                    for r in range(target_summary.betti[k + 1])],
                   cols=len(cols))
        kernel_classes = exactla.kernel(m)
        new = []
        for w in kernel_classes.basis:
            z = summary.rep_combination(k + 1, w)
            primitive = target_summary.is_exact(phi(z))
            if primitive is None:
                raise AssertionError("kernel class image not exact in target")
            name = fresh_name("v", k)
            new.append((name, z, primitive))
        for name, z, primitive in new:
            gens.append((name, k))
            d_images[name] = z  # re-transplanted on the next build()
            phi_images[name] = primitive
            ledger[k]["kernel"].append(name)
        if new:
            model = build()
        if len(gens) > max_gens:
            raise ModelTooLarge(f"more than {max_gens} generators")

    morphism = DgaMorphism(model, target, phi_images)
    return SullivanModel(dga=model, morphism=morphism, target=target,
                         built_degree=max_degree, stage_ledger=ledger)


@dataclass
class FormalityVerdict:
    status: str                      # "Formal" | "NonFormal" | "Inconclusive"
    s: int = None
    degree_cap: int = None
    formal_dimension: int = None
    s_formal: bool = None
    splitting: dict = None           # i -> {"C": dim, "N": dim}
    witness: dict = None
    notes: list = field(default_factory=list)


def required_s(dimension):
    """Smallest s with 's-formal implies formal' for compact orientable
    manifolds of that dimension."""
    return (dimension + 1) // 2 - 1


def formality_shortcut(b1, b2, dim):
    """Formal verdict for 7-manifolds with b1 = 0 and b2 <= 1; else None."""
    if dim != 7:
        raise ValueError("the shortcut applies to dimension 7 only")
    if b1 == 0 and b2 <= 1:
        return FormalityVerdict(
            status="Formal", formal_dimension=7,
            witness={"kind": "b2_shortcut", "b1": b1, "b2": b2},
            notes=["7-manifolds with b1=0 and b2<=1 are 3-formal, so formal"])
    return None


def _pseudo_monomials(pseudo, cap):
    """Monomials over (degree, tag, index) pseudo-generators up to degree cap.

    Yields tuples of ((pseudo index, exponent), ...) grouped by total degree.
    """
    by_degree = {}

    def rec(pos, deg, acc):
        if deg > cap:
            return
        if pos == len(pseudo):
            if acc:
                by_degree.setdefault(deg, []).append(tuple(acc))
            return
        d = pseudo[pos][0]
        rec(pos + 1, deg, acc)
        top = 1 if d % 2 else (cap - deg) // d
        for e in range(1, top + 1):
            acc.append((pos, e))
            rec(pos + 1, deg + e * d, acc)
            acc.pop()

    rec(0, 0, [])
    return by_degree


def s_formality_check(model, s, degree_cap, formal_dimension=None,
                      max_dim=DEFAULT_DIM_BUDGET) -> FormalityVerdict:
    """s-formality of a minimal model via the canonical C/N splitting.

    `model` is a SullivanModel or a minimal DGA.  Exactness of closed ideal
    elements is certified inside the model when it stands alone, or through
    the quasi-isomorphism to the target when one is attached (the class of a
    closed element vanishes in the full model iff its image is exact in the
    target).
    """
    if isinstance(model, SullivanModel):
        dga, morphism, target = model.dga, model.morphism, model.target
    else:
        dga, morphism, target = model, None, None
    if not dga.is_minimal():
        raise NotMinimal("differential has a linear part")
    if degree_cap < s + 1:
        raise BoundTooLow("degree_cap must be >= s + 1")

    alg = dga.algebra
    ctx = context_for(dga)
    target_summary = None
    if morphism is not None:
        target_summary = compute(target, degree_cap + 1, with_cup=False)

    # canonical splitting of V^i, i <= s
    splitting = {}
    pseudo = []   # (degree, "C"/"N", element)
    for i in range(1, s + 1):
        vi = [g for g in alg.generators if g.degree == i]
        if not vi:
            splitting[i] = {"C": 0, "N": 0}
            continue
        cols = [ctx.coords(dga.d(dga.gen(g.name)), i + 1) for g in vi]
        m = Matrix([[col[r] for col in cols] for r in range(ctx.dim(i + 1))],
                   cols=len(vi))
        c_space = exactla.kernel(m)
        full = Subspace(len(vi), Matrix.identity(len(vi)).data)
        n_vecs = exactla.quotient_basis(full, c_space)
        splitting[i] = {"C": c_space.dim, "N": len(n_vecs)}

        def lin_comb(vec):
            out = alg.zero()
            for coeff, g in zip(vec, vi):
                out = out + alg.gen(g.name) * Fraction(coeff)
            return out

        for v in c_space.basis:
            pseudo.append((i, "C", lin_comb(v)))
        for v in n_vecs:
            pseudo.append((i, "N", lin_comb(v)))

    # closed elements of the ideal generated by the N parts, degree <= cap
    by_degree = _pseudo_monomials([(p[0],) for p in pseudo], degree_cap)
    for m_deg in sorted(by_degree):
        ideal_elems = []
        for mono in by_degree[m_deg]:
            if not any(pseudo[pos][1] == "N" for pos, _ in mono):
                continue
            e = alg.one()
            for pos, exp in mono:
                for _ in range(exp):
                    e = e * pseudo[pos][2]
            if not e.is_zero():
                ideal_elems.append(e)
        if not ideal_elems:
            continue
        if ctx.dim(m_deg + 1) > max_dim or ctx.dim(m_deg) > max_dim:
            raise ModelTooLarge(f"graded piece beyond {max_dim} dimensions")
        cols = [ctx.coords(dga.d(e), m_deg + 1) for e in ideal_elems]
        dmat = Matrix([[col[r] for col in cols]
                       for r in range(ctx.dim(m_deg + 1))],
                      cols=len(ideal_elems))
        closed = exactla.kernel(dmat)
        for w in closed.basis:
            z = alg.zero()
            for coeff, e in zip(w, ideal_elems):
                z = z + e * Fraction(coeff)
            if z.is_zero():
                continue
            if target_summary is not None:
                exact = target_summary.is_exact(morphism(z)) is not None
            else:
                from .cohomology import is_exact as _standalone
                exact, _ = _standalone(dga, z)
            if not exact:
                return FormalityVerdict(
                    status="Inconclusive", s=s, degree_cap=degree_cap,
                    formal_dimension=formal_dimension, s_formal=False,
                    splitting=splitting,
                    witness={"kind": "non_exact_ideal_element",
                             "degree": m_deg, "element": str(z)},
                    notes=["canonical splitting fails; another splitting "
                           "could still certify formality"])

    verdict = FormalityVerdict(
        status="Inconclusive", s=s, degree_cap=degree_cap,
        formal_dimension=formal_dimension, s_formal=True, splitting=splitting,
        witness={"kind": "splitting", "splitting": splitting})
    if formal_dimension is not None and s >= required_s(formal_dimension):
        verdict.status = "Formal"
        verdict.notes.append(
            f"{s}-formal and s >= {required_s(formal_dimension)} for a "
            f"declared formal dimension {formal_dimension} "
            "(manifoldness is trusted, not verified)")
    else:
        verdict.notes.append(f"{s}-formal, but no usable formal dimension")
    return verdict


def massey_search(obj, summary, cap):
    """First defined, non-vanishing triple Massey product over the chosen
    representatives, or None."""
    degs = [k for k in range(1, cap + 1) if summary.betti[k] > 0]
    for p1, p2, p3 in itertools.product(degs, repeat=3):
        n = p1 + p2 + p3 - 1
        if n > cap or summary.betti[n] == 0:
            continue
        for r1 in summary.representatives[p1]:
            for r2 in summary.representatives[p2]:
                for r3 in summary.representatives[p3]:
                    res = try_triple(obj, r1, r2, r3, summary=summary)
                    if res.defined and not res.vanishes:
                        return (r1, r2, r3), res
    return None


def formality(obj, dimension, s=None, cap=None,
              max_dim=DEFAULT_DIM_BUDGET, summary=None) -> FormalityVerdict:
    """Formality verdict for a model of a closed orientable manifold.

    Tries, in order: the dimension-7 b2 shortcut, a Massey-product
    obstruction search (NonFormal), and the s-formality check on a minimal
    model (Formal).  Anything else is Inconclusive.  A precomputed cohomology
    summary of obj covering the degree cap may be passed in.
    """
    cap = cap if cap is not None else dimension + 1
    s = s if s is not None else required_s(dimension)
    if summary is None:
        summary = compute(obj, cap, with_cup=False)
    elif summary.source is not obj or summary.max_degree < cap:
        raise BoundTooLow("summary does not cover the requested degree cap")
    b1 = summary.betti[1] if cap >= 1 else 0
    b2 = summary.betti[2] if cap >= 2 else 0

    if dimension == 7 and b1 == 0:
        hit = formality_shortcut(b1, b2, 7)
        if hit is not None:
            return hit

    found = massey_search(obj, summary, cap)
    if found is not None:
        (r1, r2, r3), res = found
        return FormalityVerdict(
            status="NonFormal", s=s, degree_cap=cap, formal_dimension=dimension,
            witness={"kind": "massey",
                     "classes": [str(r1), str(r2), str(r3)],
                     "degree": res.degree,
                     "representative": str(res.representative),
                     "indeterminacy_dim": res.indeterminacy.dim},
            notes=["non-vanishing triple Massey product obstructs formality"])

    if isinstance(obj, DGA) and obj.is_minimal():
        return s_formality_check(obj, s, cap, formal_dimension=dimension,
                                 max_dim=max_dim)
    if b1 == 0:
        model = minimal_model(obj, max(2, s), max_dim=max_dim)
        return s_formality_check(model, s, cap, formal_dimension=dimension,
                                 max_dim=max_dim)
    return FormalityVerdict(
        status="Inconclusive", s=s, degree_cap=cap, formal_dimension=dimension,
        notes=["H^1 != 0 and the model is not minimal; no construction "
               "available in this regime"])
