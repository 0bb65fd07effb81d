"""Minimal models, quasi-isomorphisms, s-formality, formality verdicts."""

from fractions import Fraction

import pytest

from cdga.cohomology import compute
from cdga.constructions import lens_bundle_cp2_model, x6_model
from cdga.dga import DGA, Differential, TabularDGA
from cdga.errors import (BoundTooLow, NotAChainMap, NotMinimal,
                         NotSimplyConnected)
from cdga.gca import Algebra
from cdga.sullivan import (DgaMorphism, formality, formality_shortcut,
                           is_quasi_iso, minimal_model, required_s,
                           s_formality_check)


def tabular_cohomology_of(dga, bound):
    """(H^*(dga), 0) as a tabular algebra, for use as a model target."""
    s = compute(dga, bound, with_cup=True)
    basis, labels = [], {}
    for k in range(bound + 1):
        for i in range(s.betti[k]):
            lab = "1" if k == 0 else f"h{k}.{i}"
            labels[(k, i)] = lab
            basis.append((lab, k))
    products = {}
    for (p, i, q, j), vec in s.cup.items():
        if p == 0 or q == 0 or labels[(p, i)] > labels[(q, j)]:
            continue
        entry = {labels[(p + q, t)]: c for t, c in enumerate(vec) if c}
        products[(labels[(p, i)], labels[(q, j)])] = entry
    return TabularDGA(basis, products, {})


class TestMorphism:
    def test_chain_map_validation(self, cp2):
        alg = Algebra([("a", 2), ("x", 5)])
        other = DGA(alg, Differential(alg, {"x": alg.gen("a") ** 3}))
        good = DgaMorphism(other, cp2, {"a": cp2.gen("a"), "x": cp2.gen("x")})
        assert good.chain_map_failures() == []
        bad = DgaMorphism(other, cp2, {"a": cp2.gen("a"), "x": cp2.zero()})
        assert bad.chain_map_failures() == ["x"]
        with pytest.raises(NotAChainMap):
            bad.check_chain_map()

    def test_morphism_is_multiplicative(self, cp2):
        alg = Algebra([("a", 2), ("x", 5)])
        other = DGA(alg, Differential(alg, {"x": alg.gen("a") ** 3}))
        f = DgaMorphism(other, cp2, {"a": cp2.gen("a") * 2,
                                     "x": cp2.gen("x") * 8})
        e = alg.gen("a") ** 2 + alg.gen("a") * Fraction(1, 2)
        assert f(e) == cp2.gen("a") ** 2 * 4 + cp2.gen("a")

    def test_minimal_model_of_lens_total_space(self):
        # Lambda(a, u, xt) with du = e*a^2, d(xt) = 0 maps quasi-isomorphically
        # into the lens model through xt -> x - a*u/e
        e = 3
        lens = lens_bundle_cp2_model(e)
        dom_alg = Algebra([("a", 2), ("u", 3), ("xt", 5)])
        dom = DGA(dom_alg, Differential(dom_alg,
                                        {"u": dom_alg.gen("a") ** 2 * e}))
        f = DgaMorphism(dom, lens, {
            "a": lens.gen("a"),
            "u": lens.gen("u"),
            "xt": lens.gen("x") - lens.gen("a") * lens.gen("u")
            * Fraction(1, e)})
        f.check_chain_map()
        ok, report = is_quasi_iso(f, 7)
        assert ok and all(r["isomorphism"] for r in report)

    def test_quasi_iso_detects_failure(self, cp2):
        dom_alg = Algebra([("a", 2)])
        dom = DGA(dom_alg, Differential(dom_alg, {}))
        f = DgaMorphism(dom, cp2, {"a": cp2.gen("a")})
        ok, report = is_quasi_iso(f, 6)
        assert not ok
        by_degree = {r["degree"]: r for r in report}
        assert by_degree[2]["isomorphism"]
        assert not by_degree[6]["isomorphism"]

    def test_quasi_iso_identity(self, cp2):
        f = DgaMorphism(cp2, cp2, {"a": cp2.gen("a"), "x": cp2.gen("x")})
        ok, report = is_quasi_iso(f, 6)
        assert ok and all(r["isomorphism"] for r in report)


class TestMinimalModel:
    def test_cp2_from_its_cohomology(self, cp2):
        target = tabular_cohomology_of(cp2, 6)
        model = minimal_model(target, 6)
        assert model.generator_ledger() == {2: 1, 5: 1}
        ok, _ = is_quasi_iso(model.morphism, 6)
        assert ok
        assert model.dga.is_minimal()

    def test_s4_from_its_cohomology(self):
        tab = TabularDGA([("1", 0), ("s", 4)], {("s", "s"): {}}, {})
        model = minimal_model(tab, 8)
        assert model.generator_ledger() == {4: 1, 7: 1}
        ok, _ = is_quasi_iso(model.morphism, 8)
        assert ok

    def test_s3_from_its_cohomology(self):
        tab = TabularDGA([("1", 0), ("s", 3)], {("s", "s"): {}}, {})
        model = minimal_model(tab, 4)
        assert model.generator_ledger() == {3: 1}
        ok, _ = is_quasi_iso(model.morphism, 4)
        assert ok

    def test_stage_ledger_records_generators(self):
        tab = TabularDGA([("1", 0), ("s", 4)], {("s", "s"): {}}, {})
        model = minimal_model(tab, 8)
        assert model.stage_ledger[4]["surjective"] == ["w4_0"]
        assert model.stage_ledger[7]["kernel"] == ["v7_0"]

    def test_rejects_nonconnected_targets(self):
        tab = TabularDGA([("1", 0), ("u", 1)], {("u", "u"): {}}, {})
        with pytest.raises(NotSimplyConnected):
            minimal_model(tab, 4)
        with pytest.raises(BoundTooLow):
            minimal_model(TabularDGA([("1", 0)], {}, {}), 1)

    def test_q111_model_matches_to_degree_five(self, q111):
        model = minimal_model(q111, 5)
        ok, _ = is_quasi_iso(model.morphism, 5)
        assert ok
        assert model.dga.is_minimal()


class TestSFormality:
    def test_required_s_values(self):
        assert required_s(6) == 2
        assert required_s(7) == 3
        assert required_s(8) == 3

    def test_shortcut_dimension_seven(self):
        assert formality_shortcut(0, 0, 7).status == "Formal"
        assert formality_shortcut(0, 1, 7).status == "Formal"
        assert formality_shortcut(0, 2, 7) is None
        assert formality_shortcut(1, 0, 7) is None
        with pytest.raises(ValueError):
            formality_shortcut(0, 1, 6)

    def test_x6_is_two_formal_hence_formal(self):
        verdict = formality(x6_model(), 6)
        assert verdict.status == "Formal"
        assert verdict.s_formal
        assert verdict.s >= required_s(6)

    def test_minimality_required(self):
        alg = Algebra([("b", 1), ("a", 2)])
        nonmin = DGA(alg, Differential(alg, {"b": alg.gen("a")}))
        with pytest.raises(NotMinimal):
            s_formality_check(nonmin, 1, 3)

    def test_cap_must_cover_s(self, cp2):
        with pytest.raises(BoundTooLow):
            s_formality_check(cp2, 3, 3)

    def test_standalone_minimal_circle_times_s2(self):
        from cdga.constructions import _circle_times_s2_like_model
        dga = _circle_times_s2_like_model()
        verdict = s_formality_check(dga, 3, 8, formal_dimension=8)
        assert verdict.status == "Formal"
        assert verdict.splitting[1] == {"C": 1, "N": 0}
        assert verdict.splitting[2] == {"C": 1, "N": 0}
        assert verdict.splitting[3] == {"C": 0, "N": 1}

    def test_splitting_invariant_under_generator_order(self):
        a1 = Algebra([("a", 1), ("b", 2), ("x", 3)])
        m1 = DGA(a1, Differential(a1, {"x": a1.gen("b") ** 2}))
        a2 = Algebra([("x", 3), ("b", 2), ("a", 1)])
        m2 = DGA(a2, Differential(a2, {"x": a2.gen("b") ** 2}))
        v1 = s_formality_check(m1, 3, 8, formal_dimension=8)
        v2 = s_formality_check(m2, 3, 8, formal_dimension=8)
        assert v1.status == v2.status == "Formal"
        assert v1.splitting == v2.splitting


class TestFormalityDriver:
    def test_q111_nonformal_with_massey_witness(self, q111):
        verdict = formality(q111, 7, cap=7)
        assert verdict.status == "NonFormal"
        assert verdict.witness["kind"] == "massey"
        assert verdict.witness["degree"] == 5

    def test_q100_formal(self):
        from cdga.constructions import q_model
        verdict = formality(q_model((1, 0, 0)), 7, cap=7)
        assert verdict.status == "Formal"

    def test_berger_formal_via_shortcut(self):
        from cdga.constructions import s3_bundle_model, s4_model
        verdict = formality(s3_bundle_model(s4_model(), -10), 7)
        assert verdict.status == "Formal"
        assert verdict.witness["kind"] == "b2_shortcut"

    def test_nonminimal_with_h1_is_inconclusive(self):
        alg = Algebra([("b", 1), ("a", 2), ("c", 1)])
        obj = DGA(alg, Differential(alg, {"b": alg.gen("a")}))
        verdict = formality(obj, 3, cap=3)
        assert verdict.status == "Inconclusive"

    def test_decomposable_differential_in_every_model(self, q111):
        model = minimal_model(q111, 5)
        assert model.dga.is_minimal()
        for g in model.dga.algebra.generators:
            img = model.dga.differential.of_generator(g.ordinal)
            for mono in img.terms:
                assert sum(e for _, e in mono) >= 2
