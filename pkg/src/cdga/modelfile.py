"""JSON descriptions of free and tabular DGAs, with canonical rendering.

Free form:

    {"kind": "free",
     "generators": [{"name": "a", "degree": 2}, ...],
     "differential": {"x": "a^3", ...},
     "parameters": {"e1": "1", ...},
     "metadata": {...}}

Tabular form:

    {"kind": "tabular",
     "basis": [{"label": "1", "degree": 0}, ...],
     "products": [{"left": "a", "right": "a", "value": {"nu": "1"}}, ...],
     "differential": {"y": {"a": "1"}, ...},
     "metadata": {...}}

Parameters are rationals substituted into expressions at parse time.
Rendering is canonical: parse(render(obj)) rebuilds an identical model, and
render(parse(doc)) is the identity on canonical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dga import DGA, Differential, TabularDGA
from .errors import (D2NonZero, InhomogeneousDifferential, ModelSyntaxError,
                     WrongDegree)
from .expr import parse_expression
from .gca import Algebra


def _frac(value, field):
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise ModelSyntaxError(f"bad rational {value!r}", field=field) from None


def parse_model(doc):
    """(DGA or TabularDGA, metadata dict) from a model description dict."""
    if not isinstance(doc, dict):
        raise ModelSyntaxError("model description must be a JSON object")
    kind = doc.get("kind", "free")
    if kind == "free":
        return _parse_free(doc)
    if kind == "tabular":
        return _parse_tabular(doc)
    raise ModelSyntaxError(f"unknown model kind {kind!r}", field="kind")


def _parse_free(doc):
    gens = []
    for i, g in enumerate(doc.get("generators", [])):
        field = f"generators[{i}]"
        if not isinstance(g, dict) or "name" not in g or "degree" not in g:
            raise ModelSyntaxError("generator needs name and degree",
                                   field=field)
        gens.append((str(g["name"]), int(g["degree"])))
    try:
        alg = Algebra(gens)
    except ValueError as exc:
        raise ModelSyntaxError(str(exc), field="generators") from None
    params = {str(k): _frac(v, f"parameters.{k}")
              for k, v in (doc.get("parameters") or {}).items()}
    clash = set(params) & {g.name for g in alg.generators}
    if clash:
        raise ModelSyntaxError(
            f"parameters shadow generators: {sorted(clash)}",
            field="parameters")
    images = {}
    diff_doc = doc.get("differential") or {}
    for name, text in diff_doc.items():
        field = f"differential.{name}"
        if name not in {g.name for g in alg.generators}:
            raise ModelSyntaxError(f"differential for unknown generator "
                                   f"{name!r}", field=field)
        e = parse_expression(str(text), alg, params, field=field)
        if not e.is_homogeneous():
            raise InhomogeneousDifferential(
                f"d({name}) mixes degrees ({field})")
        deg = e.degree()
        expected = alg.generator(name).degree + 1
        if deg is not None and deg != expected:
            raise WrongDegree(
                f"d({name}) has degree {deg}, expected {expected} ({field})")
        images[name] = e
    dga = DGA(alg, Differential(alg, images))
    report = dga.validate()
    if report.d2_failures:
        name, witness = report.d2_failures[0]
        raise D2NonZero(f"d(d({name})) = {witness}")
    return dga, dict(doc.get("metadata") or {})


def _parse_tabular(doc):
    basis = []
    for i, b in enumerate(doc.get("basis", [])):
        field = f"basis[{i}]"
        if not isinstance(b, dict) or "label" not in b or "degree" not in b:
            raise ModelSyntaxError("basis entry needs label and degree",
                                   field=field)
        basis.append((str(b["label"]), int(b["degree"])))
    products = {}
    for i, p in enumerate(doc.get("products", [])):
        field = f"products[{i}]"
        if not isinstance(p, dict) or "left" not in p or "right" not in p:
            raise ModelSyntaxError("product entry needs left and right",
                                   field=field)
        value = {str(lab): _frac(c, f"{field}.value.{lab}")
                 for lab, c in (p.get("value") or {}).items()}
        products[(str(p["left"]), str(p["right"]))] = value
    differential = {
        str(lab): {str(lk): _frac(c, f"differential.{lab}.{lk}")
                   for lk, c in (val or {}).items()}
        for lab, val in (doc.get("differential") or {}).items()}
    try:
        tab = TabularDGA(basis, products, differential)
    except (ValueError, KeyError, WrongDegree) as exc:
        raise ModelSyntaxError(str(exc)) from None
    problems = tab.validate()
    if problems:
        if any("d^2" in p for p in problems):
            raise D2NonZero("; ".join(p for p in problems if "d^2" in p))
        raise ModelSyntaxError("; ".join(problems))
    return tab, dict(doc.get("metadata") or {})


def _frac_str(c):
    return str(Fraction(c))


def render_model(obj, metadata=None):
    """Canonical model description dict for a DGA or TabularDGA."""
    if isinstance(obj, DGA):
        doc = {
            "kind": "free",
            "generators": [{"name": g.name, "degree": g.degree}
                           for g in obj.algebra.generators],
            "differential": {
                g.name: str(obj.differential.of_generator(g.ordinal))
                for g in obj.algebra.generators
                if not obj.differential.of_generator(g.ordinal).is_zero()},
        }
    elif isinstance(obj, TabularDGA):
        products = []
        n = len(obj.labels)
        for i in range(n):
            for j in range(i, n):
                if i == obj.unit or j == obj.unit:
                    continue
                entry = obj.table.get((i, j))
                if entry:
                    products.append({
                        "left": obj.labels[i], "right": obj.labels[j],
                        "value": {obj.labels[k]: _frac_str(c)
                                  for k, c in sorted(entry.items())}})
        doc = {
            "kind": "tabular",
            "basis": [{"label": lab, "degree": deg}
                      for lab, deg in zip(obj.labels, obj.degrees)],
            "products": products,
            "differential": {
                obj.labels[i]: {obj.labels[k]: _frac_str(c)
                                for k, c in sorted(entry.items())}
                for i, entry in sorted(obj.diff.items())},
        }
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    if metadata:
        doc["metadata"] = metadata
    return doc


def loads(text):
    """(obj, metadata) from JSON text; accepts a bare model description or a
    command envelope whose result carries a 'model' field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelSyntaxError(f"invalid JSON: {exc.msg}",
                               line=exc.lineno, column=exc.colno) from None
    if isinstance(doc, dict) and "schema" in doc and "result" in doc:
        result = doc["result"] or {}
        if "model" not in result:
            raise ModelSyntaxError("envelope result carries no model",
                                   field="result")
        doc = result["model"]
    return parse_model(doc)
