"""Command-line front end.

Every command writes one JSON envelope to standard output:

    {"schema": 1, "query": {...}, "input_digest": "...", "result": {...},
     "witnesses": {...}, "provenance": [...], "timestamp": "..."}

Exit codes: 0 success, 2 for mathematically undefined results (for example a
Massey product whose defining cup products are nonzero classes), 1 for
errors.  FILE arguments accept "-" for standard input, and a command
envelope whose result carries a model can be piped into any FILE slot.
Rationals serialize as "p/q" strings.  The environment variable
CDGA_MAX_DEGREE_DEFAULT overrides the default degree bound.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import constructions, modelfile, sullivan
from .cohomology import compute
from .dga import DGA
from .errors import CdgaError, ModelSyntaxError, NotDefined
from .exactla import Matrix
from .expr import parse_expression
from .massey import triple

DEFAULT_MAX_DEGREE = 8


def _default_bound():
    raw = os.environ.get("CDGA_MAX_DEGREE_DEFAULT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise CdgaError(
                f"CDGA_MAX_DEGREE_DEFAULT is not an integer: {raw!r}")
    return DEFAULT_MAX_DEGREE


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_model(path):
    text = _read(path)
    obj, metadata = modelfile.loads(text)
    return obj, metadata, text


def _parse_in(obj, text):
    algebra = obj.algebra if isinstance(obj, DGA) else obj
    return parse_expression(text, algebra)


def _envelope(query, input_text, result, witnesses=None, provenance=None):
    return {
        "schema": 1,
        "query": jsonable(query),
        "input_digest": hashlib.sha256(
            input_text.encode("utf-8")).hexdigest() if input_text is not None
        else None,
        "result": jsonable(result),
        "witnesses": jsonable(witnesses or {}),
        "provenance": jsonable(provenance or []),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _emit(doc, stream=None):
    stream = stream or sys.stdout
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")


# -- commands --------------------------------------------------------------

def cmd_validate(args):
    obj, metadata, text = _load_model(args.file)
    kind = "free" if isinstance(obj, DGA) else "tabular"
    size = (len(obj.algebra.generators) if isinstance(obj, DGA)
            else len(obj.labels))
    result = {"ok": True, "kind": kind, "size": size, "metadata": metadata}
    return _envelope({"command": "validate", "file": args.file},
                     text, result), 0


def cmd_cohomology(args):
    obj, metadata, text = _load_model(args.file)
    bound = args.max_degree if args.max_degree is not None else _default_bound()
    summary = compute(obj, bound, with_cup=args.ring)
    result = {
        "max_degree": bound,
        "betti": list(summary.betti),
        "representatives": {str(k): [str(r) for r in summary.representatives[k]]
                            for k in range(bound + 1)},
    }
    if args.ring:
        result["ring"] = [
            {"p": p, "i": i, "q": q, "j": j, "value": list(vec)}
            for (p, i, q, j), vec in sorted(summary.cup.items())
            if any(vec)]
    return _envelope({"command": "cohomology", "file": args.file,
                      "max_degree": bound, "ring": args.ring},
                     text, result), 0


def cmd_massey(args):
    obj, metadata, text = _load_model(args.file)
    bound = args.max_degree if args.max_degree is not None else _default_bound()
    exprs = args.classes.split(",")
    if len(exprs) != 3:
        raise ModelSyntaxError("--classes needs three comma-separated "
                               "expressions", field="classes")
    a1, a2, a3 = (_parse_in(obj, e) for e in exprs)
    query = {"command": "massey", "file": args.file, "classes": exprs,
             "max_degree": bound}
    try:
        res = triple(obj, a1, a2, a3, max_degree=bound)
    except NotDefined as exc:
        result = {"defined": False, "reason": str(exc)}
        return _envelope(query, text, result), 2
    result = {
        "defined": True,
        "degree": res.degree,
        "vanishes": res.vanishes,
        "representative": str(res.representative),
        "representative_class": list(res.representative_class),
        "indeterminacy_dim": res.indeterminacy.dim,
    }
    witnesses = {"primitives": [str(p) for p in res.primitives]}
    return _envelope(query, text, result, witnesses), 0


def cmd_minimal_model(args):
    obj, metadata, text = _load_model(args.file)
    bound = args.max_degree if args.max_degree is not None else _default_bound()
    model = sullivan.minimal_model(obj, bound)
    ok, report = sullivan.is_quasi_iso(model.morphism, bound)
    result = {
        "model": modelfile.render_model(model.dga),
        "generator_ledger": model.generator_ledger(),
        "stage_ledger": model.stage_ledger,
        "quasi_iso": ok,
    }
    witnesses = {"quasi_iso_report": report}
    return _envelope({"command": "minimal-model", "file": args.file,
                      "max_degree": bound}, text, result, witnesses), 0


def cmd_formality(args):
    obj, metadata, text = _load_model(args.file)
    verdict = sullivan.formality(obj, args.dimension, s=args.s, cap=args.cap)
    result = {
        "status": verdict.status,
        "s": verdict.s,
        "degree_cap": verdict.degree_cap,
        "formal_dimension": verdict.formal_dimension,
        "s_formal": verdict.s_formal,
        "splitting": verdict.splitting,
    }
    witnesses = {"witness": verdict.witness}
    return _envelope({"command": "formality", "file": args.file,
                      "dimension": args.dimension, "s": args.s,
                      "cap": args.cap},
                     text, result, witnesses, verdict.notes), 0


def cmd_circle_bundle(args):
    obj, metadata, text = _load_model(args.file)
    euler = _parse_in(obj, args.euler)
    total = constructions.circle_bundle_model(obj, euler)
    result = {"model": modelfile.render_model(total)}
    return _envelope({"command": "circle-bundle", "file": args.file,
                      "euler": args.euler}, text, result), 0


def cmd_mapping_torus(args):
    obj, metadata, text = _load_model(args.file)
    bound = args.max_degree if args.max_degree is not None else _default_bound()
    summary = compute(obj, bound, with_cup=False)
    auto_doc = json.loads(_read(args.auto))
    rho = _build_automorphism(summary, auto_doc)
    torus = constructions.mapping_torus_cohomology(summary, rho,
                                                  with_cup=False)
    result = {
        "betti": list(torus.betti),
        "model": modelfile.render_model(torus.source),
    }
    return _envelope({"command": "mapping-torus", "file": args.file,
                      "auto": args.auto, "max_degree": bound},
                     text, result, provenance=rho.provenance), 0


def _build_automorphism(summary, doc):
    kind = doc.get("kind", "partial")
    if kind == "identity":
        return constructions.CohomologyAutomorphism.identity(summary)
    matrices = {
        int(r): Matrix([[Fraction(str(c)) for c in row] for row in rows],
                       cols=summary.betti[int(r)])
        for r, rows in (doc.get("matrices") or {}).items()}
    if kind == "full":
        return constructions.CohomologyAutomorphism(summary, matrices)
    if kind == "partial":
        return constructions.CohomologyAutomorphism.from_partial(
            summary, matrices,
            top_degree=int(doc["top_degree"]),
            top_sign=int(doc.get("top_sign", 1)))
    raise ModelSyntaxError(f"unknown automorphism kind {kind!r}", field="kind")


def cmd_corpus(args):
    params = {}
    if args.e is not None:
        params["e"] = tuple(Fraction(v) for v in args.e.split(","))
    for key in ("k", "l"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.epsilon is not None:
        params["epsilon"] = [Fraction(v) for v in args.epsilon.split(",")]
    if args.N is not None:
        params["N"] = args.N
    if args.f is not None:
        params["f"] = Fraction(args.f)
    if args.rho is not None:
        params["rho"] = args.rho
    entry = constructions.corpus(args.name, **params)
    if entry.kind == "cohomology":
        result = {
            "kind": entry.kind,
            "dimension": entry.dimension,
            "parameters": entry.parameters,
            "betti": list(entry.obj.betti),
            "model": modelfile.render_model(entry.obj.source),
        }
    else:
        result = {
            "kind": entry.kind,
            "dimension": entry.dimension,
            "parameters": entry.parameters,
            "model": modelfile.render_model(entry.obj),
        }
    return _envelope({"command": "corpus", "name": args.name,
                      "parameters": entry.parameters},
                     None, result, provenance=entry.provenance), 0


# -- dispatch --------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="cdga",
        description="Exact-arithmetic CDGA computations: cohomology, Massey "
                    "products, minimal models, formality verdicts.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, help="parse and validate a model file")
    sp.add_argument("file")

    sp = add("cohomology", cmd_cohomology, help="Betti numbers and "
             "class representatives")
    sp.add_argument("file")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--ring", action="store_true",
                    help="include the cup-product table")

    sp = add("massey", cmd_massey, help="triple Massey product")
    sp.add_argument("file")
    sp.add_argument("--classes", required=True,
                    help="three comma-separated cocycle expressions")
    sp.add_argument("--max-degree", type=int, default=None)

    sp = add("minimal-model", cmd_minimal_model,
             help="staged Sullivan minimal model")
    sp.add_argument("file")
    sp.add_argument("--max-degree", type=int, default=None)

    sp = add("formality", cmd_formality, help="formality verdict")
    sp.add_argument("file")
    sp.add_argument("--dimension", type=int, required=True)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--cap", type=int, default=None)

    sp = add("circle-bundle", cmd_circle_bundle,
             help="extend a base model by a circle fibre")
    sp.add_argument("file")
    sp.add_argument("--euler", required=True)

    sp = add("mapping-torus", cmd_mapping_torus,
             help="mapping-torus cohomology of a fibre automorphism")
    sp.add_argument("file")
    sp.add_argument("--auto", required=True,
                    help="JSON description of the cohomology automorphism")
    sp.add_argument("--max-degree", type=int, default=None)

    sp = add("corpus", cmd_corpus, help="emit a named example model")
    sp.add_argument("name")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--e", default=None,
                    help="comma-separated Euler coefficients")
    sp.add_argument("--epsilon", default=None,
                    help="comma-separated rationals")
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--f", default=None)
    sp.add_argument("--rho", default=None, choices=("id", "flip"))
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.fn(args)
    except CdgaError as exc:
        error = {"kind": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, ModelSyntaxError) and exc.location():
            error["location"] = exc.location()
        _emit({"schema": 1,
               "query": {"command": args.command},
               "error": error,
               "timestamp": datetime.now(timezone.utc).isoformat()})
        return 1
    except OSError as exc:
        _emit({"schema": 1,
               "query": {"command": args.command},
               "error": {"kind": "IOError", "detail": str(exc)},
               "timestamp": datetime.now(timezone.utc).isoformat()})
        return 1
    _emit(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
