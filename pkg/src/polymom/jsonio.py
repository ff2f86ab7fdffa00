"""JSON serialization for every interchange type.

Rationals travel as strings "p/q" (just "p" for integers), sign on the
numerator.  Vertex and simplex indices are 0-based on the wire; the paper's
worked examples number from 1, so the CLI accepts 1-based column overrides
but files are uniformly 0-based.  Polynomial terms and moment entries are
sorted graded-lex; that ordering is normative for matrix reproduction.
"""

from __future__ import annotations

from .genfunc import LinearForm, RatFun, SimplePolytope, TangentCone
from .geometry import VertexSet, WeightedMeasure
from .inverse import Reconstruction
from .linalg import rat, rat_str
from .oracle import MomentTable
from .poly import Poly


def vertex_set_to_json(vs: VertexSet) -> dict:
    return {"dim": vs.dim, "points": [[rat_str(c) for c in p] for p in vs.points]}


def vertex_set_from_json(data) -> VertexSet:
    return VertexSet(data["dim"], [[rat(c) for c in p] for p in data["points"]])


def measure_to_json(m: WeightedMeasure) -> dict:
    return {
        "vertices": vertex_set_to_json(m.vertex_set),
        "atoms": [{"simplex": list(s), "weight": rat_str(w)} for s, w in m.atoms],
    }


def measure_from_json(data) -> WeightedMeasure:
    vs = vertex_set_from_json(data["vertices"])
    atoms = [(tuple(a["simplex"]), rat(a["weight"])) for a in data["atoms"]]
    return WeightedMeasure(vs, atoms)


def moment_table_to_json(t: MomentTable) -> dict:
    return {
        "dim": t.dim,
        "order": t.order,
        "moments": [
            {"index": list(e), "value": rat_str(v)} for e, v in t.sorted_items()
        ],
    }


def moment_table_from_json(data) -> MomentTable:
    moments = {tuple(m["index"]): rat(m["value"]) for m in data["moments"]}
    return MomentTable(data["dim"], data["order"], moments)


def poly_to_json(p: Poly) -> dict:
    return {
        "dim": p.dim,
        "terms": [
            {"exp": list(e), "coef": rat_str(c)} for e, c in p.sorted_terms()
        ],
    }


def poly_from_json(data) -> Poly:
    return Poly(data["dim"], {tuple(t["exp"]): rat(t["coef"]) for t in data["terms"]})


def ratfun_to_json(f: RatFun) -> dict:
    counts = {}
    for form in f.denominator:
        counts[form.vertex] = counts.get(form.vertex, 0) + 1
    return {
        "numerator": poly_to_json(f.numerator),
        "denominator": [
            {"vertex": [rat_str(c) for c in v], "mult": n}
            for v, n in sorted(counts.items())
        ],
    }


def ratfun_from_json(data) -> RatFun:
    forms = []
    for entry in data["denominator"]:
        form = LinearForm([rat(c) for c in entry["vertex"]])
        forms.extend([form] * entry.get("mult", 1))
    return RatFun(poly_from_json(data["numerator"]), forms)


def polytope_to_json(p: SimplePolytope) -> dict:
    return {
        "dim": p.dim,
        "cones": [
            {
                "vertex": [rat_str(c) for c in cone.vertex],
                "edges": [[rat_str(c) for c in e] for e in cone.edges],
            }
            for cone in p.cones
        ],
    }


def polytope_from_json(data) -> SimplePolytope:
    cones = [
        TangentCone([rat(c) for c in cone["vertex"]], [[rat(c) for c in e] for e in cone["edges"]])
        for cone in data["cones"]
    ]
    return SimplePolytope(data["dim"], cones)


def reconstruction_to_json(r: Reconstruction) -> dict:
    return {
        "pivot": r.pivot,
        "weights": [
            {"simplex": list(s), "weight": rat_str(w), "degenerate": dg}
            for s, w, dg in r.weights
        ],
        "singular": r.is_singular,
    }
