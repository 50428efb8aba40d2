"""Embedded corpus of worked examples with their expected results.

Each fixture is an ideal or a graph (plus which ideal of the graph) in the
text format of :mod:`copersist.parse`, and a list of expectations that
:func:`verify` recomputes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .closure import is_normal
from .core import MonomialIdeal, MonomialPrime, Ring, sorted_primes
from .decompose import irreducible_decomposition, primary_decomposition
from .graphs import SimpleGraph, cover_ideal, edge_ideal
from .parse import parse_graph, parse_ideal
from .properties import (
    AssSequence,
    ass_sequence,
    check_copersistence,
    check_generalized_nearly_copersistence,
    check_nearly_copersistence,
    check_normally_torsion_free,
    check_persistence,
    check_strong_persistence,
    stabilization_estimate,
)
from . import transforms


@dataclass
class Fixture:
    id: str
    source: str
    provenance: str
    expectations: list[dict[str, Any]] = field(default_factory=list)
    graph_ideal: str | None = None  # "edge" or "cover" for graph fixtures
    slow: bool = False

    def is_graph(self) -> bool:
        return self.graph_ideal is not None

    def graph(self) -> SimpleGraph:
        if not self.is_graph():
            raise ValueError(f"fixture {self.id} is not a graph")
        return parse_graph(self.source)

    def ideal(self) -> MonomialIdeal:
        if self.is_graph():
            G = self.graph()
            return edge_ideal(G) if self.graph_ideal == "edge" else cover_ideal(G)
        return parse_ideal(self.source).ideal

    def max_power(self) -> int:
        """Largest power whose Ass set the expectations look at."""
        ks = [1]
        for e in self.expectations:
            if e["kind"].startswith("ass"):
                ks.append(e.get("power", 1))
                ks.extend(e.get("powers", []))
            elif e["kind"] == "property" and e["name"] != "strong-persistence":
                ks.append(e["bound"])
        return max(ks)

    def to_dict(self) -> dict[str, Any]:
        d = {
            "id": self.id,
            "source": self.source,
            "provenance": self.provenance,
            "expectations": self.expectations,
            "slow": self.slow,
        }
        if self.graph_ideal:
            d["graph_ideal"] = self.graph_ideal
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Fixture:
        return cls(d["id"], d["source"], d.get("provenance", ""), list(d.get("expectations", [])),
                   d.get("graph_ideal"), d.get("slow", False))


def _vars(n: int, prefix: str = "x") -> str:
    return ",".join(f"{prefix}{i}" for i in range(1, n + 1))


def _infinite_cop(d: int) -> Fixture:
    src = (f"ring x1,x2,x3; ideal (x1^{d + 2}, x1^{d + 1}*x2, x1*x2^{d + 1}, x2^{d + 2}, "
           f"x1^{d}*x2^2*x3)")
    exps = [{"kind": "irreducible", "components": [
        f"(x1^{d + 2}, x2)", f"(x1^{d + 1}, x2^2)", f"(x1^{d}, x2^{d + 1})", f"(x1, x2^{d + 2})",
        f"(x1^{d + 1}, x2^{d + 1}, x3)"]},
        {"kind": "ass", "power": 1, "primes": [["x1", "x2"], ["x1", "x2", "x3"]]}]
    for k in range(1, d):
        exps.append({"kind": "ass_member", "power": k, "prime": ["x1", "x2", "x3"], "present": True})
    for k in (d, d + 1):
        exps.append({"kind": "ass", "power": k, "primes": [["x1", "x2"]]})
    return Fixture(f"infinite_cop_d{d}", src,
                   f"family losing (x1,x2,x3) exactly from power d on, with d={d}", exps)


M5 = ["x1", "x2", "x3", "x4", "x5"]

CORPUS: list[Fixture] = [
    Fixture(
        "exam_polarization_1",
        "ring x,y,z,t; ideal (x^4, y^4*z, x^3*y, x*y^3, x^2*y^2*z*t)",
        "copersistent ideal whose polarization is not copersistent",
        [
            {"kind": "primary", "components": [
                "(x^4, x^3*y, x^2*y^2, x*y^3, y^4)", "(x, z)", "(x^3, y^3, z)", "(x^3, y^3, t)"]},
            {"kind": "ass", "power": 1, "primes": [["x", "y"], ["x", "z"], ["x", "y", "z"], ["x", "y", "t"]]},
            {"kind": "ass", "power": 2, "primes": [["x", "y"], ["x", "z"], ["x", "y", "z"]]},
            {"kind": "ass", "power": 3, "primes": [["x", "y"], ["x", "z"], ["x", "y", "z"]]},
            {"kind": "property", "name": "copersistence", "bound": 4, "verdict": "holds-up-to-bound"},
            {"kind": "equals", "op": "polarize", "args": {},
             "result": "ring x_1,x_2,x_3,x_4,y_1,y_2,y_3,y_4,z_1,t_1; ideal (x_1*x_2*x_3*x_4, y_1*y_2*y_3*y_4*z_1, x_1*x_2*x_3*y_1, x_1*y_1*y_2*y_3, "
                       "x_1*x_2*y_1*y_2*z_1*t_1)"},
        ],
    ),
    Fixture(
        "exam_polarization_1_polarized",
        "ring x_1,x_2,x_3,x_4,y_1,y_2,y_3,y_4,z_1,t_1; ideal (x_1*x_2*x_3*x_4, y_1*y_2*y_3*y_4*z_1, "
        "x_1*x_2*x_3*y_1, x_1*y_1*y_2*y_3, x_1*x_2*y_1*y_2*z_1*t_1)",
        "polarization of exam_polarization_1",
        [
            {"kind": "ass_member", "power": 2, "prime": ["x_1", "x_3", "y_3", "z_1"], "present": True},
            {"kind": "ass_member", "power": 1, "prime": ["x_1", "x_3", "y_3", "z_1"], "present": False},
            {"kind": "property", "name": "copersistence", "bound": 2, "verdict": "violated",
             "power": 1, "witness": ["x_1", "x_3", "y_3", "z_1"]},
            {"kind": "equals", "op": "depolarize", "args": {},
             "result": "ring x,y,z,t; ideal (x^4, y^4*z, x^3*y, x*y^3, x^2*y^2*z*t)"},
        ],
    ),
    Fixture(
        "exam_polarization_2_L",
        "ring x1,x2,x3,x4; ideal (x1^3*x2, x1*x2^3, x2^4, x1^4*x3, x1^4*x4)",
        "ideal gaining the maximal ideal at the second power",
        [
            {"kind": "ass_member", "power": 2, "prime": ["x1", "x2", "x3", "x4"], "present": True},
            {"kind": "ass_member", "power": 1, "prime": ["x1", "x2", "x3", "x4"], "present": False},
            {"kind": "property", "name": "copersistence", "bound": 2, "verdict": "violated",
             "power": 1, "witness": ["x1", "x2", "x3", "x4"]},
        ],
    ),
    Fixture(
        "exam_polarization_2_Ltilde",
        f"ring {_vars(10)}; ideal (x1*x2*x3*x5, x1*x5*x6*x7, x5*x6*x7*x8, x1*x2*x3*x4*x9, x1*x2*x3*x4*x10)",
        "polarization of exam_polarization_2_L, written in x1..x10",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x5"], ["x1", "x6"], ["x1", "x7"], ["x1", "x8"], ["x2", "x5"], ["x2", "x6"],
                ["x2", "x7"], ["x3", "x5"], ["x3", "x6"], ["x3", "x7"], ["x4", "x5"], ["x5", "x9", "x10"]]},
            {"kind": "property", "name": "normally-torsion-free", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "equals", "op": "depolarize",
             "args": {"base": ["x1", "x2", "x3", "x4"],
                      "shadows": {"x1": "x1", "x2": "x1", "x3": "x1", "x4": "x1", "x5": "x2", "x6": "x2",
                                  "x7": "x2", "x8": "x2", "x9": "x3", "x10": "x4"}},
             "result": "ring x1,x2,x3,x4; ideal (x1^3*x2, x1*x2^3, x2^4, x1^4*x3, x1^4*x4)"},
        ],
    ),
    Fixture(
        "deletion_example",
        "ring x1,x2,x3,x4; ideal (x1*x4, x2^2, x1*x2, x3*x4^2, x3^2*x4, x2*x3*x4, x1*x3^2)",
        "normal ideal whose deletion of x3 is not copersistent",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x2", "x3"], ["x1", "x2", "x4"], ["x2", "x3", "x4"], ["x1", "x2", "x3", "x4"]]},
            {"kind": "normal", "value": True},
            {"kind": "equals", "op": "delete", "args": {"var": "x3"},
             "result": "ring x1,x2,x4; ideal (x1*x4, x2^2, x1*x2)"},
        ],
    ),
    Fixture(
        "deletion_example_L",
        "ring x1,x2,x4; ideal (x1*x4, x2^2, x1*x2)",
        "deletion_example with x3 set to 0",
        [
            {"kind": "ass_member", "power": 2, "prime": ["x1", "x2", "x4"], "present": True},
            {"kind": "ass_member", "power": 1, "prime": ["x1", "x2", "x4"], "present": False},
            {"kind": "property", "name": "copersistence", "bound": 2, "verdict": "violated",
             "power": 1, "witness": ["x1", "x2", "x4"]},
        ],
    ),
    _infinite_cop(2),
    _infinite_cop(3),
    Fixture(
        "exam_ncop_1_I",
        f"ring {_vars(5)}; ideal (x1*x2^2*x3, x2*x3^2*x4, x3*x4^2*x5, x4*x5^2*x1, x5*x1^2*x2)",
        "the maximal ideal leaves Ass at power 2 and returns at power 4",
        [
            {"kind": "ass_member", "power": 1, "prime": M5, "present": True},
            {"kind": "ass_member", "power": 2, "prime": M5, "present": False},
            {"kind": "ass_member", "power": 3, "prime": M5, "present": False},
            {"kind": "ass_member", "power": 4, "prime": M5, "present": True},
            {"kind": "property", "name": "stabilization", "bound": 4, "verdict": "violated"},
            {"kind": "equals", "op": "contract", "args": {"var": "x5"},
             "result": "ring x1,x2,x3,x4; ideal (x1*x2^2*x3, x2*x3^2*x4, x3*x4^2, x1*x4, x1^2*x2)"},
        ],
    ),
    Fixture(
        "exam_ncop_1_J",
        "ring x1,x2,x3,x4; ideal (x1*x2^2*x3, x2*x3^2*x4, x3*x4^2, x1*x4, x1^2*x2)",
        "localization of exam_ncop_1_I at the prime without x5; normal and torsion-free",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x3"], ["x1", "x4"], ["x2", "x4"], ["x1", "x2", "x4"], ["x1", "x3", "x4"]]},
            {"kind": "normal", "value": True},
            {"kind": "property", "name": "normally-torsion-free", "bound": 4, "verdict": "holds-up-to-bound"},
        ],
    ),
    Fixture(
        "not_lem_ncop_1_L",
        f"ring {_vars(6)}; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1, x1*x4*x6)",
        "nearly copersistent ideal whose localization is not copersistent",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x2", "x4"], ["x1", "x3", "x4"], ["x1", "x3", "x5"], ["x2", "x4", "x5"],
                ["x2", "x3", "x5", "x6"]]},
            {"kind": "ass", "power": 2, "primes": [
                ["x1", "x2", "x4"], ["x1", "x3", "x4"], ["x1", "x3", "x5"], ["x2", "x4", "x5"],
                ["x2", "x3", "x5", "x6"], M5]},
            {"kind": "property", "name": "nearly-copersistence", "bound": 3, "verdict": "holds-up-to-bound",
             "s": 1, "prime": M5},
            {"kind": "property", "name": "strong-persistence", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "normal", "value": True},
            {"kind": "equals", "op": "localize", "args": {"prime": M5},
             "result": f"ring {_vars(5)}; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1, x1*x4)"},
        ],
    ),
    Fixture(
        "not_lem_ncop_1_Q",
        f"ring {_vars(5)}; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1, x1*x4)",
        "localization of not_lem_ncop_1_L at the prime without x6",
        [
            {"kind": "property", "name": "copersistence", "bound": 2, "verdict": "violated",
             "power": 1, "witness": M5},
        ],
    ),
    Fixture(
        "c3_cover",
        "graph x1,x2,x3; edges (x1-x2, x2-x3, x1-x3)",
        "cover ideal of the triangle; gains the maximal ideal from power 2 on",
        [
            {"kind": "ass", "power": 1, "primes": [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]]},
            {"kind": "ass", "power": 2, "primes": [["x1", "x2"], ["x1", "x3"], ["x2", "x3"], ["x1", "x2", "x3"]]},
            {"kind": "ass", "power": 3, "primes": [["x1", "x2"], ["x1", "x3"], ["x2", "x3"], ["x1", "x2", "x3"]]},
            {"kind": "property", "name": "normally-torsion-free", "bound": 2, "verdict": "violated",
             "power": 2, "witness": ["x1", "x2", "x3"]},
            {"kind": "property", "name": "persistence", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "property", "name": "strong-persistence", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "property", "name": "stabilization", "bound": 4, "verdict": "holds-up-to-bound",
             "stabilization_power": 2},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "holds-up-to-bound"},
        ],
        graph_ideal="cover",
    ),
    Fixture(
        "c5_cover",
        "graph x1,x2,x3,x4,x5; edges (x1-x2, x2-x3, x3-x4, x4-x5, x1-x5)",
        "cover ideal of the 5-cycle; gains the maximal ideal from power 2 on",
        [
            {"kind": "ass_added", "power": 2, "primes": [M5]},
            {"kind": "ass_same", "powers": [2, 3]},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "holds-up-to-bound"},
        ],
        graph_ideal="cover",
    ),
    Fixture(
        "c5_edge",
        "graph x1,x2,x3,x4,x5; edges (x1-x2, x2-x3, x3-x4, x4-x5, x1-x5)",
        "edge ideal of the 5-cycle; Ass is Min up to power 2, then the maximal ideal joins",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x2", "x4"], ["x1", "x3", "x4"], ["x1", "x3", "x5"], ["x2", "x3", "x5"], ["x2", "x4", "x5"]]},
            {"kind": "ass_same", "powers": [1, 2]},
            {"kind": "ass_added", "power": 3, "primes": [M5]},
            {"kind": "property", "name": "persistence", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "holds-up-to-bound",
             "s": 2, "prime": M5},
        ],
        graph_ideal="edge",
    ),
    Fixture(
        "c4_cover",
        "graph x1,x2,x3,x4; edges (x1-x2, x2-x3, x3-x4, x1-x4)",
        "cover ideal of a bipartite graph",
        [
            {"kind": "property", "name": "normally-torsion-free", "bound": 3, "verdict": "holds-up-to-bound"},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "holds-up-to-bound"},
        ],
        graph_ideal="cover",
    ),
    Fixture(
        "c5_pendant_cover",
        "graph x1,x2,x3,x4,x5,x6; edges (x1-x2, x2-x3, x3-x4, x4-x5, x1-x5, x5-x6)",
        "cover ideal of an almost bipartite graph (5-cycle with a pendant vertex)",
        [
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "holds-up-to-bound"},
        ],
        graph_ideal="cover",
    ),
    Fixture(
        "two_triangles_cover",
        "graph x1,x2,x3,x4,x5,x6,x7,x8; edges (x1-x2, x2-x3, x1-x3, x3-x7, x7-x8, x8-x4, x4-x5, x5-x6, x4-x6)",
        "cover ideal of two triangles joined by a path with three edges; two induced odd cycles",
        [
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "violated", "power": 1},
        ],
        graph_ideal="cover",
    ),
    Fixture(
        "closing_example",
        f"graph {_vars(9)}; edges (x1-x2, x2-x3, x3-x4, x4-x5, x5-x6, x6-x7, x1-x7, x8-x9)",
        "edge ideal of the 7-cycle plus a disjoint edge; a sum of nearly copersistent ideals that is not",
        [
            {"kind": "ass_same", "powers": [1, 2, 3]},
            {"kind": "ass_added", "power": 4, "primes": [
                ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"], ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x9"]]},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "violated", "power": 3},
        ],
        graph_ideal="edge",
        slow=True,
    ),
    Fixture(
        "conclusion_example",
        f"ring {_vars(6)}; ideal (x1^6, x1^5*x2, x1*x2^5, x2^6, x1^4*x2^4*x3, x1^4*x2^4*x4, "
        "x1^4*x5^2*x6^3, x2^4*x5^3*x6^2)",
        "two extra primes are needed for the first two containments",
        [
            {"kind": "ass", "power": 1, "primes": [
                ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x6"], ["x1", "x2", "x3", "x4", "x5"],
                ["x1", "x2", "x3", "x4", "x6"], ["x1", "x2", "x3", "x4", "x5", "x6"]]},
            {"kind": "ass", "power": 2, "primes": [
                ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x6"], ["x1", "x2", "x5", "x6"],
                ["x1", "x2", "x3", "x4", "x5"], ["x1", "x2", "x3", "x4", "x6"]]},
            {"kind": "ass", "power": 3, "primes": [
                ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x6"], ["x1", "x2", "x5", "x6"],
                ["x1", "x2", "x3", "x4", "x5", "x6"]]},
            {"kind": "ass", "power": 4, "primes": [
                ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x6"], ["x1", "x2", "x5", "x6"]]},
            {"kind": "property", "name": "generalized-nearly-copersistence", "bound": 4, "t_max": 2,
             "verdict": "holds-up-to-bound", "t": 2, "s": 2,
             "primes": [["x1", "x2", "x5", "x6"], ["x1", "x2", "x3", "x4", "x5", "x6"]]},
            {"kind": "property", "name": "nearly-copersistence", "bound": 4, "verdict": "violated"},
        ],
    ),
    Fixture(
        "expansion_example",
        "ring x1,x2,x3; ideal (x1*x2^2, x2*x3, x3^3)",
        "worked expansion with the tuple (3,1,2)",
        [
            {"kind": "equals", "op": "expand", "args": {"tuple": [3, 1, 2]},
             "result": "ring x1_1,x1_2,x1_3,x2_1,x3_1,x3_2; ideal (x1_1*x2_1^2, x1_2*x2_1^2, x1_3*x2_1^2, "
                       "x2_1*x3_1, x2_1*x3_2, x3_1^3, x3_1^2*x3_2, x3_1*x3_2^2, x3_2^3)"},
        ],
    ),
    Fixture(
        "weighting_example",
        f"ring {_vars(5)}; ideal (x1^2*x4, x2^4*x4^2*x5, x1*x3^2*x5^3)",
        "worked weighting with W = (3,2,2,4,1)",
        [
            {"kind": "equals", "op": "weight", "args": {"weights": [3, 2, 2, 4, 1]},
             "result": f"ring {_vars(5)}; ideal (x1^6*x4^4, x2^8*x4^8*x5, x1^3*x3^4*x5^3)"},
        ],
    ),
]

BY_ID = {f.id: f for f in CORPUS}


def get(fid: str) -> Fixture:
    try:
        return BY_ID[fid]
    except KeyError:
        raise KeyError(f"no fixture {fid!r}") from None


def prime_names(primes) -> list[list[str]]:
    return [list(p.vars) for p in primes]


def _primes(ring: Ring, lists) -> tuple[MonomialPrime, ...]:
    return sorted_primes(MonomialPrime(ring, tuple(v)) for v in lists)


_CHECKS = {
    "copersistence": check_copersistence,
    "persistence": check_persistence,
    "normally-torsion-free": check_normally_torsion_free,
    "nearly-copersistence": check_nearly_copersistence,
    "stabilization": stabilization_estimate,
}


def run_check(name: str, I: MonomialIdeal, N: int, seq: AssSequence | None = None, t_max: int = 1):
    """Run the named property check, reusing ``seq`` when it reaches N."""
    src = seq if seq is not None and seq.max_power >= N else I
    if name == "strong-persistence":
        return check_strong_persistence(I, N)
    if name == "generalized-nearly-copersistence":
        return check_generalized_nearly_copersistence(src, N, t_max)
    try:
        fn = _CHECKS[name]
    except KeyError:
        raise KeyError(f"unknown property {name!r}") from None
    return fn(src, N)


def apply_op(I: MonomialIdeal, op: str, args: dict[str, Any]) -> MonomialIdeal:
    if op == "polarize":
        return transforms.polarize(I)
    if op == "depolarize":
        base = Ring(tuple(args["base"])) if "base" in args else None
        return transforms.depolarize(I, base, args.get("shadows"))
    if op == "expand":
        return transforms.expand(I, args["tuple"])
    if op == "weight":
        return transforms.weight(I, args["weights"])
    if op == "localize":
        return transforms.localize(I, args["prime"])
    if op == "contract":
        return transforms.contract(I, args["var"])
    if op == "delete":
        return transforms.delete(I, args["var"])
    raise KeyError(f"unknown operation {op!r}")


@dataclass
class Outcome:
    fixture: str
    expectation: dict[str, Any]
    ok: bool
    detail: str = ""


def verify(fx: Fixture, seq: AssSequence | None = None) -> list[Outcome]:
    I = fx.ideal()
    R = I.ring
    need = fx.max_power()
    if seq is None or seq.max_power < need:
        seq = ass_sequence(I, need)
    out = []
    for e in fx.expectations:
        ok, detail = _check(I, R, seq, e)
        out.append(Outcome(fx.id, e, ok, detail))
    return out


def _check(I: MonomialIdeal, R: Ring, seq: AssSequence, e: dict[str, Any]) -> tuple[bool, str]:
    kind = e["kind"]
    if kind == "ass":
        got = seq[e["power"]]
        want = _primes(R, e["primes"])
        return got == want, f"Ass(I^{e['power']}) = {prime_names(got)}"
    if kind == "ass_member":
        p = MonomialPrime(R, tuple(e["prime"]))
        got = p in seq[e["power"]]
        return got == e["present"], f"{p} in Ass(I^{e['power']}): {got}"
    if kind == "ass_same":
        sets = [set(seq[k]) for k in e["powers"]]
        return all(s == sets[0] for s in sets), f"powers {e['powers']}"
    if kind == "ass_added":
        k = e["power"]
        before, after = set(seq[k - 1]), set(seq[k])
        added = sorted_primes(after - before)
        ok = before <= after and added == _primes(R, e["primes"])
        return ok, f"added at power {k}: {prime_names(added)}"
    if kind in ("irreducible", "primary"):
        if kind == "irreducible":
            got = [c.ideal() for c in irreducible_decomposition(I)]
        else:
            got = [c.ideal for c in primary_decomposition(I)]
        head = f"ring {','.join(R.vars)}; ideal "
        want = [parse_ideal(head + c).ideal for c in e["components"]]
        ok = len(got) == len(want) and set(got) == set(want)
        return ok, f"components {[str(c) for c in got]}"
    if kind == "normal":
        got = is_normal(I).normal
        return got == e["value"], f"normal: {got}"
    if kind == "equals":
        got = apply_op(I, e["op"], e["args"])
        want = parse_ideal(e["result"]).ideal
        return got == want, f"{e['op']} gives {got}"
    if kind == "property":
        rep = run_check(e["name"], I, e["bound"], seq, e.get("t_max", 1))
        problems = []
        if rep.verdict != e["verdict"]:
            problems.append(f"verdict {rep.verdict}")
        v = rep.first_violation
        if "power" in e and (v is None or v.power != e["power"]):
            problems.append(f"power {v.power if v else None}")
        if "witness" in e and (v is None or not isinstance(v.witness, MonomialPrime)
                               or list(v.witness.vars) != e["witness"]):
            problems.append(f"witness {v.witness if v else None}")
        if "offending_contains" in e:
            p = MonomialPrime(R, tuple(e["offending_contains"]))
            if v is None or p not in v.offending:
                problems.append("offending prime missing")
        aux = rep.auxiliary
        for key in ("s", "t", "stabilization_power"):
            if key in e and aux.get(key) != e[key]:
                problems.append(f"{key}={aux.get(key)}")
        if "prime" in e:
            got = aux.get("prime")
            if got is None or list(got.vars) != e["prime"]:
                problems.append(f"prime={got}")
        if "primes" in e and prime_names(aux.get("primes", ())) != prime_names(_primes(R, e["primes"])):
            problems.append(f"primes={aux.get('primes')}")
        return not problems, str(rep) + ("; mismatch: " + ", ".join(problems) if problems else "")
    raise KeyError(f"unknown expectation kind {kind!r}")
