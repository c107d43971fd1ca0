"""Relations between the arboricity-type parameters, and a driver computing them."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Mapping, Optional

from ..classes import ForestClass
from ..graph import Graph
from .coloring import acyclic_chromatic_number, chromatic_number, edge_chromatic_number
from .engine import FEASIBLE_S, Budget, SolveRequest, SolveResult, min_cover

# a, weak induced / induced arboricity, their star versions, star arboricity,
# strong chromatic index, chromatic index, acyclic chromatic number, chromatic number.
PARAMETERS = ("a", "wia", "ia", "isa", "wisa", "sa", "chi_s", "chi_e", "chi_acyc", "chi")

CLASS_OF = {
    "a": ForestClass.FOREST,
    "wia": ForestClass.WEAK_INDUCED_FOREST,
    "ia": ForestClass.INDUCED_FOREST,
    "isa": ForestClass.INDUCED_STAR_FOREST,
    "wisa": ForestClass.WEAK_INDUCED_STAR_FOREST,
    "sa": ForestClass.STAR_FOREST,
    "chi_s": ForestClass.INDUCED_MATCHING,
}


@dataclass(frozen=True)
class Relation:
    text: str
    needs: tuple[str, ...]
    holds: Callable[..., bool]


def _le(a: str, b: str) -> Relation:
    return Relation(f"{a} <= {b}", (a, b), lambda x, y: x <= y)


RELATIONS: tuple[Relation, ...] = (
    # chain a <= wia <= ia <= isa <= chi_s
    _le("a", "wia"), _le("wia", "ia"), _le("ia", "isa"), _le("isa", "chi_s"),
    # wia <= wisa <= isa
    _le("wia", "wisa"), _le("wisa", "isa"),
    # a <= sa <= wisa <= chi_e <= chi_s
    _le("a", "sa"), _le("sa", "wisa"), _le("wisa", "chi_e"), _le("chi_e", "chi_s"),
    # star versions within a constant factor
    Relation("sa <= 2 a", ("sa", "a"), lambda s, a: s <= 2 * a),
    Relation("wisa <= 2 wia", ("wisa", "wia"), lambda s, w: s <= 2 * w),
    Relation("isa <= 3 ia", ("isa", "ia"), lambda s, i: s <= 3 * i),
    Relation("wia <= 4 a^2", ("wia", "a"), lambda w, a: w <= 4 * a * a),
    Relation("wia <= sa * chi", ("wia", "sa", "chi"), lambda w, s, c: w <= s * c),
    # log_3 chi_acyc <= ia, written without logarithms
    Relation("chi_acyc <= 3^ia", ("chi_acyc", "ia"), lambda c, i: c <= 3 ** i),
    Relation("ia <= C(chi_acyc, 2)", ("ia", "chi_acyc"), lambda i, c: i <= comb(c, 2)),
    Relation("a <= chi_acyc - 1", ("a", "chi_acyc"), lambda a, c: a <= max(c - 1, 0)),
    Relation("sa <= chi_acyc", ("sa", "chi_acyc"), lambda s, c: s <= c),
    Relation("wia <= chi_acyc - 1 + (chi_acyc mod 2)", ("wia", "chi_acyc"),
             lambda w, c: w <= max(c - 1 + c % 2, 0)),
    Relation("chi <= chi_acyc", ("chi", "chi_acyc"), lambda x, c: x <= c),
)


def check_inequality_chain(params: Mapping[str, int]) -> list[str]:
    """Relations violated by the supplied values; those with missing inputs are skipped."""
    unknown = set(params) - set(PARAMETERS)
    if unknown:
        raise ValueError(f"unknown parameters {sorted(unknown)}")
    out = []
    for rel in RELATIONS:
        if all(p in params and params[p] is not None for p in rel.needs):
            if not rel.holds(*(params[p] for p in rel.needs)):
                vals = ", ".join(f"{p}={params[p]}" for p in rel.needs)
                out.append(f"{rel.text} ({vals})")
    return out


@dataclass
class ParameterReport:
    values: dict[str, int] = field(default_factory=dict)
    results: dict[str, SolveResult] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return all(p in self.values for p in PARAMETERS)

    @property
    def violations(self) -> list[str]:
        return check_inequality_chain(self.values)


def compute_parameters(G: Graph, budget: Optional[Budget] = None,
                       which: tuple[str, ...] = PARAMETERS) -> ParameterReport:
    """Compute every affordable parameter, seeding each search with proven lower bounds."""
    budget = budget or Budget()
    rep = ParameterReport()
    known = rep.values

    def seed(*names: str) -> int:
        return max((known[n] for n in names if n in known), default=0)

    def run(name: str, res: SolveResult) -> None:
        rep.results[name] = res
        if res.status == FEASIBLE_S:
            known[name] = res.k

    def cover(name: str, *below: str) -> None:
        if name in which:
            run(name, min_cover(SolveRequest(G, CLASS_OF[name], "cover", budget=budget,
                                             lower_bound=seed(*below))))

    cover("a")
    cover("sa", "a")
    cover("wia", "a")
    cover("wisa", "wia", "sa")
    cover("ia", "wia")
    cover("isa", "ia", "wisa")
    if "chi_e" in which:
        run("chi_e", edge_chromatic_number(G, budget))
    cover("chi_s", "isa", "chi_e")
    if "chi" in which:
        run("chi", chromatic_number(G, budget))
    if "chi_acyc" in which:
        run("chi_acyc", acyclic_chromatic_number(G, budget))
    return rep
