"""Cover, ordering and colouring certificates, plus their verifiers."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union

from .classes import ForestClass, edge_components, validate_edge_set
from .graph import Edge, Graph, norm_edge

MODES = ("cover", "partition")
COLORING_KINDS = ("proper-vertex", "acyclic-vertex", "proper-edge", "strong-edge")


@dataclass(frozen=True)
class CoverCertificate:
    """A family of nonempty edge sets claimed to cover (or partition) E(G)."""

    cls: ForestClass
    mode: str
    parts: tuple[frozenset[Edge], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        parts = tuple(frozenset(norm_edge(u, v) for u, v in p) for p in self.parts)
        if any(not p for p in parts):
            raise ValueError("certificate parts must be nonempty")
        if self.labels is not None and len(self.labels) != len(parts):
            raise ValueError("labels must match parts one-to-one")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @classmethod
    def from_families(cls, forest_class: ForestClass, mode: str, families: Mapping[str, Iterable[Edge]]):
        """Build from labelled families, silently dropping the empty ones."""
        kept = [(lab, frozenset(es)) for lab, es in families.items()]
        kept = [(lab, es) for lab, es in kept if es]
        return cls(forest_class, mode, tuple(es for _, es in kept), tuple(lab for lab, _ in kept))

    def vertex_sets(self) -> list[set[int]]:
        return [{x for e in p for x in e} for p in self.parts]

    def loads(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for vs in self.vertex_sets():
            for v in vs:
                out[v] += 1
        return dict(out)


@dataclass
class VerifyReport:
    part_valid: list[bool]
    missing: list[Edge]
    foreign: list[Edge]
    overlaps: list[tuple[Edge, list[int]]]
    loads: dict[int, int]
    issues: list[str] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return not self.missing

    @property
    def ok(self) -> bool:
        return all(self.part_valid) and not self.missing and not self.foreign and not self.overlaps

    def summary(self) -> str:
        return "valid" if self.ok else "; ".join(self.issues)


def verify_certificate(G: Graph, cert: CoverCertificate) -> VerifyReport:
    """Check every part against its class plus coverage/disjointness; never raises."""
    issues = []
    foreign = sorted({e for p in cert.parts for e in p if e not in G.edge_set})
    if foreign:
        issues.append("edges not in graph: " + " ".join(f"{u}-{v}" for u, v in foreign))
    part_valid = []
    for i, p in enumerate(cert.parts, 1):
        inside = [e for e in p if e in G.edge_set]
        ok = len(inside) == len(p) and validate_edge_set(G, inside, cert.cls)
        part_valid.append(ok)
        if not ok:
            issues.append(f"part {i} is not a valid {cert.cls.long_name}")
    owners: dict[Edge, list[int]] = defaultdict(list)
    for i, p in enumerate(cert.parts, 1):
        for e in p:
            owners[e].append(i)
    missing = [e for e in G.edges if e not in owners]
    if missing:
        issues.append("uncovered edges: " + " ".join(f"{u}-{v}" for u, v in missing))
    overlaps = []
    if cert.mode == "partition":
        overlaps = sorted((e, o) for e, o in owners.items() if len(o) > 1)
        if overlaps:
            issues.append(f"{len(overlaps)} edges lie in more than one part")
    return VerifyReport(part_valid, missing, foreign, overlaps, cert.loads(), issues)


@dataclass(frozen=True)
class OrderingCertificate:
    order: tuple[int, ...]
    d: int

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def back_degrees(self, G: Graph) -> dict[int, int]:
        pos = self.position()
        return {v: sum(1 for w in G.neighbors(v) if pos[w] < pos[v]) for v in self.order}

    def check(self, G: Graph) -> bool:
        if sorted(self.order) != list(G.vertices):
            return False
        return all(b <= self.d for b in self.back_degrees(G).values())


Coloring = Mapping[Union[int, Edge], int]


@dataclass(frozen=True)
class ColoringCertificate:
    kind: str
    assignment: dict
    c: int

    def __post_init__(self):
        if self.kind not in COLORING_KINDS:
            raise ValueError(f"coloring kind must be one of {COLORING_KINDS}, got {self.kind!r}")
        if self.is_edge_kind:
            assignment = {norm_edge(*e): col for e, col in self.assignment.items()}
        else:
            assignment = dict(self.assignment)
        object.__setattr__(self, "assignment", assignment)

    @property
    def is_edge_kind(self) -> bool:
        return self.kind.endswith("-edge")

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def classes(self) -> dict[int, list]:
        out: dict[int, list] = defaultdict(list)
        for x, col in self.assignment.items():
            out[col].append(x)
        return dict(out)


def _acyclic(G: Graph, vertices: Iterable[int]) -> bool:
    es = G.induced_edges(vertices)
    return all(len(part) == len(vs) - 1 for vs, part in edge_components(es))


def verify_coloring(G: Graph, col: ColoringCertificate) -> bool:
    """Whether ``col`` satisfies its declared kind on ``G``.

    Raises ``ValueError`` if the assignment is not total on V(G) (vertex kinds)
    or E(G) (edge kinds), or uses colours outside ``1..c``.
    """
    a = col.assignment
    domain = set(G.edges) if col.is_edge_kind else set(G.vertices)
    if set(a) != domain:
        absent = sorted(domain - set(a), key=str)
        extra = sorted(set(a) - domain, key=str)
        raise ValueError(f"assignment not total: missing {absent[:5]}, extra {extra[:5]}")
    if any(not (1 <= x <= col.c) for x in a.values()):
        raise ValueError(f"colours must lie in 1..{col.c}")

    if col.is_edge_kind:
        cls = ForestClass.MATCHING if col.kind == "proper-edge" else ForestClass.INDUCED_MATCHING
        return all(validate_edge_set(G, es, cls) for es in col.classes().values())

    if any(a[u] == a[v] for u, v in G.edges):
        return False
    if col.kind == "acyclic-vertex":
        classes = col.classes()
        for i, j in combinations(sorted(classes), 2):
            if not _acyclic(G, classes[i] + classes[j]):
                return False
    return True
