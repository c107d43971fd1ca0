"""Builders that turn structure (orderings, colourings, covers) into certified covers."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .certificates import (
    ColoringCertificate, CoverCertificate, OrderingCertificate, verify_certificate, verify_coloring,
)
from .classes import ForestClass, edge_components, validate_edge_set
from .graph import Edge, Graph, norm_edge
from .structure import check_star_decomposition, degeneracy, is_half_shallow_minor

FC = ForestClass

# -- layer splitting -------------------------------------------------------------------


def _split_class(cls: ForestClass, modulus: int) -> ForestClass:
    if cls.induced and modulus == 3:
        return FC.INDUCED_STAR_FOREST
    if cls.induced or cls.weak_induced or cls is FC.MATCHING:
        return FC.WEAK_INDUCED_STAR_FOREST
    return FC.STAR_FOREST


def _depths(edges: Sequence[Edge]) -> dict[int, int]:
    """BFS depth of each vertex in a forest, rooting every tree at its smallest vertex."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    depth: dict[int, int] = {}
    for root in sorted(adj):
        if root in depth:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    queue.append(y)
    return depth


def split_layers(G: Graph, cert: CoverCertificate, modulus: int) -> CoverCertificate:
    """Cut every forest into star forests by BFS depth modulo ``modulus`` (2 or 3).

    Edge xy with depth(x) + 1 = depth(y) goes to bucket depth(x) mod modulus, so each
    bucket is a union of stars centred at its shallower layer.
    """
    if modulus not in (2, 3):
        raise ValueError("modulus must be 2 or 3")
    for i, part in enumerate(cert.parts, 1):
        if not validate_edge_set(G, part, FC.FOREST):
            raise ValueError(f"part {i} is not a forest")
        if not validate_edge_set(G, part, cert.cls):
            raise ValueError(f"part {i} is not a valid {cert.cls.long_name}")
    families: dict[str, list[Edge]] = {}
    for i, part in enumerate(cert.parts, 1):
        depth = _depths(sorted(part))
        buckets: list[list[Edge]] = [[] for _ in range(modulus)]
        for u, v in sorted(part):
            buckets[min(depth[u], depth[v]) % modulus].append((u, v))
        for r, es in enumerate(buckets):
            families[f"{i}.{r}"] = es
    return CoverCertificate.from_families(_split_class(cert.cls, modulus), cert.mode, families)


# -- degeneracy colouring ----------------------------------------------------------------


@dataclass
class DegeneracyColoring:
    """Edge colouring in 1..2d with a reserved colour set of size d per vertex."""

    ordering: OrderingCertificate
    edge_colors: dict[Edge, int] = field(default_factory=dict)
    reserved_sets: dict[int, frozenset[int]] = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.ordering.d

    def reserved_ok(self) -> bool:
        """|S(v)| = d and S(v) avoids the colours of v's edges to earlier vertices."""
        pos = self.ordering.position()
        for v, S in self.reserved_sets.items():
            if len(S) != self.d:
                return False
        for (u, v), c in self.edge_colors.items():
            later = v if pos[v] > pos[u] else u
            if c in self.reserved_sets[later]:
                return False
        return True

    def right_stars_ok(self) -> bool:
        """Every monochromatic component is a star whose centre precedes all its leaves."""
        pos = self.ordering.position()
        classes: dict[int, list[Edge]] = {}
        for e, c in self.edge_colors.items():
            classes.setdefault(c, []).append(e)
        for es in classes.values():
            for vs, part in edge_components(es):
                if len(part) == 1:
                    continue
                deg: dict[int, int] = {}
                for u, v in part:
                    deg[u] = deg.get(u, 0) + 1
                    deg[v] = deg.get(v, 0) + 1
                centres = [x for x, k in deg.items() if k >= 2]
                if len(centres) != 1 or len(part) != len(vs) - 1:
                    return False
                c = centres[0]
                if any(pos[x] < pos[c] for x in vs if x != c):
                    return False
        return True


def degeneracy_star_cover(G: Graph, check_invariants: bool = False):
    """Partition E(G) into at most 2d weak induced star forests of right stars.

    Walks a degeneracy ordering; each new vertex colours its edges to earlier
    neighbours from their reserved sets (smallest colour first), then reserves
    the d smallest colours it did not use.  Returns ``(DegeneracyColoring, cert)``.
    """
    order = degeneracy(G)
    d = order.d
    pos = order.position()
    palette = range(1, 2 * d + 1)
    col = DegeneracyColoring(order)
    colors = col.edge_colors
    for v in order.order:
        left = sorted((w for w in G.neighbors(v) if pos[w] < pos[v]), key=pos.__getitem__)
        picked: list[int] = []
        for i, w in enumerate(left):
            # Drop colours of w's edges to later left-neighbours of v.
            blocked = {colors[norm_edge(w, z)] for z in left[i + 1:] if G.has_edge(w, z)}
            avail = col.reserved_sets[w] - blocked
            if check_invariants:
                assert len(avail) >= i + 1, f"reserve of {w} too small at {v}"
            c = min(avail - set(picked))
            picked.append(c)
            colors[norm_edge(v, w)] = c
        col.reserved_sets[v] = frozenset([c for c in palette if c not in picked][:d])
        if check_invariants:
            assert len(col.reserved_sets[v]) == d
            assert not col.reserved_sets[v] & set(picked)
    families: dict[str, list[Edge]] = {str(c): [] for c in palette}
    for e in G.edges:
        families[str(colors[e])].append(e)
    cert = CoverCertificate.from_families(FC.WEAK_INDUCED_STAR_FOREST, "partition", families)
    return col, cert


# -- acyclic colourings ------------------------------------------------------------------


def _require_acyclic(G: Graph, col: ColoringCertificate) -> None:
    if col.kind != "acyclic-vertex" or not verify_coloring(G, col):
        raise ValueError("an acyclic vertex colouring is required")


def acyclic_pairs_cover(G: Graph, col: ColoringCertificate) -> CoverCertificate:
    """One induced forest per pair of colour classes: the edges between them.

    Pairs with no edges between them are dropped, so the part count is at most C(c, 2).
    """
    _require_acyclic(G, col)
    a = col.assignment
    families: dict[str, list[Edge]] = {f"{i}-{j}": [] for i, j in combinations(range(1, col.c + 1), 2)}
    for u, v in G.edges:
        i, j = sorted((a[u], a[v]))
        families[f"{i}-{j}"].append((u, v))
    return CoverCertificate.from_families(FC.INDUCED_FOREST, "partition", families)


def round_robin_matchings(k: int) -> list[list[tuple[int, int]]]:
    """Partition E(K_k) into k-1 matchings (k even) or k matchings (k odd) by the circle method."""
    if k < 2:
        raise ValueError("need k >= 2")
    m = k + (k % 2)  # odd k: add a dummy vertex m that sits out each round's partner
    rounds = []
    for r in range(m - 1):
        pairs = [(r, m - 1)]
        for i in range(1, m // 2):
            pairs.append(((r + i) % (m - 1), (r - i) % (m - 1)))
        rounds.append(sorted(
            tuple(sorted((x + 1, y + 1))) for x, y in pairs if x + 1 <= k and y + 1 <= k
        ))
    return rounds


def acyclic_matching_cover(G: Graph, col: ColoringCertificate) -> CoverCertificate:
    """Group colour-class pairs by a matching partition of K_c into weak induced forests."""
    _require_acyclic(G, col)
    if col.c < 2:
        return CoverCertificate(FC.WEAK_INDUCED_FOREST, "partition", ())
    a = col.assignment
    matchings = round_robin_matchings(col.c)
    slot = {pair: l for l, M in enumerate(matchings, 1) for pair in M}
    families: dict[str, list[Edge]] = {str(l): [] for l in range(1, len(matchings) + 1)}
    for u, v in G.edges:
        families[str(slot[tuple(sorted((a[u], a[v])))])].append((u, v))
    return CoverCertificate.from_families(FC.WEAK_INDUCED_FOREST, "partition", families)


# -- star forests and colourings -----------------------------------------------------------


def star_centres(edges: Sequence[Edge]) -> dict[Edge, int]:
    """Centre of the star containing each edge; a lone edge is centred at its smaller end."""
    out: dict[Edge, int] = {}
    for vs, part in edge_components(edges):
        deg: dict[int, int] = {}
        for u, v in part:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        hubs = [x for x, k in deg.items() if k >= 2]
        if len(hubs) > 1 or len(part) != len(vs) - 1:
            raise ValueError(f"component on {sorted(vs)} is not a star, so it has no centre")
        c = hubs[0] if hubs else min(vs)
        for e in part:
            out[e] = c
    return out


def leaf_color_split(G: Graph, stars: CoverCertificate, col: ColoringCertificate) -> CoverCertificate:
    """Split each star forest by the colour of the leaf end of its edges."""
    if col.kind not in ("proper-vertex", "acyclic-vertex") or not verify_coloring(G, col):
        raise ValueError("a proper vertex colouring is required")
    a = col.assignment
    families: dict[str, list[Edge]] = {}
    for i, part in enumerate(stars.parts, 1):
        centre = star_centres(sorted(part))
        for j in range(1, col.c + 1):
            families[f"{i}:{j}"] = []
        for e in sorted(part):
            leaf = e[1] if centre[e] == e[0] else e[0]
            families[f"{i}:{a[leaf]}"].append(e)
    return CoverCertificate.from_families(FC.WEAK_INDUCED_STAR_FOREST, stars.mode, families)


@dataclass(frozen=True)
class StarDecomposition:
    """Vertex-disjoint stars of a host graph, one per vertex of the minor, plus the minor's edges."""

    stars: tuple[tuple[int, frozenset[int]], ...]
    minor_edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "stars", tuple((c, frozenset(l)) for c, l in self.stars))
        object.__setattr__(self, "minor_edges", tuple(sorted(norm_edge(*e) for e in self.minor_edges)))

    def minor(self) -> Graph:
        return Graph(len(self.stars), self.minor_edges)

    def is_valid(self, G: Graph) -> bool:
        return is_half_shallow_minor(G, self.minor(), self.stars)


def shallow_minor_coloring(G: Graph, dec: StarDecomposition, phi: ColoringCertificate,
                           isa_cert: CoverCertificate) -> ColoringCertificate:
    """Colour the minor by (phi of the star centre, set of star forests meeting the star).

    The pair is encoded as ``phi + phi.c * mask`` where bit j-1 of ``mask`` marks
    star forest j, so at most ``phi.c * 2**len(isa_cert.parts)`` colours arise.
    """
    check_star_decomposition(G, dec.stars)
    H = dec.minor()
    if not is_half_shallow_minor(G, H, dec.stars):
        raise ValueError("stars do not witness the minor")
    if phi.kind not in ("proper-vertex", "acyclic-vertex") or not verify_coloring(G, phi):
        raise ValueError("phi must be a proper vertex colouring of the host")
    rep = verify_certificate(G, isa_cert)
    if not rep.covered:
        raise ValueError("star forests must cover the host")
    if not all(validate_edge_set(G, p, FC.INDUCED_STAR_FOREST) for p in isa_cert.parts):
        raise ValueError("every part must be an induced star forest")
    psi = {}
    for i, (c, leaves) in enumerate(dec.stars, 1):
        star_edges = {norm_edge(c, x) for x in leaves}
        mask = sum(1 << j for j, part in enumerate(isa_cert.parts) if part & star_edges)
        psi[i] = phi.assignment[c] + phi.c * mask
    out = ColoringCertificate("proper-vertex", psi, max(psi.values(), default=0))
    assert verify_coloring(H, out), "minor colouring is not proper"
    return out
