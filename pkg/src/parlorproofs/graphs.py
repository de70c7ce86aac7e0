"""Multigraphs, Eulerian trail analysis, and impossibility proof documents.

Vertices are named; parallel edges and self-loops are allowed.  The floor
plan and bridge map inputs use a line-oriented text format (see parse_graph).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from .proofdoc import ProofDocument, ProofStep, StepKind

OUTSIDE = "outside"


class GraphFormatError(ValueError):
    """Graph text is malformed; the message carries the line number."""


class DegenerateGraphError(ValueError):
    """Eulerian analysis needs at least one edge."""


class ProofContractError(ValueError):
    """An impossibility proof was requested for a graph that has a trail."""


@dataclass(frozen=True)
class Edge:
    id: int
    u: str
    v: str
    label: Optional[str] = None

    def other(self, vertex: str) -> str:
        return self.v if vertex == self.u else self.u

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Multigraph:
    vertices: frozenset
    edges: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        for edge in self.edges:
            for endpoint in (edge.u, edge.v):
                if endpoint not in self.vertices:
                    raise ValueError(f"edge {edge.id} references unknown "
                                     f"vertex {endpoint!r}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def graph_from_edges(pairs: Iterable, extra_vertices: Iterable = ()) -> Multigraph:
    """Build a Multigraph from (u, v) or (u, v, label) tuples."""
    edges = []
    vertices = set(extra_vertices)
    for i, pair in enumerate(pairs, start=1):
        u, v = pair[0], pair[1]
        label = pair[2] if len(pair) > 2 else None
        vertices.update((u, v))
        edges.append(Edge(i, u, v, label))
    return Multigraph(frozenset(vertices), tuple(edges))


def parse_graph(text: str) -> Multigraph:
    """Parse the line-oriented graph format.

    Lines: `vertex <name>` and `edge <name1> <name2> [label]`; `#` starts a
    comment; the vertex `outside` is declared implicitly on first use.
    """
    vertices: set = set()
    edges: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0].lower()
        if keyword == "vertex":
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'vertex <name>'")
            _check_name(parts[1], lineno)
            vertices.add(parts[1])
        elif keyword == "edge":
            if len(parts) not in (3, 4):
                raise GraphFormatError(
                    f"line {lineno}: expected 'edge <name1> <name2> [label]'"
                )
            u, v = parts[1], parts[2]
            label = parts[3] if len(parts) == 4 else None
            for endpoint in (u, v):
                _check_name(endpoint, lineno)
                if endpoint == OUTSIDE:
                    vertices.add(OUTSIDE)
                elif endpoint not in vertices:
                    raise GraphFormatError(
                        f"line {lineno}: edge references undeclared vertex "
                        f"{endpoint!r}"
                    )
            edges.append(Edge(len(edges) + 1, u, v, label))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {keyword!r}")
    return Multigraph(frozenset(vertices), tuple(edges))


def _check_name(name: str, lineno: int) -> None:
    if not name.replace("_", "").isalnum():
        raise GraphFormatError(f"line {lineno}: bad vertex name {name!r}")


def degree_map(g: Multigraph) -> dict:
    """Degree per vertex; a self-loop contributes 2."""
    degrees = {v: 0 for v in g.vertices}
    for edge in g.edges:
        degrees[edge.u] += 1
        degrees[edge.v] += 1
    return degrees


def odd_vertices(g: Multigraph) -> tuple:
    return tuple(sorted(v for v, d in degree_map(g).items() if d % 2 == 1))


class EulerianStatus(Enum):
    CIRCUIT = "Circuit"
    OPEN_TRAIL = "OpenTrail"
    NO_TRAIL = "NoTrail"
    DISCONNECTED = "Disconnected"


def _edge_connected(g: Multigraph) -> bool:
    """True when all edge-incident vertices lie in one component."""
    incident = {v for e in g.edges for v in (e.u, e.v)}
    if not incident:
        return True
    adjacency: dict = {v: set() for v in incident}
    for e in g.edges:
        adjacency[e.u].add(e.v)
        adjacency[e.v].add(e.u)
    seen = set()
    stack = [min(incident)]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adjacency[v] - seen)
    return seen == incident


def eulerian_status(g: Multigraph) -> EulerianStatus:
    """Classify g by connectivity and odd-degree count (isolated vertices
    are ignored)."""
    if g.edge_count == 0:
        raise DegenerateGraphError("graph has no edges")
    if not _edge_connected(g):
        return EulerianStatus.DISCONNECTED
    odd = len(odd_vertices(g))
    if odd == 0:
        return EulerianStatus.CIRCUIT
    if odd == 2:
        return EulerianStatus.OPEN_TRAIL
    return EulerianStatus.NO_TRAIL


@dataclass(frozen=True)
class TrailStep:
    edge_id: int
    frm: str
    to: str


@dataclass(frozen=True)
class Trail:
    steps: tuple
    start: str
    end: str

    def edge_ids(self) -> tuple:
        return tuple(step.edge_id for step in self.steps)

    def vertex_sequence(self) -> tuple:
        return (self.start,) + tuple(step.to for step in self.steps)

    def render_text(self) -> str:
        return " -> ".join(self.vertex_sequence())


def find_trail(g: Multigraph) -> Union[Trail, EulerianStatus]:
    """An Eulerian trail, constructed by circuit splicing; or the negative
    status when none exists.

    Deterministic: the walk always takes the unused incident edge with the
    lowest id, and an open trail starts at the smallest-named odd vertex.
    """
    status = eulerian_status(g)
    if status not in (EulerianStatus.CIRCUIT, EulerianStatus.OPEN_TRAIL):
        return status

    incidence: dict = {v: [] for v in g.vertices}
    for edge in g.edges:
        incidence[edge.u].append(edge)
        if not edge.is_loop:
            incidence[edge.v].append(edge)
    for lists in incidence.values():
        lists.sort(key=lambda e: e.id, reverse=True)  # pop() takes lowest id

    odd = odd_vertices(g)
    start = odd[0] if odd else min(v for e in g.edges for v in (e.u, e.v))

    used: set = set()
    vertex_stack: list = [start]
    out_vertices: list = []
    while vertex_stack:
        vertex = vertex_stack[-1]
        lists = incidence[vertex]
        while lists and lists[-1].id in used:
            lists.pop()
        if lists:
            edge = lists.pop()
            used.add(edge.id)
            vertex_stack.append(edge.other(vertex))
        else:
            out_vertices.append(vertex_stack.pop())
    out_vertices.reverse()
    # Splicing can reorder arrival edges relative to the final vertex walk;
    # re-attribute edge ids by matching each consecutive pair to an unused
    # edge with those endpoints (parallel edges are interchangeable).
    pool: dict = {}
    for edge in g.edges:
        pool.setdefault(frozenset((edge.u, edge.v)), []).append(edge.id)
    for ids in pool.values():
        ids.sort(reverse=True)
    steps = tuple(
        TrailStep(pool[frozenset((frm, to))].pop(), frm, to)
        for frm, to in zip(out_vertices, out_vertices[1:])
    )
    return Trail(steps, out_vertices[0], out_vertices[-1])


def impossibility_proof(g: Multigraph, vertex_noun: str = "vertex",
                        edge_noun: str = "edge",
                        place_name: str = "the graph") -> ProofDocument:
    """Claim-Proof document that no trail of g contains every edge.

    Only valid when eulerian_status(g) is NO_TRAIL; the step order is
    claim, model, counts, reduction, parity lemma, odd list, contradiction,
    qed.
    """
    status = eulerian_status(g)
    if status is not EulerianStatus.NO_TRAIL:
        raise ProofContractError(
            f"graph status is {status.value}; an impossibility proof needs "
            f"more than two odd-degree vertices in a connected graph"
        )
    odd = odd_vertices(g)
    n_vertices = len(g.vertices)
    n_edges = g.edge_count

    steps = (
        ProofStep(StepKind.CLAIM,
                  f"There is no route through {place_name} that uses every "
                  f"{edge_noun} exactly once."),
        ProofStep(StepKind.MODEL,
                  f"Represent {place_name} with a graph G: draw a vertex for "
                  f"each {vertex_noun} and an edge for each {edge_noun}."),
        ProofStep(StepKind.COUNT,
                  f"G consists of {n_vertices} vertices and {n_edges} edges."),
        ProofStep(StepKind.OBSERVATION,
                  "It suffices to prove that no trail in G contains every "
                  "edge of G."),
        ProofStep(StepKind.LEMMA,
                  "Except possibly for its beginning and ending vertices, "
                  "every vertex of a trail T touches an even number of edges "
                  "of T, because each middle vertex is entered by one edge "
                  "and exited by another."),
        ProofStep(StepKind.OBSERVATION,
                  f"However, G has {len(odd)} vertices of odd degree: "
                  + ", ".join(odd) + "."),
        ProofStep(StepKind.CONTRADICTION,
                  f"A trail containing every edge of G would leave at most "
                  f"two vertices of odd degree, yet {len(odd)} > 2 are odd. "
                  f"Hence no trail contains every edge of G, and no such "
                  f"route exists."),
        ProofStep(StepKind.QED, "∎"),
    )
    title = f"No complete route through {place_name}"
    return ProofDocument(title, steps)
