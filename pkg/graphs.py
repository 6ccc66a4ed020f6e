import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import networkx as nx

import config
from errors import InvalidParameter, ResourceLimitExceeded
from graph_base import GraphBase, Vertex

logger = logging.getLogger(__name__)


def coordinate_parity(vertex: Vertex) -> int:
    """Nearest-neighbor moves change the coordinate sum by one, so its parity is a bipartition."""
    return sum(vertex) % 2


def format_vertex(vertex: Vertex) -> str:
    return ",".join(str(c) for c in vertex)


def _always(vertex: Vertex) -> bool:
    return True


def _single_component(vertex: Vertex) -> Hashable:
    return ()


@dataclass(frozen=True, eq=False)
class FiniteGraph(GraphBase):
    """
    Explicit graph: vertex list plus per-vertex sorted neighbor index lists.
    `radius` is set when the graph is a ball around `root`.
    """

    vertices: tuple[Vertex, ...]
    adjacency: tuple[tuple[int, ...], ...]
    root: int | None = None
    name: str = "finite"
    radius: int | None = None

    def __post_init__(self):
        if not self.vertices:
            raise InvalidParameter("A finite graph needs at least one vertex")
        if len(self.adjacency) != len(self.vertices):
            raise InvalidParameter("Adjacency must have one entry per vertex")
        dimension = len(self.vertices[0])
        if dimension < 1 or any(len(v) != dimension for v in self.vertices):
            raise InvalidParameter("All vertices must share one dimension >= 1")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParameter("Vertices must be distinct")
        if self.root is not None and not 0 <= self.root < len(self.vertices):
            raise InvalidParameter(f"Root index {self.root} out of range")

        count = len(self.vertices)
        for i, neighbors in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(neighbors, neighbors[1:])):
                raise InvalidParameter(f"Neighbor list of vertex {i} must be sorted without duplicates")
            for j in neighbors:
                if j == i:
                    raise InvalidParameter(f"Self-loop at vertex {self.vertices[i]}")
                if not 0 <= j < count:
                    raise InvalidParameter(f"Neighbor index {j} out of range")
        for i, neighbors in enumerate(self.adjacency):
            for j in neighbors:
                if i not in self._neighbor_sets[j]:
                    raise InvalidParameter(
                        f"Adjacency is not symmetric between {self.vertices[i]} and {self.vertices[j]}"
                    )

    @classmethod
    def from_edges(cls, vertices: Sequence[Vertex], edges: Iterable[tuple[Vertex, Vertex]],
                   root: Vertex | None = None, name: str = "finite") -> "FiniteGraph":
        vertices = tuple(tuple(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        neighbor_sets = [set() for _ in vertices]
        for a, b in edges:
            i, j = index[tuple(a)], index[tuple(b)]
            neighbor_sets[i].add(j)
            neighbor_sets[j].add(i)
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        return cls(vertices, adjacency, None if root is None else index[tuple(root)], name)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, root=None, name: str = "finite") -> "FiniteGraph":
        """Integer node labels become 1-D vertices; tuple labels are kept as coordinates."""

        def as_vertex(node) -> Vertex:
            return tuple(node) if isinstance(node, tuple) else (int(node),)

        vertices = sorted(as_vertex(node) for node in graph.nodes)
        edges = [(as_vertex(a), as_vertex(b)) for a, b in graph.edges]
        return cls.from_edges(vertices, edges, None if root is None else as_vertex(root), name)

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(neighbors) for neighbors in self.adjacency)

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def root_vertex(self) -> Vertex | None:
        return None if self.root is None else self.vertices[self.root]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex: Vertex) -> bool:
        return tuple(vertex) in self.index

    def neighbors(self, vertex: Vertex) -> tuple[Vertex, ...]:
        return tuple(sorted(self.vertices[j] for j in self.adjacency[self.index[tuple(vertex)]]))

    def degree(self, vertex: Vertex) -> int:
        return len(self.adjacency[self.index[tuple(vertex)]])

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Each edge once, endpoints and list sorted by coordinates."""
        result = []
        for i, neighbors in enumerate(self.adjacency):
            for j in neighbors:
                a, b = self.vertices[i], self.vertices[j]
                if a < b:
                    result.append((a, b))
        return sorted(result)

    def edge_set(self) -> frozenset[frozenset[Vertex]]:
        return frozenset(frozenset(edge) for edge in self.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    @cached_property
    def _coloring(self) -> dict[Vertex, int] | None:
        try:
            return nx.bipartite.color(self.to_networkx())
        except nx.NetworkXError:
            return None

    @cached_property
    def _component_of(self) -> dict[Vertex, int]:
        labels = {}
        for label, members in enumerate(sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))):
            for v in members:
                labels[v] = label
        return labels

    def parity(self, vertex: Vertex) -> int | None:
        return None if self._coloring is None else self._coloring[tuple(vertex)]

    def component_key(self, vertex: Vertex) -> Hashable:
        return self._component_of[tuple(vertex)]

    def induced_subgraph(self, vertices: Iterable[Vertex], name: str | None = None) -> "FiniteGraph":
        kept = tuple(tuple(v) for v in vertices)
        local = {v: i for i, v in enumerate(kept)}
        adjacency = tuple(
            tuple(sorted(local[self.vertices[j]] for j in self.adjacency[self.index[v]] if self.vertices[j] in local))
            for v in kept
        )
        root = local.get(self.root_vertex) if self.root is not None else None
        return FiniteGraph(kept, adjacency, root, name or f"{self.name}[induced]")


@dataclass(frozen=True, eq=False)
class ImplicitGraph(GraphBase):
    """
    Locally finite graph given by a neighbor function over integer coordinate tuples.
    Never materialized; use ball() to obtain a finite window.
    """

    dimension: int
    neighbor_fn: Callable[[Vertex], Iterable[Vertex]]
    name: str
    member_fn: Callable[[Vertex], bool] = _always
    parity_fn: Callable[[Vertex], int | None] | None = coordinate_parity
    key_fn: Callable[[Vertex], Hashable] = _single_component

    @property
    def is_finite(self) -> bool:
        return False

    def __contains__(self, vertex: Vertex) -> bool:
        return len(vertex) == self.dimension and self.member_fn(tuple(vertex))

    def neighbors(self, vertex: Vertex) -> tuple[Vertex, ...]:
        return tuple(sorted(set(self.neighbor_fn(tuple(vertex)))))

    def parity(self, vertex: Vertex) -> int | None:
        return None if self.parity_fn is None else self.parity_fn(tuple(vertex))

    def component_key(self, vertex: Vertex) -> Hashable:
        return self.key_fn(tuple(vertex))


def path_graph(n: int) -> FiniteGraph:
    """The path P_n on {0, ..., n-1}, rooted at the endpoint 0."""
    if n < 1:
        raise InvalidParameter(f"Path length must be >= 1, got {n}")
    vertices = [(i,) for i in range(n)]
    edges = [((i,), (i + 1,)) for i in range(n - 1)]
    return FiniteGraph.from_edges(vertices, edges, root=(0,), name=f"P{n}")


def integer_line() -> ImplicitGraph:
    return ImplicitGraph(1, lambda v: ((v[0] - 1,), (v[0] + 1,)), "Z")


def half_line() -> ImplicitGraph:
    return ImplicitGraph(
        1,
        lambda v: tuple((u,) for u in (v[0] - 1, v[0] + 1) if u >= 0),
        "Z+",
        member_fn=lambda v: v[0] >= 0,
    )


def _finite_product(g1: FiniteGraph, g2: FiniteGraph, adjacent_indices, name: str) -> FiniteGraph:
    size2 = len(g2)
    vertices = tuple(x + y for x in g1.vertices for y in g2.vertices)
    adjacency = tuple(
        tuple(sorted(i2 * size2 + j2 for i2, j2 in adjacent_indices(i, j)))
        for i in range(len(g1))
        for j in range(size2)
    )
    root = None
    if g1.root is not None and g2.root is not None:
        root = g1.root * size2 + g2.root
    return FiniteGraph(vertices, adjacency, root, name)


def kronecker(g1: GraphBase, g2: GraphBase) -> GraphBase:
    """
    Kronecker product: (x, y) ~ (x', y') iff x ~ x' in g1 and y ~ y' in g2.
    Coordinate tuples are concatenated. finite x finite stays finite.
    """
    name = f"({g1.name} xK {g2.name})"
    if g1.is_finite and g2.is_finite:
        return _finite_product(
            g1, g2,
            lambda i, j: ((i2, j2) for i2 in g1.adjacency[i] for j2 in g2.adjacency[j]),
            name,
        )

    split = g1.dimension

    def neighbor_fn(v: Vertex):
        x, y = v[:split], v[split:]
        return [a + b for a in g1.neighbors(x) for b in g2.neighbors(y)]

    def member_fn(v: Vertex) -> bool:
        return v[:split] in g1 and v[split:] in g2

    def parity_fn(v: Vertex) -> int | None:
        # every edge moves both factors, so either factor's bipartition works
        p1 = g1.parity(v[:split])
        return p1 if p1 is not None else g2.parity(v[split:])

    def key_fn(v: Vertex) -> Hashable:
        x, y = v[:split], v[split:]
        p1, p2 = g1.parity(x), g2.parity(y)
        if p1 is None or p2 is None:
            return g1.component_key(x), g2.component_key(y)
        return g1.component_key(x), g2.component_key(y), p1 ^ p2

    return ImplicitGraph(g1.dimension + g2.dimension, neighbor_fn, name, member_fn, parity_fn, key_fn)


def cartesian(g1: GraphBase, g2: GraphBase) -> GraphBase:
    """Cartesian product: exactly one coordinate block moves along an edge of its factor."""
    name = f"({g1.name} xC {g2.name})"
    if g1.is_finite and g2.is_finite:
        return _finite_product(
            g1, g2,
            lambda i, j: [(i2, j) for i2 in g1.adjacency[i]] + [(i, j2) for j2 in g2.adjacency[j]],
            name,
        )

    split = g1.dimension

    def neighbor_fn(v: Vertex):
        x, y = v[:split], v[split:]
        return [a + y for a in g1.neighbors(x)] + [x + b for b in g2.neighbors(y)]

    def member_fn(v: Vertex) -> bool:
        return v[:split] in g1 and v[split:] in g2

    def parity_fn(v: Vertex) -> int | None:
        p1, p2 = g1.parity(v[:split]), g2.parity(v[split:])
        return None if p1 is None or p2 is None else p1 ^ p2

    def key_fn(v: Vertex) -> Hashable:
        return g1.component_key(v[:split]), g2.component_key(v[split:])

    return ImplicitGraph(g1.dimension + g2.dimension, neighbor_fn, name, member_fn, parity_fn, key_fn)


def origin_component(g: GraphBase, root: Vertex) -> GraphBase:
    """The connected component (.)° of g containing root."""
    root = tuple(root)
    if root not in g:
        raise InvalidParameter(f"Root {root} is not a vertex of {g.name}")
    if g.is_finite:
        return next(c for c in connected_components(g) if root in c)

    root_key = g.component_key(root)
    return ImplicitGraph(
        g.dimension,
        g.neighbors,
        f"{g.name}°",
        member_fn=lambda v: v in g and g.component_key(v) == root_key,
        parity_fn=g.parity,
    )


def ball(g: GraphBase, root: Vertex, radius: int, budget: int | None = None) -> FiniteGraph:
    """
    Induced subgraph on the vertices within graph distance `radius` of `root`.
    Vertices are ordered by distance, then by coordinates; the root has index 0.
    """
    root = tuple(root)
    if radius < 0:
        raise InvalidParameter(f"Radius must be >= 0, got {radius}")
    if root not in g:
        raise InvalidParameter(f"Root {root} is not a vertex of {g.name}")
    limit = config.vertex_budget(budget)

    order = [root]
    seen = {root}
    frontier = [root]
    for _ in range(radius):
        layer = {w for v in frontier for w in g.neighbors(v) if w not in seen}
        if not layer:
            break
        frontier = sorted(layer)
        seen.update(frontier)
        order.extend(frontier)
        if len(order) > limit:
            raise ResourceLimitExceeded(
                f"Ball of radius {radius} in {g.name} exceeds the vertex budget of {limit}",
                budget=limit, reached=len(order),
            )

    index = {v: i for i, v in enumerate(order)}
    adjacency = tuple(tuple(sorted(index[w] for w in g.neighbors(v) if w in index)) for v in order)
    logger.debug("ball(%s, %s, %d): %d vertices", g.name, root, radius, len(order))
    return FiniteGraph(tuple(order), adjacency, 0, f"B({g.name}, {format_vertex(root)}, {radius})", radius)


def connected_components(g: FiniteGraph) -> list[FiniteGraph]:
    """Maximal connected induced subgraphs, ordered by their smallest vertex."""
    components = sorted(sorted(c) for c in nx.connected_components(g.to_networkx()))
    return [g.induced_subgraph(c, name=f"{g.name}[{i}]") for i, c in enumerate(components)]


def degree_histogram(g: FiniteGraph, interior_radius: int) -> dict[int, int]:
    """
    Degree counts over the vertices within `interior_radius` of the root.
    On a ball only the interior (distance < radius) has untruncated degrees.
    """
    if g.root is None:
        raise InvalidParameter("Degree histogram needs a rooted graph")
    if interior_radius < 0:
        raise InvalidParameter(f"Interior radius must be >= 0, got {interior_radius}")
    if g.radius is not None and interior_radius >= g.radius:
        raise InvalidParameter(
            f"Interior radius {interior_radius} must be below the ball radius {g.radius}; "
            "boundary degrees are truncated"
        )
    distances = nx.single_source_shortest_path_length(g.to_networkx(), g.root_vertex, cutoff=interior_radius)
    return dict(sorted(Counter(g.degree(v) for v in distances).items()))


def export_edge_list(g: FiniteGraph) -> str:
    """Header '# dim=<d> root=<coords>' then one 'x1,y1 -- x2,y2' line per edge."""
    root = "none" if g.root is None else format_vertex(g.root_vertex)
    lines = [f"# dim={g.dimension} root={root}"]
    lines.extend(f"{format_vertex(a)} -- {format_vertex(b)}" for a, b in g.edges())
    return "\n".join(lines) + "\n"
