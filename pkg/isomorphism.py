import logging
from dataclasses import dataclass, field

import numpy as np

from errors import InvalidParameter
from graph_base import GraphBase, Vertex
from graphs import ball, cartesian, format_vertex, half_line, integer_line, kronecker, path_graph
from lattice_domains import LatticeDomain, restrict_lattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IsoMap:
    """
    Affine map v -> matrix @ v + offset from `source` to `target`, claimed to be an
    isomorphism that sends `source_root` to the target's root.
    """

    name: str
    matrix: tuple[tuple[int, ...], ...]
    offset: tuple[int, ...]
    source: GraphBase
    target: GraphBase
    source_root: Vertex

    def __post_init__(self):
        rows = len(self.matrix)
        if rows != len(self.offset) or any(len(row) != self.source.dimension for row in self.matrix):
            raise InvalidParameter(f"Map {self.name} has a matrix shape that does not fit its graphs")
        if rows != self.target.dimension:
            raise InvalidParameter(f"Map {self.name} does not land in dimension {self.target.dimension}")

    def forward(self, vertex: Vertex) -> Vertex:
        return self.forward_many([vertex])[0]

    def forward_many(self, vertices) -> list[Vertex]:
        coords = np.asarray(vertices, dtype=np.int64).reshape(len(vertices), self.source.dimension)
        images = coords @ np.asarray(self.matrix, dtype=np.int64).T + np.asarray(self.offset, dtype=np.int64)
        return [tuple(int(c) for c in row) for row in images]


@dataclass
class IsoReport:
    map_name: str
    radius: int
    ok: bool
    source_vertices: int = 0
    target_vertices: int = 0
    edges_checked: int = 0
    violation: str | None = None
    witness: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "map": self.map_name,
            "radius": self.radius,
            "ok": self.ok,
            "source_vertices": self.source_vertices,
            "target_vertices": self.target_vertices,
            "edges_checked": self.edges_checked,
            "violation": self.violation,
            "witness": [format_vertex(v) for v in self.witness],
        }


def verify_isomorphism(iso: IsoMap, ball_radius: int, budget: int | None = None) -> IsoReport:
    """
    Check that iso maps the radius-r ball of the source bijectively onto the radius-r ball
    of the target around the image of the root, preserving edges in both directions.
    The report carries the first violation found and a witness.
    """
    report = IsoReport(iso.name, ball_radius, ok=False)
    source_ball = ball(iso.source, iso.source_root, ball_radius, budget)
    target_root = iso.forward(iso.source_root)
    report.source_vertices = len(source_ball)
    if target_root not in iso.target:
        report.violation = "root image is not a target vertex"
        report.witness = [iso.source_root, target_root]
        return report
    target_ball = ball(iso.target, target_root, ball_radius, budget)
    report.target_vertices = len(target_ball)

    images = dict(zip(source_ball.vertices, iso.forward_many(source_ball.vertices)))
    preimage = {}
    for v, image in images.items():
        if image in preimage:
            report.violation = "map is not injective on the ball"
            report.witness = [preimage[image], v]
            return report
        preimage[image] = v
        if image not in target_ball:
            report.violation = "image lies outside the target ball"
            report.witness = [v, image]
            return report

    missing = [w for w in target_ball.vertices if w not in preimage]
    if missing:
        report.violation = "target ball vertex has no preimage"
        report.witness = [missing[0]]
        return report

    mapped_edges = {frozenset((images[a], images[b])) for a, b in source_ball.edges()}
    target_edges = target_ball.edge_set()
    report.edges_checked = len(mapped_edges)
    for a, b in source_ball.edges():
        if frozenset((images[a], images[b])) not in target_edges:
            report.violation = "source edge is not mapped to a target edge"
            report.witness = [a, b]
            return report
    for edge in sorted(tuple(sorted(e)) for e in target_edges - mapped_edges):
        report.violation = "target edge has no source edge"
        report.witness = [preimage[edge[0]], preimage[edge[1]]]
        return report

    report.ok = True
    logger.debug("%s verified on radius %d: %d vertices", iso.name, ball_radius, report.source_vertices)
    return report


SUM_DIFF = ((1, 1), (1, -1))
DIFF_SUM = ((1, -1), (1, 1))
SUM_DIFF_3D = ((1, 1, 0), (1, -1, 0), (0, 0, 1))


def square_lattice_map() -> IsoMap:
    """phi(x, y) = (x + y, x - y) from Z xC Z onto (Z xK Z)°."""
    z = integer_line()
    return IsoMap("zcz", SUM_DIFF, (0, 0), cartesian(z, z), kronecker(z, z), (0, 0))


def strip_map(n: int) -> IsoMap:
    """L{x >= y >= x-(n-1)} onto (P_n xK Z)°; the path coordinate is x - y."""
    return IsoMap(f"strip{n}", DIFF_SUM, (0, 0), restrict_lattice(LatticeDomain.strip(n)),
                  kronecker(path_graph(n), integer_line()), (0, 0))


def half_plane_map() -> IsoMap:
    """L{x >= y} onto (Z+ xK Z)°."""
    return IsoMap("halfplane", DIFF_SUM, (0, 0), restrict_lattice(LatticeDomain.half_plane()),
                  kronecker(half_line(), integer_line()), (0, 0))


def diamond_map(k: int, l: int) -> IsoMap:
    """L{0 <= x+y <= k-1, 0 <= x-y <= l-1} onto (P_k xK P_l)°."""
    return IsoMap(f"diamond{k}x{l}", SUM_DIFF, (0, 0), restrict_lattice(LatticeDomain.diamond(k, l)),
                  kronecker(path_graph(k), path_graph(l)), (0, 0))


def wedge_map() -> IsoMap:
    """L{x >= y >= -x} onto (Z+ xK Z+)°."""
    zp = half_line()
    return IsoMap("wedge", SUM_DIFF, (0, 0), restrict_lattice(LatticeDomain.wedge()),
                  kronecker(zp, zp), (0, 0))


def cubic_lattice_map() -> IsoMap:
    """(Z xC Z) xC Z onto ((Z xK Z) xC Z)°."""
    z = integer_line()
    return IsoMap("z3", SUM_DIFF_3D, (0, 0, 0), cartesian(cartesian(z, z), z),
                  cartesian(kronecker(z, z), z), (0, 0, 0))


def body_centered_map() -> IsoMap:
    """((Z xC Z) xK Z)° onto (Z xK Z xK Z)°, the body-centered cubic lattice."""
    z = integer_line()
    return IsoMap("bcc", SUM_DIFF_3D, (0, 0, 0), kronecker(cartesian(z, z), z),
                  kronecker(kronecker(z, z), z), (0, 0, 0))


BUILTIN_MAPS = {
    "zcz": square_lattice_map,
    "strip": strip_map,
    "halfplane": half_plane_map,
    "diamond": diamond_map,
    "wedge": wedge_map,
    "z3": cubic_lattice_map,
    "bcc": body_centered_map,
}
