import logging
from dataclasses import dataclass, field
from math import comb, factorial

from errors import InvalidParameter
from graph_base import GraphBase, Vertex
from graphs import ball, format_vertex
from lattice_catalog import LatticeKind, LatticeSpec
from tables import format_csv

logger = logging.getLogger(__name__)

# Walk counts are plain Python ints: arbitrary precision, never negative.
BigCount = int


@dataclass(frozen=True)
class WalkTable:
    """Closed-walk counts W_m(root; graph) for consecutive m starting at 0."""

    graph: str
    root: Vertex
    entries: tuple[tuple[int, BigCount], ...]

    def __post_init__(self):
        for expected_m, (m, count) in enumerate(self.entries):
            if m != expected_m:
                raise InvalidParameter(f"Walk table entries must cover 0, 1, 2, ...; found m={m}")
            if count < 0:
                raise InvalidParameter(f"Walk count at m={m} is negative")
        if self.entries and self.entries[0][1] != 1:
            raise InvalidParameter("W_0 must be 1")

    @classmethod
    def from_counts(cls, graph: str, root: Vertex, counts) -> "WalkTable":
        return cls(graph, tuple(root), tuple(enumerate(counts)))

    @property
    def m_max(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, m: int) -> BigCount:
        if not 0 <= m <= self.m_max:
            raise InvalidParameter(f"Walk table for {self.graph} covers m <= {self.m_max}, asked for {m}")
        return self.entries[m][1]

    def counts(self) -> list[BigCount]:
        return [count for _, count in self.entries]

    def rows(self) -> list[list[str]]:
        return [[str(m), str(count)] for m, count in self.entries]

    def to_csv(self) -> str:
        return format_csv(["m", "count"], self.rows())


def _closed_walk_counts(g: GraphBase, o: Vertex, m_max: int, budget: int | None) -> list[BigCount]:
    if m_max < 0:
        raise InvalidParameter(f"Walk length must be >= 0, got {m_max}")
    # a closed walk of length t <= m_max never leaves the ball of radius m_max // 2
    window = ball(g, o, m_max // 2, budget)
    adjacency = window.adjacency
    u = [0] * len(window)
    u[0] = 1
    counts = [1]
    for _ in range(m_max):
        u = [sum(u[j] for j in neighbors) for neighbors in adjacency]
        counts.append(u[0])
    logger.debug("closed walks on %s up to m=%d over %d vertices", g.name, m_max, len(window))
    return counts


def walk_count(g: GraphBase, o: Vertex, m: int, budget: int | None = None) -> BigCount:
    """Exact (A^m)_oo by vector iteration on the ball of radius m // 2 around o."""
    return _closed_walk_counts(g, tuple(o), m, budget)[m]


def walk_table(g: GraphBase, o: Vertex, m_max: int, budget: int | None = None) -> WalkTable:
    return WalkTable.from_counts(g.name, tuple(o), _closed_walk_counts(g, tuple(o), m_max, budget))


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def central_binomial(m: int) -> BigCount:
    if m < 0:
        raise InvalidParameter(f"m must be >= 0, got {m}")
    return comb(2 * m, m)


def catalan(m: int) -> BigCount:
    return central_binomial(m) // (m + 1)


def bounded_dyck_count(half_length: int, height: int) -> BigCount:
    """
    Dyck paths of length 2*half_length staying within [0, height], by the
    reflection principle with barriers at -1 and height + 1.
    """
    if half_length < 0 or height < 0:
        raise InvalidParameter("Half length and height must be >= 0")
    period = height + 2
    reach = half_length // period + 1
    total = 0
    for j in range(-reach, reach + 1):
        shift = half_length + j * period
        total += _binom(2 * half_length, shift) - _binom(2 * half_length, shift + 1)
    return total


def path_walks(n: int, m: int) -> BigCount:
    """W_m(0; P_n) from the endpoint of the n-vertex path."""
    if n < 1:
        raise InvalidParameter(f"Path length must be >= 1, got {n}")
    return 0 if m % 2 else bounded_dyck_count(m // 2, n - 1)


def kronecker_walk_product(w1: WalkTable, w2: WalkTable) -> WalkTable:
    """W_m((o1, o2); G1 xK G2) = W_m(o1; G1) W_m(o2; G2)."""
    if w1.m_max != w2.m_max:
        raise InvalidParameter(f"Walk tables cover different ranges: m <= {w1.m_max} and m <= {w2.m_max}")
    counts = [a * b for a, b in zip(w1.counts(), w2.counts())]
    return WalkTable.from_counts(f"({w1.graph} xK {w2.graph})", w1.root + w2.root, counts)


def cartesian_walk_convolution(w1: WalkTable, w2: WalkTable, m: int) -> BigCount:
    """W_m((o1, o2); G1 xC G2) = sum_k binom(m, k) W_k(o1; G1) W_{m-k}(o2; G2)."""
    if m < 0:
        raise InvalidParameter(f"m must be >= 0, got {m}")
    if m > w1.m_max or m > w2.m_max:
        raise InvalidParameter(f"Walk tables must cover 0..{m}; they cover {w1.m_max} and {w2.m_max}")
    return sum(comb(m, k) * w1[k] * w2[m - k] for k in range(m + 1))


def cartesian_walk_table(w1: WalkTable, w2: WalkTable) -> WalkTable:
    m_max = min(w1.m_max, w2.m_max)
    counts = [cartesian_walk_convolution(w1, w2, m) for m in range(m_max + 1)]
    return WalkTable.from_counts(f"({w1.graph} xC {w2.graph})", w1.root + w2.root, counts)


def closed_form_walks(spec: LatticeSpec, m: int) -> BigCount:
    """
    Exact closed form of W_m at the root of a named lattice. Every supported
    kind is bipartite, so odd m gives 0.
    """
    if m < 0:
        raise InvalidParameter(f"m must be >= 0, got {m}")
    if m % 2:
        return 0
    h = m // 2
    binom_h, catalan_h = central_binomial(h), catalan(h)
    match spec.kind:
        case LatticeKind.Z:
            return binom_h
        case LatticeKind.ZPLUS:
            return catalan_h
        case LatticeKind.ZPLUS_AT_ONE:
            return catalan(h + 1)
        case LatticeKind.FULL_Z2:
            return binom_h ** 2
        case LatticeKind.HALF_PLANE:
            return catalan_h * binom_h
        case LatticeKind.WEDGE:
            return catalan_h ** 2
        case LatticeKind.QUARTER_PLANE:
            return sum(comb(m, 2 * j) * catalan(j) * catalan(h - j) for j in range(h + 1))
        case LatticeKind.STRIP:
            return binom_h * path_walks(spec.n, m)
        case LatticeKind.DIAMOND:
            return path_walks(spec.k, m) * path_walks(spec.l, m)
        case LatticeKind.BCC3:
            return binom_h ** 3
        case LatticeKind.Z3_CARTESIAN:
            return sum(
                factorial(m) * factorial(2 * j) // (factorial(h - j) ** 2 * factorial(j) ** 4)
                for j in range(h + 1)
            )
        case LatticeKind.CHAMBER3 | LatticeKind.ZPLUS_KRON_CART:
            return sum(comb(m, 2 * j) * catalan(j) ** 2 * catalan(h - j) for j in range(h + 1))
        case LatticeKind.Z_CART_ZPLUS:
            return sum(comb(m, 2 * j) * central_binomial(j) * catalan(h - j) for j in range(h + 1))
        case LatticeKind.ZPLUS_KRON_ZPLUS_AT_01:
            return catalan_h * catalan(h + 1)
    raise InvalidParameter(f"No closed form for lattice kind {spec.kind}")


def binomial_identity_lhs(m: int) -> BigCount:
    """sum_k binom(2m, 2k) binom(2k, k) binom(2m-2k, m-k): closed walks of length 2m on Z xC Z."""
    if m < 0:
        raise InvalidParameter(f"m must be >= 0, got {m}")
    return sum(comb(2 * m, 2 * k) * central_binomial(k) * central_binomial(m - k) for k in range(m + 1))


def verify_binomial_identity(m: int) -> bool:
    """The Cartesian convolution of two arcsine tables equals binom(2m, m)^2, exactly."""
    return binomial_identity_lhs(m) == central_binomial(m) ** 2


@dataclass
class CoincidenceReport:
    graph_a: str
    root_a: Vertex
    graph_b: str
    root_b: Vertex
    rows: list[tuple[int, BigCount, BigCount]] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(a == b for _, a, b in self.rows)

    @property
    def first_difference(self) -> int | None:
        return next((m for m, a, b in self.rows if a != b), None)

    def to_dict(self) -> dict:
        return {
            "graph_a": self.graph_a,
            "root_a": format_vertex(self.root_a),
            "graph_b": self.graph_b,
            "root_b": format_vertex(self.root_b),
            "rows": [{"m": m, "a": str(a), "b": str(b), "equal": a == b} for m, a, b in self.rows],
            "all_equal": self.all_equal,
        }


def moment_coincidence_report(g_a: GraphBase, o_a: Vertex, g_b: GraphBase, o_b: Vertex,
                              m_max: int, budget: int | None = None) -> CoincidenceReport:
    """Tabulate W_m at both roots for m <= m_max and flag agreement per m."""
    counts_a = _closed_walk_counts(g_a, tuple(o_a), m_max, budget)
    counts_b = _closed_walk_counts(g_b, tuple(o_b), m_max, budget)
    rows = [(m, a, b) for m, (a, b) in enumerate(zip(counts_a, counts_b))]
    return CoincidenceReport(g_a.name, tuple(o_a), g_b.name, tuple(o_b), rows)
