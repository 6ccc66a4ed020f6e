from dataclasses import dataclass
from enum import Enum
from typing import Callable

from errors import InvalidParameter
from graph_base import Vertex
from graphs import ImplicitGraph


class DomainKind(str, Enum):
    FULL_Z2 = "fullz2"
    HALF_PLANE = "halfplane"
    STRIP = "strip"
    WEDGE = "wedge"
    DIAMOND = "diamond"
    QUARTER_PLANE = "quarterplane"
    CHAMBER3 = "chamber3"
    CUSTOM = "custom"


@dataclass(frozen=True)
class LatticeDomain:
    """
    A coordinate domain D; restrict_lattice(D) is the induced subgraph of the
    nearest-neighbor lattice on D.

    Constraint:
        * STRIP needs n >= 2, DIAMOND needs k >= 2 and l >= 2
        * CUSTOM needs a predicate and a dimension
        * the origin satisfies every named kind
    """

    kind: DomainKind
    n: int | None = None
    k: int | None = None
    l: int | None = None
    predicate: Callable[[Vertex], bool] | None = None
    custom_dimension: int | None = None

    def __post_init__(self):
        if self.kind is DomainKind.STRIP and (self.n is None or self.n < 2):
            raise InvalidParameter(f"Strip width n must be >= 2, got {self.n}")
        if self.kind is DomainKind.DIAMOND:
            if self.k is None or self.l is None or self.k < 2 or self.l < 2:
                raise InvalidParameter(f"Diamond sides must be >= 2, got k={self.k}, l={self.l}")
        if self.kind is DomainKind.CUSTOM:
            if self.predicate is None or self.custom_dimension is None or self.custom_dimension < 1:
                raise InvalidParameter("A custom domain needs a predicate and a dimension >= 1")

    @classmethod
    def full_z2(cls) -> "LatticeDomain":
        return cls(DomainKind.FULL_Z2)

    @classmethod
    def half_plane(cls) -> "LatticeDomain":
        return cls(DomainKind.HALF_PLANE)

    @classmethod
    def strip(cls, n: int) -> "LatticeDomain":
        return cls(DomainKind.STRIP, n=n)

    @classmethod
    def wedge(cls) -> "LatticeDomain":
        return cls(DomainKind.WEDGE)

    @classmethod
    def diamond(cls, k: int, l: int) -> "LatticeDomain":
        return cls(DomainKind.DIAMOND, k=k, l=l)

    @classmethod
    def quarter_plane(cls) -> "LatticeDomain":
        return cls(DomainKind.QUARTER_PLANE)

    @classmethod
    def chamber3(cls) -> "LatticeDomain":
        return cls(DomainKind.CHAMBER3)

    @classmethod
    def custom(cls, predicate: Callable[[Vertex], bool], dimension: int) -> "LatticeDomain":
        return cls(DomainKind.CUSTOM, predicate=predicate, custom_dimension=dimension)

    @property
    def dimension(self) -> int:
        if self.kind is DomainKind.CHAMBER3:
            return 3
        if self.kind is DomainKind.CUSTOM:
            return self.custom_dimension
        return 2

    @property
    def label(self) -> str:
        if self.kind is DomainKind.STRIP:
            return f"strip{self.n}"
        if self.kind is DomainKind.DIAMOND:
            return f"diamond{self.k}x{self.l}"
        return self.kind.value

    def contains(self, v: Vertex) -> bool:
        if len(v) != self.dimension:
            return False
        match self.kind:
            case DomainKind.FULL_Z2:
                return True
            case DomainKind.HALF_PLANE:
                return v[0] >= v[1]
            case DomainKind.STRIP:
                return v[0] >= v[1] >= v[0] - (self.n - 1)
            case DomainKind.WEDGE:
                return v[0] >= v[1] >= -v[0]
            case DomainKind.DIAMOND:
                return 0 <= v[0] + v[1] <= self.k - 1 and 0 <= v[0] - v[1] <= self.l - 1
            case DomainKind.QUARTER_PLANE:
                return v[0] >= 0 and v[1] >= 0
            case DomainKind.CHAMBER3:
                return v[0] >= v[1] >= v[2]
            case DomainKind.CUSTOM:
                return bool(self.predicate(v))


def _unit_steps(dimension: int) -> list[Vertex]:
    steps = []
    for axis in range(dimension):
        for sign in (-1, 1):
            step = [0] * dimension
            step[axis] = sign
            steps.append(tuple(step))
    return steps


def restrict_lattice(domain: LatticeDomain) -> ImplicitGraph:
    """L[D]: vertices in D, edges are +-1 moves in exactly one coordinate with both ends in D."""
    steps = _unit_steps(domain.dimension)

    def neighbor_fn(v: Vertex):
        candidates = (tuple(a + b for a, b in zip(v, step)) for step in steps)
        return [w for w in candidates if domain.contains(w)]

    return ImplicitGraph(domain.dimension, neighbor_fn, f"L[{domain.label}]", member_fn=domain.contains)
