from abc import ABC, abstractmethod
from typing import Hashable

# A vertex is a fixed-length tuple of signed integer lattice coordinates.
Vertex = tuple[int, ...]


class GraphBase(ABC):
    """
    Base interface for locally finite graphs whose vertices are integer coordinate tuples.
    Finite graphs store their adjacency explicitly; infinite ones expose a neighbor function
    and are only ever materialized through finite balls.
    """

    name: str
    dimension: int

    @abstractmethod
    def __contains__(self, vertex: Vertex) -> bool:
        """
        :param vertex: A coordinate tuple
        :return: True if the vertex belongs to the graph

        Constraint:
            * tuples of the wrong length are never members
        """

    @abstractmethod
    def neighbors(self, vertex: Vertex) -> tuple[Vertex, ...]:
        """
        :param vertex: A member vertex
        :return: The adjacent vertices, sorted by coordinates

        Constraint:
            * symmetric: w in neighbors(v) iff v in neighbors(w)
            * finite for every vertex
        """

    @abstractmethod
    def parity(self, vertex: Vertex) -> int | None:
        """
        :param vertex: A member vertex
        :return: The side (0 or 1) of a bipartition in which every edge flips the side,
                 or None when no such bipartition is known.
        """

    @abstractmethod
    def component_key(self, vertex: Vertex) -> Hashable:
        """
        :param vertex: A member vertex
        :return: A label equal on two vertices whenever they lie in the same connected component.
                 For products of connected factors it is exact.
        """

    @property
    @abstractmethod
    def is_finite(self) -> bool:
        """True when the vertex set is stored explicitly."""

    def degree(self, vertex: Vertex) -> int:
        return len(self.neighbors(vertex))
