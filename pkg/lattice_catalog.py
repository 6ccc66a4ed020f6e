from dataclasses import dataclass
from enum import Enum

from errors import InvalidParameter
from graph_base import GraphBase, Vertex
from graphs import cartesian, half_line, integer_line, kronecker
from lattice_domains import LatticeDomain, restrict_lattice


class LatticeKind(str, Enum):
    Z = "z"
    ZPLUS = "zplus"
    ZPLUS_AT_ONE = "zplus_at_one"
    FULL_Z2 = "fullz2"
    HALF_PLANE = "halfplane"
    WEDGE = "wedge"
    QUARTER_PLANE = "quarterplane"
    STRIP = "strip"
    DIAMOND = "diamond"
    BCC3 = "bcc3"
    Z3_CARTESIAN = "z3cartesian"
    CHAMBER3 = "chamber3"
    Z_CART_ZPLUS = "zxzplus"
    ZPLUS_KRON_ZPLUS_AT_01 = "zpkzp01"
    ZPLUS_KRON_CART = "zpkzp_czp"


THREE_DIMENSIONAL = {LatticeKind.BCC3, LatticeKind.Z3_CARTESIAN, LatticeKind.CHAMBER3, LatticeKind.ZPLUS_KRON_CART}


@dataclass(frozen=True)
class LatticeSpec:
    """
    A named lattice (or lattice product) with its distinguished root.

    Constraint:
        * STRIP needs n >= 2; DIAMOND needs k >= 2 and l >= 2
    """

    kind: LatticeKind
    n: int | None = None
    k: int | None = None
    l: int | None = None

    def __post_init__(self):
        if self.kind is LatticeKind.STRIP and (self.n is None or self.n < 2):
            raise InvalidParameter(f"Strip needs n >= 2, got {self.n}")
        if self.kind is LatticeKind.DIAMOND:
            if self.k is None or self.l is None or self.k < 2 or self.l < 2:
                raise InvalidParameter(f"Diamond needs k, l >= 2, got k={self.k}, l={self.l}")

    @classmethod
    def parse(cls, kind: str, n: int | None = None, k: int | None = None, l: int | None = None) -> "LatticeSpec":
        try:
            lattice_kind = LatticeKind(kind)
        except ValueError:
            choices = ", ".join(item.value for item in LatticeKind)
            raise InvalidParameter(f"Unknown lattice kind {kind!r}; choose one of {choices}") from None
        return cls(lattice_kind, n, k, l)

    @property
    def dimension(self) -> int:
        if self.kind in (LatticeKind.Z, LatticeKind.ZPLUS, LatticeKind.ZPLUS_AT_ONE):
            return 1
        return 3 if self.kind in THREE_DIMENSIONAL else 2

    @property
    def label(self) -> str:
        if self.kind is LatticeKind.STRIP:
            return f"strip(n={self.n})"
        if self.kind is LatticeKind.DIAMOND:
            return f"diamond(k={self.k},l={self.l})"
        return self.kind.value

    def build(self) -> tuple[GraphBase, Vertex]:
        """:return: the graph this kind denotes and its root"""
        z, zp = integer_line(), half_line()
        match self.kind:
            case LatticeKind.Z:
                return z, (0,)
            case LatticeKind.ZPLUS:
                return zp, (0,)
            case LatticeKind.ZPLUS_AT_ONE:
                return zp, (1,)
            case LatticeKind.FULL_Z2:
                return restrict_lattice(LatticeDomain.full_z2()), (0, 0)
            case LatticeKind.HALF_PLANE:
                return restrict_lattice(LatticeDomain.half_plane()), (0, 0)
            case LatticeKind.WEDGE:
                return restrict_lattice(LatticeDomain.wedge()), (0, 0)
            case LatticeKind.QUARTER_PLANE:
                return restrict_lattice(LatticeDomain.quarter_plane()), (0, 0)
            case LatticeKind.STRIP:
                return restrict_lattice(LatticeDomain.strip(self.n)), (0, 0)
            case LatticeKind.DIAMOND:
                return restrict_lattice(LatticeDomain.diamond(self.k, self.l)), (0, 0)
            case LatticeKind.BCC3:
                return kronecker(kronecker(z, z), z), (0, 0, 0)
            case LatticeKind.Z3_CARTESIAN:
                return cartesian(cartesian(z, z), z), (0, 0, 0)
            case LatticeKind.CHAMBER3:
                return restrict_lattice(LatticeDomain.chamber3()), (0, 0, 0)
            case LatticeKind.Z_CART_ZPLUS:
                return cartesian(z, zp), (0, 0)
            case LatticeKind.ZPLUS_KRON_ZPLUS_AT_01:
                return kronecker(zp, zp), (0, 1)
            case LatticeKind.ZPLUS_KRON_CART:
                return cartesian(kronecker(zp, zp), zp), (0, 0, 0)
