import logging
import math
from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.linalg import lu_factor, lu_solve

import config
from elliptic_density import DensityKind, arcsine_density, semicircle_density
from errors import InvalidParameter, NumericalFailure
from lattice_catalog import LatticeKind, LatticeSpec
from spectral_base import Moment, SpectralDistribution
from tables import format_csv
from walks import catalan, central_binomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArcSine(SpectralDistribution):
    """alpha: density 1/(pi sqrt(4 - x^2)) on (-2, 2), the spectral distribution of Z at 0."""

    @property
    def label(self) -> str:
        return "arcsine"

    def _moment(self, m: int) -> Moment:
        return 0 if m % 2 else central_binomial(m // 2)

    def density(self, x: float) -> float:
        return arcsine_density(x)


@dataclass(frozen=True)
class Semicircle(SpectralDistribution):
    """w: density sqrt(4 - x^2) / (2 pi) on [-2, 2], the spectral distribution of Z+ at 0."""

    @property
    def label(self) -> str:
        return "semicircle"

    def _moment(self, m: int) -> Moment:
        return 0 if m % 2 else catalan(m // 2)

    def density(self, x: float) -> float:
        return semicircle_density(x)


@dataclass(frozen=True)
class Discrete(SpectralDistribution):
    """
    Finitely many atoms (position, weight).

    Constraint:
        * weights sum to 1 within 1e-12
        * atoms pair up as +-lambda with equal weights; an atom at 0 pairs with itself
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.atoms:
            raise InvalidParameter("A discrete distribution needs at least one atom")
        total = math.fsum(weight for _, weight in self.atoms)
        if abs(total - 1.0) > config.DISCRETE_WEIGHT_TOL:
            raise InvalidParameter(f"Atom weights sum to {total!r}, not 1")
        ordered = sorted(self.atoms)
        for (x, a), (y, b) in zip(ordered, reversed(ordered)):
            if abs(x + y) > config.DISCRETE_SYMMETRY_TOL or abs(a - b) > config.DISCRETE_SYMMETRY_TOL:
                raise InvalidParameter(f"Atom at {x!r} has no mirror atom of equal weight")

    @classmethod
    def symmetric_pair(cls, position: float) -> "Discrete":
        return cls(((-position, 0.5), (position, 0.5)))

    @classmethod
    def point_mass(cls) -> "Discrete":
        return cls(((0.0, 1.0),))

    @property
    def label(self) -> str:
        return f"discrete({len(self.atoms)} atoms)"

    @property
    def exact(self) -> bool:
        return False

    def _moment(self, m: int) -> Moment:
        return math.fsum(weight * position ** m for position, weight in self.atoms)


@dataclass(frozen=True)
class ClassicalConv(SpectralDistribution):
    """left * right: law of X + Y for independent X, Y."""

    left: SpectralDistribution
    right: SpectralDistribution

    @property
    def label(self) -> str:
        return f"classical({self.left.label}, {self.right.label})"

    @property
    def exact(self) -> bool:
        return self.left.exact and self.right.exact

    def _moment(self, m: int) -> Moment:
        return sum(comb(m, k) * self.left.moment(k) * self.right.moment(m - k) for k in range(m + 1))


@dataclass(frozen=True)
class MellinConv(SpectralDistribution):
    """left *M right: law of X Y for independent X, Y; moments multiply."""

    left: SpectralDistribution
    right: SpectralDistribution

    @property
    def label(self) -> str:
        return f"mellin({self.left.label}, {self.right.label})"

    @property
    def exact(self) -> bool:
        return self.left.exact and self.right.exact

    def _moment(self, m: int) -> Moment:
        return self.left.moment(m) * self.right.moment(m)


@dataclass(frozen=True)
class NamedDensity(SpectralDistribution):
    """One of the three elliptic-integral densities, known at moment level through its factorization."""

    kind: DensityKind

    @property
    def factorization(self) -> MellinConv:
        match DensityKind(self.kind):
            case DensityKind.AA:
                return MellinConv(ArcSine(), ArcSine())
            case DensityKind.WA:
                return MellinConv(Semicircle(), ArcSine())
            case DensityKind.WW:
                return MellinConv(Semicircle(), Semicircle())

    @property
    def label(self) -> str:
        return DensityKind(self.kind).value

    def _moment(self, m: int) -> Moment:
        return self.factorization.moment(m)


def moment(d: SpectralDistribution, m: int) -> Moment:
    return d.moment(m)


def mellin_convolve(a: SpectralDistribution, b: SpectralDistribution) -> MellinConv:
    return MellinConv(a, b)


def classical_convolve(a: SpectralDistribution, b: SpectralDistribution) -> ClassicalConv:
    return ClassicalConv(a, b)


@dataclass(frozen=True, eq=False)
class PathSpectrum:
    """
    Spectral distribution of the path P_n at its endpoint: atoms at the
    eigenvalues 2 cos(k pi / (n + 1)), weights from a Vandermonde solve.
    """

    n: int
    eigenvalues: np.ndarray
    weights: np.ndarray
    residual: float
    condition: float

    def distribution(self) -> Discrete:
        return Discrete(tuple((float(x), float(a)) for x, a in zip(self.eigenvalues, self.weights)))

    def moment(self, m: int) -> float:
        return self.distribution().moment(m)


def _path_eigenvalues(n: int) -> np.ndarray:
    # mirrored halves keep lambda_k = -lambda_{n+1-k} exact in floating point
    upper = 2.0 * np.cos(np.arange(1, n // 2 + 1) * np.pi / (n + 1))
    middle = np.zeros(n % 2)
    return np.concatenate([upper, middle, -upper[::-1]])


def path_spectrum(n: int) -> PathSpectrum:
    """
    Solve sum_k a_k lambda_k^m = W_m(0; P_n) for m = 0..n-1. Below length 2n the
    endpoint of P_n sees no difference from Z+, so the right-hand side is
    C_{m/2} for even m and 0 for odd m.
    """
    if n < 2:
        raise InvalidParameter(f"Path spectrum needs n >= 2, got {n}")
    if n > config.PATH_SPECTRUM_MAX_N:
        raise InvalidParameter(f"Path spectrum is capped at n = {config.PATH_SPECTRUM_MAX_N}, got {n}")
    if n > config.PATH_SPECTRUM_WARN_N:
        logger.warning("Vandermonde system for P_%d is ill-conditioned; weights may lose accuracy", n)

    eigenvalues = _path_eigenvalues(n)
    vandermonde = np.vander(eigenvalues, n, increasing=True).T
    rhs = np.array([0.0 if m % 2 else float(catalan(m // 2)) for m in range(n)])

    factors = lu_factor(vandermonde)
    weights = lu_solve(factors, rhs)
    weights = weights + lu_solve(factors, rhs - vandermonde @ weights)
    # the exact weights are symmetric under k -> n+1-k
    weights = 0.5 * (weights + weights[::-1])

    residual = float(np.max(np.abs(vandermonde @ weights - rhs)) / max(1.0, float(np.max(np.abs(rhs)))))
    condition = float(np.linalg.cond(vandermonde))
    logger.debug("path spectrum n=%d: residual %.2e, condition %.2e", n, residual, condition)
    if not np.all(np.isfinite(weights)) or residual > config.PATH_SPECTRUM_RESIDUAL_TOL:
        raise NumericalFailure(
            f"Vandermonde solve for P_{n} left residual {residual:.3e}",
            residual=residual, condition=condition,
        )
    # re-normalize so the discrete weights pass the 1e-12 sum check
    weights = weights / math.fsum(weights)
    return PathSpectrum(n, eigenvalues, weights, residual, condition)


def weak_equality_by_moments(a: SpectralDistribution, b: SpectralDistribution,
                             m_max: int = config.WEAK_EQUALITY_MMAX,
                             tol: float = config.WEAK_EQUALITY_TOL) -> bool:
    """True iff |M_m(a) - M_m(b)| <= tol * max(1, |M_m(a)|) for every m <= m_max."""
    for m in range(m_max + 1):
        ma, mb = a.moment(m), b.moment(m)
        if abs(ma - mb) > tol * max(1, abs(ma)):
            logger.debug("%s and %s differ at m=%d: %s vs %s", a.label, b.label, m, ma, mb)
            return False
    return True


@dataclass(frozen=True)
class MomentSequence:
    """Even moments M_0, M_2, M_4, ... of a distribution."""

    even_moments: tuple[Moment, ...]

    def __post_init__(self):
        if not self.even_moments:
            raise InvalidParameter("A moment sequence needs at least M_0")
        if abs(self.even_moments[0] - 1) > config.DISCRETE_WEIGHT_TOL:
            raise InvalidParameter(f"M_0 must be 1, got {self.even_moments[0]}")

    @classmethod
    def of(cls, d: SpectralDistribution, count: int) -> "MomentSequence":
        return cls(tuple(d.moment(2 * j) for j in range(count)))

    def hankel_ok(self, tol: float = 0.0) -> bool:
        """2x2 Hankel minors M_2j M_2j+4 - M_2j+2^2 >= 0 on consecutive windows."""
        m = self.even_moments
        return all(m[j] * m[j + 2] - m[j + 1] ** 2 >= -tol * max(1, abs(m[j + 1]) ** 2) for j in range(len(m) - 2))


def path_distribution(n: int) -> Discrete:
    return path_spectrum(n).distribution()


def lattice_distribution(spec: LatticeSpec) -> SpectralDistribution:
    """Spectral distribution at the root of a named lattice."""
    alpha, w = ArcSine(), Semicircle()
    match spec.kind:
        case LatticeKind.Z:
            return alpha
        case LatticeKind.ZPLUS:
            return w
        case LatticeKind.FULL_Z2:
            return MellinConv(alpha, alpha)
        case LatticeKind.HALF_PLANE:
            return MellinConv(w, alpha)
        case LatticeKind.WEDGE:
            return MellinConv(w, w)
        case LatticeKind.QUARTER_PLANE:
            return ClassicalConv(w, w)
        case LatticeKind.STRIP:
            return MellinConv(path_distribution(spec.n), alpha)
        case LatticeKind.DIAMOND:
            return MellinConv(path_distribution(spec.k), path_distribution(spec.l))
        case LatticeKind.BCC3:
            return MellinConv(MellinConv(alpha, alpha), alpha)
        case LatticeKind.Z3_CARTESIAN:
            return ClassicalConv(ClassicalConv(alpha, alpha), alpha)
        case LatticeKind.CHAMBER3 | LatticeKind.ZPLUS_KRON_CART:
            return ClassicalConv(MellinConv(w, w), w)
        case LatticeKind.Z_CART_ZPLUS:
            return ClassicalConv(alpha, w)
    raise InvalidParameter(f"No spectral distribution is tabulated for lattice kind {spec.kind.value}")


NAMED_DISTRIBUTIONS = {
    "arcsine": ArcSine(),
    "semicircle": Semicircle(),
    **{kind.value: NamedDensity(kind) for kind in DensityKind},
}


def resolve_distribution(kind: str, n: int | None = None, k: int | None = None,
                         l: int | None = None) -> SpectralDistribution:
    """Accept a named distribution (arcsine, semicircle, aa, wa, ww) or a lattice kind."""
    if kind in NAMED_DISTRIBUTIONS:
        return NAMED_DISTRIBUTIONS[kind]
    return lattice_distribution(LatticeSpec.parse(kind, n, k, l))


def format_moment(value: Moment) -> str:
    return str(value) if isinstance(value, int) else format(value, ".15g")


def moment_rows(d: SpectralDistribution, m_max: int) -> list[list[str]]:
    if m_max < 0:
        raise InvalidParameter(f"m_max must be >= 0, got {m_max}")
    return [[str(m), format_moment(value)] for m, value in enumerate(d.moments(m_max))]


def moment_table_csv(d: SpectralDistribution, m_max: int) -> str:
    return format_csv(["m", "moment"], moment_rows(d, m_max))
