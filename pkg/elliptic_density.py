import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from scipy.integrate import quad

import config
from errors import DomainError, InvalidParameter, NumericalFailure
from tables import format_csv

logger = logging.getLogger(__name__)

SUPPORT = 4.0
FACTOR_SUPPORT = 2.0


class DensityKind(str, Enum):
    AA = "aa"  # arcsine *M arcsine, equal to arcsine * arcsine
    WA = "wa"  # semicircle *M arcsine
    WW = "ww"  # semicircle *M semicircle


@dataclass(frozen=True)
class EllipticPair:
    k: float
    K: float
    E: float
    iterations: int


def elliptic_KE(k: float, kc: float | None = None) -> EllipticPair:
    """
    Complete elliptic integrals K(k) and E(k) by the arithmetic-geometric mean.
    E comes from the accumulated sum of 2^(n-1) c_n^2.

    :param k: modulus, 0 <= k < 1
    :param kc: complementary modulus sqrt(1 - k^2) when the caller knows it more
               accurately than 1 - k^2 can be formed (k close to 1)
    """
    if kc is None:
        if not 0.0 <= k < 1.0:
            raise DomainError(f"Elliptic modulus must lie in [0, 1), got {k}")
        kc = math.sqrt((1.0 - k) * (1.0 + k))
    elif not 0.0 < kc <= 1.0:
        raise DomainError(f"Complementary modulus must lie in (0, 1], got {kc}")

    a, b, c = 1.0, kc, k
    weight = 0.5
    total = weight * c * c
    iterations = 0
    while abs(a - b) > config.AGM_TOLERANCE * a:
        if iterations >= config.AGM_MAX_ITERATIONS:
            raise NumericalFailure(f"AGM did not converge for k={k}", iterations=iterations)
        a, b, c = (a + b) / 2.0, math.sqrt(a * b), (a - b) / 2.0
        weight *= 2.0
        total += weight * c * c
        iterations += 1

    big_k = math.pi / (a + b)
    return EllipticPair(k, big_k, big_k * (1.0 - total), iterations)


def xi(x: float) -> float:
    return math.sqrt(1.0 - x * x / 16.0)


def density(kind: DensityKind, x: float) -> float:
    """
    Closed-form density of the 2-fold Mellin products on [-4, 4], zero outside.
    All three kernels diverge logarithmically at x = 0, where math.inf is returned.
    """
    ax = abs(x)
    if ax > SUPPORT:
        return 0.0
    if ax == 0.0:
        return math.inf

    # xi(x) has complementary modulus |x| / 4 exactly
    kc = ax / SUPPORT
    pair = elliptic_KE(math.sqrt((1.0 - kc) * (1.0 + kc)), kc)
    pi2 = math.pi ** 2
    match DensityKind(kind):
        case DensityKind.AA:
            return pair.K / (2.0 * pi2)
        case DensityKind.WA:
            value = (pair.K - pair.E) / pi2
        case DensityKind.WW:
            value = 2.0 / pi2 * ((1.0 + ax * ax / 16.0) * pair.K - 2.0 * pair.E)
    # rounding near |x| = 4
    return max(value, 0.0)


def arcsine_density(x: float) -> float:
    return 1.0 / (math.pi * math.sqrt(4.0 - x * x)) if abs(x) < FACTOR_SUPPORT else 0.0


def semicircle_density(x: float) -> float:
    return math.sqrt(4.0 - x * x) / (2.0 * math.pi) if abs(x) <= FACTOR_SUPPORT else 0.0


# (f, g) with density(kind) == 2 * Mellin convolution of f and g
KERNEL_FACTORS: dict[DensityKind, tuple[Callable[[float], float], Callable[[float], float]]] = {
    DensityKind.AA: (arcsine_density, arcsine_density),
    DensityKind.WA: (arcsine_density, semicircle_density),
    DensityKind.WW: (semicircle_density, semicircle_density),
}

# density ~ A ln(16/|x|) + B as x -> 0, from K(k) ~ ln(4/k') and E(k) -> 1
SINGULAR_COEFFICIENTS = {
    DensityKind.AA: (1.0 / (2.0 * math.pi ** 2), 0.0),
    DensityKind.WA: (1.0 / math.pi ** 2, -1.0 / math.pi ** 2),
    DensityKind.WW: (2.0 / math.pi ** 2, -4.0 / math.pi ** 2),
}


def _integrate(func: Callable[[float], float], a: float, b: float, tol: float,
               points: list[float] | None = None) -> float:
    result = quad(func, a, b, epsabs=tol, epsrel=tol, limit=config.QUADRATURE_PANEL_LIMIT,
                  points=points, full_output=1)
    value, abserr, info = result[:3]
    logger.debug("quad on [%g, %g]: %d panels, error estimate %.2e", a, b, info.get("last", 0), abserr)
    if len(result) > 3 and abserr > tol * max(1.0, abs(value)):
        raise NumericalFailure(
            f"Adaptive quadrature on [{a}, {b}] did not reach tolerance {tol}: {result[3]}",
            abserr=abserr, panels=info.get("last"),
        )
    return value


def mellin_density_convolve(f: Callable[[float], float], g: Callable[[float], float], x: float,
                            tol: float = config.QUADRATURE_TOL) -> float:
    """
    Density 2 * int f(x/y) g(y) dy/y of the Mellin convolution of two symmetric
    densities supported in [-2, 2]. The integral runs over y in [x/2, 2]; the two
    endpoint singularities sit on separate panels.

    At |x| = 4 the range is the single point y = 2 and the integral is 0. The
    closed forms in `density` report the one-sided limit there instead, which is
    nonzero for the arcsine-arcsine kernel.
    """
    ax = abs(x)
    if ax >= SUPPORT:
        return 0.0
    if ax == 0.0:
        return math.inf
    lower, upper = ax / FACTOR_SUPPORT, FACTOR_SUPPORT
    middle = 0.5 * (lower + upper)
    return 2.0 * _integrate(lambda y: f(ax / y) * g(y) / y, lower, upper, tol, points=[middle])


def _singular_panel(kind: DensityKind, m: int, eps: float) -> float:
    """int_0^eps x^m (A ln(16/x) + B) dx, the analytic part of a moment near the singularity."""
    coefficient_log, constant = SINGULAR_COEFFICIENTS[kind]
    scale = eps ** (m + 1) / (m + 1)
    return scale * (coefficient_log * (math.log(16.0 / eps) + 1.0 / (m + 1)) + constant)


def density_moment(kind: DensityKind, m: int, tol: float = config.QUADRATURE_TOL) -> float:
    """2 * int_0^4 x^m density(kind, x) dx for even m."""
    if m < 0 or m % 2:
        raise InvalidParameter(f"Density moments are taken for even m >= 0, got {m}")
    kind = DensityKind(kind)
    eps = config.SINGULAR_PANEL_EPS
    near_zero = _singular_panel(kind, m, eps)
    body = _integrate(lambda x: x ** m * density(kind, x), eps, SUPPORT, tol, points=[1e-4, 1e-2, 1.0])
    return 2.0 * (near_zero + body)


@dataclass(frozen=True)
class DensityKernel:
    kind: DensityKind
    support: tuple[float, float] = (-SUPPORT, SUPPORT)

    def __call__(self, x: float) -> float:
        return density(self.kind, x)

    def moment(self, m: int, tol: float = config.QUADRATURE_TOL) -> float:
        return density_moment(self.kind, m, tol)

    def convolve_numerically(self, x: float, tol: float = config.QUADRATURE_TOL) -> float:
        f, g = KERNEL_FACTORS[self.kind]
        return mellin_density_convolve(f, g, x, tol)


def format_density(value: float) -> str:
    return "inf" if math.isinf(value) else format(value, ".15g")


def density_samples(kind: DensityKind, grid: int) -> list[tuple[float, float]]:
    """Closed-form density on a uniform grid of `grid` points over [-4, 4]."""
    if grid < 2:
        raise InvalidParameter(f"Grid needs at least 2 points, got {grid}")
    return [(float(x), density(kind, float(x))) for x in np.linspace(-SUPPORT, SUPPORT, grid)]


def density_rows(kind: DensityKind, grid: int) -> list[list[str]]:
    return [[format(x, ".15g"), format_density(value)] for x, value in density_samples(kind, grid)]


def density_csv(kind: DensityKind, grid: int) -> str:
    return format_csv(["x", "density"], density_rows(kind, grid))
