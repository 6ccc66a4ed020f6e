import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import networkx as nx
import numpy as np
from scipy.integrate import quad

from elliptic_density import DensityKind, DensityKernel, density, elliptic_KE
from graphs import (FiniteGraph, ball, cartesian, connected_components, degree_histogram, half_line, kronecker,
                    path_graph)
from isomorphism import (body_centered_map, cubic_lattice_map, diamond_map, half_plane_map,
                         square_lattice_map, strip_map, verify_isomorphism, wedge_map)
from lattice_catalog import LatticeKind, LatticeSpec
from spectral import lattice_distribution, path_spectrum
from walks import (binomial_identity_lhs, cartesian_walk_table, catalan, central_binomial, closed_form_walks,
                   kronecker_walk_product, moment_coincidence_report, walk_table)

logger = logging.getLogger(__name__)


def _json_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    return str(value)


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    tol: float | None
    passed: bool
    detail: str | None = None

    def to_dict(self) -> dict:
        result = {
            "name": self.name,
            "expected": _json_value(self.expected),
            "actual": _json_value(self.actual),
            "tol": self.tol,
            "pass": self.passed,
        }
        if self.detail:
            result["detail"] = self.detail
        return result


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def record(self, check: Check) -> None:
        logger.info("%s: %s", "PASS" if check.passed else "FAIL", check.name)
        self.checks.append(check)

    def exact(self, name: str, expected: Any, actual: Any, detail: str | None = None) -> None:
        self.record(Check(name, expected, actual, None, expected == actual, detail))

    def close(self, name: str, expected: float, actual: float, tol: float, relative: bool = False) -> None:
        scale = max(1.0, abs(expected)) if relative else 1.0
        self.record(Check(name, expected, actual, tol, abs(actual - expected) <= tol * scale))

    def extend(self, other: "SuiteReport") -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "checks": [check.to_dict() for check in self.checks], "pass": self.passed}


def _tolerance(default: float, override: float | None) -> float:
    return default if override is None else override


def identity_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("identity")
    for m in range(31):
        report.exact(f"identity/m={m}", central_binomial(m) ** 2, binomial_identity_lhs(m))
    return report


def iso_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("iso")
    cases = [
        (square_lattice_map(), 8),
        (strip_map(3), 6),
        (strip_map(4), 6),
        (half_plane_map(), 6),
        (diamond_map(4, 4), 6),
        (wedge_map(), 6),
        (cubic_lattice_map(), 4),
        (body_centered_map(), 4),
    ]
    for iso, radius in cases:
        outcome = verify_isomorphism(iso, radius, budget)
        detail = None if outcome.ok else f"{outcome.violation}: {outcome.to_dict()['witness']}"
        report.exact(f"iso/{iso.name}/radius={radius}", True, outcome.ok, detail)
    return report


def coincidence_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("coincidence")

    chamber, chamber_root = LatticeSpec(LatticeKind.CHAMBER3).build()
    mixed, mixed_root = LatticeSpec(LatticeKind.ZPLUS_KRON_CART).build()
    rows = moment_coincidence_report(chamber, chamber_root, mixed, mixed_root, 12, budget)
    for m, a, b in rows.rows[::2]:
        report.exact(f"coincidence/chamber-vs-mixed/m={m}", a, b)
    report.exact("coincidence/chamber/m=4", 12, rows.rows[4][1])

    # Z+ xC Z+ at the origin has degree 2, like Z+ xK Z+ at (0, 1); Z xC Z+ has degree 3 there
    quarter = cartesian(half_line(), half_line())
    shifted, shifted_root = LatticeSpec(LatticeKind.ZPLUS_KRON_ZPLUS_AT_01).build()
    rows = moment_coincidence_report(quarter, (0, 0), shifted, shifted_root, 16, budget)
    for m, a, b in rows.rows[::2]:
        report.exact(f"coincidence/zpczp-vs-zpkzp01/m={m}", a, b)
        report.exact(f"coincidence/zpczp/catalan-product/m={m}", catalan(m // 2) * catalan(m // 2 + 1), a)

    # interior of a radius-6 ball: untruncated degrees up to distance 4
    mixed_window = ball(mixed, mixed_root, 6, budget)
    chamber_window = ball(chamber, chamber_root, 6, budget)
    mixed_twos = degree_histogram(mixed_window, 4).get(2, 0)
    chamber_twos = degree_histogram(chamber_window, 4).get(2, 0)
    report.exact("witness/mixed/degree-2-vertices", 1, mixed_twos)
    report.exact("witness/mixed/root-degree", 2, mixed_window.degree(mixed_root))
    report.record(Check("witness/chamber/degree-2-vertices", ">= 2", chamber_twos, None, chamber_twos >= 2))
    return report


def golden_path_walks(m: int) -> float:
    """W_2m(0; P_4) from the two nonzero eigenvalue pairs of P_4."""
    root5 = math.sqrt(5.0)
    return (5 - root5) / 10 * ((3 + root5) / 2) ** m + (5 + root5) / 10 * ((3 - root5) / 2) ** m


def path_spectrum_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("path-spectrum")
    walk_tol = _tolerance(1e-8, tol)

    two = path_spectrum(2)
    report.close("path-spectrum/n=2/weight[0]", 0.5, float(two.weights[0]), 1e-12)
    report.close("path-spectrum/n=2/weight[1]", 0.5, float(two.weights[1]), 1e-12)

    for n in range(2, 13):
        spectrum = path_spectrum(n)
        report.close(f"path-spectrum/n={n}/weight-sum", 1.0, math.fsum(spectrum.weights), 1e-10)
        smallest = float(np.min(spectrum.weights))
        report.record(Check(f"path-spectrum/n={n}/weights-nonnegative", ">= -1e-10", smallest, 1e-10,
                            smallest >= -1e-10))
        counts = walk_table(path_graph(n), (0,), 2 * n, budget)
        for m in range(n + 1):
            report.close(f"path-spectrum/n={n}/m={2 * m}", float(counts[2 * m]), spectrum.moment(2 * m),
                         walk_tol, relative=True)
        report.close(f"path-spectrum/n={n}/odd-moment", 0.0, spectrum.moment(3), 1e-12)

    four = path_spectrum(4)
    for m in range(7):
        report.close(f"path-spectrum/golden/m={2 * m}", golden_path_walks(m), four.moment(2 * m),
                     _tolerance(1e-9, tol), relative=True)
    return report


def density_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("density")
    moment_tol = _tolerance(1e-6, tol)
    exact_moments = {
        DensityKind.AA: lambda h: central_binomial(h) ** 2,
        DensityKind.WA: lambda h: catalan(h) * central_binomial(h),
        DensityKind.WW: lambda h: catalan(h) ** 2,
    }
    samples = np.linspace(0.2, 3.8, 20)
    for kind, expected in exact_moments.items():
        kernel = DensityKernel(kind)
        report.close(f"density/{kind.value}/normalization", 1.0, kernel.moment(0), 1e-8)
        for h in range(1, 6):
            report.close(f"density/{kind.value}/moment/m={2 * h}", float(expected(h)), kernel.moment(2 * h),
                         moment_tol, relative=True)
        for x in samples:
            report.close(f"density/{kind.value}/mellin/x={x:.4g}", kernel(float(x)),
                         kernel.convolve_numerically(float(x)), moment_tol)

    report.close("density/wa/x=4", 0.0, density(DensityKind.WA, 4.0), 1e-15)
    report.close("density/aa/x=4", 1.0 / (4.0 * math.pi), density(DensityKind.AA, 4.0), 1e-15)

    for k in (i / 10 for i in range(1, 10)):
        kc = math.sqrt(1.0 - k * k)
        a, b = elliptic_KE(float(k)), elliptic_KE(kc)
        legendre = a.K * b.E + b.K * a.E - a.K * b.K
        report.close(f"elliptic/legendre/k={k:.1f}", math.pi / 2, legendre, 1e-11)

    k = 1.0 / math.sqrt(2.0)
    direct, _ = quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0.0, math.pi / 2,
                     epsabs=1e-13, epsrel=1e-13)
    report.close("elliptic/K(1/sqrt2)/quadrature", direct, elliptic_KE(k).K, 1e-10)

    pairs = [elliptic_KE(float(k)) for k in np.linspace(0.0, 0.99, 100)]
    monotone = all(p.K < q.K and p.E > q.E for p, q in zip(pairs, pairs[1:]))
    report.exact("elliptic/monotonicity", True, monotone)
    return report


def _walk_cases() -> list[tuple[LatticeSpec, int]]:
    one_d = [LatticeSpec(kind) for kind in (LatticeKind.Z, LatticeKind.ZPLUS, LatticeKind.ZPLUS_AT_ONE)]
    two_d = [LatticeSpec(kind) for kind in (LatticeKind.FULL_Z2, LatticeKind.HALF_PLANE, LatticeKind.WEDGE,
                                             LatticeKind.QUARTER_PLANE, LatticeKind.Z_CART_ZPLUS,
                                             LatticeKind.ZPLUS_KRON_ZPLUS_AT_01)]
    two_d += [LatticeSpec(LatticeKind.STRIP, n=n) for n in (3, 4, 5)]
    two_d += [LatticeSpec(LatticeKind.DIAMOND, k=size, l=size) for size in (3, 4)]
    three_d = [LatticeSpec(kind) for kind in (LatticeKind.BCC3, LatticeKind.Z3_CARTESIAN, LatticeKind.CHAMBER3,
                                               LatticeKind.ZPLUS_KRON_CART)]
    return [(s, 30) for s in one_d] + [(s, 16) for s in two_d] + [(s, 12) for s in three_d]


UNTABULATED = {LatticeKind.ZPLUS_AT_ONE, LatticeKind.ZPLUS_KRON_ZPLUS_AT_01}


def walks_suite(tol: float | None = None, budget: int | None = None) -> SuiteReport:
    report = SuiteReport("walks")
    moment_tol = _tolerance(1e-8, tol)
    for spec, m_max in _walk_cases():
        graph, root = spec.build()
        table = walk_table(graph, root, m_max, budget)
        for m in range(0, m_max + 1, 2):
            report.exact(f"walks/{spec.label}/m={m}", closed_form_walks(spec, m), table[m])
        if spec.kind in UNTABULATED:
            continue
        distribution = lattice_distribution(spec)
        for m in range(0, 13, 2):
            name = f"walks/{spec.label}/moment/m={m}"
            if distribution.exact:
                report.exact(name, table[m], distribution.moment(m))
            else:
                report.close(name, float(table[m]), distribution.moment(m), moment_tol, relative=True)
    return report


PRODUCT_PAIRS = 200
PRODUCT_MMAX = 10


def _random_graph(rng: np.random.Generator) -> FiniteGraph:
    size = int(rng.integers(1, 9))
    graph = nx.gnp_random_graph(size, float(rng.uniform(0.2, 0.8)), seed=int(rng.integers(2 ** 31)))
    return FiniteGraph.from_networkx(graph, root=0, name=f"G{size}")


def products_suite(tol: float | None = None, budget: int | None = None, seed: int = 20240) -> SuiteReport:
    report = SuiteReport("products")
    rng = np.random.default_rng(seed)
    kronecker_ok = cartesian_ok = components_ok = connected_pairs = 0
    for _ in range(PRODUCT_PAIRS):
        g1, g2 = _random_graph(rng), _random_graph(rng)
        w1 = walk_table(g1, g1.root_vertex, PRODUCT_MMAX, budget)
        w2 = walk_table(g2, g2.root_vertex, PRODUCT_MMAX, budget)
        root = g1.root_vertex + g2.root_vertex

        direct = walk_table(kronecker(g1, g2), root, PRODUCT_MMAX, budget)
        kronecker_ok += direct.counts() == kronecker_walk_product(w1, w2).counts()
        direct = walk_table(cartesian(g1, g2), root, PRODUCT_MMAX, budget)
        cartesian_ok += direct.counts() == cartesian_walk_table(w1, w2).counts()

        if len(g1) > 1 and len(g2) > 1 and nx.is_connected(g1.to_networkx()) and nx.is_connected(g2.to_networkx()):
            connected_pairs += 1
            components_ok += len(connected_components(kronecker(g1, g2))) <= 2

    report.exact("products/kronecker-walk-multiplication", PRODUCT_PAIRS, kronecker_ok)
    report.exact("products/cartesian-binomial-convolution", PRODUCT_PAIRS, cartesian_ok)
    report.exact("products/kronecker-components-at-most-2", connected_pairs, components_ok)
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "identity": identity_suite,
    "iso": iso_suite,
    "coincidence": coincidence_suite,
    "density": density_suite,
    "path-spectrum": path_spectrum_suite,
    "walks": walks_suite,
    "products": products_suite,
}


def run_suite(name: str, tol: float | None = None, budget: int | None = None) -> SuiteReport:
    if name == "all":
        combined = SuiteReport("all")
        for suite in SUITES.values():
            combined.extend(suite(tol=tol, budget=budget))
        return combined
    logger.info("running suite %s", name)
    report = SUITES[name](tol=tol, budget=budget)
    logger.info("suite %s finished: %s", name, "pass" if report.passed else "fail")
    return report
