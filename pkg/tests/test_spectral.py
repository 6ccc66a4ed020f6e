import logging
import math

import pytest

from elliptic_density import DensityKind
from errors import InvalidParameter
from lattice_catalog import LatticeKind, LatticeSpec
from spectral import (ArcSine, ClassicalConv, Discrete, MellinConv, MomentSequence, NamedDensity, Semicircle,
                      classical_convolve, lattice_distribution, mellin_convolve, moment, moment_table_csv,
                      path_spectrum, resolve_distribution, weak_equality_by_moments)
from walks import closed_form_walks, path_walks

ALPHA, W = ArcSine(), Semicircle()


class TestMoments:
    def test_arcsine(self):
        assert moment(ALPHA, 2) == 2
        assert moment(ALPHA, 8) == 70

    def test_semicircle(self):
        assert moment(W, 4) == 2

    def test_mellin_product(self):
        assert moment(mellin_convolve(W, ALPHA), 4) == 12
        assert moment(mellin_convolve(W, W), 4) == 4

    def test_classical_convolution(self):
        assert moment(classical_convolve(ALPHA, ALPHA), 4) == 36
        assert moment(classical_convolve(W, W), 4) == 10

    @pytest.mark.parametrize("d", [ALPHA, W, MellinConv(W, ALPHA), ClassicalConv(ALPHA, W), NamedDensity(DensityKind.WW)])
    def test_odd_moments_vanish(self, d):
        assert moment(d, 1) == 0
        assert moment(d, 7) == 0

    def test_negative_order(self):
        with pytest.raises(InvalidParameter):
            moment(ALPHA, -1)

    @pytest.mark.parametrize("kind, factors", [
        (DensityKind.AA, (ALPHA, ALPHA)),
        (DensityKind.WA, (W, ALPHA)),
        (DensityKind.WW, (W, W)),
    ])
    def test_named_density_delegates(self, kind, factors):
        assert NamedDensity(kind).moments(12) == MellinConv(*factors).moments(12)

    def test_exact_moments_are_integers(self):
        assert isinstance(moment(ClassicalConv(MellinConv(W, W), W), 12), int)

    def test_table_csv(self):
        assert moment_table_csv(ALPHA, 4) == "m,moment\n0,1\n1,0\n2,2\n3,0\n4,6\n"


class TestConvolutionLaws:
    @pytest.mark.parametrize("a, b", [(ALPHA, W), (W, W), (ALPHA, ALPHA), (MellinConv(W, ALPHA), ALPHA)])
    def test_mellin_product_rule(self, a, b):
        for m in range(31):
            assert moment(MellinConv(a, b), m) == moment(a, m) * moment(b, m)

    def test_mellin_commutative_and_associative(self):
        for m in range(21):
            assert moment(MellinConv(ALPHA, W), m) == moment(MellinConv(W, ALPHA), m)
            assert moment(MellinConv(MellinConv(ALPHA, W), W), m) == moment(MellinConv(ALPHA, MellinConv(W, W)), m)

    def test_unit_factor(self):
        assert weak_equality_by_moments(MellinConv(ALPHA, Discrete.symmetric_pair(1.0)), ALPHA)

    def test_classical_identity(self):
        assert weak_equality_by_moments(ClassicalConv(W, Discrete.point_mass()), W)

    def test_arcsine_convolutions_coincide(self):
        assert weak_equality_by_moments(ClassicalConv(ALPHA, ALPHA), MellinConv(ALPHA, ALPHA), m_max=30)

    def test_semicircle_convolutions_differ(self):
        assert not weak_equality_by_moments(ClassicalConv(W, W), MellinConv(W, W), m_max=10)

    def test_reflexive(self):
        d = ClassicalConv(MellinConv(W, W), W)
        assert weak_equality_by_moments(d, d)


class TestDiscrete:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(InvalidParameter):
            Discrete(((-1.0, 0.5), (1.0, 0.4)))

    def test_atoms_must_be_symmetric(self):
        with pytest.raises(InvalidParameter):
            Discrete(((-1.0, 0.5), (2.0, 0.5)))

    def test_atom_at_zero(self):
        d = Discrete(((-1.0, 0.25), (0.0, 0.5), (1.0, 0.25)))
        assert d.moment(0) == pytest.approx(1.0)
        assert d.moment(2) == pytest.approx(0.5)
        assert d.moment(3) == 0.0


class TestPathSpectrum:
    def test_two_vertices(self):
        spectrum = path_spectrum(2)
        assert list(spectrum.eigenvalues) == pytest.approx([1.0, -1.0])
        assert list(spectrum.weights) == pytest.approx([0.5, 0.5], abs=1e-12)

    def test_eigenvalues_symmetric_and_decreasing(self):
        eigenvalues = path_spectrum(7).eigenvalues
        assert all(a > b for a, b in zip(eigenvalues, eigenvalues[1:]))
        assert list(eigenvalues) == list(-eigenvalues[::-1])

    @pytest.mark.parametrize("n", range(2, 13))
    def test_reproduces_path_walks(self, n):
        spectrum = path_spectrum(n)
        assert math.fsum(spectrum.weights) == pytest.approx(1.0, abs=1e-10)
        assert min(spectrum.weights) >= -1e-10
        for m in range(n + 1):
            assert spectrum.moment(2 * m) == pytest.approx(path_walks(n, 2 * m), rel=1e-8)

    def test_golden_ratio_moments(self):
        spectrum = path_spectrum(4)
        root5 = math.sqrt(5.0)
        for m in range(7):
            expected = (5 - root5) / 10 * ((3 + root5) / 2) ** m + (5 + root5) / 10 * ((3 - root5) / 2) ** m
            assert spectrum.moment(2 * m) == pytest.approx(expected, rel=1e-9)

    def test_odd_moments_cancel(self):
        d = path_spectrum(5).distribution()
        for m in (1, 3, 5, 7):
            assert abs(d.moment(m)) <= 1e-12

    @pytest.mark.parametrize("n", [1, 25])
    def test_range(self, n):
        with pytest.raises(InvalidParameter):
            path_spectrum(n)

    def test_conditioning_warning(self, caplog):
        with caplog.at_level(logging.WARNING, logger="spectral"):
            path_spectrum(13)
        assert "ill-conditioned" in caplog.text


class TestMomentSequence:
    def test_arcsine_hankel(self):
        assert MomentSequence.of(ALPHA, 8).hankel_ok()

    def test_path_hankel(self):
        assert MomentSequence.of(path_spectrum(5).distribution(), 6).hankel_ok(tol=1e-9)

    def test_negative_minor(self):
        assert not MomentSequence((1, 2, 3)).hankel_ok()

    def test_first_moment_is_one(self):
        with pytest.raises(InvalidParameter):
            MomentSequence((2, 1))


class TestLatticeTable:
    @pytest.mark.parametrize("kind", [
        LatticeKind.Z, LatticeKind.ZPLUS, LatticeKind.FULL_Z2, LatticeKind.HALF_PLANE, LatticeKind.WEDGE,
        LatticeKind.QUARTER_PLANE, LatticeKind.BCC3, LatticeKind.Z3_CARTESIAN, LatticeKind.CHAMBER3,
        LatticeKind.ZPLUS_KRON_CART, LatticeKind.Z_CART_ZPLUS,
    ])
    def test_exact_rows(self, kind):
        spec = LatticeSpec(kind)
        d = lattice_distribution(spec)
        assert [d.moment(m) for m in range(13)] == [closed_form_walks(spec, m) for m in range(13)]

    @pytest.mark.parametrize("spec", [LatticeSpec(LatticeKind.STRIP, n=4), LatticeSpec(LatticeKind.DIAMOND, k=3, l=4)])
    def test_path_rows(self, spec):
        d = lattice_distribution(spec)
        for m in range(0, 13, 2):
            assert d.moment(m) == pytest.approx(closed_form_walks(spec, m), rel=1e-8)

    def test_untabulated_kind(self):
        with pytest.raises(InvalidParameter):
            lattice_distribution(LatticeSpec(LatticeKind.ZPLUS_AT_ONE))

    def test_resolve_by_name(self):
        assert resolve_distribution("ww") == NamedDensity(DensityKind.WW)
        assert resolve_distribution("arcsine") == ALPHA
        assert resolve_distribution("strip", n=3).moment(2) == pytest.approx(2.0)
