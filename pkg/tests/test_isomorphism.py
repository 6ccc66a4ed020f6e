import pytest

from errors import InvalidParameter
from graphs import cartesian, half_line, integer_line, kronecker
from isomorphism import (BUILTIN_MAPS, IsoMap, diamond_map, half_plane_map, square_lattice_map, strip_map,
                         verify_isomorphism, wedge_map)


class TestBuiltinMaps:
    def test_square_lattice_radius_8(self):
        report = verify_isomorphism(square_lattice_map(), 8)
        assert report.ok, report.to_dict()
        assert report.source_vertices == report.target_vertices == 145

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_strip(self, n):
        assert verify_isomorphism(strip_map(n), 6).ok

    def test_half_plane(self):
        assert verify_isomorphism(half_plane_map(), 6).ok

    @pytest.mark.parametrize("k, l", [(2, 2), (3, 4), (4, 4)])
    def test_diamond(self, k, l):
        assert verify_isomorphism(diamond_map(k, l), 6).ok

    def test_wedge(self):
        assert verify_isomorphism(wedge_map(), 6).ok

    @pytest.mark.parametrize("name", ["z3", "bcc"])
    def test_three_dimensional(self, name):
        assert verify_isomorphism(BUILTIN_MAPS[name](), 3).ok

    def test_forward(self):
        assert square_lattice_map().forward((2, 1)) == (3, 1)


class TestViolations:
    def test_identity_is_not_an_isomorphism(self):
        z = integer_line()
        identity = IsoMap("identity", ((1, 0), (0, 1)), (0, 0), cartesian(z, z), kronecker(z, z), (0, 0))
        report = verify_isomorphism(identity, 2)
        assert not report.ok
        assert report.violation == "image lies outside the target ball"
        assert report.to_dict()["witness"] == ["-1,0", "-1,0"]

    def test_collapsing_map(self):
        z = integer_line()
        collapse = IsoMap("collapse", ((1, 1), (1, 1)), (0, 0), cartesian(z, z), kronecker(z, z), (0, 0))
        report = verify_isomorphism(collapse, 1)
        assert report.violation == "map is not injective on the ball"

    def test_root_image_outside_target(self):
        z = integer_line()
        shifted = IsoMap("shift", ((1, 1), (1, -1)), (-1, 0), cartesian(z, z), kronecker(half_line(), z), (0, 0))
        report = verify_isomorphism(shifted, 1)
        assert report.violation == "root image is not a target vertex"
        assert report.witness == [(0, 0), (-1, 0)]

    def test_matrix_shape_checked(self):
        z = integer_line()
        with pytest.raises(InvalidParameter):
            IsoMap("bad", ((1, 0, 0), (0, 1, 0)), (0, 0), cartesian(z, z), kronecker(z, z), (0, 0))
