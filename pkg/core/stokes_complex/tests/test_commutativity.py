import pytest

from core.experiments.manufactured import bubble, quadratic_velocity, stokes_velocity
from core.spaces.fields import Field
from core.stokes_complex import CheckId, check_commutativity, check_exact_sequence


class TestCommutativity:
    def test_bubble_on_structured_grid(self, square_mesh_4):
        defect_curl, defect_div = check_commutativity(square_mesh_4, bubble(), stokes_velocity())
        assert defect_curl <= 1e-10
        assert defect_div <= 1e-11

    @pytest.mark.parametrize('mesh_name', ['perturbed_mesh_4', 'checkerboard_mesh_4'])
    def test_bubble_on_general_grids(self, mesh_name, request):
        defect_curl, _ = check_commutativity(request.getfixturevalue(mesh_name), bubble(), quadratic_velocity())
        assert defect_curl <= 1e-10

    @pytest.mark.parametrize('mesh_name', ['perturbed_mesh_4', 'checkerboard_mesh_4'])
    def test_quadratic_divergence(self, mesh_name, request):
        _, defect_div = check_commutativity(request.getfixturevalue(mesh_name), bubble(), quadratic_velocity())
        assert defect_div <= 1e-10

    def test_missing_derivatives(self, square_mesh_2):
        with pytest.raises(ValueError):
            check_commutativity(square_mesh_2, Field(lambda p: p[:, 0]), quadratic_velocity())
        with pytest.raises(ValueError):
            check_commutativity(square_mesh_2, bubble(), Field(lambda p: p))

    def test_checks_record_defects(self, checkerboard_mesh_2):
        report = check_exact_sequence(checkerboard_mesh_2, checks=[CheckId.COMMUTING_CURL, CheckId.COMMUTING_DIV],
                                      phi=bubble(), velocity=quadratic_velocity())
        assert report.passed
        assert set(report.defects) == {'curl', 'div'}

    def test_check_without_fields_fails(self, square_mesh_2):
        report = check_exact_sequence(square_mesh_2, strict=False, checks=[CheckId.COMMUTING_CURL])
        assert not report.passed
