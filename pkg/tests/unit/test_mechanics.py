"""Deployment model, spike penetration and stiffness."""

import math

import numpy as np
import pytest

from config.settings import Settings
from kiricap.core.contracts import KirigamiParams, SpikePolicy
from kiricap.core.errors import InvalidParamsError, OutOfRangeError
from kiricap.mechanics import (
    DeploymentModel,
    effective_stiffness,
    opening_angle,
    penetration_depth,
    penetration_report,
    spike_length,
    stiffness_sweep,
    strain_from_expansion,
)


class TestDeploymentModel:
    def test_passes_through_anchors(self):
        model = DeploymentModel()
        assert model.angle(0.0) == pytest.approx(0.0)
        assert model.angle(0.15) == pytest.approx(34.0)
        assert model.angle(0.20) == pytest.approx(38.0)

    def test_interpolates_between_anchors(self):
        theta = DeploymentModel().angle(0.175)
        assert 34.0 < theta < 38.0

    def test_saturates_beyond_last_anchor(self):
        model = DeploymentModel()
        assert model.angle(0.25) == pytest.approx(38.0)
        assert model.angle(0.30) == pytest.approx(38.0)

    def test_monotone_on_dense_grid(self):
        theta = DeploymentModel().angle(np.linspace(0.0, 0.30, 3001))
        assert np.all(np.diff(theta) >= -1e-12)

    @pytest.mark.parametrize("strain", [-0.01, 0.31, float("nan")])
    def test_outside_domain_raises(self, strain):
        with pytest.raises(OutOfRangeError):
            DeploymentModel().angle(strain)

    def test_opening_angle_wrapper(self):
        assert opening_angle(DeploymentModel(), 0.15) == pytest.approx(34.0)

    def test_from_config(self):
        model = DeploymentModel.from_config(
            {"deployment": {"anchors": [[0.0, 0.0], [0.1, 20.0]], "max_strain": 0.2}}
        )
        assert model.saturation_angle == 20.0
        assert 0.0 < model.angle(0.05) < 20.0
        assert model.angle(0.2) == pytest.approx(20.0)

    def test_shipped_config_matches_defaults(self):
        model = DeploymentModel.from_config(Settings.load_deployment_config())
        assert model.anchors == DeploymentModel().anchors
        assert model.max_strain == pytest.approx(0.30)

    @pytest.mark.parametrize(
        "anchors",
        [
            ((0.0, 0.0),),
            ((0.01, 0.0), (0.15, 34.0)),
            ((0.0, 0.0), (0.15, 34.0), (0.15, 38.0)),
            ((0.0, 0.0), (0.15, 34.0), (0.20, 30.0)),
        ],
    )
    def test_bad_anchors_rejected(self, anchors):
        with pytest.raises(InvalidParamsError):
            DeploymentModel(anchors=anchors)


class TestSpike:
    def test_apex_length(self, reference_params):
        spike = spike_length(reference_params)
        assert spike.H == pytest.approx(1.25 * math.tan(math.radians(40.0)), abs=1e-12)
        assert spike.H == pytest.approx(1.04887, abs=1e-5)
        assert spike.policy is SpikePolicy.APEX

    def test_cotangent_length(self, reference_params):
        spike = spike_length(reference_params, SpikePolicy.COTANGENT)
        assert spike.H == pytest.approx(1.48969, abs=1e-5)

    def test_apex_invalid_for_steep_angle(self):
        params = KirigamiParams(gamma=80.0)
        with pytest.raises(InvalidParamsError):
            spike_length(params)
        assert spike_length(params, "cotangent").H < params.l

    def test_depth_at_operating_point(self, reference_params):
        depth = penetration_depth(spike_length(reference_params), 34.0)
        assert depth == pytest.approx(0.58656, abs=1e-4)
        assert 0.45 <= depth <= 0.75

    def test_depth_limits(self, reference_params):
        spike = spike_length(reference_params)
        assert penetration_depth(spike, 0.0) == 0.0
        assert penetration_depth(spike, 90.0) == pytest.approx(spike.H)

    @pytest.mark.parametrize("theta", [-1.0, 90.5])
    def test_depth_out_of_range(self, reference_params, theta):
        with pytest.raises(OutOfRangeError):
            penetration_depth(spike_length(reference_params), theta)

    def test_report_lists_every_policy(self, reference_params):
        rows = penetration_report(reference_params, 34.0)
        assert [r["policy"] for r in rows] == ["apex", "cotangent"]
        assert rows[0]["depth"] == pytest.approx(0.58652, abs=1e-5)
        assert all(r["theoretical_reference"] == 0.704 for r in rows)
        assert all(r["measured_median"] == 0.61 for r in rows)
        assert all(r["theta"] == 34.0 for r in rows)

    def test_report_marks_inapplicable_policy(self):
        rows = penetration_report(KirigamiParams(gamma=80.0), 34.0)
        apex = rows[0]
        assert apex["H"] is None and apex["depth"] is None
        assert rows[1]["depth"] > 0.0


class TestStiffness:
    def test_cubic_in_thickness(self, reference_params):
        k1 = effective_stiffness(20.0, 0.05, reference_params)
        assert effective_stiffness(20.0, 0.10, reference_params) / k1 == pytest.approx(8.0)
        assert effective_stiffness(20.0, 0.20, reference_params) / k1 == pytest.approx(64.0)

    def test_linear_in_modulus(self, reference_params):
        ratio = effective_stiffness(40.0, 0.05, reference_params) / effective_stiffness(20.0, 0.05, reference_params)
        assert ratio == pytest.approx(2.0)

    def test_inverse_square_in_ligament(self, reference_params):
        narrow = reference_params.model_copy(update={"delta": 0.25})
        ratio = effective_stiffness(20.0, 0.05, narrow) / effective_stiffness(20.0, 0.05, reference_params)
        assert ratio == pytest.approx(4.0)

    def test_sweep_over_fabricated_films(self, reference_params):
        sweep = stiffness_sweep(reference_params)
        assert list(sweep) == [0.05, 0.1, 0.15, 0.2]
        assert list(sweep.values()) == pytest.approx([1.0, 8.0, 27.0, 64.0])

    @pytest.mark.parametrize("modulus,t", [(0.0, 0.05), (20.0, 0.0), (-1.0, 0.1)])
    def test_nonpositive_inputs_rejected(self, reference_params, modulus, t):
        with pytest.raises(InvalidParamsError):
            effective_stiffness(modulus, t, reference_params)

    def test_strain_from_expansion(self):
        assert strain_from_expansion(7.5) == pytest.approx(0.15)
        assert strain_from_expansion(10.0, reference_length=50.0) == pytest.approx(0.20)
        np.testing.assert_allclose(strain_from_expansion([0.0, 5.0]), [0.0, 0.1])

    def test_strain_rejects_bad_input(self):
        with pytest.raises(InvalidParamsError):
            strain_from_expansion(-1.0)
        with pytest.raises(InvalidParamsError):
            strain_from_expansion(1.0, reference_length=0.0)
