"""Parameter reduction, validation, regime classification."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kosc import (Approx, DomainError, ModelParams, RegimeLabel, from_physical,
                  regime)


class TestModelParams:
    def test_defaults(self):
        p = ModelParams(q=2.0, r=1.0)
        assert p.alpha == 0.0
        assert p.approx is Approx.NonRWA

    def test_gamma_is_inverse_r(self):
        assert ModelParams(q=1.0, r=4.0).gamma == 0.25

    def test_int_inputs_normalized_to_float(self):
        p = ModelParams(q=2, r=1, alpha=3)
        assert isinstance(p.q, float) and isinstance(p.alpha, float)
        assert p == ModelParams(q=2.0, r=1.0, alpha=3.0)

    @pytest.mark.parametrize("kw", [
        dict(q=0.0, r=1.0),
        dict(q=-1.0, r=1.0),
        dict(q=1.0, r=0.0),
        dict(q=1.0, r=-2.0),
        dict(q=1.0, r=1.0, alpha=-0.5),
        dict(q=math.nan, r=1.0),
        dict(q=1.0, r=math.inf),
    ])
    def test_rejects_bad_values(self, kw):
        with pytest.raises(DomainError):
            ModelParams(**kw)

    def test_with_replaces_one_field(self):
        p = ModelParams(q=2.0, r=1.0, alpha=1.0)
        p2 = p.with_(alpha=5.0)
        assert p2.alpha == 5.0
        assert p2.q == p.q
        assert p.alpha == 1.0  # original untouched


class TestFromPhysical:
    def test_identity_reduction(self):
        p = from_physical(omega0=1.0, lam=1.0, gamma_m=1.0, alpha=0.0)
        assert (p.q, p.r, p.alpha) == (1.0, 1.0, 0.0)

    def test_direct_ratios(self):
        p = from_physical(omega0=10.0, lam=1.0, gamma_m=10.0, alpha=2.0)
        assert (p.q, p.r, p.alpha) == (10.0, 0.1, 2.0)

    def test_zero_linewidth_guarded(self):
        with pytest.raises(DomainError):
            from_physical(1.0, 0.0, 1.0, 0.0)

    @given(st.floats(0.05, 20.0), st.floats(0.05, 20.0),
           st.floats(0.0, 50.0), st.floats(1e-3, 1e3))
    @settings(max_examples=60, deadline=None)
    def test_scale_invariance(self, q, r, alpha, c):
        base = from_physical(q, 1.0, 1.0 / r, alpha)
        scaled = from_physical(c * q, c, c / r, c * alpha)
        assert math.isclose(scaled.q, base.q, rel_tol=1e-12)
        assert math.isclose(scaled.r, base.r, rel_tol=1e-12)
        assert math.isclose(scaled.alpha, base.alpha, rel_tol=1e-12, abs_tol=1e-300)


class TestRegime:
    def test_nonmarkovian_corner(self):
        assert regime(ModelParams(q=10.0, r=0.1)).label is RegimeLabel.NonMarkovian

    def test_markovian_corner(self):
        assert regime(ModelParams(q=0.1, r=10.0)).label is RegimeLabel.Markovian

    def test_center_is_crossover(self):
        assert regime(ModelParams(q=1.0, r=1.0)).label is RegimeLabel.Crossover

    def test_mixed_corners_are_crossover(self):
        # one threshold satisfied is not enough: the label is joint in (q, r)
        assert regime(ModelParams(q=10.0, r=10.0)).label is RegimeLabel.Crossover
        assert regime(ModelParams(q=0.1, r=0.1)).label is RegimeLabel.Crossover

    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    @settings(max_examples=100, deadline=None)
    def test_total_and_deterministic(self, q, r):
        p = ModelParams(q=q, r=r)
        lab = regime(p).label
        assert isinstance(lab, RegimeLabel)
        assert regime(p).label is lab
