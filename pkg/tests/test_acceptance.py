"""Acceptance gate: one test per criterion, tolerances pinned.

Five of these are red by construction: the claimed sign and divergence
structures are unattainable under the formulas as pinned (the rotating-wave
dispersion is exactly translation invariant in q; xi stays positive in the
stable window; the two divergence clauses exclude each other at any single
coupling; the discretized physical bath keeps absorption the closed-form
kernel drops). The blocking analyses live in the decisions ledger. The
tests state the expected structure verbatim and are left failing rather
than weakened.
"""

import math
import time

import numpy as np
import pytest

from kosc import (Approx, ModelParams, correlation_c0, critical_coupling,
                  critical_coupling_report, distribution_function,
                  hurwitz_threshold, oracle_number_density, spectrum,
                  zeno_parameter)
from kosc.cli import main

NRWA = Approx.NonRWA
RWA = Approx.RWA
SEED = 20260822


def test_c01_vacuum_normalization():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    for _ in range(20):
        q = float(rng.uniform(0.1, 20.0))
        r = float(rng.uniform(0.05, 20.0))
        rep = correlation_c0(ModelParams(q=q, r=r, alpha=0.0))
        assert rep.c0 == pytest.approx(1.0, abs=1e-6), (q, r)
    assert time.perf_counter() - t0 < 5.0


def test_c02_root_residuals():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    for approx in (NRWA, RWA):
        for _ in range(100):
            p = ModelParams(q=float(rng.uniform(0.1, 20.0)),
                            r=float(rng.uniform(0.05, 20.0)),
                            alpha=float(rng.uniform(0.0, 100.0)),
                            approx=approx)
            for m in spectrum(p):
                assert m.residual < 1e-8, p
    assert time.perf_counter() - t0 < 10.0


def test_c03_stability_sign_structure():
    # low r: an unstable root must exist somewhere in q
    qs = np.linspace(1.0, 20.0, 77)
    assert any(any(m.z.imag > 0 for m in
                   spectrum(ModelParams(q=float(q), r=0.1, alpha=100.0)))
               for q in qs)
    # high r: the same scan is claimed fully stable; red, the bath-pole
    # descendants keep Im > 0 at every r for this coupling
    assert not any(any(m.z.imag > 0 for m in
                       spectrum(ModelParams(q=float(q), r=10.0, alpha=100.0)))
                   for q in qs)


def test_c04_rwa_stability_inversion():
    qs = np.linspace(1.05, 20.0, 60)

    def max_im(q, r):
        return max(m.z.imag for m in
                   spectrum(ModelParams(q=float(q), r=r, alpha=100.0, approx=RWA)))

    # high r: instability persists across the whole scan
    assert all(max_im(q, 10.0) > 0 for q in qs)
    # low r: the positive imaginary part is claimed to vanish at some q > 1;
    # red, the rotating-wave roots are exactly invariant under q translation
    assert any(max_im(q, 0.1) <= 1e-9 for q in qs)


def test_c05_divergence_structure():
    # single fixed coupling for both halves, the figure-preset default
    alpha = 100.0
    qs = np.linspace(0.1, 20.0, 100)
    hits_low_r = [bool(correlation_c0(ModelParams(q=float(q), r=0.1,
                                                  alpha=alpha)).diverged)
                  for q in qs]
    hits_high_r = [bool(correlation_c0(ModelParams(q=float(q), r=10.0,
                                                   alpha=alpha)).diverged)
                   for q in qs]
    # red on both clauses at any shared coupling: the low-r threshold curve
    # sits above 242 while the high-r one dips to 2.4
    assert any(hits_low_r)
    assert not any(hits_high_r)


def test_c06_critical_coupling_benchmark():
    t0 = time.perf_counter()
    rep = critical_coupling_report(ModelParams(q=1.0, r=1.0))
    assert rep.alpha_c == pytest.approx(8.0, abs=1e-6)
    assert rep.closed_form_rinv2 == pytest.approx(8.0, abs=1e-12)
    assert rep.closed_form_r2 == pytest.approx(8.0, abs=1e-12)
    # away from r = 1 the two closed forms are surfaced, not asserted
    off = critical_coupling_report(ModelParams(q=1.0, r=2.0))
    assert off.closed_form_rinv2 != off.closed_form_r2
    assert time.perf_counter() - t0 < 1.0


def test_c07_zeno_sign_structure():
    qs = np.linspace(0.3, 20.0, 40)
    xs = [zeno_parameter(ModelParams(q=float(q), r=0.1, alpha=100.0)).xi
          for q in qs]
    assert xs[0] > 0.0          # anti-Zeno at small q
    assert abs(xs[-1]) < 0.1    # decays toward zero by q = 20
    # red: the claimed crossing to xi < 0 never happens in the stable window
    assert min(xs) < 0.0
    xs_rwa = [zeno_parameter(ModelParams(q=float(q), r=10.0, alpha=100.0,
                                         approx=RWA)).xi
              for q in qs]
    assert xs_rwa[0] > 0.0
    # red: q-translation invariance forbids any sign change along the sweep
    assert min(xs_rwa) < 0.0


def test_c08_fdt_residual():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    cases = {
        NRWA: (ModelParams(q=2.0, r=1.0, alpha=8.0),
               ModelParams(q=5.0, r=0.2, alpha=40.0)),
        RWA: (ModelParams(q=2.0, r=1.0, alpha=8.0, approx=RWA),
              ModelParams(q=5.0, r=0.2, alpha=40.0, approx=RWA)),
    }
    for approx, ps in cases.items():
        for p in ps:
            roots = [m.z.real for m in spectrum(p)]
            checked = 0
            while checked < 50:
                z = float(rng.uniform(-30.0, 30.0))
                if abs(z) < 0.05 or min(abs(z - x) for x in roots) < 0.05:
                    continue
                assert distribution_function(z, p).residual < 1e-8, (z, p)
                checked += 1
    assert time.perf_counter() - t0 < 2.0


def test_c09_oracle_cross_validation():
    t0 = time.perf_counter()
    base = ModelParams(q=5.0, r=1.0)
    alpha = 0.5 * critical_coupling(base)
    schedule = ((200, 0.05), (400, 0.02), (800, 0.01))
    devs = {}
    for approx in (NRWA, RWA):
        p = base.with_(alpha=alpha, approx=approx)
        n_k = correlation_c0(p).n_avg
        ds = []
        for n_modes, eps in schedule:
            n_o = oracle_number_density(p, n_modes=n_modes, half_width=10.0,
                                        eps=eps)
            ds.append(abs(n_o - n_k) / abs(n_k))
        # refinement only tightens the bath discretization
        assert ds[2] <= ds[1] + 1e-12 and ds[1] <= ds[0] + 1e-12, (approx, ds)
        devs[approx] = ds
    assert time.perf_counter() - t0 < 60.0
    # red: the continuum kernel is real on the axis while any quadratic
    # physical bath realization also absorbs; the deviation saturates far
    # above 5% (and the rotating-wave oracle relaxes to vacuum)
    assert devs[NRWA][1] < 0.05, devs
    assert devs[RWA][1] < 0.05, devs


def test_c10_threshold_consistency():
    t0 = time.perf_counter()
    for q in (2.0, 5.0, 10.0):
        p = ModelParams(q=q, r=1.0)
        want = critical_coupling(p)
        got = hurwitz_threshold(p)  # defaults: 500 modes, half_width 15
        assert abs(got - want) / want < 0.05, (q, got, want)
    assert time.perf_counter() - t0 < 120.0


def test_c11_cli_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["figure", "fig1b", "--out", str(a)]) == 0
    assert main(["figure", "fig1b", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
