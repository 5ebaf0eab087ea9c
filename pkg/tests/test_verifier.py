import math

import pytest

from psibounds import bounds, oracle, verifier
from psibounds.bounds import BoundFamily
from psibounds.errors import DomainError, UndecidedComparisonError
from psibounds.verifier import GridSpec


def test_gridspec_validation():
    with pytest.raises(DomainError):
        GridSpec(0.0, 1.0)
    with pytest.raises(DomainError):
        GridSpec(2.0, 1.0)
    with pytest.raises(DomainError):
        GridSpec(1.0, 2.0, points=1)
    with pytest.raises(DomainError):
        GridSpec(1.0, 2.0, spacing="cubic")
    xs = GridSpec(1e-2, 1e2, 41, "log").abscissae()
    assert len(xs) == 41
    assert xs[0] == 1e-2 and xs[-1] == 1e2
    assert all(b > a for a, b in zip(xs, xs[1:]))
    lin = GridSpec(1.0, 2.0, 11, "linear").abscissae()
    assert lin[5] == pytest.approx(1.5, rel=1e-15)


def test_sweep_thm22_op_example():
    rep = verifier.sweep(GridSpec(1e-2, 1e3, 200), BoundFamily.THM22)
    assert rep.all_pass
    assert rep.scale == "abs"
    assert len(rep.records) == 200


def test_sweep_eq6_op_example():
    rep = verifier.sweep(GridSpec(2.0, 1e2, 100), BoundFamily.EQ6)
    assert rep.all_pass


def test_sweep_rejects_out_of_domain_grid():
    with pytest.raises(DomainError):
        verifier.sweep(GridSpec(1.0, 1e2, 50), BoundFamily.EQ6)


def test_sweep_gamma_family_uses_log_scale():
    rep = verifier.sweep(GridSpec(0.5, 2e3, 40), BoundFamily.THM24)
    assert rep.scale == "log"
    assert rep.all_pass
    assert all(math.isfinite(r.interval.upper) for r in rep.records)
    assert rep.notes


def test_sweep_determinism():
    grid = GridSpec(0.1, 50.0, 30)
    a = verifier.sweep(grid, BoundFamily.THM21)
    oracle.clear_caches()
    b = verifier.sweep(grid, BoundFamily.THM21)
    assert a == b


def test_report_summary_fields():
    rep = verifier.sweep(GridSpec(0.5, 10.0, 25), BoundFamily.EQ9)
    s = rep.summary()
    assert s["all_pass"] is True
    assert s["points"] == 25
    assert s["failures"] == 0
    assert s["min_margin"] > 0.0
    assert 0.5 <= s["argmin_x"] <= 10.0


def test_compare_consistent_with_sweep():
    grid = GridSpec(0.5, 20.0, 15)
    rows = verifier.compare(grid, [BoundFamily.EQ5, BoundFamily.THM21,
                                   BoundFamily.THM22], "width")
    rep = verifier.sweep(grid, BoundFamily.THM21)
    for row, rec in zip(rows, rep.records):
        assert row.gap_by_family[BoundFamily.THM21] == pytest.approx(
            rec.interval.width, rel=1e-15
        )


def test_compare_upper_ordering_observed():
    grid = GridSpec(0.5, 100.0, 20)
    rows = verifier.compare(grid, [BoundFamily.EQ5, BoundFamily.THM21,
                                   BoundFamily.THM22], "upper")
    for row in rows:
        g = row.gap_by_family
        assert g[BoundFamily.THM21] <= g[BoundFamily.THM22] < g[BoundFamily.EQ5]


def test_compare_rejects_mixed_targets():
    with pytest.raises(DomainError):
        verifier.compare(GridSpec(1.0, 2.0, 5), [BoundFamily.EQ5, BoundFamily.EQ8],
                         "upper")
    with pytest.raises(DomainError):
        verifier.compare(GridSpec(1.0, 2.0, 5), [BoundFamily.EQ5], "sideways")


def test_monotonicity_checks():
    assert verifier.monotonicity_check("f", GridSpec(1e-2, 1e6, 300), "increasing")
    assert verifier.monotonicity_check("trigamma", GridSpec(0.1, 100.0, 300),
                                       "decreasing")
    assert verifier.monotonicity_check("digamma", GridSpec(0.1, 100.0, 300),
                                       "increasing")
    # H is decreasing, so the increasing claim must come back false
    assert not verifier.monotonicity_check("H", GridSpec(1e-2, 1e4, 300),
                                           "increasing")
    with pytest.raises(KeyError):
        verifier.monotonicity_check("nope", GridSpec(1.0, 2.0, 5), "increasing")
    with pytest.raises(DomainError):
        verifier.monotonicity_check("f", GridSpec(1.0, 2.0, 5), "sideways")


def test_monotonicity_tau_in_k():
    assert verifier.monotonicity_check("tau:1.0", GridSpec(1.0, 1e4, 60),
                                       "increasing")


def test_monotonicity_undecided_inside_noise_floor():
    # stirling_ratio changes by ~1e-22 over this interval: pure noise
    grid = GridSpec(1e6, 1e6 + 1e-8, 3, "linear")
    with pytest.raises(UndecidedComparisonError):
        verifier.monotonicity_check("stirling_ratio", grid, "decreasing")


def test_sign_checks():
    grid = GridSpec(1e-2, 1e4, 120)
    assert verifier.sign_check("H", grid, "positive")
    assert verifier.sign_check("P", grid, "negative")
    assert verifier.sign_check("p", grid, "negative")
    assert verifier.sign_check("theta", grid, "negative")
    assert not verifier.sign_check("H", grid, "negative")


def test_limit_checks():
    for name, probe in (("beta_offset", 1e3), ("delta_offset", 1e3),
                        ("gap_leading", 1e4), ("stirling_limit", 1e3),
                        ("tau_limit", 1e3)):
        observed, expected, ok = verifier.limit_check(name, probe)
        assert ok, (name, observed, expected)
    observed, expected, ok = verifier.limit_check("f_limit", 1e6)
    assert ok and abs(observed - expected) < 1e-6
    with pytest.raises(KeyError):
        verifier.limit_check("nope", 1e3)


def test_limit_schedules_improve_monotonically():
    for name in ("beta_offset", "delta_offset", "f_limit", "stirling_limit",
                 "gap_leading", "tau_limit"):
        assert verifier.limit_schedule_check(name), name


def test_identity_check():
    assert verifier.identity_check(GridSpec(0.5, 50.0, 12))
    with pytest.raises(DomainError):
        verifier.identity_check(GridSpec(1.0, 2.0, 1))


def test_identity_check_single_point_tau_interval():
    grid = GridSpec(1.0, 1.0 + 1e-9, 2, "linear")
    assert verifier.identity_check(grid, tau_terms=100)


def test_aux_property_report():
    report = verifier.aux_property_report(GridSpec(1e-2, 1e3, 60))
    assert report["f"]["sign_ok"] and report["f"]["monotonicity_ok"]
    assert report["f"]["below_one_third"]
    assert report["H"]["sign_ok"] and report["H"]["monotonicity_ok"]
    assert report["P"]["sign_ok"] and report["P"]["monotonicity_ok"]
    assert report["p"]["sign_ok"] and report["p"]["monotonicity_ok"]
    assert report["theta"]["sign_ok"]
    assert "note" in report["p"]  # the sign-convention flag


def test_gap_families_margins_scale_with_radius_rule():
    # spot-check the strictness rule arithmetic on one record
    rep = verifier.sweep(GridSpec(1.0, 2.0, 3), BoundFamily.EQ9)
    r = rep.records[0]
    expected = verifier.STRICTNESS_FACTOR * (
        r.target.error_radius + verifier.BOUND_ULPS * math.ulp(abs(r.interval.lower))
    )
    assert r.lower_threshold == pytest.approx(expected, rel=1e-12)
    assert r.rel_lower_margin == pytest.approx(r.lower_margin / r.target.value)
