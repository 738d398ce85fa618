import numpy as np
import pytest

from lvalley import (
    InfeasibleError,
    Valley,
    critical_strain,
    crossover_curve,
    default_params,
    design_point,
    sensitivity_band,
    splitting_report,
    strain_to_x,
    total_energy,
    vegard_a,
    x_to_strain,
)

PARAMS = default_params()
LAT = PARAMS.lattice


# --- combined energies ------------------------------------------------------

def test_total_energy_reference_point():
    # 1.17 plus the t = 3 nm confinement energy of Delta6
    e = total_energy(Valley.DELTA6, PARAMS, 3.0, 0.0)
    assert e.total == pytest.approx(1.210, abs=3e-3)
    assert e.eq == pytest.approx(0.0398, abs=1e-3)


def test_total_energy_confinement_vanishes_for_wide_well():
    from lvalley import bulk_energy

    wide = total_energy(Valley.L1, PARAMS, 1e4, 0.02).total
    assert wide == pytest.approx(bulk_energy(Valley.L1, PARAMS, 0.02).total, abs=1e-5)


def test_near_crossing_at_t10():
    e_l1 = total_energy(Valley.L1, PARAMS, 10.0, 0.0395).total
    e_d6 = total_energy(Valley.DELTA6, PARAMS, 10.0, 0.0395).total
    assert abs(e_l1 - e_d6) < 3e-3


def test_total_energy_breakdown_sums():
    e = total_energy(Valley.L3, PARAMS, 4.0, 0.03)
    assert abs(e.total - (e.e0 + e.de1 + e.de2 + e.eq)) < 1e-12


# --- Vegard mapping ----------------------------------------------------------

def test_vegard_endpoints():
    assert vegard_a(0.0, LAT) == 5.4307
    assert vegard_a(1.0, LAT) == 5.6575


def test_vegard_hand_value():
    assert vegard_a(0.935, LAT) == pytest.approx(5.6411, abs=5e-4)


def test_vegard_domain():
    with pytest.raises(ValueError):
        vegard_a(1.2, LAT)
    with pytest.raises(ValueError):
        vegard_a(-0.1, LAT)


def test_x_to_strain_values():
    assert x_to_strain(0.0, LAT) == 0.0
    assert x_to_strain(1.0, LAT) == pytest.approx(0.04176, abs=2e-4)
    assert x_to_strain(0.935, LAT) == pytest.approx(0.0387, abs=5e-4)


def test_strain_to_x_endpoints_and_inverse():
    assert strain_to_x(0.0, LAT) == 0.0
    assert strain_to_x(x_to_strain(1.0, LAT), LAT) == pytest.approx(1.0, abs=1e-6)


def test_strain_to_x_infeasible_above_pure_ge():
    with pytest.raises(InfeasibleError) as exc:
        strain_to_x(0.045, LAT)
    assert exc.value.reason == "requires_x_gt_1"


def test_strain_to_x_rejects_compression():
    with pytest.raises(ValueError):
        strain_to_x(-0.01, LAT)


def test_vegard_round_trip_1000():
    rng = np.random.default_rng(17)
    for x in rng.uniform(0.0, 1.0, size=1000):
        assert abs(strain_to_x(x_to_strain(float(x), LAT), LAT) - x) < 1e-8


def test_design_point_fills_the_other_coordinate():
    d = design_point(LAT, 3.0, ge_fraction_x=0.935)
    assert d.eps_par == pytest.approx(0.0387, abs=5e-4)
    d2 = design_point(LAT, 3.0, eps_par=d.eps_par)
    assert d2.ge_fraction_x == pytest.approx(0.935, abs=1e-6)
    with pytest.raises(ValueError, match="exactly one"):
        design_point(LAT, 3.0)
    with pytest.raises(ValueError, match="exactly one"):
        design_point(LAT, 3.0, eps_par=0.01, ge_fraction_x=0.5)


# --- crossover ----------------------------------------------------------------

def test_crossover_t3():
    r = critical_strain(PARAMS, 3.0)
    assert r.eps_critical == pytest.approx(0.0388, abs=5e-4)
    assert r.x_critical == pytest.approx(0.935, abs=2e-3)
    assert r.bracket_width <= 1e-6


def test_crossover_t4():
    assert critical_strain(PARAMS, 4.0).x_critical == pytest.approx(0.939, abs=2e-3)


def test_crossover_t10():
    assert critical_strain(PARAMS, 10.0).eps_critical == pytest.approx(0.0395, abs=5e-4)


def test_crossover_thickness_domain():
    with pytest.raises(ValueError):
        critical_strain(PARAMS, 0.2)
    with pytest.raises(ValueError):
        critical_strain(PARAMS, 60.0)


def test_crossing_is_a_true_root():
    for t in (1.0, 3.0, 10.0):
        r = critical_strain(PARAMS, t)
        gap = (
            total_energy(Valley.DELTA6, PARAMS, t, r.eps_critical).total
            - total_energy(Valley.L1, PARAMS, t, r.eps_critical).total
        )
        assert abs(gap) <= 1e-6


def test_sides_of_the_boundary():
    # below the critical strain the minimum sits in Delta6, above it in L1
    for t in range(1, 11):
        r = critical_strain(PARAMS, float(t))
        lo, hi = r.eps_critical - 0.001, r.eps_critical + 0.001
        assert total_energy(Valley.L1, PARAMS, t, lo).total > total_energy(
            Valley.DELTA6, PARAMS, t, lo
        ).total
        assert total_energy(Valley.L1, PARAMS, t, hi).total < total_energy(
            Valley.DELTA6, PARAMS, t, hi
        ).total


def test_crossover_curve_matches_pointwise():
    results, failures = crossover_curve(PARAMS, [3.0])
    assert not failures
    assert results[0] == critical_strain(PARAMS, 3.0)


def test_crossover_curve_pair():
    results, _ = crossover_curve(PARAMS, [3.0, 10.0])
    assert results[0].eps_critical == pytest.approx(0.0388, abs=5e-4)
    assert results[1].eps_critical == pytest.approx(0.0395, abs=5e-4)


def test_crossover_curve_x_below_one_everywhere():
    grid = [float(t) for t in np.arange(1.0, 10.01, 0.5)]
    results, failures = crossover_curve(PARAMS, grid)
    assert not failures
    assert all(r.x_critical <= 1.0 for r in results)


def test_crossover_curve_upturn_toward_thin_films():
    grid = [float(t) for t in np.arange(1.0, 3.01, 0.1)]
    results, _ = crossover_curve(PARAMS, grid)
    eps = [r.eps_critical for r in results]
    # interior minimum around 1.4 nm: the boundary rises again toward 1 nm
    i_min = eps.index(min(eps))
    assert 0 < i_min < len(eps) - 1
    assert eps[0] > eps[i_min]
    # and the large-thickness trend is increasing
    assert critical_strain(PARAMS, 3.0).eps_critical < critical_strain(PARAMS, 10.0).eps_critical


def test_crossover_curve_collects_out_of_range_points():
    results, failures = crossover_curve(PARAMS, [3.0, 99.0])
    assert len(results) == 1 and len(failures) == 1
    assert failures[0][0] == 99.0


# --- splittings -----------------------------------------------------------------

def test_splitting_at_pure_ge():
    s = splitting_report(PARAMS, 3.0, 1.0)
    assert s.delta6_minus_l1 * 1e3 == pytest.approx(72.1, abs=2.0)
    assert s.l3_minus_l1 > 0.8


def test_splitting_vanishes_at_crossover():
    s = splitting_report(PARAMS, 3.0, 0.935)
    assert abs(s.delta6_minus_l1) * 1e3 < 1.0


def test_splitting_validation():
    with pytest.raises(ValueError):
        splitting_report(PARAMS, -3.0, 0.9)
    with pytest.raises(ValueError):
        splitting_report(PARAMS, 3.0, 1.5)


# --- sensitivity envelopes -------------------------------------------------------

def test_sensitivity_nominal_matches_crossover():
    band = sensitivity_band(PARAMS, [3.0], "linear10pct")[0]
    assert band.x_nominal == critical_strain(PARAMS, 3.0).x_critical


def test_sensitivity_band_ordering():
    for mode in ("linear10pct", "quadratic_range", "both"):
        for band in sensitivity_band(PARAMS, [1.0, 3.0, 7.0], mode):
            assert band.x_low <= band.x_nominal <= band.x_high


def test_quadratic_band_inside_linear_band():
    grid = [float(t) for t in range(1, 11)]
    lin = sensitivity_band(PARAMS, grid, "linear10pct")
    quad = sensitivity_band(PARAMS, grid, "quadratic_range")
    for bl, bq in zip(lin, quad):
        assert bl.x_low < bq.x_low
        assert bq.x_high < bl.x_high


def test_both_band_reaches_pure_ge_or_less_at_4nm_and_below():
    for band in sensitivity_band(PARAMS, [1.0, 2.0, 3.0, 4.0], "both"):
        assert band.x_high <= 1.0


def test_clipped_corners_are_flagged():
    # the unfavourable 10% corners need x > 1 and must be clipped
    band = sensitivity_band(PARAMS, [3.0], "linear10pct")[0]
    assert band.clipped
    assert band.x_high == 1.0
    # the quadratic spread alone keeps every corner below pure Ge
    band_q = sensitivity_band(PARAMS, [3.0], "quadratic_range")[0]
    assert not band_q.clipped
    assert band_q.x_high < 1.0


def test_sensitivity_rejects_unknown_mode():
    with pytest.raises(ValueError, match="mode"):
        sensitivity_band(PARAMS, [3.0], "bogus")
