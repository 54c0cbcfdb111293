import math

import numpy as np
import pytest

from symcorr import (
    ANTISYMMETRIC,
    DISTINGUISHABLE,
    ENTROPIC_BOUND,
    SYMMETRIC,
    Configuration,
    ModelParams,
    QuadratureScheme,
    build,
    compute_report,
    cumulant3,
    entropy,
    entropy_sum_check,
    mutual_information_higher_direct,
    mutual_information_pair_direct,
)
from symcorr.densities import reduce_to_one
from symcorr.orbitals import MOMENTUM, POSITION
from symcorr.reference_tables import BOX_TABLE, OSCILLATOR_TABLE


@pytest.fixture(scope="module")
def report_a3(box):
    return compute_report(Configuration(box, (1, 2, 3), ANTISYMMETRIC))


def test_ground_state_pair_entropy(box):
    # both particles in n = 1: Psi is a product, so s = 2 (ln 2 - 1)
    wf = build(Configuration(box, (1, 1), SYMMETRIC))
    assert abs(entropy(wf) - 2.0 * (math.log(2.0) - 1.0)) < 1e-7


def test_report_matches_table1_spot_values(report_a3):
    ref = BOX_TABLE[("a", 3)]
    d = report_a3.as_dict()
    for key, want in ref.items():
        assert abs(d[key] - want) < 2e-3, key


def test_report_matches_table2_spot_value(ho):
    rep = compute_report(Configuration(ho, (0, 1, 2), SYMMETRIC),
                         with_error=False)
    assert abs(rep.entropies.s3 - OSCILLATOR_TABLE[("s", 2)]["s3"]) < 2e-3


def test_hierarchy_residuals(report_a3, box, ho):
    assert max(abs(r) for r in report_a3.hierarchy_residuals()) < 1e-9
    rep = compute_report(Configuration(ho, (0, 1, 4), SYMMETRIC, MOMENTUM),
                         with_error=False)
    assert max(abs(r) for r in rep.hierarchy_residuals()) < 1e-9
    rep = compute_report(Configuration(box, (1, 1, 2), SYMMETRIC),
                         with_error=False)
    assert max(abs(r) for r in rep.hierarchy_residuals()) < 1e-9


def test_error_estimate_present_and_small(report_a3):
    err = report_a3.entropies.error_estimate
    assert err is not None
    assert err < 1e-3


def test_direct_integrals_match_combinations_position(box, report_a3):
    ip = mutual_information_pair_direct(Configuration(box, (1, 2, 3), ANTISYMMETRIC))
    ih = mutual_information_higher_direct(Configuration(box, (1, 2, 3), ANTISYMMETRIC))
    assert abs(ip - report_a3.i_pair) < 1e-5
    assert abs(ih - report_a3.i_higher) < 1e-5


def test_direct_integrals_reject_distinguishable(box):
    cfg = Configuration(box, (1, 2, 3), DISTINGUISHABLE)
    with pytest.raises(ValueError):
        mutual_information_pair_direct(cfg)
    with pytest.raises(ValueError):
        mutual_information_higher_direct(cfg)


def test_distinguishable_measures_vanish(box, ho):
    for params, ns in ((box, (1, 2, 3)), (ho, (0, 1, 2))):
        rep = compute_report(Configuration(params, ns, DISTINGUISHABLE),
                             with_error=False)
        assert rep.i_pair == 0.0
        for v in (rep.i_total3, rep.i_one_pair, rep.i_pair_pair, rep.i_higher):
            assert abs(v) < 1e-9


def test_pair_mutual_information_nonnegative(box, ho):
    for sym in (SYMMETRIC, ANTISYMMETRIC):
        for params, ns in ((box, (1, 2, 3)), (ho, (0, 1, 2))):
            rep = compute_report(Configuration(params, ns, sym), with_error=False)
            assert rep.i_pair >= 0.0


def test_two_particle_systems_rejected(box):
    with pytest.raises(ValueError):
        compute_report(Configuration(box, (1, 2), SYMMETRIC))


def test_cumulants_vanish_for_indistinguishable(box, ho):
    for space in (POSITION, MOMENTUM):
        for sym in (SYMMETRIC, ANTISYMMETRIC):
            c = cumulant3(Configuration(box, (1, 2, 3), sym, space))
            assert abs(c) < 1e-6, (sym, space)
    c = cumulant3(Configuration(ho, (0, 1, 2), ANTISYMMETRIC))
    assert abs(c) < 1e-6


def test_cumulant_distinguishable_reported_not_asserted(box):
    c = cumulant3(Configuration(box, (1, 2, 3), DISTINGUISHABLE))
    assert np.isfinite(c)


def test_entropy_sum_bound(box, ho):
    for sym in (SYMMETRIC, ANTISYMMETRIC):
        total, bound, ok = entropy_sum_check(box, (1, 2, 3), sym)
        assert ok and total >= bound
    total, bound, ok = entropy_sum_check(ho, (0, 1, 2), ANTISYMMETRIC)
    assert ok
    assert bound == pytest.approx(1.0 + math.log(math.pi))
    assert ENTROPIC_BOUND == pytest.approx(1.0 + math.log(math.pi))


def test_ho_measures_invariant_under_omega():
    rep1 = compute_report(
        Configuration(ModelParams.oscillator(1.0), (0, 1, 2), ANTISYMMETRIC),
        with_error=False)
    rep4 = compute_report(
        Configuration(ModelParams.oscillator(4.0), (0, 1, 2), ANTISYMMETRIC),
        with_error=False)
    for key in ("I_pair", "I3", "I_rho_gamma", "I_gamma_gamma", "I_higher"):
        assert abs(rep1.as_dict()[key] - rep4.as_dict()[key]) < 1e-5, key


def test_ho_position_equals_momentum_at_unit_omega(ho):
    rx = compute_report(Configuration(ho, (0, 1, 2), SYMMETRIC, POSITION),
                        with_error=False)
    rp = compute_report(Configuration(ho, (0, 1, 2), SYMMETRIC, MOMENTUM),
                        with_error=False)
    for key in ("s1", "s2", "s3", "I_pair", "I3", "I_higher"):
        assert abs(rx.as_dict()[key] - rp.as_dict()[key]) < 1e-5, key


def test_entropy_accepts_wavefunction_and_density(box, scheme):
    wf = build(Configuration(box, (1, 2, 3), ANTISYMMETRIC))
    s3 = entropy(wf, scheme)
    assert abs(s3 - BOX_TABLE[("a", 3)]["s3"]) < 2e-3
    s1 = entropy(reduce_to_one(wf), scheme)
    assert abs(s1 - BOX_TABLE[("a", 3)]["s1"]) < 2e-3
