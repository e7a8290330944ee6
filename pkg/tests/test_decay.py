"""
Tests for the exponent bookkeeping and the probe-ratio decay diagnostics.
"""

import math

import pytest

from mhdforms.exceptions import ExponentRelationError, MeshError
from mhdforms.spectral import (
    DecayReport,
    check_exponents,
    decay_diagnostic,
    default_decay_times,
    gaussian_bump_probe,
    parse_exponent,
)

pytestmark = pytest.mark.unit


@pytest.mark.parametrize(
    ("text", "expected"),
    [("n", 3.0), ("2n", 6.0), ("2n/3", 2.0), ("inf", math.inf), ("1.5", 1.5), (4, 4.0)],
)
def test_parse_exponent(text, expected):
    assert parse_exponent(text, 3) == expected


def test_parse_exponent_rejects_garbage():
    with pytest.raises(ExponentRelationError):
        parse_exponent("twice n", 3)


@pytest.mark.parametrize(
    ("p", "q", "alpha"),
    [(3.0, 3.0, 0.0), (3.0, 6.0, 0.5), (2.0, 3.0, 0.5), (2.0, 6.0, 1.0), (3.0, math.inf, 1.0)],
)
def test_admissible_triples(p, q, alpha):
    check_exponents(p, q, alpha, 3)


@pytest.mark.parametrize(
    ("p", "q", "alpha"),
    [(3.0, 3.0, 0.5), (2.0, 6.0, 0.5), (0.5, 0.5, 0.0), (1.0, 3.0, 2.0)],
)
def test_inadmissible_triples(p, q, alpha):
    with pytest.raises(ExponentRelationError) as excinfo:
        check_exponents(p, q, alpha, 3)
    assert excinfo.value.dimension == 3


def test_default_times_are_increasing():
    times = default_decay_times(5, 1e-2, 1.0)
    assert times[0] == pytest.approx(1e-2)
    assert times[-1] == pytest.approx(1.0)
    assert all(a < b for a, b in zip(times, times[1:]))


@pytest.mark.parametrize("semigroup,grade", [("heat", 1), ("stokes", 1), ("maxwell", 2)])
def test_value_ratio_is_contractive_without_smoothing(grid3, semigroup, grade):
    probe = gaussian_bump_probe(grid3, grade, 0.6)
    report = decay_diagnostic(semigroup, probe, 2.0, 2.0, 0.0, default_decay_times(8))
    assert isinstance(report, DecayReport)
    assert len(report.ratios) == 8
    assert report.sup_ratio <= 1.0 + 1e-10
    assert all(r > 0.0 for r in report.derivative_ratios)


def test_value_ratio_decays_in_time(grid3):
    probe = gaussian_bump_probe(grid3, 1, 0.6)
    report = decay_diagnostic("heat", probe, 2.0, 2.0, 0.0, [0.1, 1.0, 10.0])
    assert report.ratios[0] > report.ratios[1] > report.ratios[2]


def test_smoothing_triple_is_recorded(grid3):
    probe = gaussian_bump_probe(grid3, 2, 0.6)
    report = decay_diagnostic("maxwell", probe, 2.0, 3.0, 0.5, [0.01, 0.1])
    assert (report.p, report.q, report.alpha) == (2.0, 3.0, 0.5)
    assert all(math.isfinite(r) for r in report.ratios + report.derivative_ratios)


@pytest.mark.parametrize("times", [[0.0, 0.1], [0.2, 0.1], [-1.0]])
def test_bad_times_rejected(grid3, times):
    probe = gaussian_bump_probe(grid3, 1, 0.6)
    with pytest.raises(MeshError):
        decay_diagnostic("heat", probe, 2.0, 2.0, 0.0, times)


def test_bad_exponents_rejected_before_evaluation(grid3):
    probe = gaussian_bump_probe(grid3, 1, 0.6)
    with pytest.raises(ExponentRelationError):
        decay_diagnostic("stokes", probe, 3.0, 3.0, 0.5, [0.1])


def test_empty_report_defaults():
    report = DecayReport(semigroup="heat", p=2.0, q=2.0, alpha=0.0)
    assert report.sup_ratio == 0.0
    assert report.sup_derivative_ratio == 0.0


@pytest.mark.parametrize(("p", "alpha", "q"), [("n", 0.5, "2n"), ("2n/3", 1.0, "2n"), ("2n/3", 0.5, "n")])
def test_smoothing_ratios_stay_bounded_near_zero(grid3, p, alpha, q):
    probe = gaussian_bump_probe(grid3, 1, 0.6)
    report = decay_diagnostic(
        "heat", probe, parse_exponent(p, 3), parse_exponent(q, 3), alpha, default_decay_times(10)
    )
    assert all(math.isfinite(r) for r in report.ratios)
    # no blow-up as t -> 0: the ratio shrinks with t^{α/2} below the probe scale
    assert report.ratios[0] < report.ratios[2]
