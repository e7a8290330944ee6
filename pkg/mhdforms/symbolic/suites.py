"""Randomised exact identity suites over polynomial forms.

Each suite draws its trials from a per-trial numpy generator spawned from
one seed, checks an identity with exact rational arithmetic and returns an
:class:`IdentityReport`. A failing trial is reported, never raised.
"""

from __future__ import annotations

import zlib
from typing import Callable, Iterator, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, Field

from mhdforms.exceptions import IndexRangeError
from mhdforms.observability import get_logger
from mhdforms.symbolic import dictionary as dic
from mhdforms.symbolic.magic import magic_lhs, magic_rhs
from mhdforms.symbolic.polyforms import (
    PolyForm,
    contract_sym,
    d_sym,
    delta_sym,
    polynomial_algebra,
    random_polyform,
    wedge_sym,
)

logger = get_logger(__name__)

MAGIC_DIMENSIONS = (3, 6)
MAX_MAGIC_DEGREE = 4


class IdentityReport(BaseModel):
    """Outcome of one identity suite."""

    suite: str = Field(..., description="Suite name")
    dimension: int = Field(..., description="Ambient dimension n")
    degree: int = Field(0, description="Maximal total polynomial degree")
    trials: int = Field(0, ge=0, description="Trials executed")
    failures: int = Field(0, ge=0, description="Trials where the identity failed")
    max_terms: int = Field(0, ge=0, description="Largest term count seen on either side")
    max_defect: float = Field(0.0, ge=0.0, description="Largest numeric defect (numeric suites)")
    counterexample: Optional[str] = Field(None, description="First failing input, rendered")

    @property
    def passed(self) -> bool:
        return self.failures == 0


def trial_generators(seed: int, suite: str, dimension: int, trials: int) -> Iterator[np.random.Generator]:
    """Independent generators per trial, stable across runs and suites."""
    sequence = np.random.SeedSequence(
        entropy=seed, spawn_key=(zlib.crc32(suite.encode()), dimension)
    )
    for child in sequence.spawn(trials):
        yield np.random.default_rng(child)


class TrialOutcome(NamedTuple):
    ok: bool
    terms: int = 0
    rendered: str = ""
    defect: float = 0.0


def run_suite(
    suite: str,
    dimension: int,
    degree: int,
    trials: int,
    seed: int,
    trial: Callable[[np.random.Generator], tuple],
) -> IdentityReport:
    """Run ``trials`` draws of ``trial`` and collect the outcomes.

    ``trial`` returns (ok, terms, rendered) or (ok, terms, rendered, defect).
    """
    failures = 0
    max_terms = 0
    max_defect = 0.0
    counterexample: Optional[str] = None
    for rng in trial_generators(seed, suite, dimension, trials):
        outcome = TrialOutcome(*trial(rng))
        max_terms = max(max_terms, outcome.terms)
        max_defect = max(max_defect, outcome.defect)
        if not outcome.ok:
            failures += 1
            if counterexample is None:
                counterexample = outcome.rendered
    report = IdentityReport(
        suite=suite,
        dimension=dimension,
        degree=degree,
        trials=trials,
        failures=failures,
        max_terms=max_terms,
        max_defect=max_defect,
        counterexample=counterexample,
    )
    log = logger.warning if failures else logger.info
    log(
        "identity_suite_finished",
        suite=suite,
        dimension=dimension,
        trials=trials,
        failures=failures,
    )
    return report


def verify_magic(dimension: int, degree: int, trials: int, seed: int = 0) -> IdentityReport:
    """Check magic_lhs(u, b) == magic_rhs(u, b) on random polynomial pairs.

    Args:
        dimension: n with 3 ≤ n ≤ 6
        degree: maximal total degree of the coefficients (≤ 4)
        trials: number of random (u, b) pairs
        seed: master seed

    Returns:
        IdentityReport; ``failures`` must be 0

    Example:
        >>> verify_magic(3, 2, 10).failures
        0
    """
    low, high = MAGIC_DIMENSIONS
    if not low <= dimension <= high:
        raise IndexRangeError(
            f"verify_magic supports {low} ≤ n ≤ {high}", value=dimension, dimension=dimension
        )
    if degree < 0 or degree > MAX_MAGIC_DEGREE:
        raise IndexRangeError(
            f"verify_magic supports degree ≤ {MAX_MAGIC_DEGREE}", value=degree, dimension=dimension
        )
    algebra = polynomial_algebra(dimension)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str]:
        u = random_polyform(algebra, 1, degree, rng)
        b = random_polyform(algebra, 2, degree, rng)
        lhs = magic_lhs(u, b)
        rhs = magic_rhs(u, b)
        return lhs == rhs, max(lhs.term_count(), rhs.term_count()), f"u = {u}; b = {b}"

    return run_suite("magic_formula", dimension, degree, trials, seed, trial)


def check_complex(dimension: int, degree: int, trials: int, seed: int = 0) -> IdentityReport:
    """d∘d = 0 and δ∘δ = 0 on random forms, cycling through every grade."""
    algebra = polynomial_algebra(dimension)
    counter = iter(range(trials))

    def trial(rng: np.random.Generator) -> tuple[bool, int, str]:
        grade = next(counter) % (dimension + 1)
        w = random_polyform(algebra, grade, degree, rng)
        dd = d_sym(d_sym(w)) if grade + 2 <= dimension else None
        ee = delta_sym(delta_sym(w)) if grade >= 2 else None
        ok = (dd is None or dd.is_zero()) and (ee is None or ee.is_zero())
        return ok, w.term_count(), f"grade {grade}: w = {w}"

    return run_suite("complex", dimension, degree, trials, seed, trial)


def check_leibniz(dimension: int, degree: int, trials: int, seed: int = 0) -> IdentityReport:
    """d(fg) = f dg + g df for random 0-forms f, g."""
    algebra = polynomial_algebra(dimension)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str]:
        f = random_polyform(algebra, 0, degree, rng)
        g = random_polyform(algebra, 0, degree, rng)
        lhs = d_sym(wedge_sym(f, g))
        rhs = wedge_sym(f, d_sym(g)) + wedge_sym(g, d_sym(f))
        return lhs == rhs, lhs.term_count(), f"f = {f}; g = {g}"

    return run_suite("leibniz", dimension, degree, trials, seed, trial)


def _dictionary_checks(algebra, rng: np.random.Generator, degree: int) -> list[tuple[str, bool]]:
    f = random_polyform(algebra, 0, degree, rng)
    u = random_polyform(algebra, 1, degree, rng)
    v = random_polyform(algebra, 2, degree, rng)
    g = random_polyform(algebra, 3, degree, rng)
    fs = dic.form_to_vector(f)
    uv = dic.form_to_vector(u)
    vv = dic.form_to_vector(v)
    gs = dic.form_to_vector(g)
    return [
        ("d0=grad", dic.form_to_vector(d_sym(f)) == dic.grad(algebra, fs)),
        ("d1=curl", dic.form_to_vector(d_sym(u)) == dic.curl(algebra, uv)),
        ("d2=div", dic.form_to_vector(d_sym(v)) == dic.div(algebra, vv)),
        ("delta1=-div", dic.form_to_vector(delta_sym(u)) == -dic.div(algebra, uv)),
        ("delta2=curl", dic.form_to_vector(delta_sym(v)) == dic.curl(algebra, vv)),
        ("delta3=-grad", dic.form_to_vector(delta_sym(g)) == dic.negate(dic.grad(algebra, gs))),
        (
            "lorentz",
            dic.form_to_vector(contract_sym(delta_sym(v), v)) == dic.lorentz_vector(algebra, vv),
        ),
        (
            "induction",
            dic.form_to_vector(d_sym(contract_sym(u, v))) == dic.induction_vector(algebra, uv, vv),
        ),
    ]


def check_dictionary(degree: int, trials: int, seed: int = 0) -> IdentityReport:
    """d/δ against grad/curl/div and the MHD terms, exact on R³."""
    algebra = polynomial_algebra(3)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str]:
        checks = _dictionary_checks(algebra, rng, degree)
        failed = [name for name, ok in checks if not ok]
        return not failed, 0, "failed: " + ", ".join(failed)

    return run_suite("dictionary", 3, degree, trials, seed, trial)


__all__ = [
    "IdentityReport",
    "TrialOutcome",
    "check_complex",
    "check_dictionary",
    "check_leibniz",
    "run_suite",
    "trial_generators",
    "verify_magic",
]
