"""
Subcommand bodies.

Each command takes the resolved configuration and the run manifest,
writes its CSVs under ``config.output_dir`` and returns an exit code.
Solver and configuration exceptions propagate to ``main``, which maps
them to exit codes.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable, Iterable

from mhdforms.cli.reporting import (
    CONSTANT_SCHEMA,
    DB_MONITOR_SCHEMA,
    DECAY_SCHEMA,
    HORIZON_SCHEMA,
    IDENTITY_SCHEMA,
    ITERATION_SCHEMA,
    NORMS_SCHEMA,
    SCALING_SCHEMA,
    RunManifest,
    write_csv,
)
from mhdforms.config import ConfigError, MHDFormsConfig, PresetCatalog
from mhdforms.exceptions import MeshError
from mhdforms.observability import get_logger
from mhdforms.solver.bilinear import measure_bilinear_constants
from mhdforms.solver.horizon import local_T_search
from mhdforms.solver.initial_data import FieldSpec, build_initial_data
from mhdforms.solver.monitors import check_dual_path, scaling_check
from mhdforms.solver.picard import picard_solve
from mhdforms.solver.trajectory import closedness
from mhdforms.spectral.decay import check_exponents, decay_diagnostic, default_decay_times, parse_exponent
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.io import save_field
from mhdforms.spectral.probes import gaussian_bump_probe
from mhdforms.spectral.suites import check_projections, check_range_exclusion, check_spectral_complex
from mhdforms.symbolic.suites import (
    IdentityReport,
    check_complex,
    check_dictionary,
    check_leibniz,
    verify_magic,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_SOLVER_FAILURE = 2
EXIT_CONFIG_ERROR = 64

IDENTITY_REPORT_FILE = "identity_report.csv"
COUNTEREXAMPLE_FILE = "counterexamples.txt"

Command = Callable[[MHDFormsConfig, RunManifest], int]


def _write(manifest: RunManifest, config: MHDFormsConfig, name: str, schema, rows: Iterable) -> Path:
    path = write_csv(config.output_dir / name, schema, rows)
    return manifest.record(path, config.output_dir)


def _identity_suites(config: MHDFormsConfig) -> list[Callable[[], IdentityReport]]:
    identities = config.identities
    seed = config.solver.seed
    degree = identities.degree
    points = identities.spectral_points
    suites: list[Callable[[], IdentityReport]] = []
    for n in identities.dimensions:
        if identities.trials:
            suites.append(lambda n=n: verify_magic(n, degree, identities.trials, seed))
        if identities.complex_trials:
            suites.append(lambda n=n: check_complex(n, degree, identities.complex_trials, seed))
        if identities.leibniz_trials:
            suites.append(lambda n=n: check_leibniz(n, degree, identities.leibniz_trials, seed))
    if identities.dictionary_trials:
        suites.append(lambda: check_dictionary(degree, identities.dictionary_trials, seed))
    if identities.spectral_trials:
        for n in identities.spectral_dimensions:
            for check in (check_spectral_complex, check_projections, check_range_exclusion, check_dual_path):
                suites.append(
                    lambda n=n, check=check: check(n, points, identities.spectral_trials, seed)
                )
    return suites


def cmd_verify_identities(config: MHDFormsConfig, manifest: RunManifest) -> int:
    """Run every enabled identity suite; exit 1 if any trial failed.

    Suites with zero trials are skipped, so an all-zero configuration
    writes a header-only report and exits 0.
    """
    reports = [suite() for suite in _identity_suites(config)]
    _write(
        manifest,
        config,
        IDENTITY_REPORT_FILE,
        IDENTITY_SCHEMA,
        (
            (r.suite, r.dimension, r.degree, r.trials, r.failures, r.max_terms, r.max_defect, r.passed)
            for r in reports
        ),
    )
    failed = [r for r in reports if not r.passed]
    if not failed:
        logger.info("identities_verified", suites=len(reports))
        return EXIT_OK

    lines = []
    for report in failed:
        lines.append(
            f"{report.suite} n={report.dimension} degree={report.degree}: "
            f"{report.failures}/{report.trials} failed\n  {report.counterexample}"
        )
        logger.error(
            "identity_failure",
            suite=report.suite,
            dimension=report.dimension,
            failures=report.failures,
            counterexample=report.counterexample,
        )
    dump = "\n".join(lines) + "\n"
    path = config.output_dir / COUNTEREXAMPLE_FILE
    path.write_text(dump, encoding="utf-8")
    manifest.record(path, config.output_dir)
    sys.stderr.write(dump)
    return EXIT_IDENTITY_FAILURE


def initial_fields(config: MHDFormsConfig) -> tuple[SpectralFormField, SpectralFormField]:
    """(u0, b0) from the preset, with snapshot files taking precedence."""
    preset = PresetCatalog.load_default().get(config.preset)
    velocity, magnetic = preset.velocity, preset.magnetic
    if config.initial_velocity is not None:
        velocity = FieldSpec(builder="file", path=config.initial_velocity)
    if config.initial_magnetic is not None:
        magnetic = FieldSpec(builder="file", path=config.initial_magnetic)
    return build_initial_data(velocity, magnetic, config.solver.grid, config.solver.seed)


def cmd_simulate(config: MHDFormsConfig, manifest: RunManifest) -> int:
    """Horizon search, Picard solve and the per-run CSV reports.

    Exit 2 if the iteration cap is reached before the tolerance.
    """
    solver = config.solver
    u0, b0 = initial_fields(config)

    if config.search_horizon:
        search = local_T_search(u0, b0, config.smallness, solver)
        _write(
            manifest,
            config,
            "horizon_search.csv",
            HORIZON_SCHEMA,
            ((h, v, search.target) for h, v in zip(search.horizons, search.norms)),
        )
        solver = solver.model_copy(update={"horizon": search.horizon})

    trajectory, log = picard_solve(u0, b0, solver)
    _write(
        manifest,
        config,
        "iteration_log.csv",
        ITERATION_SCHEMA,
        (
            (r.iteration, r.distance, r.ratio, r.db_monitor, r.dual_path_defect, r.measured_constant)
            for r in log.records
        ),
    )
    norms = trajectory.norms()
    _write(
        manifest,
        config,
        "critical_norms.csv",
        NORMS_SCHEMA,
        [
            (
                solver.horizon,
                norms.velocity,
                norms.velocity_gradient,
                norms.magnetic,
                norms.magnetic_coderivative,
                norms.velocity_continuity,
                norms.magnetic_continuity,
                norms.total,
            )
        ],
    )
    _write(
        manifest,
        config,
        "db_monitor.csv",
        DB_MONITOR_SCHEMA,
        ((j, float(t), closedness(b)) for j, (t, b) in enumerate(zip(trajectory.times, trajectory.magnetic))),
    )
    u_final, b_final = trajectory.velocity[-1], trajectory.magnetic[-1]
    for name, field in (("velocity_T.mhdf", u_final), ("magnetic_T.mhdf", b_final)):
        manifest.record(save_field(config.output_dir / name, field), config.output_dir)

    if config.measure_constant:
        measured = measure_bilinear_constants(solver)
        _write(
            manifest,
            config,
            "bilinear_constant.csv",
            CONSTANT_SCHEMA,
            ((c.horizon, c.width, c.b1_ratio, c.b2_ratio, c.b3_ratio, c.constant) for c in measured),
        )

    if not log.converged:
        logger.error(
            "simulation_not_converged",
            iterations=log.iterations,
            residual=log.residual,
            tolerance=solver.tolerance,
        )
        return EXIT_SOLVER_FAILURE
    logger.info(
        "simulation_finished",
        horizon=solver.horizon,
        iterations=log.iterations,
        residual=log.residual,
        total_norm=norms.total,
    )
    return EXIT_OK


def cmd_decay(config: MHDFormsConfig, manifest: RunManifest) -> int:
    """Ratio curves for every (triple, semigroup) pair.

    All triples are validated before anything is written, so an invalid
    exponent relation leaves no partial CSV behind.
    """
    decay = config.decay
    n = config.solver.dimension
    triples = []
    for triple in decay.triples:
        p, q = parse_exponent(triple.p, n), parse_exponent(triple.q, n)
        check_exponents(p, q, triple.alpha, n)
        triples.append((p, triple.alpha, q))

    grid = config.solver.grid
    times = default_decay_times(decay.time_count, decay.time_start, decay.time_stop)
    probes = {grade: gaussian_bump_probe(grid, grade, decay.probe_width) for grade in (1, 2)}
    rows = []
    for p, alpha, q in triples:
        for name in decay.semigroups:
            probe = probes[2 if name == "maxwell" else 1]
            report = decay_diagnostic(name, probe, p, q, alpha, times)
            rows.extend(
                (name, p, alpha, q, t, r, dr)
                for t, r, dr in zip(report.times, report.ratios, report.derivative_ratios)
            )
            logger.info(
                "decay_curve",
                semigroup=name,
                p=p,
                alpha=alpha,
                q=q,
                sup_ratio=report.sup_ratio,
            )
    _write(manifest, config, "decay.csv", DECAY_SCHEMA, rows)
    return EXIT_OK


def cmd_scaling_check(config: MHDFormsConfig, manifest: RunManifest) -> int:
    """Linear and (optionally) nonlinear covariance defects for each λ.

    ``scaling.time`` must be a node of the time mesh; anything else is a
    configuration error.
    """
    solver = config.solver
    u0, b0 = initial_fields(config)
    t = config.scaling.time if config.scaling.time is not None else solver.horizon
    try:
        solver.mesh.index_of(t)
    except MeshError as exc:
        raise ConfigError(
            f"scaling.time = {t} is not a node of the time mesh "
            f"(horizon {solver.horizon}, {solver.mesh_nodes} intervals)"
        ) from exc
    variants = [False, True] if config.scaling.include_nonlinear else [False]
    rows = []
    for scale in config.scaling.lambdas:
        for nonlinear in variants:
            report = scaling_check(u0, b0, scale, t, solver.model_copy(update={"nonlinear": nonlinear}))
            rows.append((scale, nonlinear, report.time, report.velocity_defect, report.magnetic_defect))
    _write(manifest, config, "scaling_check.csv", SCALING_SCHEMA, rows)
    return EXIT_OK


COMMANDS: dict[str, Command] = {
    "verify-identities": cmd_verify_identities,
    "simulate": cmd_simulate,
    "decay": cmd_decay,
    "scaling-check": cmd_scaling_check,
}


__all__ = [
    "COMMANDS",
    "EXIT_CONFIG_ERROR",
    "EXIT_IDENTITY_FAILURE",
    "EXIT_OK",
    "EXIT_SOLVER_FAILURE",
    "cmd_decay",
    "cmd_scaling_check",
    "cmd_simulate",
    "cmd_verify_identities",
    "initial_fields",
]
