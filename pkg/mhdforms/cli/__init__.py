"""The ``mhdforms`` command line and its CSV reports."""

from mhdforms.cli.commands import (
    COMMANDS,
    cmd_decay,
    cmd_scaling_check,
    cmd_simulate,
    cmd_verify_identities,
)
from mhdforms.cli.main import build_parser, main
from mhdforms.cli.reporting import RunManifest, write_csv

__all__ = [
    "COMMANDS",
    "RunManifest",
    "build_parser",
    "cmd_decay",
    "cmd_scaling_check",
    "cmd_simulate",
    "cmd_verify_identities",
    "main",
    "write_csv",
]
