"""
Configuration containers.

Every long-lived object takes its options as keyword arguments; these dataclasses
only group the options that travel together through the CLI.
"""
from dataclasses import dataclass, field
from typing import Tuple

from .errors import ConfigError


@dataclass(frozen=True)
class OracleConfig:
    """Options of :class:`connectivity_oracle.ConnectivityOracle`.

    Parameters
    ----------
    debug_checks : bool
        Run the quadratic nestedness validator on every segment batch and the
        structural invariant checker after preprocessing.
    cross_check : bool
        Rebuild the connectivity graph of every query with the rectangle checks
        and log a partition differing from the case rules at ERROR level.
    """

    debug_checks: bool = False
    cross_check: bool = False


@dataclass(frozen=True)
class VerifyConfig:
    """Options of the differential driver."""

    exhaustive_limit: int = 16
    samples_per_graph: int = 500
    seed: int = 0
    threads: int = 1
    shrink: bool = True
    stop_on_first: bool = True

    def __post_init__(self):
        if self.exhaustive_limit < 0:
            raise ConfigError("exhaustive_limit must be non-negative")
        if self.samples_per_graph <= 0:
            raise ConfigError("samples_per_graph must be positive")
        if self.threads <= 0:
            raise ConfigError("threads must be positive")


@dataclass(frozen=True)
class BenchConfig:
    """Options of the scaling benchmark."""

    sizes: Tuple[int, ...] = field(default=(1_000, 2_000, 4_000))
    edge_factor: int = 3
    queries: int = 2_000
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if not self.sizes or min(self.sizes) < 4:
            raise ConfigError("bench sizes must be at least 4")
        if self.edge_factor < 1 or self.queries <= 0:
            raise ConfigError("edge_factor and queries must be positive")
        if self.threads <= 0:
            raise ConfigError("threads must be positive")
