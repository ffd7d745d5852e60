import pytest

from utils.config import BenchConfig, OracleConfig, VerifyConfig
from utils.errors import ConfigError, OracleError


def test_defaults():
    assert not OracleConfig().cross_check and not OracleConfig().debug_checks
    assert VerifyConfig().exhaustive_limit == 16
    assert BenchConfig().sizes == (1_000, 2_000, 4_000)
    assert BenchConfig().threads == 1


@pytest.mark.parametrize("options", [
    {"exhaustive_limit": -1},
    {"samples_per_graph": 0},
    {"threads": 0},
])
def test_invalid_verify_config(options):
    with pytest.raises(ConfigError):
        VerifyConfig(**options)


@pytest.mark.parametrize("options", [
    {"sizes": ()},
    {"sizes": (2, 100)},
    {"edge_factor": 0},
    {"queries": 0},
    {"threads": 0},
])
def test_invalid_bench_config(options):
    with pytest.raises(ConfigError):
        BenchConfig(**options)


def test_config_errors_are_oracle_errors():
    with pytest.raises(OracleError):
        BenchConfig(threads=-2)
