"""
Utils package: configuration, errors, logging setup and persistence helpers.
"""
from .config import OracleConfig, VerifyConfig, BenchConfig
from .errors import (
    OracleError,
    ConfigError,
    GraphError,
    GraphFormatError,
    DisconnectedGraphError,
    QueryError,
    FailureSetError,
    VertexError,
    PreconditionError,
    NestednessError,
    TableLookupError,
)
from .file_handler import save_report, load_report, save_oracle, load_oracle
from .log import setup_logging, level_from_verbosity

__all__ = [
    'OracleConfig',
    'VerifyConfig',
    'BenchConfig',
    'OracleError',
    'ConfigError',
    'GraphError',
    'GraphFormatError',
    'DisconnectedGraphError',
    'QueryError',
    'FailureSetError',
    'VertexError',
    'PreconditionError',
    'NestednessError',
    'TableLookupError',
    'save_report',
    'load_report',
    'save_oracle',
    'load_oracle',
    'setup_logging',
    'level_from_verbosity',
]
