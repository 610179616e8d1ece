from .report import Difference, IdentityResult, SuiteReport, VerificationReport
from .run_config import ConfigError, OutputFormat, RunConfig

__all__ = [
    'ConfigError',
    'Difference',
    'IdentityResult',
    'OutputFormat',
    'RunConfig',
    'SuiteReport',
    'VerificationReport',
]
