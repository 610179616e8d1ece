import logging
from enum import Enum
from typing import Any, Dict, Optional

import yaml
from pydantic import Extra, Field, validator

from .base_model import BaseModel


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'
    LATEX = 'latex'

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member
        return None


class RunConfig(BaseModel):
    t_order: int = Field(default=8, ge=1, description="Truncation order N in t")
    q_order: int = Field(default=10, ge=1, description="Truncation order M in q for product checks")
    base_m: int = Field(default=1, description="Base exponent m of psi = q^m")
    output_format: OutputFormat = OutputFormat.TEXT
    max_n: int = Field(default=8, ge=1, description="Largest n an identity is checked for")
    seed: int = Field(default=0, description="Seed of the randomized series checks")
    random_trials: int = Field(default=5, ge=1)
    out: Optional[str] = None
    cache_dir: Optional[str] = None

    class Config:
        extra = Extra.forbid

    @validator('base_m')
    def nonzero_base(cls, value: int) -> int:
        if value == 0:
            raise ValueError("the base exponent m must be nonzero")
        return value

    @classmethod
    def load(cls, path: Optional[str] = None, **overrides: Any) -> "RunConfig":
        """File values from `path` (YAML) under explicit, non-None overrides."""
        values = read_config_file(path) if path else {}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def read_config_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file {path} is not valid YAML: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping, got {type(data).__name__}")
    logging.debug(f"Loaded config keys {sorted(data)} from {path}")
    return {str(k).replace('-', '_'): v for k, v in data.items()}


class ConfigError(ValueError):
    pass
