import os
from typing import Any, Literal

from citation_indicators.models import DegeneratePolicy
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")


class CliSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    degenerate_policy: DegeneratePolicy = Field(default=DegeneratePolicy.RAISE, description="P100 policy for sets with a single unique citation count.")
    precision: int = Field(default=1, ge=0, description="Decimals of displayed P100 and percentage values.")
    log_level: Literal["debug", "info", "warning", "error", "critical"] = Field(default="warning", description="Lowest level of log events written to standard error.")
    log_format: Literal["console", "json"] = Field(default="console", description="Renderer of log events.")


_ENV_VARS = {
    "degenerate_policy": "P100_DEGENERATE_POLICY",
    "precision": "P100_PRECISION",
    "log_level": "P100_LOG_LEVEL",
    "log_format": "P100_LOG_FORMAT",
}


def _env_value(env_var: str) -> Any:
    value = os.getenv(env_var)
    return value.strip().lower() if value and value.strip() else None


def load_settings() -> CliSettings:
    """
    Reads the CLI defaults from the environment (and a .env file, if present).

    Raises:
        ValueError: If a variable holds a value the setting does not accept.
    """
    load_dotenv()
    values = {field: value for field, env_var in _ENV_VARS.items() if (value := _env_value(env_var)) is not None}
    try:
        return CliSettings(**values)
    except ValidationError as e:
        names = ", ".join(_ENV_VARS[str(error["loc"][0])] for error in e.errors())
        raise ValueError(f"Invalid value for {names}: {e.errors()[0]['msg']}") from e
