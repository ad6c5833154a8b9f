import os
from typing import Optional
from pydantic import AliasChoices, Field, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    app_name: str = "RTCFR-EFPE"
    environment: str = Field(
        default="development",
        validation_alias=AliasChoices("ENV", "ENVIRONMENT"),
    )
    log_level: str = Field(default="INFO", json_schema_extra={"env": "LOG_LEVEL"})
    efpe_threads: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        json_schema_extra={"env": "EFPE_THREADS"},
    )
    output_dir: str = Field(default="runs", json_schema_extra={"env": "OUTPUT_DIR"})
    default_eval_every: int = Field(
        default=10, json_schema_extra={"env": "DEFAULT_EVAL_EVERY"}
    )
    epsilon_floor: float = Field(
        default=1e-12, json_schema_extra={"env": "EPSILON_FLOOR"}
    )
    reach_floor: float = Field(default=1e-15, json_schema_extra={"env": "REACH_FLOOR"})
    plot_floor: float = Field(default=1e-16, json_schema_extra={"env": "PLOT_FLOOR"})
    otel_enabled: bool = Field(default=False, json_schema_extra={"env": "OTEL_ENABLED"})
    otel_exporter_otlp_endpoint: str = "http://localhost:4318"
    otel_service_name: str = "rtcfr-efpe"
    rollbar_access_token: Optional[str] = Field(
        default=None, json_schema_extra={"env": "ROLLBAR_ACCESS_TOKEN"}
    )  # Optional field

    @field_validator("efpe_threads")
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError("EFPE_THREADS must be at least 1")
        return v

    @property
    def is_production(self) -> bool:
        """Check if the current environment is production."""
        return self.environment.lower() == "production"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "allow"  # Allow extra environment variables


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()
