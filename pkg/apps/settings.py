from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.imaging.schemas import Channel
from core.kernel.schemas import THREAD_CAP, Backend


class CoreSettings(BaseSettings):
    model_config = SettingsConfigDict(
        case_sensitive=True, env_prefix="APP_", env_file=".env", extra="ignore"
    )

    NAME: str = "bitplane-steg"
    DEBUG: bool = False

    LOG_LEVEL: str = "WARNING"
    LOG_FILE: str | None = None

    # Execution harness
    DEFAULT_BACKEND: Backend = Backend.PARALLEL
    SHUFFLE_SEED: int = 0
    MAX_WORKERS: int | None = None
    THREAD_CAP: int = THREAD_CAP

    DEFAULT_PLANE: Channel = Channel.RED

    @field_validator("DEFAULT_BACKEND", mode="before")
    @classmethod
    def parse_backend(cls, value):
        return Backend.parse(value) if isinstance(value, str) else value

    @field_validator("DEFAULT_PLANE", mode="before")
    @classmethod
    def parse_plane(cls, value):
        return Channel.parse(value) if isinstance(value, str) else value

    @property
    def log_level(self) -> str:
        return "DEBUG" if self.DEBUG else self.LOG_LEVEL.upper()


settings = CoreSettings()
