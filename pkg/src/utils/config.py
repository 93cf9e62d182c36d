from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings

PROJECT_ROOT = Path(__file__).resolve().parents[2]
FIXTURE_DIR = PROJECT_ROOT / "data" / "oeis"


class Settings(BaseSettings):
    # Truncation defaults
    default_order: int = Field(24, validation_alias="RIORDAN_DEFAULT_ORDER")
    matrix_size: int = Field(16, validation_alias="RIORDAN_MATRIX_SIZE")

    # OEIS fixtures and network access
    oeis_cache_dir: str = Field(str(FIXTURE_DIR), validation_alias="OEIS_CACHE_DIR")
    oeis_base_url: str = Field("https://oeis.org", validation_alias="OEIS_BASE_URL")
    oeis_timeout: float = Field(20.0, validation_alias="OEIS_TIMEOUT")

    # Logging
    log_level: str = Field("WARNING", validation_alias="LOG_LEVEL")
    log_file: str = Field("", validation_alias="LOG_FILE")

    class Config:
        env_file = ".env"
        extra = "ignore"


settings = Settings()
