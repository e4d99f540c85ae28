import logging
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings

# The base directory is the root of the project.
BASE_DIR = Path(__file__).resolve().parents[2]

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """ Manages engine settings read from ORBIDR_* environment variables. """

    # Worker processes used to evaluate r-samples. 1 means sequential.
    THREADS: int = Field(1, ge=1)

    # Samples must lie above RBOUND_FACTOR * (max|a_i| + m) * (2g + 1).
    RBOUND_FACTOR: int = Field(4, ge=1)

    # Extra r-samples beyond the degree bound, used to check polynomiality.
    SURPLUS_SAMPLES: int = Field(2, ge=2)

    # Allow evaluating classes with m > 1 against the psi-oracle.
    ORBIFOLD_EVALUATION: bool = False

    # INI file handed to logging.config.fileConfig.
    LOGGING_CONFIG: Path = BASE_DIR / "logging.ini"

    ENVIRONMENT: str = "development"

    class Config:
        # Load a .env file if it exists (for local runs).
        env_file = BASE_DIR / ".env"
        env_prefix = "ORBIDR_"
        case_sensitive = True
        extra = "ignore"

    @property
    def parallel(self) -> bool:
        """Check if r-samples should be spread over a process pool."""
        return self.THREADS > 1


# Create a single, global instance of the settings.
settings = Settings()

logger.debug(
    "settings loaded: environment=%s threads=%d rbound_factor=%d",
    settings.ENVIRONMENT,
    settings.THREADS,
    settings.RBOUND_FACTOR,
)
