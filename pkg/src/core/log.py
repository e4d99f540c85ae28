import logging
import logging.config
from pathlib import Path
from typing import Optional

from src.core.config import settings


def setup_logging(config_path: Optional[Path] = None) -> None:
    """
    Configures logging from an INI file.

    Falls back to a plain stderr handler when the file does not exist, so the
    CLI still works from an unpacked wheel without the repository root.
    """
    path = Path(config_path) if config_path else settings.LOGGING_CONFIG
    if path.exists():
        logging.config.fileConfig(path, disable_existing_loggers=False)
    else:
        logging.basicConfig(
            level=logging.WARNING,
            format="%(levelname)-5.5s [%(name)s] %(message)s",
        )
