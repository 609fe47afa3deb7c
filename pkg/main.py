"""Main entry point for the gkm command."""

import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from src.cli.core import GKMApp
from src.utils.config import load_settings, use_settings


def setup_logging(level: str = "WARNING", debug: bool = False) -> None:
    """Configure logging for the application.

    Reports go to standard output, so log records go to standard error.

    Args:
        level: The logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        debug: Whether to enable debug mode (overrides level)
    """
    log_level = logging.DEBUG if debug else getattr(logging, level.upper(), logging.WARNING)

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for the application.

    Loads configuration, sets up logging and runs one command.
    """
    env_path = Path(".env")
    if env_path.exists():
        load_dotenv(env_path)

    try:
        settings = load_settings()
    except Exception as e:
        setup_logging()
        logging.error(f"Failed to load settings: {e}")
        logging.error("Please check your .env file and the GKM_* environment variables.")
        sys.exit(1)

    setup_logging(settings.log_level, settings.debug)
    use_settings(settings)

    app = GKMApp(settings)
    sys.exit(app.run(argv))


if __name__ == "__main__":
    main()
