import os
from pathlib import Path

import pytest
import structlog
from dotenv import load_dotenv

log = structlog.get_logger()

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session", autouse=True)
def load_test_environment():
    """
    Load environment variables from .test.env (or .ci.test.env if in CI)
    file before the test session starts.
    """
    dotenv_filename = ".ci.test.env" if os.getenv("CI") == "true" else ".test.env"
    dotenv_path = Path(__file__).parent / dotenv_filename

    if dotenv_path.exists():
        load_dotenv(dotenv_path=dotenv_path)
        log.info("test environment loaded", path=str(dotenv_path))
    else:
        log.debug("no test environment file", path=str(dotenv_path))


# Configure structlog for testing
@pytest.fixture(scope="session", autouse=True)
def configure_structlog(request):
    original_log_file = request.config.getoption("--log-file")
    log_file = original_log_file + ".jsonl" if original_log_file else None
    if log_file:
        structlog.configure(
            processors=[
                structlog.processors.add_log_level,
                structlog.processors.TimeStamper(fmt="iso"),
                structlog.processors.JSONRenderer(),
            ],
            logger_factory=structlog.PrintLoggerFactory(file=Path(log_file).open("a")),  # noqa: SIM115
            cache_logger_on_first_use=False,
        )
    else:
        structlog.configure(
            processors=[
                structlog.dev.ConsoleRenderer(),
            ],
            logger_factory=structlog.PrintLoggerFactory(),
            cache_logger_on_first_use=False,
        )


@pytest.fixture(scope="session")
def data_dir() -> Path:
    """Directory holding the shipped reference datasets and perturbation specs."""
    return DATA_DIR


@pytest.fixture
def restore_structlog():
    """Puts the session's structlog configuration back after a test reconfigured it."""
    config = structlog.get_config()
    yield
    structlog.configure(**config)
