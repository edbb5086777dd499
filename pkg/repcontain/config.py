import os
from typing import List

from dotenv import load_dotenv

from .errors import InvalidInputError

# Load environment variables
load_dotenv()

# Malformed values fall back to the default here and are reported by
# check_environment() once the CLI error handler is in place.
ENV_ERRORS: List[str] = []


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        ENV_ERRORS.append(f"{name} must be an integer, got {value!r}")
        return default


def check_environment():
    if ENV_ERRORS:
        raise InvalidInputError("; ".join(ENV_ERRORS))


# Worker pool
THREADS = _int_env("REPCONTAIN_THREADS", os.cpu_count() or 1)
THREADS_FROM_ENV = os.getenv("REPCONTAIN_THREADS") is not None

LOG_LEVEL = os.getenv("REPCONTAIN_LOG_LEVEL", "WARNING").upper()

# Asymptotic search
DEFAULT_NMAX = _int_env("REPCONTAIN_NMAX", 12)

# Character violation search
DEFAULT_GRID_DEPTH = _int_env("REPCONTAIN_GRID_DEPTH", 33)
DEFAULT_DESCENT_ITERS = _int_env("REPCONTAIN_DESCENT_ITERS", 50)
DEFAULT_LOG_BOX = _int_env("REPCONTAIN_LOG_BOX", 8)

# Catalyst search
DEFAULT_CATALYST_BOXES = _int_env("REPCONTAIN_CATALYST_BOXES", 6)
DEFAULT_CATALYST_TERMS = _int_env("REPCONTAIN_CATALYST_TERMS", 4)
DEFAULT_CATALYST_POWERS = _int_env("REPCONTAIN_CATALYST_POWERS", 3)

# Converse verification
DEFAULT_CONVERSE_SAMPLES = _int_env("REPCONTAIN_CONVERSE_SAMPLES", 200)
SAMPLE_SEED = _int_env("REPCONTAIN_SAMPLE_SEED", 20240517)

CORPUS_DIR = os.getenv("REPCONTAIN_CORPUS_DIR", "corpus")


def effective_threads(requested=None) -> int:
    """Thread count for a command: the environment wins over --threads."""
    if THREADS_FROM_ENV or requested is None:
        return max(1, THREADS)
    return max(1, int(requested))
