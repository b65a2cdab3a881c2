import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Try loading from the repository root
dotenv_path = os.path.join(os.path.dirname(__file__), '..', '.env')
load_dotenv(dotenv_path)


def _int_setting(name, minimum=0):
    raw = os.getenv(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"⚠️  {name}={raw!r} is not an integer, ignoring it")
        return None
    if value < minimum:
        logger.warning(f"⚠️  {name}={value} is below {minimum}, ignoring it")
        return None
    return value


class Config:
    THREADS = _int_setting("VTYPES_THREADS", minimum=1)
    MAX_CARETS = _int_setting("VTYPES_MAX_CARETS")
    MAX_EXPANSIONS = _int_setting("VTYPES_MAX_EXPANSIONS", minimum=1)
    SEED = _int_setting("VTYPES_SEED")
    LOG_LEVEL = os.getenv("VTYPES_LOG_LEVEL")

    # Fallbacks for local runs
    if THREADS is None:
        THREADS = os.cpu_count() or 1
        logger.warning(f"⚠️  Using fallback VTYPES_THREADS={THREADS}")

    if MAX_CARETS is None:
        MAX_CARETS = 24
        logger.warning("⚠️  Using fallback VTYPES_MAX_CARETS=24")

    if MAX_EXPANSIONS is None:
        MAX_EXPANSIONS = 200_000
        logger.warning("⚠️  Using fallback VTYPES_MAX_EXPANSIONS=200000")

    if SEED is None:
        SEED = 0
        logger.warning("⚠️  Using fallback VTYPES_SEED=0")

    if not LOG_LEVEL:
        LOG_LEVEL = "WARNING"
        logger.warning("⚠️  Using fallback VTYPES_LOG_LEVEL=WARNING")
