"""
Configuration Module
Runtime limits and logging options, read once from the environment
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_int(name, default):
    """Read an integer environment variable, falling back to default"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


class ForgeConfig:
    """Crystal forge configuration class"""

    # Exhaustive 2^n subset sweeps refuse crystals larger than this
    EXHAUSTIVE_CAP = _env_int("CRYSTAL_FORGE_CAP", 20)

    # Weyl group enumeration cap; also decides finite-type recognition
    WEYL_ELEMENT_CAP = _env_int("CRYSTAL_FORGE_WEYL_CAP", 10**6)

    # Height cap for dominance search when the Cartan matrix is singular
    HEIGHT_CAP = _env_int("CRYSTAL_FORGE_HEIGHT_CAP", 64)

    # Sampled suites
    RANDOM_SAMPLES = _env_int("CRYSTAL_FORGE_SAMPLES", 1000)
    SEED = _env_int("CRYSTAL_FORGE_SEED", 20260117)

    # Shared Bruhat memo (0 disables it)
    BRUHAT_MEMO = _env_int("CRYSTAL_FORGE_BRUHAT_MEMO", 1) != 0
    BRUHAT_MEMO_SIZE = _env_int("CRYSTAL_FORGE_BRUHAT_MEMO_SIZE", 1 << 16)

    # Logging
    LOG_LEVEL = os.getenv("CRYSTAL_FORGE_LOG_LEVEL", "WARNING").upper()
    LOG_FORMAT = os.getenv("CRYSTAL_FORGE_LOG_FORMAT", "json").lower()
