"""Application configuration.

Service settings (ledger location, log level, rate limit) come from the environment or an
optional ``.env`` file. Numerical defaults are plain constants so that computed
results never depend on the environment.
"""

import os
from dotenv import load_dotenv

load_dotenv()

DATABASE_URL: str = os.getenv("DATABASE_URL", "sqlite:///./verification_runs.db")
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-25s | %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"

# ── Computation defaults ─────────────────────────────────────────

DEFAULT_TRUNCATION: int = 32
ORACLE_WORD_CAP: int = 10**6
DEFAULT_SEED: int = 0

# Growth classification
GROWTH_TOLERANCE: float = 0.02
POLYNOMIAL_RESIDUAL_THRESHOLD: float = 0.1
POLYNOMIAL_MAX_DEGREE: int = 10
ENVELOPE_GROWTH_TOLERANCE: float = 0.05

# ── HTTP service ─────────────────────────────────────────────────

RATE_LIMIT_MAX_REQUESTS: int = int(os.getenv("RATE_LIMIT_MAX_REQUESTS", "30"))
RATE_LIMIT_WINDOW_SECONDS: int = int(os.getenv("RATE_LIMIT_WINDOW_SECONDS", "60"))
