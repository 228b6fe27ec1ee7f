import os
from pathlib import Path

# --- Paths ---
BASE_DIR = Path(__file__).resolve().parent
DEFAULT_TABLE_PATH = os.getenv("MURANK_TABLE", str(BASE_DIR / "data" / "known_values.json"))

# --- Field Limits ---
# Everything the bound machinery needs lives far below these.
MAX_FIELD_SIZE = 2 ** 32
MAX_ALGEBRA_DIM = 64

# numpy add/mul tables are built up to FIELD_TABLE_MAX; element-level
# lookup dicts (q^2 entries per operation) only up to FIELD_LOOKUP_MAX.
FIELD_TABLE_MAX = 256
FIELD_LOOKUP_MAX = 64

# --- Search Budgets ---
# Upper limit on candidate rank-k combinations explored by brute force.
BRUTE_FORCE_BUDGET = int(os.getenv("MURANK_BRUTE_FORCE_BUDGET", "2000000"))

# Highest tower level find_step will walk to before giving up.
LEVEL_CAP = int(os.getenv("MURANK_LEVEL_CAP", "64"))

# --- CLI Limits ---
TABLE_N_MAX = 10 ** 6
DEFAULT_T_MAX = 8
DEFAULT_SELFCHECK_K_MAX = 8

# --- Logging ---
LOG_LEVEL = os.getenv("MURANK_LOG_LEVEL", "WARNING").upper()


def table_path(override=None):
    """Resolve the constants file: CLI flag, then MURANK_TABLE, then the shipped file."""
    if override:
        return str(override)
    return os.getenv("MURANK_TABLE", DEFAULT_TABLE_PATH)
