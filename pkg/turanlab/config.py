"""
Configuration settings for turanlab
Every tunable lives here; values come from the environment when set
"""

import os

from turanlab.errors import InvalidArgument

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Graph limits
MAX_VERTICES = 64  # one machine word per adjacency row
BUILTIN_ENUMERATION_MAX_N = 12
CENSUS_MAX_N = 20
DISTANCE_MAX_N = 14

# Exact counts must fit a signed 64-bit word
COUNT_LIMIT = 2 ** 63 - 1

# Extremal search
WITNESS_CAP = 100

# Symmetrization step cap is SYMMETRIZE_STEP_FACTOR * n^2
SYMMETRIZE_STEP_FACTOR = 10

# Root extraction in the degree bound is rounded down to this many bits
ROOT_PRECISION_BITS = 30

# Worker pool
THREADS_ENV = 'TURANLAB_THREADS'
DEFAULT_THREADS = 1

# Catalog storage
CATALOG_ENV = 'TURANLAB_CATALOG'
STORAGE_DIR = os.path.join(BASE_DIR, 'storage')
DEFAULT_CATALOG_PATH = os.environ.get(CATALOG_ENV, os.path.join(STORAGE_DIR, 'catalog.tsv'))

# Logging
LOG_LEVEL = os.environ.get('TURANLAB_LOG_LEVEL', 'WARNING')


def resolve_catalog_path(flag_value=None):
    """
    Pick the catalog file: an explicit flag wins over the environment

    Args:
        flag_value (str): Value of --catalog, or None

    Returns:
        str: Path of the catalog file
    """
    if flag_value:
        return flag_value
    return os.environ.get(CATALOG_ENV) or DEFAULT_CATALOG_PATH


def resolve_threads(flag_value=None):
    """
    Pick the worker count: an explicit flag wins over TURANLAB_THREADS

    Args:
        flag_value (int): Value of --threads, or None

    Returns:
        int: Requested worker processes (not yet checked for positivity)
    """
    if flag_value is not None:
        return int(flag_value)
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return DEFAULT_THREADS
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgument(f"{THREADS_ENV} must be an integer, got {raw!r}")
