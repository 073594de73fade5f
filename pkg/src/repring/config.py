"""Tunable limits and the default PRNG seed.

All randomness in the package (module chopping, equal degree splitting)
flows from an explicit integer seed, so identical seeds give identical
runs.  ``REPRING_SEED`` in the environment overrides the built-in
default; explicit function/CLI arguments override both.
"""

import os

DEFAULT_SEED = 1

# group enumeration refuses to run past this many elements
ORDER_BOUND = 10000

# isomorphism / embedding backtracking bound
ISO_ORDER_BOUND = 256

# closed-set enumeration refuses catalogs with more entries than this
CLOSED_SET_ENTRY_BOUND = 20

# random algebra elements tried per split attempt before reseeding
CHOP_RETRY = 64
CHOP_RESEEDS = 4

SEED_ENV = "REPRING_SEED"

# default catalog truncation per prime
DEFAULT_MAX_ORDER = {2: 16, 3: 27, 5: 25}


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SEED


def default_max_order(p: int) -> int:
    return DEFAULT_MAX_ORDER.get(p, p * p)
