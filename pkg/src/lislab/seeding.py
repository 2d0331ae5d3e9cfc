"""Counter-based seed derivation.

Every trial of a campaign gets its own 64-bit seed computed from the master
seed and the trial's key, so any trial can be regenerated in isolation and
the result does not depend on the order in which trials are executed.

The mixer is SplitMix64's finaliser::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

applied once per key component, with the golden-ratio increment
``0x9E3779B97F4A7C15`` added before each round.
"""

import struct

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(z):
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def float_key(value):
    """Integer key for a float, taken from its IEEE-754 bit pattern."""
    return struct.unpack("<Q", struct.pack("<d", float(value)))[0]


def derive_seed(master_seed, *keys):
    """Derive a 64-bit seed from ``master_seed`` and integer ``keys``.

    >>> derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    True
    >>> derive_seed(1, 2, 3) != derive_seed(1, 3, 2)
    True
    """
    z = splitmix64(int(master_seed) & MASK64)
    for k in keys:
        z = splitmix64(z ^ (int(k) & MASK64))
    return z


def trial_seed(master_seed, N, trial):
    """Seed for trial number ``trial`` at system size ``N``."""
    return derive_seed(master_seed, float_key(N), trial)
