"""
Package defaults.

Classes that read these take them as class attribute defaults; constructor
keyword arguments override them, and the command line overrides both.
"""

#: The largest number of candidate morphisms (or commutative squares) a brute
#: force check may visit before it gives up and reports ``INCONCLUSIVE``
MONOLIGHT_BUDGET: int = 250_000

#: How many morphisms to sample when a check samples instead of enumerating
MONOLIGHT_SAMPLES: int = 24

#: The default seed for every sampled check
MONOLIGHT_SEED: int = 0

#: Sampled and brute force checks leave out objects with more elements than this
MONOLIGHT_MAX_ORDER: int = 24

#: How many radicals a context, and how many hom-sets a verifier, keep cached;
#: the least recently used entry is dropped first
MONOLIGHT_CACHE_SIZE: int = 256
