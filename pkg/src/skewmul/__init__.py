"""Fast multiplication in skew polynomial rings over cyclic Galois algebras."""

from .algebra import AlgebraDescriptor, Kind, alg_make
from .errors import SkewMulError
from .field import FieldContext, OpCounter
from .skew import SkewPoly, fast_mul, naive_mul, skew_random
from .tower import TowerDescriptor, tower_dispatch, tower_make

__all__ = [
    "AlgebraDescriptor", "FieldContext", "Kind", "OpCounter", "SkewMulError",
    "SkewPoly", "TowerDescriptor", "alg_make", "fast_mul", "naive_mul",
    "skew_random", "tower_dispatch", "tower_make",
]
