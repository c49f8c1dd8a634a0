"""Exact tropical linear algebra over (Q u {inf}, min, +).

Orthogonal complements of finite sets of tropical vectors, tropical rank,
Puiseux-polynomial liftings, and a certified decision whether a tropical
linear prevariety is the tropicalization of a linear subspace.
"""

from ._backend import BACKEND, available_backends
from .core import (
    GeneratorSet,
    hull_eval,
    hull_member,
    is_tropically_orthogonal,
    is_tropically_singular,
    matrix,
    normalize,
    rank_witness,
    tropical_rank,
    vector,
)
from .corpus import CountableFamilySpec, example_a0, example_countable_family, point_pj
from .errors import ContractError, DimensionError, DomainError, RankError, ShapeError, TropError
from .extrat import INF, ext
from .prevariety import (
    MinPlusInequality,
    Prevariety,
    compile_halfspaces,
    dimension,
    double_orthogonal_generators,
    orthogonal_generators,
    prevariety_equal,
    prevariety_member,
)
from .puiseux import PuiseuxPoly, puiseux_dot, pvector, tropicalize_vector, valuation
from .variety import (
    BilinearSystem,
    Budget,
    Decision,
    PlueckerVector,
    build_bilinear_system,
    decide_variety,
    dimension_obstruction,
    lift_hull_point,
    plucker_coordinates,
    search_liftings,
    trop_generators_from_plucker,
    trop_space_member,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
