"""Weight and tensor product multiplicities counted with MV polytopes.

Shipped generator tables cover A1, A2, C2 and A3.  The usual entry points::

    from mvpoly import builtin_table, load_root_system, weight_multiplicity
    t = builtin_table("A2")
    weight_multiplicity(t, load_root_system("A2"), (1, 1), (0, 0))   # 2
"""

from .geometry import Polytope, convex_hull, minkowski_sum
from .kernels import BACKEND
from .mvcalc import (
    admissible_monomials,
    character,
    mv_polytopes,
    tensor_decompose,
    tensor_multiplicity,
    weight_multiplicity,
)
from .rootsys import (
    SUPPORTED_GROUPS,
    freudenthal_character,
    klimyk_decompose,
    kostant_partition_count,
    load_root_system,
)
from .tables import GeneratorTable, Monomial, builtin_table, load_table, save_table

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "GeneratorTable", "Monomial", "Polytope", "SUPPORTED_GROUPS",
    "admissible_monomials", "builtin_table", "character", "convex_hull",
    "freudenthal_character", "klimyk_decompose", "kostant_partition_count",
    "load_root_system", "load_table", "minkowski_sum", "mv_polytopes",
    "save_table", "tensor_decompose", "tensor_multiplicity", "weight_multiplicity",
]
