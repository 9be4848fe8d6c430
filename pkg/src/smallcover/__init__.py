"""Exact counting and classification of (Z2)^3-colorings of m-sided prisms.

Colorings of the prism P3(m) with nonzero vectors of (Z2)^3, independent at
every vertex, correspond to small covers over the prism; orbits under the face
poset automorphism group correspond to equivariant diffeomorphism classes.
Three routes are provided and cross-checked: closed formulas
(:mod:`.closed_forms`), brute-force enumeration (:mod:`.coloring`) and
Burnside counting over the explicit group (:mod:`.burnside`).
"""

from .burnside import OrbitSummary, orbit_count_bruteforce, orbit_partition, orbit_representatives
from .closed_forms import (a_closed, c_alt, e_formula, euler_phi, fixed_count_formula,
                           lambda_count_formula, nu_formula, rho, seq)
from .coloring import (Coloring, count_colorings, count_fixed_colorings, count_normalized,
                       count_same_top_bottom, enumerate_colorings, is_valid)
from .errors import ConsistencyError, InvalidArgumentError, ResourceLimitError, SmallCoverError
from .gf2 import Gf2Vector, basis, gl_order, is_independent
from .kernels import BACKEND
from .prism import BOTTOM, TOP, FacetId, PrismComplex, build_prism, facet_adjacency, side
from .symmetry import (FacetPermutation, act_on_coloring, compose, element, full_group, identity,
                       inverse, poset_automorphisms_bruteforce)

__version__ = "0.1.0"
