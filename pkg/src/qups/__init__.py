"""Lattice point sets and quasi-uniformity diagnostics."""

__version__ = "0.1.0"

from .errors import DomainError, QupsError, ResourceError
from .fileformat import dumps, loads, read_pointset, write_pointset
from .generators import (alpha_power2, fibonacci, gen_fibonacci, gen_frolov_points, gen_grid_aniso,
                         gen_grid_regular, gen_hexagonal_cf, gen_kronecker, gen_rank1,
                         golden_alpha, hexagonal_fraction, liouville_alpha, named_alpha)
from .lattice import (LatticeSpec, admissibility_min_normform, dual_shortest, enumerate_in_cube,
                      frolov_matrix, generic_lattice, integer_lattice, lattice_covering_upper,
                      rank1_lattice, shortest_vector, shortest_vector_2d_cf, successive_minima)
from .metrics import (QUReport, covering_radius_enclosure, mesh_ratio_enclosure, nestedness_check,
                      profile_prefixes, project, qu_report, separation_radius,
                      star_discrepancy_exact, star_discrepancy_lb)
from .numtheory import (badly_approximable_profile, cf_expand_rational, convergents, is_prime,
                        max_partial_quotient, mod_inverse, nearest_int_dist)
from .pointset import PointSet
from .search import (SearchConfig, SearchResult, auto_thresholds, kappa_dual, kappa_primal,
                     search_generators, verify_mesh_bound_via_kappa)
