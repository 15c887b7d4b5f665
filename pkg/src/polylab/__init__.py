"""polylab: exact-arithmetic detection of low-degree algebraic roots of random
monic integer polynomials and random integer matrices, with Monte Carlo and
exhaustive measurement harnesses."""

from .intpoly import (IntPoly, cauchy_root_bound, matrix_root_bound, poly_divides,
                      poly_divmod_monic, poly_eval_int)
from .intmatrix import (IntMatrix, mat_charpoly_exact, mat_det_exact,
                        mat_rank_exact, mat_rank_mod)
from .roots import RootSet, annulus_check, find_roots, max_root_modulus
from .cyclotomic import cyclotomic, cyclotomic_factors, inverse_totient
from .factor import (CandidateBox, CeilingExceeded, Factor, FactorReport,
                     classify_irreducibility, enumerate_candidates,
                     low_degree_factors_enumerate, low_degree_factors_subset,
                     modp_irreducibility_certificate,
                     rademacher_structural_certificate, rational_root_factors)
from .numtheory import euler_phi, mobius
from .bounds import (collected_bounds_check, ff_irreducible_count, figure_lower_bound,
                     lemma_sandwich, lo_exact_pm1, product_bound, sum_bound,
                     theorem_budget)
from .ensembles import (EnsembleSpec, SeedStream, charpoly_of_sample, sample,
                        spec_from_json, spec_to_json)
from .experiments import (STANDARD_CONFIGS, EstimateRecord, ExperimentConfig, RegionSpec,
                          delocalization_profile, emit_report,
                          exhaustive_reducibility, mc_estimate,
                          validate_main_theorem, wilson_interval)
from .control import (Graph, automorphisms_bruteforce, godsil_cross_check,
                      graph_controllable, is_controllable, kalman_matrix,
                      minimally_controllable)

__version__ = "0.1.0"
