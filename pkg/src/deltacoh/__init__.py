"""Exact computations with Delta-groups, strong 3-algebras and symmetric
group cohomology HS^n(G, A) for finite groups."""
from .group_core import (FiniteGroup, GModule, GroupError, cyclic_group, group_from_table,
                         klein_four_group, make_gmodule, sign_module, symmetric_group,
                         trivial_module)
from .cochain import (Cochain, differential, face_map, is_cocycle, is_symmetric,
                      permutation_action, transposition_action)
from .cohomology import (cohomology_group, coboundary_witness, natural_map_kernel,
                         symmetric_cohomology_group, symmetric_subspace)
from .delta_group import (DeltaGroup, are_isomorphic, build_T_G_0, build_T_G_A_alpha,
                          build_trivial_base, check_d1, delta_to_strong, is_delta_morphism,
                          prop41_crosscheck, verify_delta_axioms)
from .three_algebra import (MultiplicativeCocycle, SixJData, SparseTrilinearSystem,
                            StrongThreeAlgebra, build_dw, build_sixj, check_dw_condition,
                            check_sixj_identity, derive_mtilde, prop22_crosscheck,
                            verify_orthogonal, verify_strong, verify_three_algebra)
from .evaluator import (EvaluationState, LabeledTriangulation, coherence_check, evaluate,
                        subdivide)

__version__ = "0.1.0"
