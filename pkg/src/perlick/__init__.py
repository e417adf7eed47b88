"""Exactly solvable deformed-Kepler quantum systems on curved radial space.

Subpackage map:

- model       parameters, charts, weights, potential, curvature
- susy        shape-invariance ladder construction of the bound states
- closedform  Jacobi-polynomial closed forms and similarity transport
- quantize    ordering schemes, Hamiltonian variants, normal-form reduction
- oracle      independent finite-difference / quadrature verification
- degeneracy  exact-rational spectrum and accidental-degeneracy multiplets
- cli         machine-readable command-line surface (`perlick ...`)
"""

from .model import (BOUNDARY_PAD, Chart, CoordinateChart, DomainError, Frame,
                    PerlickIParams, WeightFunction, beta1_conformal_factor,
                    chart_map, conformal_curvature, conformal_curvature_radial,
                    coordinate_chart, family1_potential, metric_coefficient,
                    perlick_curvature, weight_function)
from .susy import (LadderWavefunction, SusyLevel, apply_raising,
                   bound_state_count, build_eigenfunction, factorization_energy,
                   ground_state, lowering_operator, prepotential,
                   prepotential_derivative, raising_operator)
from .closedform import (JacobiParams, closedform_eigenfunction,
                         closedform_energy, jacobi_eval, physical_jacobi_params,
                         similarity_transport, transported_ladder_state)
from .quantize import (HamiltonianVariant, OrderingScheme, apply_variant,
                       general_beta_reduce, h_prime, hyperbolic_1d, lb_3d,
                       lb_conformal, lb_flatradius, liouville_normal_form,
                       make_variant, similarity_residual, vm_conformal,
                       vm_general_beta, vonroos_kinetic)
from .oracle import (QuadratureSpec, RadialGrid, TridiagonalOperator,
                     discretize, discretize_potential, gram_matrix, node_count,
                     sturm_count, sturm_eigenvalues, suggest_rmax)
from .degeneracy import (LevelLabel, Multiplet, RationalExponent,
                         degenerate_partners, energy, level_label,
                         multiplet_table)

__version__ = "0.1.0"
