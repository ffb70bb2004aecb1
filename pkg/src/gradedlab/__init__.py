"""Exact computation over finite graded rings and modules.

The library decides, by exhaustion over explicit operation tables, every
predicate in the theory of graded weakly primal submodules: the GW/G/W
sets and their witnesses, adjoint ideals, weakly prime and weakly primary
submodules, localization at multiplicative sets of homogeneous elements,
and weakly primal factorizations.  A claims harness runs a fixed registry
of statements over an instance suite and emits machine-checkable
certificates for every refutation.
"""

__version__ = "0.1.0"

from .rings import (
    EnumerationBudgetError,
    GradedIdeal,
    GradedRing,
    GradingGroup,
    MultiplicativeSet,
    ValidationError,
    Violation,
    enumerate_graded_ideals,
    enumerate_multiplicative_sets,
    homogeneous_elements,
    homogeneous_radical,
    ideal_generated_by,
    ideal_product,
    is_graded_ideal,
    is_graded_weakly_prime_ideal,
    make_quadratic,
    make_zn,
    trivial_group,
    validate_multiplicative_set,
    validate_ring,
)
from .modules import (
    GradedModule,
    GradedSubmodule,
    ann_in_module,
    ann_of_module,
    colon_into_module,
    colon_into_ring,
    enumerate_graded_submodules,
    ideal_times_module,
    is_cyclic,
    is_faithful,
    is_graded_submodule,
    is_multiplication,
    make_product_module,
    make_zero_module,
    make_zn_module,
    quotient_module,
    ring_as_module,
    submodule_generated_by,
    validate_module,
)
from .primality import (
    NonHomogeneousScalarError,
    PrimalityVerdict,
    Witness,
    characterization_check,
    classify,
    g_set,
    gw_set,
    gw_set_ideal,
    is_graded_weakly_primal_ideal,
    is_gwp_to_submodule,
    w_set,
)
from .localization import (
    LocalizationInvariantError,
    LocalizedModule,
    LocalizedRing,
    contract_ideal,
    contract_submodule,
    correspondence_check,
    extend_ideal,
    extend_submodule,
    localize_module,
    localize_ring,
    localized_colon_agrees,
)
from .factorization import (
    Factorization,
    is_wp_module,
    is_wp_ring,
    revalidate_factorization,
    weakly_primal_factorization,
    weakly_primal_ideals,
)
from .zbackend import ZInstance, ZVerdict, classify_z
