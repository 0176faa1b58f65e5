"""Finite multioperator groups: ideal calculus, zero divisors, and the
Zariski topology of equation solution sets over finite algebras."""

from .core import (
    FiniteOmegaGroup,
    Homomorphism,
    OperationTable,
    apply_operation,
    as_group,
    as_lie_ring,
    as_ring,
    direct_product,
    embed_classical,
    homomorphism,
    validate_algebra,
)
from .closures import (
    commutator_group,
    enumerate_ideals,
    enumerate_omega_subgroups,
    generated_subgroup,
    ideal_closure,
    is_ideal,
    is_omega_subgroup,
    omega_subgroup_closure,
    principal_ideal,
)
from .domains import (
    WitnessedVerdict,
    group_zero_divisor_sets,
    is_abelian,
    is_anticommutative,
    is_c_anticommutative,
    is_domain,
    ring_satisfies_formula5,
    zero_divisor_witness,
)
from .terms import (
    Add,
    Neg,
    Op,
    Term,
    Var,
    ZERO,
    Zero,
    eval_term,
    is_commutator_word,
    normalize_equation,
    omega_commutator,
    parse_term,
    random_term,
    term_to_str,
)
from .zariski import (
    EquationSystem,
    LatticeReport,
    bounded_depth_ideal_oracle,
    enumerate_algebraic_sets,
    equational_domain_check,
    is_algebraic,
    point_in_closure,
    solve_system,
    zariski_closure,
)
from .catalog import (
    CatalogEntry,
    ClassificationReport,
    build_catalog,
    catalog_algebra,
    run_classification,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
