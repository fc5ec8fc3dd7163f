"""Exact rational tools for signed associativity conditions.

Algebras with multiplication tensors over the rationals, the six
subgroup-signed associativity conditions, the operads they present with
their quadratic duals and series pairings, the attached cohomology,
bimodule axioms, dual cogebras, tensor products, and symmetric
perturbations of antisymmetric laws.  Everything is computed in exact
arithmetic; no floating point appears anywhere.
"""

from __future__ import annotations

from .algebra import (
    Algebra,
    Identity3Id,
    LieInvariants,
    all_associators_equal,
    check_identity_3,
    lie_invariants,
)
from .constructions import (
    BracketTable,
    Cogebra,
    DualityRow,
    TableDiff,
    TableEntryDiff,
    bracket_table_compare,
    cogebra_diagram_holds,
    cogebra_to_algebra,
    deformation_vinberg_check,
    deformed_law,
    dual_cogebra,
    duality_map,
    duality_table,
    fiber_membership,
    golden_tables,
    run_table_comparisons,
    section_s,
    tensor_product,
    tensor_theorem_check,
    transport,
    which_g_associative_dual,
)
from .errors import (
    ContractViolationError,
    FixtureError,
    InputError,
    LieadmError,
    PreconditionError,
)
from .fileio import (
    load_algebra,
    load_multimap,
    load_pair,
    save_algebra,
    save_multimap,
    save_pair,
)
from .fixtures import FIXTURE_DESCRIPTIONS, fixture_names, get_fixture
from .modules import (
    BimodulePair,
    ModuleCheckResult,
    ModuleFlavor,
    ModuleWitness,
    check_module,
    hat_lambda,
    regular_pair,
    sl2_matrix_relations,
    solvable2_matrix_relation,
    solvable2_scalar_pair,
    split_null_extension,
)
from .multilinear import (
    MultiMap,
    algebra_from_bilinear,
    antisymmetrize,
    c0_space,
    chevalley_differential,
    comp_product_1,
    differential,
    graded_bracket,
    h_map,
    lemma_scaling_probe,
    mu_multimap,
    odot,
)
from .operads import (
    DualIdentities,
    OperadId,
    dual_identities,
    koszul_residual,
    operad_dimension,
    operad_for_subgroup,
    poincare_series,
)
from .permutations import Permutation, SubgroupId, subgroup_elements
from .series import TruncatedSeries
from .suite import CheckResult, SECTIONS, run_suite

__all__ = [
    "Algebra",
    "BimodulePair",
    "BracketTable",
    "CheckResult",
    "Cogebra",
    "ContractViolationError",
    "DualIdentities",
    "DualityRow",
    "FIXTURE_DESCRIPTIONS",
    "FixtureError",
    "Identity3Id",
    "InputError",
    "LieInvariants",
    "LieadmError",
    "ModuleCheckResult",
    "ModuleFlavor",
    "MultiMap",
    "OperadId",
    "Permutation",
    "PreconditionError",
    "SECTIONS",
    "SubgroupId",
    "ModuleWitness",
    "TableDiff",
    "TableEntryDiff",
    "TruncatedSeries",
    "algebra_from_bilinear",
    "all_associators_equal",
    "antisymmetrize",
    "bracket_table_compare",
    "c0_space",
    "check_identity_3",
    "check_module",
    "chevalley_differential",
    "cogebra_diagram_holds",
    "cogebra_to_algebra",
    "comp_product_1",
    "deformation_vinberg_check",
    "deformed_law",
    "differential",
    "dual_cogebra",
    "dual_identities",
    "duality_map",
    "duality_table",
    "fiber_membership",
    "fixture_names",
    "get_fixture",
    "golden_tables",
    "graded_bracket",
    "h_map",
    "hat_lambda",
    "koszul_residual",
    "lemma_scaling_probe",
    "lie_invariants",
    "load_algebra",
    "load_multimap",
    "load_pair",
    "mu_multimap",
    "odot",
    "operad_dimension",
    "operad_for_subgroup",
    "poincare_series",
    "regular_pair",
    "run_suite",
    "sl2_matrix_relations",
    "solvable2_matrix_relation",
    "solvable2_scalar_pair",
    "run_table_comparisons",
    "save_algebra",
    "save_multimap",
    "save_pair",
    "section_s",
    "split_null_extension",
    "subgroup_elements",
    "tensor_product",
    "tensor_theorem_check",
    "transport",
    "which_g_associative_dual",
]
