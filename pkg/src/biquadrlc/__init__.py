"""Realizability and synthesis of biquadratic impedances k(s+z)^2/(s+p)^2
as series-parallel RLC networks.

The package decides which element count realizes such an impedance (four,
five, or one of three cataloged seven-element configurations), synthesizes
element values where a closed form exists, and verifies every synthesis by
impedance expansion, exactly or at arbitrary precision.
"""

from .biquad import (
    CanonicalBiquad,
    GeneralBiquad,
    PoleSquaredForm,
    canonical_positive_real,
    canonical_to_general,
    is_positive_real,
    to_rational_fn,
    transform_params,
)
from .network import (
    Leaf,
    Parallel,
    Series,
    apply_transform,
    build_config,
    config_formula,
    config_ids,
    config_slots,
    config_template,
    enumerate_labeled,
    enumerate_topologies,
    from_netlist_json,
    has_pure_reactive_series_arm,
    impedance,
    parallel,
    series,
    to_netlist_json,
    to_spice,
    violates_cutset_rule,
)
from .ratpoly import (
    Poly,
    QuadraticRational,
    RationalFn,
    gcd,
    isolate_root,
    resultant,
    sturm_count,
)
from .realize import (
    NotRealizableError,
    RealizationClass,
    RealizationReport,
    check_fig3a_condition,
    check_n4a_condition,
    check_n5a_condition,
    classify,
    lemma_five_element_two_reactive,
    lemma_four_element,
    lemma_three_element,
    n4a_root_interval,
    n5a_root_interval,
    synth_fig3a,
    synth_n4a,
    synth_n5a,
)
from .verify import FitResult, falsify_small, fit_topology, verify_exact, verify_numeric

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "RationalFn",
    "QuadraticRational",
    "gcd",
    "resultant",
    "sturm_count",
    "isolate_root",
    "Leaf",
    "Series",
    "Parallel",
    "series",
    "parallel",
    "impedance",
    "apply_transform",
    "enumerate_topologies",
    "enumerate_labeled",
    "violates_cutset_rule",
    "has_pure_reactive_series_arm",
    "build_config",
    "config_formula",
    "config_ids",
    "config_slots",
    "config_template",
    "to_netlist_json",
    "from_netlist_json",
    "to_spice",
    "CanonicalBiquad",
    "GeneralBiquad",
    "PoleSquaredForm",
    "canonical_to_general",
    "canonical_positive_real",
    "is_positive_real",
    "transform_params",
    "to_rational_fn",
    "RealizationClass",
    "RealizationReport",
    "NotRealizableError",
    "classify",
    "check_fig3a_condition",
    "check_n4a_condition",
    "check_n5a_condition",
    "synth_fig3a",
    "synth_n4a",
    "synth_n5a",
    "n4a_root_interval",
    "n5a_root_interval",
    "lemma_three_element",
    "lemma_four_element",
    "lemma_five_element_two_reactive",
    "verify_exact",
    "verify_numeric",
    "fit_topology",
    "falsify_small",
    "FitResult",
    "__version__",
]
