"""Counting cube vertices inside planks and tangent half-spaces of the unit ball.

The heavy lifting lives in the compiled extension; this package re-exports
its types and operations.
"""

from ._plankcount import (  # noqa: F401
    AntipodalCheck,
    BoundReport,
    CapacityError,
    CentroidWitness,
    EmptyHalfSpaceError,
    EnumConfig,
    ExactOverflow,
    HalfSpaceCount,
    IntWeightVector,
    InvalidInput,
    Observation2Check,
    PlankCount,
    SearchConfig,
    SearchResult,
    SignVertex,
    WeightVector,
    antipodal_free_check,
    antipode,
    bound_report,
    centroid_witness,
    count_halfspace,
    count_parallel,
    count_plank_exact,
    count_plank_gray,
    count_plank_naive,
    family_count,
    givens_perturb,
    gray_mask,
    lemma1_bound,
    normalize,
    objective,
    observation2_check,
    pi_map,
    round_rational,
    sample_unit_vector,
    search_minimum,
    theorem1_bound,
    verify_lemma1,
    verify_theorem1,
    verify_tomaszewski,
    vertex_decode,
)

__version__ = "0.1.0"
