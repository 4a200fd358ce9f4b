"""Symbolic-dynamics toolkit for Lorenz knots.

Aperiodic words over {L, R} encode periodic orbits on the Lorenz
template.  The toolkit turns words into Lorenz braids, computes crossing
numbers, genus and Birman-Williams minimal braids, enumerates the
syllable-permutation families of torus knot words, assembles satellite
braids with their symbolic words, and classifies family members as torus
knots, hyperbolicity candidates (conditional on Morton's conjecture), or
undecided.
"""

from .braids import (
    GeneratorBraidWord,
    LorenzPermutation,
    NotAKnotError,
    braid_to_word,
    crossing_count,
    cycle_structure,
    doubled_genus,
    full_twist,
    is_knot,
    minimal_braid,
    minimal_braid_exponents,
    word_to_braid,
)
from .satellites import (
    Pattern,
    ReturnPermutation,
    SatelliteSpec,
    TrivialPattern,
    is_satellite_knot,
    l_return_map,
    l_run_profile,
    parse_pattern,
    r_return_map,
    r_run_profile,
    run_profiles,
    satellite_braid,
    satellite_consistency,
    satellite_copies,
    satellite_word,
)
from .torus import (
    ClassificationReport,
    InvalidParamsError,
    TorusParams,
    Verdict,
    classify,
    count_family,
    crossing_bounds,
    enumerate_family,
    family_hyperbolic_closed_form,
    genus2_bounds,
    min_crossing_word,
    params_of,
    satellite_excluded,
    standard_word,
    torus_candidate_filter,
)
from .words import InvalidWordError, SortedOrbit, Word, compare

__all__ = [
    "ClassificationReport",
    "GeneratorBraidWord",
    "InvalidParamsError",
    "InvalidWordError",
    "LorenzPermutation",
    "NotAKnotError",
    "Pattern",
    "ReturnPermutation",
    "SatelliteSpec",
    "SortedOrbit",
    "TorusParams",
    "TrivialPattern",
    "Verdict",
    "Word",
    "braid_to_word",
    "classify",
    "compare",
    "count_family",
    "crossing_bounds",
    "crossing_count",
    "cycle_structure",
    "doubled_genus",
    "enumerate_family",
    "family_hyperbolic_closed_form",
    "full_twist",
    "genus2_bounds",
    "is_knot",
    "is_satellite_knot",
    "l_return_map",
    "l_run_profile",
    "min_crossing_word",
    "minimal_braid",
    "minimal_braid_exponents",
    "params_of",
    "parse_pattern",
    "r_return_map",
    "r_run_profile",
    "run_profiles",
    "satellite_braid",
    "satellite_consistency",
    "satellite_copies",
    "satellite_excluded",
    "satellite_word",
    "standard_word",
    "torus_candidate_filter",
    "word_to_braid",
]
