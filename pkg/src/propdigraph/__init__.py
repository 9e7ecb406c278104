"""Proportionality digraph representations and the boolean logic of "most".

A digraph is representable by finite sets A_v with "u -> v iff more
than an alpha fraction of A_u lies in A_v" exactly when it has no
directed cycle of one-way edges.  This package decides that condition,
constructs explicit witnesses (for rational thresholds directly, and
for any threshold via exact rational perturbation and rounding),
verifies witnesses, and builds a complete satisfiability procedure for
the propositional logic of "most X are Y" on top of the construction.
"""

from .digraph import (
    AppropriatePair,
    Digraph,
    classify_edges,
    find_one_way_cycle,
    to_appropriate_pair,
)
from .errors import (
    InsufficientZoneError,
    OneWayCycleError,
    PropDigraphError,
    ResourceLimitError,
    SentenceSyntaxError,
)
from .logic import (
    And,
    Atom,
    Iff,
    Implies,
    LogicModel,
    Not,
    Or,
    SatResult,
    atom_digraph,
    build_model,
    decide_sat,
    entails,
    evaluate,
    parse_sentence,
    reduce_3sat,
    sentence_to_text,
)
from .rational import (
    RationalParams,
    base_zones,
    check_elementary,
    choose_parameters,
    realize_rational,
    size_bound_rational,
)
from .realalpha import (
    RealAlphaParams,
    SizeFunction,
    build_h,
    canonical_size_function,
    choose_gamma,
    realize_real,
    round_to_zonemap,
)
from .zonemap import SetFamily, ZoneMap, from_set_family

__all__ = [
    "AppropriatePair",
    "Digraph",
    "classify_edges",
    "find_one_way_cycle",
    "to_appropriate_pair",
    "ZoneMap",
    "SetFamily",
    "from_set_family",
    "RationalParams",
    "base_zones",
    "check_elementary",
    "choose_parameters",
    "realize_rational",
    "size_bound_rational",
    "RealAlphaParams",
    "SizeFunction",
    "canonical_size_function",
    "choose_gamma",
    "build_h",
    "round_to_zonemap",
    "realize_real",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "LogicModel",
    "SatResult",
    "parse_sentence",
    "sentence_to_text",
    "evaluate",
    "atom_digraph",
    "build_model",
    "decide_sat",
    "entails",
    "reduce_3sat",
    "PropDigraphError",
    "OneWayCycleError",
    "InsufficientZoneError",
    "ResourceLimitError",
    "SentenceSyntaxError",
]

__version__ = "0.1.0"
