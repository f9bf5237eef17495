"""Quantum-invariant periodicity criteria for oriented links.

Computes quantum SL(N) link invariants two independent ways (HOMFLY
skein recursion and a vertex-weight state sum on braid closures) and
applies congruence criteria that either certify "not p-periodic" or
emit candidate linking numbers.
"""

__version__ = "0.1.0"

from .diagram import (BraidWord, PlanarDiagram, axis_linking,
                      closure_components, linking_tuple, parse_braid,
                      parse_pd, pd_from_braid, power, writhe)
from .laurent import (BiLaurent, IdealVariant, InexactDivisionError,
                      LaurentPoly, ResidueClassForm, congruent, exact_divide,
                      parity_split, quantum_integer, reduce)
from .skein import alexander, homfly, jones, p0_part, quantum_sln
from .statemodel import (NState, bracket, enumerate_states,
                         invariant_statesum, is_proper, loops, norm,
                         state_weight)
from .criteria import (CandidateSet, combine, expected_sign, knot_candidates,
                       link_candidates, lower_bound, parity_profile,
                       possible_linking, rhs_sum)
from .classical import (murasugi_candidates, traczyk_jones_check,
                        traczyk_p0_candidates)

__all__ = [
    "__version__",
    "BraidWord", "PlanarDiagram", "axis_linking", "closure_components",
    "linking_tuple", "parse_braid", "parse_pd", "pd_from_braid", "power",
    "writhe",
    "BiLaurent", "IdealVariant", "InexactDivisionError", "LaurentPoly",
    "ResidueClassForm", "congruent", "exact_divide", "parity_split",
    "quantum_integer", "reduce",
    "alexander", "homfly", "jones", "p0_part", "quantum_sln",
    "NState", "bracket", "enumerate_states", "invariant_statesum",
    "is_proper", "loops", "norm", "state_weight",
    "CandidateSet", "combine", "expected_sign", "knot_candidates",
    "link_candidates", "lower_bound", "parity_profile", "possible_linking",
    "rhs_sum",
    "murasugi_candidates", "traczyk_jones_check", "traczyk_p0_candidates",
]
