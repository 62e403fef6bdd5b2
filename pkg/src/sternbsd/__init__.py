"""Stern's diatomic sequence and the digit strings it counts.

Exact enumeration and counting of short binary signed-digit (BSD)
representations, fixed-width BSD representations, and hyperbinary
representations of integers, the digit-wise bijection connecting the
first and last of these, truncated generating functions for both
counting sequences, and an exhaustive verifier that checks every
identity over configurable ranges.
"""

from .bijections import hb_to_short_bsd, short_bsd_to_hb
from .representations import (
    HyperbinaryString,
    SignedDigitString,
    count_short_bsd_recurrence,
    enumerate_bsd_fixed,
    enumerate_hyperbinary,
    enumerate_short_bsd,
    format_bsd,
    format_hb,
    is_short,
    negate,
    parse_bsd,
    parse_hb,
    value_bsd,
    value_hb,
)
from .series import SparseSeries, lhs_finite, rhs_finite
from .stern import stern, stern_pair
from .verify import (
    CheckResult,
    Counterexample,
    VerificationReport,
    VerifyConfig,
    check_gf_identity,
    check_monroe,
    check_reznick,
    check_stolarsky_dilcher,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "stern",
    "stern_pair",
    "SignedDigitString",
    "HyperbinaryString",
    "parse_bsd",
    "format_bsd",
    "parse_hb",
    "format_hb",
    "value_bsd",
    "value_hb",
    "is_short",
    "negate",
    "count_short_bsd_recurrence",
    "enumerate_short_bsd",
    "enumerate_bsd_fixed",
    "enumerate_hyperbinary",
    "hb_to_short_bsd",
    "short_bsd_to_hb",
    "SparseSeries",
    "lhs_finite",
    "rhs_finite",
    "Counterexample",
    "CheckResult",
    "VerificationReport",
    "VerifyConfig",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_monroe",
    "check_stolarsky_dilcher",
    "check_gf_identity",
    "check_reznick",
    "run_all",
]
