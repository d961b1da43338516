"""Exact backward continued fractions, the dyadic odometer and Minkowski's ? function."""

__version__ = "0.1.0"

from .arith import Dyadic, Rational, int_floor, pow2_floor_exp
from .expansions import (
    BcfExpansion,
    BinaryWord,
    BlockSequence,
    CfExpansion,
    bcf_eval,
    bcf_expand,
    bcf_to_cf,
    binary_expand,
    blocks_decode,
    blocks_encode,
    cf_eval,
    cf_expand,
    cf_to_bcf,
    shift_h,
)
from .maps import (
    MapId,
    backward_farey_J,
    doubling_B,
    gauss_G,
    hitting_tau,
    hitting_tauB,
    linear_renyi_R2,
    newman_F,
    newman_T,
    odometer_D2,
    orbit,
    renyi_branch,
    renyi_R,
)
from .odometer import BitSequence, odometer_D, odometer_Dtilde, odometric_substitution_O
from .qmark import qmark, qmark_bcf, qmark_denjoy, qmark_inverse, qmark_mediant
from .enumeration import (
    calkin_wilf_oracle,
    enum_dyadic,
    enum_positive,
    enum_unit,
    index_of_unit,
)
