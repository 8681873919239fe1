"""Exact r-Stirling numbers and higher-order Bernoulli polynomials at integers."""

from .bernoulli import (
    EvalSpec,
    Family,
    InternalMismatch,
    NonIntegerArgument,
    OddArgument,
    PoleAtSampledPoint,
    binom_rat,
    classical_B_at_int,
    classical_b_at_int,
    eval_prop1,
    eval_prop2,
    evaluate,
    euler_at_even,
    expansion_high_order,
    falling,
    genocchi,
    melzak_eval,
    oracle_eval,
    remark2_B,
    rising,
    special_neg_order,
)
from .identities import Grid, IdentityId, IdentityReport, run_all, run_identity
from .rstirling import (
    StirlingKind,
    StirlingTable,
    rstir,
    rstir_enum_oracle,
    rstir_gf_oracle,
)
from .series import Series

__version__ = "0.1.0"
