"""Search operators from discontinuity: presented sequences and reals,
counterexample pairs for classic existence theorems, query-traced
functionals with fan and extensionality bounds, and a normal form
engine for marked formulas.

The guiding fact: an exact least-zero search over infinite sequences is
equivalent to having any one of several innocuous-looking functionals
(binary expansion, tree paths, intermediate-value roots, rational
recognition), and the reduction in each direction is effective.  The
forward constructions live next to the extractors that invert them,
and every extracted search carries an explicit bound that the test
suite checks rather than trusts.
"""

from __future__ import annotations

from .coding import (
    cantor_pair,
    cantor_unpair,
    dyadic_index,
    dyadic_value,
    max_coded_length,
    rational_code,
    rational_decode,
    string_code,
    string_decode,
)
from .corpus import corpus_stats, flag_corpus
from .errors import (
    BoundViolation,
    BudgetExceeded,
    FormulaScopeError,
    MalformedWitness,
    MeasureZero,
    MulabError,
    NotInCbar,
    NotInternal,
    NotNormalizable,
    OutOfRange,
    ParseError,
    UnsupportedFamily,
    UnsupportedPresentation,
)
from .extractors import (
    BinaryExpansion,
    Irrational,
    PiecewiseLinear,
    RationalWitness,
    RepresentedContinuousFunction,
    RouteReport,
    TwoBump,
    flag_epsilon,
    ivt_base,
    ivt_counterexample,
    make_ubin_xi,
    make_uivt_xi,
    make_uwwkl_xi,
    mu_from_ubin,
    mu_from_udq,
    mu_from_uivt,
    mu_from_uwwkl,
    trees_from_flag,
    ubin_extraction,
    ubin_from_mu,
    udq_extraction,
    udq_from_mu,
    uivt_extraction,
    uivt_from_mu,
    uwwkl_extraction,
    uwwkl_from_mu,
    weierstrass_counterexample,
)
from .formulas import (
    alpha_equal,
    extraction_obligation,
    format_formula,
    is_internal,
    NormalForm,
    parse_formula,
    relativize_st,
    replay,
    RuleStep,
    RuleTrace,
    to_normal_form,
)
from .functionals import (
    TracedFunctional,
    TracedRealView,
    TracedSeqView,
    catalog_functional,
    e2_from_mu,
    mu_from_e2,
    omega_fan,
    theta_special,
    xi_by_tracing,
)
from .reals import (
    FastCauchyReal,
    approx,
    counterexample_pair,
    dq_real,
    dyadic_flag_real,
    from_rational,
    presented_scale,
    presented_sum,
    real_eq,
    real_lt,
    real_sign,
    to_decimal,
)
from .sequences import (
    DEFAULT_BUDGET,
    Found,
    NoneBelowBudget,
    OpaqueSequence,
    PresentedSequence,
    first_nonzero,
    format_sequence,
    mu_budgeted,
    mu_exact,
    parse_sequence,
    pointwise_combine,
    shift,
)
from .trees import (
    FlagTree,
    FullTree,
    PathTree,
    PresentedTree,
    Truncation,
    format_tree,
    greedy_path,
    measure_lower_bound,
    measure_positive,
    parse_tree,
    scf_check,
)

__version__ = "0.1.0"
