"""sdlab: numerical semigroups, Dedekind-type sums, torus-knot Alexander
polynomials, and an exact verification suite for the identities tying them
together."""

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    IndexOutOfRange,
    InexactDivision,
    NotAMember,
    SdlabError,
    TooLarge,
)
from .polyring import (
    BiLaurent,
    LaurentPoly,
    ONE,
    ZERO,
    bi_monomial,
    constant,
    from_q,
    from_t,
    geom_sum,
    monomial,
    rational_eq,
    root_class_sum,
    roots_of_unity,
)
from .semigroup import (
    AperySet,
    NumericalSemigroup,
    alexander_closed_form,
    semigroup_from_generators,
    torus_gaps_mordell,
    torus_semigroup,
)
from .dedekind import (
    ZolotarevPerm,
    apostol_bernoulli,
    carlitz_floor_sum,
    carlitz_poly,
    carlitz_sawtooth_poly,
    dedekind_sum,
    dj_poly,
    mirimanoff,
    mirimanoff_vs_apostol_check,
    rt_poly,
    sawtooth,
    voronoi_sum,
    zolotarev,
)
from .identities import (
    IdentityReport,
    SuiteRanges,
    check_cor510,
    check_eq1,
    check_eq6,
    check_gap_values,
    check_prop1,
    check_prop1_ab,
    check_prop2,
    check_prop3,
    check_prop4,
    check_prop5,
    check_prop6,
    check_prop7,
    check_sawtooth_poly,
    reports_to_csv,
    reports_to_json,
    run_suite,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "BiLaurent",
    "EmptyGenerators",
    "GcdNotOne",
    "IdentityReport",
    "IndexOutOfRange",
    "InexactDivision",
    "LaurentPoly",
    "NotAMember",
    "NumericalSemigroup",
    "ONE",
    "SdlabError",
    "SuiteRanges",
    "TooLarge",
    "ZERO",
    "ZolotarevPerm",
    "alexander_closed_form",
    "apostol_bernoulli",
    "bi_monomial",
    "carlitz_floor_sum",
    "carlitz_poly",
    "carlitz_sawtooth_poly",
    "check_cor510",
    "check_eq1",
    "check_eq6",
    "check_gap_values",
    "check_prop1",
    "check_prop1_ab",
    "check_prop2",
    "check_prop3",
    "check_prop4",
    "check_prop5",
    "check_prop6",
    "check_prop7",
    "check_sawtooth_poly",
    "constant",
    "dedekind_sum",
    "dj_poly",
    "from_q",
    "from_t",
    "geom_sum",
    "mirimanoff",
    "mirimanoff_vs_apostol_check",
    "monomial",
    "rational_eq",
    "reports_to_csv",
    "reports_to_json",
    "root_class_sum",
    "roots_of_unity",
    "rt_poly",
    "run_suite",
    "sawtooth",
    "semigroup_from_generators",
    "summarize",
    "torus_gaps_mordell",
    "torus_semigroup",
    "voronoi_sum",
    "zolotarev",
]
