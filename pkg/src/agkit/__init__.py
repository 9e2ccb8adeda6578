"""Finite AG-groupoids: classification, extended-table tests, enumeration."""

from .enumerator import (
    CensusFilter,
    CensusReport,
    PartialTable,
    canonical_form,
    census,
    enumerate_ag,
    is_canonical,
    propagate,
)
from .identities import (
    IdentityId,
    TermEquation,
    Witness,
    catalog,
    classify,
    is_ag_groupoid,
    satisfies,
    witness_failure,
)
from .magma import (
    DimensionMismatch,
    Magma,
    MalformedHeader,
    OrderTooLarge,
    OutOfRangeEntry,
    SizeMismatch,
    apply,
    find_left_identities,
    parse_magma,
    relabel,
    render_magma,
)
from .tabletest import DerivedOp, DerivedTable, TestReport, derived_table, lad_test, rad_test, render_report
from .theorems import (
    Implication,
    ImplicationReport,
    check_implication,
    find_counterexample,
    paper_implications,
)

__version__ = "0.1.0"
