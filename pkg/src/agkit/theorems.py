"""Exhaustive checks of implications between identities over small AG-groupoids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .enumerator import ag_representatives, check_order, iter_representative_blocks
from .identities import IMPORTED_DEFINITIONS, IdentityId, satisfies_batch
from .magma import Magma

I = IdentityId
DESK_MAX_ORDER = 5


@dataclass(frozen=True)
class Implication:
    name: str
    antecedent: frozenset
    consequent: frozenset
    source: str

    def __post_init__(self):
        if not self.antecedent or not self.consequent:
            raise ValueError("antecedent and consequent must be non-empty")
        object.__setattr__(self, "antecedent", frozenset(self.antecedent) | {I.LEFT_INVERTIVE})
        object.__setattr__(self, "consequent", frozenset(self.consequent))

    @property
    def caveat(self) -> Optional[str]:
        imported = (self.antecedent | self.consequent) & IMPORTED_DEFINITIONS
        if not imported:
            return None
        names = ", ".join(sorted(i.kebab for i in imported))
        return f"uses an imported definition for {names}"


@dataclass(frozen=True)
class ImplicationReport:
    implication: Implication
    orders_checked: range
    classes_checked: int
    antecedent_matches: int
    counterexample: Optional[Magma]

    @property
    def holds(self) -> bool:
        return self.counterexample is None


_LAD_SOURCE = "LAD characterization theorem"


def paper_implications() -> list[Implication]:
    return [
        Implication("LAD=>RC", {I.LAD}, {I.RIGHT_COMMUTATIVE}, _LAD_SOURCE + " (i)"),
        Implication("LAD=>self-dual", {I.LAD}, {I.SELF_DUAL}, _LAD_SOURCE + " (ii)"),
        Implication("LAD=>AG**", {I.LAD}, {I.AG_STAR_STAR}, _LAD_SOURCE + " (iii)"),
        Implication("LAD=>LD", {I.LAD}, {I.LEFT_DISTRIBUTIVE}, _LAD_SOURCE + " (iv)"),
        Implication("LAD=>paramedial", {I.LAD}, {I.PARAMEDIAL}, "LAD corollary"),
        Implication(
            "LAD=>left-nuclear-square", {I.LAD}, {I.LEFT_NUCLEAR_SQUARE}, "LAD corollary"
        ),
        Implication("RAD=>RD", {I.RAD}, {I.RIGHT_DISTRIBUTIVE}, "RAD theorem"),
        Implication("AD=>semigroup", {I.LAD, I.RAD}, {I.ASSOCIATIVE}, "AD theorem"),
    ]


def _blocks(order: int, allow_long_run: bool, jobs: int):
    if order <= DESK_MAX_ORDER:
        yield ag_representatives(order)
    else:
        yield from iter_representative_blocks(order, jobs, allow_long_run)


def _mask(tables: np.ndarray, order: int, idents: Iterable[IdentityId], want: bool) -> np.ndarray:
    mask = np.ones(len(tables), dtype=bool)
    for ident in sorted(set(idents) - {I.LEFT_INVERTIVE}, key=lambda i: i.value):
        ok = satisfies_batch(tables, order, ident)
        mask &= ok if want else ~ok
    return mask


def _check_max(max_order: int, allow_long_run: bool) -> None:
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    check_order(max_order, allow_long_run)


def check_implication(
    impl: Implication, max_order: int, allow_long_run: bool = False, jobs: int = 1
) -> ImplicationReport:
    """Search every AG-groupoid class up to ``max_order`` for a counterexample."""
    _check_max(max_order, allow_long_run)
    checked = matched = 0
    for order in range(1, max_order + 1):
        for tables in _blocks(order, allow_long_run, jobs):
            checked += len(tables)
            ante = _mask(tables, order, impl.antecedent, True)
            matched += int(ante.sum())
            cons = _mask(tables[ante], order, impl.consequent, True)
            bad = np.flatnonzero(~cons)
            if len(bad):
                row = tables[ante][bad[0]]
                return ImplicationReport(
                    impl, range(1, order + 1), checked, matched, Magma.from_linear(row.tolist())
                )
    return ImplicationReport(impl, range(1, max_order + 1), checked, matched, None)


def find_counterexample(
    required: Iterable[IdentityId],
    forbidden: Iterable[IdentityId],
    max_order: int,
    allow_long_run: bool = False,
    jobs: int = 1,
) -> Optional[Magma]:
    """First AG-groupoid class (by order, then canonical table) with all of
    ``required`` and none of ``forbidden``."""
    required, forbidden = set(required), set(forbidden)
    if required & forbidden:
        raise ValueError("required and forbidden identities overlap")
    if I.LEFT_INVERTIVE in forbidden:
        raise ValueError("every enumerated class is an AG-groupoid; left-invertive cannot be forbidden")
    _check_max(max_order, allow_long_run)
    for order in range(1, max_order + 1):
        for tables in _blocks(order, allow_long_run, jobs):
            mask = _mask(tables, order, required, True) & _mask(tables, order, forbidden, False)
            hits = np.flatnonzero(mask)
            if len(hits):
                return Magma.from_linear(tables[hits[0]].tolist())
    return None
