"""Enumeration of AG-groupoids up to isomorphism by orderly generation."""

from __future__ import annotations

import itertools
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from . import _kernel
from .identities import IdentityId, satisfies_batch
from .magma import MAX_ORDER, Magma, OrderTooLarge

LONG_RUN_ORDER = 6

LI = IdentityId.LEFT_INVERTIVE


@dataclass(frozen=True)
class CensusFilter:
    name: str
    required: frozenset = frozenset({LI})
    forbidden: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "required", frozenset(self.required) | {LI})
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        if self.required & self.forbidden:
            both = ", ".join(sorted(i.kebab for i in self.required & self.forbidden))
            raise ValueError(f"identities both required and forbidden: {both}")

    def matches(self, tables: np.ndarray, order: int) -> np.ndarray:
        """Boolean mask over a stack of linearized AG-groupoid tables."""
        mask = np.ones(len(tables), dtype=bool)
        for ident in sorted(self.required - {LI}, key=lambda i: i.value):
            mask &= satisfies_batch(tables, order, ident)
        for ident in sorted(self.forbidden, key=lambda i: i.value):
            mask &= ~satisfies_batch(tables, order, ident)
        return mask


ALL_AG = CensusFilter("total")

CENSUS_FILTERS = (
    CensusFilter("rad_na", {IdentityId.RAD}, {IdentityId.ASSOCIATIVE}),
    CensusFilter("lad_na", {IdentityId.LAD}, {IdentityId.ASSOCIATIVE}),
    CensusFilter("ad_na", {IdentityId.LAD, IdentityId.RAD}, {IdentityId.ASSOCIATIVE}),
)

CENSUS_LABELS = {
    "total": "Total (AG-groupoids)",
    "rad_na": "Non associative RAD AG-groupoids",
    "lad_na": "Non associative LAD AG-groupoids",
    "ad_na": "Non associative AD AG-groupoids",
}


@dataclass
class CensusReport:
    order: int
    total_ag: int
    per_filter: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0
    generated_nodes: int = 0

    def counts(self) -> dict[str, int]:
        return {"total": self.total_ag, **self.per_filter}


# -- canonical forms -------------------------------------------------------


def _relabeled_linearizations(m: Magma) -> np.ndarray:
    images, sources = _kernel.permutation_tables(m.order)
    lin = np.asarray(m.linear, dtype=np.int64)
    return np.take_along_axis(images, lin[sources], axis=1)


def canonical_form(m: Magma) -> Magma:
    """Lexicographically least row-major linearization over all relabelings."""
    if m.order == 1:
        return m
    rows = _relabeled_linearizations(m)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    if tuple(best.tolist()) < m.linear:
        return Magma.from_linear(best.tolist())
    return m


def is_canonical(m: Magma) -> bool:
    return canonical_form(m) == m


# -- partial tables --------------------------------------------------------


@dataclass(frozen=True)
class PartialTable:
    """A search node: the first ``fill_index`` cells (row-major) are set."""

    order: int
    cells: tuple[Optional[int], ...]
    fill_index: int

    def __post_init__(self):
        n = self.order
        if len(self.cells) != n * n:
            raise ValueError(f"expected {n * n} cells, got {len(self.cells)}")
        for idx, v in enumerate(self.cells):
            if (v is None) != (idx >= self.fill_index):
                raise ValueError("cells before fill_index must be set, the rest unset")
            if v is not None and not 0 <= v < n:
                raise ValueError(f"cell {idx} holds {v}, outside 0..{n - 1}")

    @classmethod
    def from_prefix(cls, order: int, values: Sequence[int]) -> PartialTable:
        cells = tuple(values) + (None,) * (order * order - len(values))
        return cls(order, cells, len(values))

    @classmethod
    def from_magma(cls, m: Magma) -> PartialTable:
        return cls.from_prefix(m.order, m.linear)

    def get(self, a: int, b: int) -> Optional[int]:
        return self.cells[a * self.order + b]


def propagate(p: PartialTable) -> bool:
    """False iff some left-invertive instance over set cells is violated."""
    n = p.order
    get = p.get
    for a, b, c in itertools.product(range(n), repeat=3):
        ab, cb = get(a, b), get(c, b)
        if ab is None or cb is None:
            continue
        lhs, rhs = get(ab, c), get(cb, a)
        if lhs is not None and rhs is not None and lhs != rhs:
            return False
    return True


# -- search ----------------------------------------------------------------


def check_order(order: int, allow_long_run: bool = False) -> None:
    if not 1 <= order <= MAX_ORDER:
        raise OrderTooLarge(f"order must be in 1..{MAX_ORDER}, got {order}")
    if order >= LONG_RUN_ORDER and not allow_long_run:
        raise OrderTooLarge(
            f"order {order} is a long-running enumeration; pass allow_long_run=True (--allow-long-run)"
        )


def split_depth(order: int) -> int:
    """Number of leading cells fixed per independent subtree."""
    if order <= 3:
        return 0
    return min(order * order, order + order // 2)


def subtree_prefixes(order: int, depth: int) -> np.ndarray:
    images, sources = _kernel.permutation_tables(order)
    rows, _ = _kernel.search(order, np.zeros(0, np.int64), depth, images, sources)
    return rows


def _run_subtree(order: int, prefix: np.ndarray):
    images, sources = _kernel.permutation_tables(order)
    return _kernel.search(order, prefix.astype(np.int64), order * order, images, sources)


def _ordered_map(fn, items: Sequence, jobs: int) -> Iterator:
    """Like ``map`` but runs up to ``jobs`` calls at once; results stay in input order."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        pending = deque()
        it = iter(items)
        for item in itertools.islice(it, 2 * jobs):
            pending.append(pool.submit(fn, item))
        while pending:
            result = pending.popleft().result()
            for item in itertools.islice(it, 1):
                pending.append(pool.submit(fn, item))
            yield result


def iter_representative_blocks(
    order: int, jobs: int = 1, allow_long_run: bool = False, stats: Optional[dict] = None
) -> Iterator[np.ndarray]:
    """Canonical AG-groupoid tables of ``order`` as (count, n*n) int8 blocks.

    Blocks arrive in ascending linearization order whatever ``jobs`` is: the
    tree is cut into subtrees at a fixed depth and their results are
    concatenated in prefix order.
    """
    check_order(order, allow_long_run)
    depth = split_depth(order)
    prefixes = subtree_prefixes(order, depth)
    nodes = 0
    for rows, n_nodes in _ordered_map(lambda pre: _run_subtree(order, pre), list(prefixes), jobs):
        nodes += int(n_nodes)
        if stats is not None:
            stats["generated_nodes"] = nodes
        if len(rows):
            yield rows


@lru_cache(maxsize=None)
def ag_representatives(order: int) -> np.ndarray:
    """All canonical AG-groupoid tables of a desk-scale order, cached."""
    blocks = list(iter_representative_blocks(order))
    n2 = order * order
    out = np.concatenate(blocks) if blocks else np.zeros((0, n2), np.int8)
    out.flags.writeable = False
    return out


def enumerate_ag(
    order: int,
    filter: Optional[CensusFilter] = None,
    sink: Optional[Callable[[Magma], None]] = None,
    jobs: int = 1,
    allow_long_run: bool = False,
    extra_filters: Iterable[CensusFilter] = (),
) -> CensusReport:
    """Enumerate AG-groupoids of ``order`` up to isomorphism.

    ``sink`` receives one canonical representative per class matching
    ``filter``, in ascending linearization order. ``extra_filters`` are only
    counted.
    """
    filt = filter or ALL_AG
    extras = tuple(extra_filters)
    stats = {"generated_nodes": 0}
    start = time.perf_counter()
    total = 0
    counts = {filt.name: 0}
    counts.update({f.name: 0 for f in extras})
    for block in iter_representative_blocks(order, jobs, allow_long_run, stats):
        total += len(block)
        mask = filt.matches(block, order)
        counts[filt.name] += int(mask.sum())
        for f in extras:
            counts[f.name] += int(f.matches(block, order).sum())
        if sink is not None:
            for row in block[mask]:
                sink(Magma.from_linear(row.tolist()))
    return CensusReport(
        order=order,
        total_ag=total,
        per_filter=counts,
        wall_time=time.perf_counter() - start,
        generated_nodes=stats["generated_nodes"],
    )


def census(order: int, jobs: int = 1, allow_long_run: bool = False) -> CensusReport:
    """Census counts (total and the non-associative LAD, RAD, AD rows) for one order, from a single enumeration pass."""
    report = enumerate_ag(
        order, ALL_AG, jobs=jobs, allow_long_run=allow_long_run, extra_filters=CENSUS_FILTERS
    )
    report.per_filter.pop(ALL_AG.name)
    return report
