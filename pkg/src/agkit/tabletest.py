"""Extended Cayley-table membership tests for LAD and RAD.

For each parameter x two derived tables are built from the source magma and
compared cell by cell; the magma passes when they coincide for every x.

    LAD:  a ⊚ b = (ab)(xa)   against   a ∘ b = a(bx)
    RAD:  a ∘ b = (xa)(bx)   against   a ♦ b = (ab)x
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .magma import Magma


class DerivedOp(enum.Enum):
    LAD_CIRCLED = "(ab)(xa)"
    LAD_CIRC = "a(bx)"
    RAD_CIRC = "(xa)(bx)"
    RAD_DIAMOND = "(ab)x"

    @property
    def symbol(self) -> str:
        return {"LAD_CIRCLED": "⊚", "LAD_CIRC": "∘", "RAD_CIRC": "∘", "RAD_DIAMOND": "♦"}[self.name]


# (right-adjoined operation, downward operation) for each test
PAIRS = {
    "lad": (DerivedOp.LAD_CIRCLED, DerivedOp.LAD_CIRC),
    "rad": (DerivedOp.RAD_CIRC, DerivedOp.RAD_DIAMOND),
}


@dataclass(frozen=True)
class DerivedTable:
    parameter: int
    op: DerivedOp
    table: np.ndarray = field(compare=False)

    def __eq__(self, other):
        if not isinstance(other, DerivedTable):
            return NotImplemented
        return (self.parameter, self.op) == (other.parameter, other.op) and np.array_equal(
            self.table, other.table
        )

    __hash__ = None


@dataclass(frozen=True)
class BlockResult:
    x: int
    tables: tuple[DerivedTable, DerivedTable]
    agree: bool


@dataclass(frozen=True)
class TestReport:
    __test__ = False  # not a pytest class

    kind: str
    magma: Magma
    verdict: bool
    per_x: tuple[BlockResult, ...]
    first_disagreement: tuple[int, int, int] | None


def derived_table(m: Magma, x: int, op: DerivedOp) -> DerivedTable:
    if not 0 <= x < m.order:
        raise ValueError(f"parameter {x} outside 0..{m.order - 1}")
    t = m.table.astype(np.intp)
    a, b = np.indices(t.shape)
    if op is DerivedOp.LAD_CIRCLED:
        out = t[t[a, b], t[x, a]]
    elif op is DerivedOp.LAD_CIRC:
        out = t[a, t[b, x]]
    elif op is DerivedOp.RAD_CIRC:
        out = t[t[x, a], t[b, x]]
    else:
        out = t[t[a, b], x]
    out = out.astype(np.uint8)
    out.flags.writeable = False
    return DerivedTable(x, op, out)


def _run(m: Magma, kind: str) -> TestReport:
    right_op, down_op = PAIRS[kind]
    blocks = []
    first = None
    for x in range(m.order):
        right = derived_table(m, x, right_op)
        down = derived_table(m, x, down_op)
        diff = np.argwhere(right.table != down.table)
        if len(diff) and first is None:
            a, b = diff[0]
            first = (x, int(a), int(b))
        blocks.append(BlockResult(x, (right, down), not len(diff)))
    return TestReport(kind, m, first is None, tuple(blocks), first)


def lad_test(m: Magma) -> TestReport:
    """Check (ab)(xa) = a(bx) block by block for every x."""
    return _run(m, "lad")


def rad_test(m: Magma) -> TestReport:
    """Check (xa)(bx) = (ab)x block by block for every x."""
    return _run(m, "rad")


def _cells(row, marks) -> str:
    return "".join(f"{'*' if bad else ' '}{v}" for v, bad in zip(row, marks))


def render_report(r: TestReport) -> str:
    """Plain-text extended table.

    The source table sits top-left. Blocks of the first operation are
    adjoined to its right, one per x; blocks of the second operation are
    stacked underneath, one per x. A ``*`` before a cell marks a
    disagreement between the two operations, in both blocks.
    """
    n = r.magma.order
    right_op, down_op = PAIRS[r.kind]
    label_w = len(f"x={n - 1}")
    width = max(2 * n, label_w + 1)
    mismatch = {blk.x: blk.tables[0].table != blk.tables[1].table for blk in r.per_x}
    clean = [False] * n

    def line(label: str, blocks: list[str]) -> str:
        return (label.rjust(label_w) + "".join(" |" + b.ljust(width) for b in blocks)).rstrip()

    def rule(k: int) -> str:
        return "-" * label_w + ("-+" + "-" * width) * k

    lines = [
        f"{r.kind.upper()} test: right blocks a{right_op.symbol}b = {right_op.value}, "
        f"lower blocks a{down_op.symbol}b = {down_op.value}"
    ]
    lines.append(line("·", [_cells(range(n), clean)] + [f" x={blk.x}" for blk in r.per_x]))
    lines.append(rule(n + 1))
    for a in range(n):
        blocks = [_cells(r.magma.table[a], clean)]
        blocks += [_cells(blk.tables[0].table[a], mismatch[blk.x][a]) for blk in r.per_x]
        lines.append(line(str(a), blocks))
    for blk in r.per_x:
        lines.append(rule(1))
        for a in range(n):
            label = f"x={blk.x}" if a == 0 else ""
            lines.append(line(label, [_cells(blk.tables[1].table[a], mismatch[blk.x][a])]))
    lines.append(rule(1))
    if r.verdict:
        lines.append(f"verdict: {r.kind.upper()} (all {n} block pairs coincide)")
    else:
        x, a, b = r.first_disagreement
        lines.append(f"verdict: not {r.kind.upper()} (first disagreement at x={x}, a={a}, b={b})")
    return "\n".join(lines) + "\n"
