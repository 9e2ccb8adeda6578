"""Finite magmas stored as Cayley tables over the elements 0..n-1."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 8

Permutation = tuple[int, ...]


class MagmaError(ValueError):
    """Base class for invalid tables and bad relabelings."""


class MalformedHeader(MagmaError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class DimensionMismatch(MagmaError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class OutOfRangeEntry(MagmaError):
    """An entry outside 0..n-1; ``row`` and ``column`` are 1-based table positions."""

    def __init__(self, value: int, order: int, row: int, column: int, line: int | None = None):
        self.value = value
        self.row = row
        self.column = column
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(
            f"{where}row {row}, column {column}: entry {value} not in 0..{order - 1}"
        )


class SizeMismatch(MagmaError):
    pass


class OrderTooLarge(MagmaError):
    pass


class Magma:
    """An immutable order-n magma; ``m(a, b)`` is the product a·b.

    The table is held as a read-only ``uint8`` array. Equality and hashing use
    the row-major linearization, which is also the order canonical forms are
    compared in.
    """

    __slots__ = ("_table", "_linear")

    def __init__(self, table: Iterable[Iterable[int]] | np.ndarray):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DimensionMismatch(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if n > MAX_ORDER:
            raise OrderTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        bad = np.argwhere((arr < 0) | (arr >= n))
        if len(bad):
            r, c = bad[0]
            raise OutOfRangeEntry(int(arr[r, c]), n, int(r) + 1, int(c) + 1)
        t = arr.astype(np.uint8)
        t.flags.writeable = False
        self._table = t
        self._linear = tuple(int(v) for v in t.ravel())

    @classmethod
    def from_linear(cls, values: Sequence[int]) -> Magma:
        n = int(round(len(values) ** 0.5))
        if n * n != len(values):
            raise DimensionMismatch(f"{len(values)} entries do not form a square table")
        return cls(np.asarray(values, dtype=np.int64).reshape(n, n))

    @classmethod
    def constant(cls, order: int, value: int = 0) -> Magma:
        return cls(np.full((order, order), value))

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def linear(self) -> tuple[int, ...]:
        """Row-major entries; entry (a, b) sits at index a*n + b."""
        return self._linear

    def __call__(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def rows(self) -> list[list[int]]:
        return self._table.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Magma):
            return NotImplemented
        return self._linear == other._linear

    def __lt__(self, other: Magma) -> bool:
        return (self.order, self._linear) < (other.order, other._linear)

    def __hash__(self) -> int:
        return hash(self._linear)

    def __repr__(self) -> str:
        return f"Magma({self.rows()})"


def apply(m: Magma, a: int, b: int) -> int:
    return m(a, b)


def identity_permutation(n: int) -> Permutation:
    return tuple(range(n))


def inverse(p: Sequence[int]) -> Permutation:
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """The permutation x -> p(q(x))."""
    return tuple(p[v] for v in q)


def check_permutation(p: Sequence[int], n: int) -> Permutation:
    p = tuple(int(v) for v in p)
    if len(p) != n:
        raise SizeMismatch(f"permutation of size {len(p)} applied to a magma of order {n}")
    if sorted(p) != list(range(n)):
        raise SizeMismatch(f"{p} is not a permutation of 0..{n - 1}")
    return p


def relabel(m: Magma, p: Sequence[int]) -> Magma:
    """Isomorphic copy r of m with r(p[a], p[b]) = p[m(a, b)]."""
    p = np.array(check_permutation(p, m.order))
    out = np.empty_like(m.table, dtype=np.int64)
    out[np.ix_(p, p)] = p[m.table]
    return Magma(out)


def find_left_identities(m: Magma) -> list[int]:
    """Elements e with e·a = a for every a, ascending."""
    row = np.arange(m.order)
    return [e for e in range(m.order) if np.array_equal(m.table[e], row)]


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def parse_magma(text: str) -> Magma:
    """Parse the Cayley-table text format.

    The first non-comment line holds n; each of the next n lines holds n
    space-separated entries, entry j of line i being i·j. Lines starting with
    ``#`` and blank lines are ignored.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedHeader("missing order line")
    number, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise MalformedHeader(f"expected a positive integer order, got {header!r}", number) from None
    if n < 1:
        raise MalformedHeader(f"expected a positive integer order, got {header!r}", number)
    if n > MAX_ORDER:
        raise OrderTooLarge(f"line {number}: order {n} exceeds the supported maximum {MAX_ORDER}")
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else number)
        raise DimensionMismatch(f"expected {n} table rows, found {len(body)}", where)
    rows = []
    for r, (number, line) in enumerate(body, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise DimensionMismatch(f"row {r} has {len(tokens)} entries, expected {n}", number)
        row = []
        for c, tok in enumerate(tokens, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise OutOfRangeEntry(tok, n, r, c, number) from None
            if not 0 <= v < n:
                raise OutOfRangeEntry(v, n, r, c, number)
            row.append(v)
        rows.append(row)
    return Magma(rows)


def render_magma(m: Magma, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(m.order))
    out.extend(" ".join(str(v) for v in row) for row in m.rows())
    return "\n".join(out) + "\n"


def read_magma(path) -> Magma:
    with open(path, encoding="utf-8") as f:
        return parse_magma(f.read())
