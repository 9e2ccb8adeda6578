"""Groupoid identities as term equations, and an exhaustive evaluator.

Terms are written with juxtaposition for the product, left-associated, so
``(ab)c`` and ``abc`` are the same term. A parsed term is either a variable
name or a ``(left, right)`` pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cache
from typing import Union

import numpy as np

from .magma import Magma

Term = Union[str, tuple]

VARIABLES = "abcd"


class IdentityId(enum.Enum):
    LEFT_INVERTIVE = "left-invertive"
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    MEDIAL = "medial"
    PARAMEDIAL = "paramedial"
    RIGHT_COMMUTATIVE = "right-commutative"
    SELF_DUAL = "self-dual"
    LEFT_DISTRIBUTIVE = "left-distributive"
    RIGHT_DISTRIBUTIVE = "right-distributive"
    AG_STAR_STAR = "ag-star-star"
    FLEXIBLE = "flexible"
    LAD = "lad"
    RAD = "rad"
    LEFT_NUCLEAR_SQUARE = "left-nuclear-square"

    @property
    def kebab(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> IdentityId:
        key = name.strip().lower().replace("_", "-")
        for ident in cls:
            if ident.value == key:
                return ident
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(i.value for i in cls)}")


PropertySet = frozenset  # frozenset[IdentityId]


def parse_term(text: str) -> Term:
    pos = 0
    src = text.replace(" ", "").replace("·", "").replace("*", "")

    def factor():
        nonlocal pos
        if pos >= len(src):
            raise ValueError(f"unexpected end of term {text!r}")
        ch = src[pos]
        if ch == "(":
            pos += 1
            t = product()
            if pos >= len(src) or src[pos] != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return t
        if ch in VARIABLES:
            pos += 1
            return ch
        raise ValueError(f"unexpected {ch!r} in term {text!r}")

    def product():
        t = factor()
        while pos < len(src) and src[pos] != ")":
            t = (t, factor())
        return t

    term = product()
    if pos != len(src):
        raise ValueError(f"trailing input in term {text!r}")
    return term


def term_variables(t: Term) -> set[str]:
    if isinstance(t, str):
        return {t}
    return term_variables(t[0]) | term_variables(t[1])


@dataclass(frozen=True)
class TermEquation:
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> TermEquation:
        left, right = text.split("=")
        lhs, rhs = parse_term(left), parse_term(right)
        return cls(lhs, rhs, tuple(sorted(term_variables(lhs) | term_variables(rhs))))

    def __str__(self) -> str:
        return f"{format_term(self.lhs)} = {format_term(self.rhs)}"


def format_term(t: Term) -> str:
    """Juxtaposition form with parentheses only around compound right factors."""
    if isinstance(t, str):
        return t
    right = format_term(t[1])
    if not isinstance(t[1], str):
        right = f"({right})"
    return format_term(t[0]) + right


_CATALOG_SOURCE = {
    IdentityId.LEFT_INVERTIVE: "(ab)c = (cb)a",
    IdentityId.ASSOCIATIVE: "(ab)c = a(bc)",
    IdentityId.COMMUTATIVE: "ab = ba",
    IdentityId.MEDIAL: "(ab)(cd) = (ac)(bd)",
    IdentityId.PARAMEDIAL: "(ab)(cd) = (db)(ca)",
    IdentityId.RIGHT_COMMUTATIVE: "a(bc) = a(cb)",
    IdentityId.SELF_DUAL: "a(bc) = c(ba)",
    IdentityId.LEFT_DISTRIBUTIVE: "a(bc) = (ab)(ac)",
    IdentityId.RIGHT_DISTRIBUTIVE: "(ab)c = (ac)(bc)",
    IdentityId.AG_STAR_STAR: "a(bc) = b(ac)",
    IdentityId.FLEXIBLE: "a(ba) = (ab)a",
    IdentityId.LAD: "a(bc) = (ab)(ca)",
    IdentityId.RAD: "(ab)c = (ca)(bc)",
    # Imported definition: a² lies in the left nucleus.
    IdentityId.LEFT_NUCLEAR_SQUARE: "(aa)(bc) = ((aa)b)c",
}

IMPORTED_DEFINITIONS = frozenset({IdentityId.LEFT_NUCLEAR_SQUARE})


@cache
def catalog() -> dict[IdentityId, TermEquation]:
    return {ident: TermEquation.parse(_CATALOG_SOURCE[ident]) for ident in IdentityId}


def _evaluate(table: np.ndarray, term: Term, grids: dict[str, np.ndarray]) -> np.ndarray:
    if isinstance(term, str):
        return grids[term]
    return table[_evaluate(table, term[0], grids), _evaluate(table, term[1], grids)]


def _sides(m: Magma, eq: TermEquation) -> tuple[np.ndarray, np.ndarray]:
    k = len(eq.variables)
    idx = np.indices((m.order,) * k)
    grids = dict(zip(eq.variables, idx))
    t = m.table.astype(np.intp)
    return _evaluate(t, eq.lhs, grids), _evaluate(t, eq.rhs, grids)


def evaluate(m: Magma, term: Term, assignment: dict[str, int]) -> int:
    if isinstance(term, str):
        return assignment[term]
    return m(evaluate(m, term[0], assignment), evaluate(m, term[1], assignment))


def satisfies_equation(m: Magma, eq: TermEquation) -> bool:
    lhs, rhs = _sides(m, eq)
    return bool(np.array_equal(lhs, rhs))


def satisfies(m: Magma, ident: IdentityId) -> bool:
    return satisfies_equation(m, catalog()[ident])


@dataclass(frozen=True)
class Witness:
    assignment: dict[str, int]
    lhs_value: int
    rhs_value: int

    def __str__(self) -> str:
        vals = " ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"{vals}: {self.lhs_value} != {self.rhs_value}"


def witness_failure(m: Magma, ident: IdentityId) -> Witness | None:
    """Lexicographically first falsifying assignment, or None if the identity holds."""
    eq = catalog()[ident]
    lhs, rhs = _sides(m, eq)
    bad = np.argwhere(lhs != rhs)
    if not len(bad):
        return None
    pos = tuple(bad[0])
    assignment = {v: int(x) for v, x in zip(eq.variables, pos)}
    return Witness(assignment, int(lhs[pos]), int(rhs[pos]))


def classify(m: Magma) -> frozenset[IdentityId]:
    return frozenset(ident for ident in IdentityId if satisfies(m, ident))


def is_ag_groupoid(m: Magma) -> bool:
    return satisfies(m, IdentityId.LEFT_INVERTIVE)


def satisfies_batch(tables: np.ndarray, order: int, ident: IdentityId, chunk: int = 2048) -> np.ndarray:
    """Vectorized ``satisfies`` over a stack of linearized tables of shape (M, n*n)."""
    eq = catalog()[ident]
    tables = np.asarray(tables)
    n = order
    nn = n * n
    k = len(eq.variables)
    idx = np.indices((n,) * k).reshape(k, -1)
    out = np.empty(len(tables), dtype=bool)
    for start in range(0, len(tables), chunk):
        block = tables[start:start + chunk].astype(np.intp)
        flat = block.ravel()
        base = (np.arange(len(block), dtype=np.intp) * nn)[:, None]
        grids = {v: np.broadcast_to(idx[i], (len(block), idx.shape[1])) for i, v in enumerate(eq.variables)}

        def ev(term):
            if isinstance(term, str):
                return grids[term]
            return flat[base + ev(term[0]) * n + ev(term[1])]

        out[start:start + chunk] = (ev(eq.lhs) == ev(eq.rhs)).all(axis=1)
    return out
