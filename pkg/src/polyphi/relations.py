"""The complete relation set over the subgee basis and its GF(2) nullspace.

Top-degree relations are indexed by nonempty subgees I: the sum of all
monomials for subgees disjoint from I vanishes.  Any functional killing
every relation spans a one-dimensional nullspace, which pins down the
duality functional uniquely; solving for it gives an oracle that is
independent of the combinatorial formula and can certify it pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import (
    GeeParams,
    IndexSet,
    block_counts,
    compositions,
    is_subgee_profile,
)
from .duality import pairing_set
from .errors import (
    InvalidRelationIndexError,
    NoRelationsError,
    SizeLimitError,
)
from .lengths import enumerate_subgees

__all__ = [
    "RelationMatrix",
    "DualityReport",
    "subgee_count",
    "relation_row",
    "build_matrix",
    "nullspace_functional",
    "annihilation_failures",
    "cross_validate",
]

# Keep Gaussian elimination and matrix memory at desk scale by default.
DEFAULT_MAX_BASIS = 20000


@dataclass(frozen=True)
class RelationMatrix:
    """Dense GF(2) relation matrix with one bitmask per row.

    Columns are all subgees in (size, lex) order; rows are the nonempty
    subgees in the same order.  Bit j of bits[i] is 1 iff columns[j] is
    disjoint from rows[i].
    """

    columns: tuple[IndexSet, ...]
    rows: tuple[IndexSet, ...]
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != len(self.rows):
            raise ValueError("one bitmask per row required")
        if any(b < 0 or b.bit_length() > len(self.columns) for b in self.bits):
            raise ValueError("row bits exceed the column count")

    def entry(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1


@dataclass
class DualityReport:
    """Outcome of cross-validating the formula against the nullspace oracle."""

    gee: GeeParams
    basis_size: int
    rank: int
    nullspace_dim: int
    oracle: dict[IndexSet, int] | None
    formula: dict[IndexSet, int]
    agree: bool


def subgee_count(gee: GeeParams) -> int:
    """Exact number of subgees, summed profile by profile."""
    total = 0
    for r in range(gee.k + 1):
        for profile in compositions(r, gee.k):
            if not is_subgee_profile(profile):
                continue
            prod = 1
            for ai, ci in zip(gee.a, profile):
                prod *= comb(ai, ci)
            total += prod
    return total


def _require_nonempty_subgee(gee: GeeParams, subset: IndexSet) -> None:
    if not subset:
        raise InvalidRelationIndexError("relations are indexed by nonempty subgees")
    if max(subset) > gee.span or not is_subgee_profile(block_counts(subset, gee)):
        raise InvalidRelationIndexError(f"{subset} is not a subgee of gee {gee.a}")


def relation_row(gee: GeeParams, index: IndexSet) -> tuple[IndexSet, ...]:
    """The subgees appearing in the relation for `index`: those disjoint from it."""
    _require_nonempty_subgee(gee, index)
    return tuple(j for j in enumerate_subgees(gee) if j.isdisjoint(index))


def build_matrix(gee: GeeParams, *, max_basis: int = DEFAULT_MAX_BASIS) -> RelationMatrix:
    """Assemble the full relation matrix for a nonempty gee.

    Raises NoRelationsError for k = 0 (one basis element, no relations) and
    SizeLimitError when the subgee count exceeds max_basis.
    """
    if gee.k == 0:
        raise NoRelationsError("the empty gee has a single basis element and no relations")
    count = subgee_count(gee)
    if count > max_basis:
        raise SizeLimitError(f"basis size {count} exceeds max_basis={max_basis}")
    columns = tuple(enumerate_subgees(gee))
    masks = [c.mask for c in columns]
    rows = columns[1:]
    bits = []
    for i in rows:
        imask = i.mask
        row = 0
        for j, jmask in enumerate(masks):
            if not imask & jmask:
                row |= 1 << j
        bits.append(row)
    return RelationMatrix(columns, rows, tuple(bits))


def nullspace_functional(
    matrix: RelationMatrix,
) -> tuple[int, dict[IndexSet, int] | None]:
    """Nullspace dimension of the relation system, and its solution if unique.

    Unknowns are the functional's values on the columns; each row demands
    that the XOR of the values at its set bits is 0.  Returns (dimension,
    values) with values present exactly when the dimension is 1, in which
    case it is the unique nonzero solution.
    """
    ncols = len(matrix.columns)
    work = list(matrix.bits)
    pivot_cols: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                sel = r
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        pivot_cols.append(col)
        rank += 1
    dim = ncols - rank
    if dim != 1:
        return dim, None
    pivot_set = set(pivot_cols)
    free_col = next(c for c in range(ncols) if c not in pivot_set)
    values = [0] * ncols
    values[free_col] = 1
    for r, col in enumerate(pivot_cols):
        values[col] = (work[r] >> free_col) & 1
    return 1, {matrix.columns[j]: values[j] for j in range(ncols)}


def annihilation_failures(
    gee: GeeParams, *, max_basis: int = DEFAULT_MAX_BASIS
) -> list[IndexSet]:
    """Nonempty subgees whose relation the formula fails to annihilate.

    For each nonempty subgee I, XORs the formula's value over all subgees
    disjoint from I; a nonzero XOR lands I in the returned list.  An empty
    list is the full verification that the formula kills every relation.
    """
    if gee.k == 0:
        return []
    count = subgee_count(gee)
    if count > max_basis:
        raise SizeLimitError(f"basis size {count} exceeds max_basis={max_basis}")
    columns = tuple(enumerate_subgees(gee))
    masks = [c.mask for c in columns]
    values = [pairing_set(gee, c) for c in columns]
    failures = []
    for i, imask in zip(columns[1:], masks[1:]):
        acc = 0
        for jmask, v in zip(masks, values):
            if not imask & jmask:
                acc ^= v
        if acc:
            failures.append(i)
    return failures


def cross_validate(gee: GeeParams, *, max_basis: int = DEFAULT_MAX_BASIS) -> DualityReport:
    """Solve the relation system and compare the oracle with the formula.

    The report records basis size, rank, nullspace dimension, both value
    maps, and whether they agree pointwise.  A nullspace dimension other
    than 1 would falsify completeness of the relation set and is reported,
    never raised.
    """
    try:
        matrix = build_matrix(gee, max_basis=max_basis)
    except NoRelationsError:
        matrix = RelationMatrix((IndexSet(),), (), ())
    dim, oracle = nullspace_functional(matrix)
    formula = {c: pairing_set(gee, c) for c in matrix.columns}
    agree = dim == 1 and oracle == formula
    return DualityReport(
        gee=gee,
        basis_size=len(matrix.columns),
        rank=len(matrix.columns) - dim,
        nullspace_dim=dim,
        oracle=oracle,
        formula=formula,
        agree=agree,
    )
