"""The mod-2 duality functional on top-degree monomials of a monogenic code.

The value on a monomial depends only on the block profile of its subscript
set: it is the mod-2 count, over admissible complementary profiles, of a
product of binomial parities in the gee increments.  A closed form for
three blocks and an exact disjoint-subgee counting formula provide
independent check paths.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .combinatorics import (
    GeeParams,
    IndexSet,
    Profile,
    binom_parity,
    block_counts,
    compositions,
    is_subgee_profile,
)
from .errors import InfeasibleProfileError

__all__ = [
    "TopMonomial",
    "pairing",
    "pairing_set",
    "pairing_by_profile",
    "closed_form_k3",
    "count_disjoint_subgees",
    "admissible_summands",
]


@dataclass(frozen=True)
class TopMonomial:
    """A top-degree monomial, recorded by its distinct generator subscripts.

    With n sides the top degree is n-3; a monomial with r subscripts
    carries the degree-one base class to the power n-3-r, so r <= n-3 and
    every subscript is at most n-1.
    """

    subscripts: IndexSet
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need n >= 3, got n={self.n}")
        r = len(self.subscripts)
        if r > self.n - 3:
            raise ValueError(f"{r} subscripts exceed the top degree {self.n - 3}")
        if self.subscripts and max(self.subscripts) > self.n - 1:
            raise ValueError(
                f"subscript {max(self.subscripts)} exceeds n-1={self.n - 1}"
            )

    @property
    def r(self) -> int:
        return len(self.subscripts)


@lru_cache(maxsize=None)
def _profile_sum(gee: GeeParams, profile: Profile) -> int:
    """Mod-2 sum over complementary profiles B with |B| = k - |profile| and
    B + profile satisfying the suffix condition, of the product of
    binomial parities binom(a_i + b_i - 2, b_i)."""
    k = gee.k
    r = sum(profile)
    if r > k:
        return 0
    acc = 0
    for b in compositions(k - r, k):
        if not is_subgee_profile(tuple(x + y for x, y in zip(b, profile))):
            continue
        term = 1
        for ai, bi in zip(gee.a, b):
            term &= binom_parity(ai + bi - 2, bi)
        acc ^= term
    return acc


def pairing_set(gee: GeeParams, subscripts: IndexSet) -> int:
    """Duality value of the top monomial with the given subscript set.

    Subscripts beyond the gee span name zero classes, so the value is 0
    without consulting the block profile.
    """
    if subscripts and max(subscripts) > gee.span:
        return 0
    return _profile_sum(gee, block_counts(subscripts, gee))


def pairing(gee: GeeParams, monomial: TopMonomial) -> int:
    """Duality value of a validated top monomial.

    The side count n only constrains the monomial's shape; the value
    itself is determined by the subscripts and the gee.
    """
    return pairing_set(gee, monomial.subscripts)


def pairing_by_profile(gee: GeeParams, profile: Iterable[int]) -> int:
    """Duality value of any monomial whose subscripts have this block profile.

    Entries must fit in their blocks (profile_i <= a_i); otherwise no such
    monomial exists and InfeasibleProfileError is raised.
    """
    t = _validated_profile(gee, profile)
    return _profile_sum(gee, t)


def admissible_summands(gee: GeeParams, profile: Iterable[int]) -> list[tuple[Profile, int]]:
    """The complementary profiles B contributing to the pairing, with terms.

    Returns (B, term) pairs in lexicographic order of B, where term is the
    mod-2 product for that B; the pairing is the XOR of the terms.
    """
    t = _validated_profile(gee, profile)
    k = gee.k
    out: list[tuple[Profile, int]] = []
    if sum(t) > k:
        return out
    for b in compositions(k - sum(t), k):
        if not is_subgee_profile(tuple(x + y for x, y in zip(b, t))):
            continue
        term = 1
        for ai, bi in zip(gee.a, b):
            term &= binom_parity(ai + bi - 2, bi)
        out.append((b, term))
    return out


def _validated_profile(gee: GeeParams, profile: Iterable[int]) -> Profile:
    t = tuple(profile)
    if len(t) != gee.k:
        raise ValueError(f"profile length {len(t)} != k={gee.k}")
    for i, (c, a) in enumerate(zip(t, gee.a), start=1):
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"profile entries must be nonnegative integers, got {c!r}")
        if c > a:
            raise InfeasibleProfileError(f"profile entry {c} exceeds block {i} size {a}")
    return t


def closed_form_k3(gee: GeeParams, profile: Iterable[int]) -> int:
    """Closed-form duality value for a three-block gee.

    Independent of the general sum: evaluates explicit polynomials in the
    increments with exact integer arithmetic, then reduces mod 2.  Profiles
    violating the suffix condition name zero classes and give 0.
    """
    if gee.k != 3:
        raise ValueError(f"closed form requires k=3, got k={gee.k}")
    t = tuple(profile)
    if len(t) != 3 or any(not isinstance(c, int) or c < 0 for c in t):
        raise ValueError(f"need a 3-tuple of nonnegative integers, got {t!r}")
    if not is_subgee_profile(t):
        return 0
    if sum(t) == 3:
        return 1
    a1, a2, a3 = gee.a
    p1, p2, p3 = a1 - 1, a2 - 1, a3 - 1
    table = {
        (0, 2, 0): p1,
        (0, 1, 1): p1,
        (1, 0, 1): p1 + p2,
        (2, 0, 0): p1 + p2 + p3,
        (1, 1, 0): p1 + p2 + p3,
        (0, 0, 1): comb(a1, 2) + p1 * p2,
        (0, 1, 0): comb(a1, 2) + p1 * p2 + p1 * p3,
        (1, 0, 0): comb(a1, 2) + comb(a2, 2) + p1 * p2 + p1 * p3 + p2 * p3,
        (0, 0, 0): comb(a1, 2) * (p1 + p2 + p3) + comb(a2, 2) * p1 + p1 * p2 * p3,
    }
    return table[t] & 1


def count_disjoint_subgees(
    gee: GeeParams, occupied: Iterable[int], profile: Iterable[int]
) -> int:
    """Exact number of subgees with the given profile avoiding a fixed subgee.

    `occupied` is the block profile of the fixed subgee; each block then has
    a_i - occupied_i free slots, and the count is the product of binomials
    comb(a_i - occupied_i, profile_i) as an exact integer.
    """
    m = tuple(occupied)
    c = tuple(profile)
    if len(m) != gee.k or len(c) != gee.k:
        raise ValueError(f"profiles must have length k={gee.k}")
    for i, (mi, ai) in enumerate(zip(m, gee.a), start=1):
        if not isinstance(mi, int) or mi < 0:
            raise ValueError(f"profile entries must be nonnegative integers, got {mi!r}")
        if mi > ai:
            raise InfeasibleProfileError(f"occupied entry {mi} exceeds block {i} size {ai}")
    if any(not isinstance(ci, int) or ci < 0 for ci in c):
        raise ValueError("profile entries must be nonnegative integers")
    result = 1
    for ai, mi, ci in zip(gee.a, m, c):
        result *= comb(ai - mi, ci)
    return result
