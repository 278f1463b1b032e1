"""Combinatorial primitives: binomial parity, set domination, block profiles.

Everything here is pure and exact.  Index sets are small sets of distinct
positive integers; profiles are tuples of nonnegative block counts.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import OutOfRangeError

__all__ = [
    "IndexSet",
    "GeeParams",
    "Profile",
    "binom_parity",
    "set_leq",
    "block_counts",
    "is_subgee_profile",
    "compositions",
]

# A profile is a tuple of nonnegative per-block counts.
Profile = tuple[int, ...]


class IndexSet:
    """A finite set of distinct positive integers, stored sorted ascending.

    Equality and hashing are by set content.  Instances are immutable by
    convention: nothing in this package mutates them after construction.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int] = ()) -> None:
        elems = tuple(sorted(elements))
        for e in elems:
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise ValueError(f"index sets hold positive integers, got {e!r}")
        for prev, cur in zip(elems, elems[1:]):
            if prev == cur:
                raise ValueError(f"duplicate element {cur} in index set")
        self.elements = elems

    @classmethod
    def from_mask(cls, mask: int) -> IndexSet:
        """Build from a bitmask where bit i-1 encodes membership of i."""
        return cls(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)

    @property
    def mask(self) -> int:
        """Bitmask encoding: bit i-1 set iff i is a member."""
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def isdisjoint(self, other: IndexSet) -> bool:
        return not set(self.elements) & set(other.elements)

    def descending(self) -> tuple[int, ...]:
        """Elements in decreasing order (the customary way to write gees)."""
        return tuple(reversed(self.elements))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"IndexSet({{{', '.join(map(str, self.elements))}}})"


@dataclass(frozen=True)
class GeeParams:
    """Positive increments (a1, ..., ak) whose partial sums form a gee.

    The gee is {a1, a1+a2, ..., a1+...+ak}; k = 0 encodes the empty gee.
    """

    a: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        for x in self.a:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValueError(f"gee increments must be positive integers, got {x!r}")

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def span(self) -> int:
        """Largest element of the gee (sum of all increments)."""
        return sum(self.a)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        sums, acc = [], 0
        for x in self.a:
            acc += x
            sums.append(acc)
        return tuple(sums)

    def gee(self) -> IndexSet:
        return IndexSet(self.prefix_sums)

    @classmethod
    def from_gee(cls, gee: IndexSet) -> GeeParams:
        """Recover the increments from a gee (differences of sorted elements)."""
        increments, prev = [], 0
        for g in gee:
            increments.append(g - prev)
            prev = g
        return cls(tuple(increments))


def binom_parity(m: int, r: int) -> int:
    """binomial(m, r) mod 2, defined for any integer m and r >= 0.

    For m < 0 the reflection binomial(m, r) = +-binomial(r-m-1, r) applies
    and the sign is irrelevant mod 2.  For m >= 0 this is the classical
    digit criterion: odd iff the binary digits of r are a submask of m's.
    """
    if r < 0:
        raise ValueError(f"lower index must be nonnegative, got {r}")
    if m < 0:
        m = r - m - 1
    if m < r:
        return 0
    return 0 if (m - r) & r else 1


def set_leq(small: IndexSet, large: IndexSet) -> bool:
    """Domination order on integer sets.

    S <= T iff T contains distinct representatives t_1, ..., t_|S| with
    s_i <= t_i.  Equivalent greedy certificate: pair the i-th largest
    element of S with the i-th largest element of T.
    """
    s, t = small.elements, large.elements
    if len(s) > len(t):
        return False
    offset = len(t) - len(s)
    return all(s[i] <= t[offset + i] for i in range(len(s)))


def block_counts(subset: IndexSet, gee: GeeParams) -> Profile:
    """Per-block membership counts of `subset` w.r.t. the gee's partial sums.

    Block i is the half-open interval (p_{i-1}, p_i] between consecutive
    partial sums.  Raises OutOfRangeError if an element exceeds the span.
    """
    prefix = gee.prefix_sums
    counts = [0] * gee.k
    for j in subset:
        if j > gee.span:
            raise OutOfRangeError(f"element {j} exceeds the gee span {gee.span}")
        counts[bisect_left(prefix, j)] += 1
    return tuple(counts)


def is_subgee_profile(profile: Iterable[int]) -> bool:
    """True iff every suffix of length i sums to at most i.

    These are exactly the block profiles realized by subgees.
    """
    acc = 0
    for i, t in enumerate(reversed(tuple(profile)), start=1):
        acc += t
        if acc > i:
            return False
    return True


def compositions(total: int, k: int) -> Iterator[Profile]:
    """All k-tuples of nonnegative integers summing to `total`, lexicographic.

    A negative total yields nothing; (total=0, k=0) yields the empty tuple.
    """
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(max(total, 0) + 1):
        for rest in compositions(total - first, k - 1):
            yield (first, *rest)
