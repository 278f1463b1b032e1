"""Exact classification of length vectors: genericity, short subsets, genetic codes.

All comparisons of subset sums are decided in exact integer arithmetic after
clearing denominators, so near-degenerate chambers are never misclassified.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm

from .combinatorics import (
    GeeParams,
    IndexSet,
    compositions,
    is_subgee_profile,
)
from .errors import (
    EmptySpaceError,
    InvalidLengthError,
    NotGenericError,
    NotMonogenicError,
    OutOfRangeError,
    RealizationNotFoundError,
    SizeLimitError,
    TooFewSidesError,
)

__all__ = [
    "LengthVector",
    "GeneticCode",
    "normalize",
    "is_short",
    "is_generic",
    "genetic_code",
    "monogenic_gee",
    "enumerate_subgees",
    "realize_gee",
]

# Subset enumeration is exponential; refuse beyond this many sides by default.
DEFAULT_MAX_N = 30


@dataclass(frozen=True)
class LengthVector:
    """Exact positive side lengths, sorted ascending."""

    lengths: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if len(self.lengths) < 3:
            raise TooFewSidesError(f"need at least 3 sides, got {len(self.lengths)}")
        for x in self.lengths:
            if not isinstance(x, Fraction) or x <= 0:
                raise InvalidLengthError(f"side lengths must be positive rationals, got {x!r}")
        if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise InvalidLengthError("lengths must be sorted ascending; use normalize()")

    @property
    def n(self) -> int:
        return len(self.lengths)

    def scaled(self) -> tuple[int, ...]:
        """The lengths as integers, scaled by the common denominator."""
        denom = 1
        for f in self.lengths:
            denom = lcm(denom, f.denominator)
        return tuple(int(f * denom) for f in self.lengths)


@dataclass(frozen=True)
class GeneticCode:
    """The maximal short subsets containing n, in (size desc, lex) order."""

    genes: tuple[IndexSet, ...]
    n: int

    def __post_init__(self) -> None:
        for g in self.genes:
            if self.n not in g:
                raise ValueError(f"gene {g} does not contain n={self.n}")

    @property
    def is_monogenic(self) -> bool:
        return len(self.genes) == 1


def normalize(raw: Iterable[Fraction | int]) -> LengthVector:
    """Validate and sort raw side lengths into a LengthVector.

    Accepts ints and Fractions only; floats are rejected to preserve the
    exactness contract.  The original ordering is discarded: all downstream
    indices refer to the sorted vector.
    """
    values = []
    for x in raw:
        if isinstance(x, float):
            raise InvalidLengthError(f"floats are not exact; pass Fraction or int, got {x!r}")
        try:
            f = Fraction(x)
        except (TypeError, ValueError) as exc:
            raise InvalidLengthError(f"not a rational side length: {x!r}") from exc
        if f <= 0:
            raise InvalidLengthError(f"side lengths must be positive, got {x!r}")
        values.append(f)
    if len(values) < 3:
        raise TooFewSidesError(f"need at least 3 sides, got {len(values)}")
    return LengthVector(tuple(sorted(values)))


def is_short(lengths: LengthVector, subset: IndexSet) -> bool:
    """Exact test: do the lengths indexed by `subset` sum below the rest?

    Raises NotGenericError when the two sums are equal, and OutOfRangeError
    for indices outside 1..n.
    """
    ints = lengths.scaled()
    total = sum(ints)
    acc = 0
    for j in subset:
        if j > lengths.n:
            raise OutOfRangeError(f"index {j} exceeds n={lengths.n}")
        acc += ints[j - 1]
    if 2 * acc == total:
        raise NotGenericError(f"subset {subset} sums to exactly half the perimeter")
    return 2 * acc < total


def is_generic(lengths: LengthVector) -> bool:
    """True iff no subset of sides sums to exactly half the perimeter.

    Decided by an exact subset-sum reachability pass over the scaled
    integer lengths (a bitset of achievable sums up to half the total).
    """
    ints = lengths.scaled()
    total = sum(ints)
    if total % 2:
        return True
    half = total // 2
    cap = (1 << (half + 1)) - 1
    reach = 1
    for w in ints:
        reach = (reach | (reach << w)) & cap
    return not (reach >> half) & 1


def genetic_code(lengths: LengthVector, *, max_n: int = DEFAULT_MAX_N) -> GeneticCode:
    """All maximal short subsets containing n, ordered by (size desc, lex).

    Walks every subset of {1..n-1} in Gray-code order with an incremental
    sum.  A short set S (containing n) is maximal iff every one-step
    enlargement in the domination order is long; it suffices to test
    adding the smallest absent element and bumping each member up by one,
    because shortness is downward closed and any strict domination factors
    through such a step.
    """
    n = lengths.n
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds the subset-enumeration guard max_n={max_n}")
    if not is_generic(lengths):
        raise NotGenericError("length vector is not generic")
    ints = lengths.scaled()
    total = sum(ints)
    if 2 * ints[-1] > total:
        raise EmptySpaceError(f"{{{n}}} is long, the moduli space is empty")

    m = n - 1
    genes: list[IndexSet] = []
    mask = 0
    cur = ints[-1]
    for step in range(1 << m):
        if step:
            b = (step & -step).bit_length() - 1
            mask ^= 1 << b
            cur += ints[b] if (mask >> b) & 1 else -ints[b]
        if 2 * cur >= total:
            continue
        add = (~mask & (mask + 1)).bit_length() - 1
        if add < m and 2 * (cur + ints[add]) < total:
            continue
        bits = mask
        maximal = True
        while bits:
            low = bits & -bits
            bits ^= low
            idx = low.bit_length() - 1
            if idx + 1 < m and not (mask >> (idx + 1)) & 1:
                if 2 * (cur - ints[idx] + ints[idx + 1]) < total:
                    maximal = False
                    break
        if maximal:
            genes.append(IndexSet([*(i + 1 for i in range(m) if (mask >> i) & 1), n]))

    genes.sort(key=lambda g: (-len(g), g.elements))
    return GeneticCode(tuple(genes), n)


def monogenic_gee(code: GeneticCode) -> GeeParams:
    """The increment parametrization of the unique gene, with n removed.

    Raises NotMonogenicError when the code has more than one gene; a code
    whose single gene is {n} yields the empty parameter tuple (k = 0).
    """
    if len(code.genes) != 1:
        raise NotMonogenicError(f"code has {len(code.genes)} genes, expected exactly 1")
    gee = IndexSet(e for e in code.genes[0] if e != code.n)
    return GeeParams.from_gee(gee)


def enumerate_subgees(gee: GeeParams) -> Iterator[IndexSet]:
    """All subgees of the gee, including the empty set, in (size, lex) order.

    A subset of {1..span} is a subgee exactly when its block profile
    satisfies the suffix condition, so enumeration goes profile by profile,
    choosing each block's members independently.
    """
    prefix = (0, *gee.prefix_sums)
    found: list[IndexSet] = []
    for r in range(gee.k + 1):
        for profile in compositions(r, gee.k):
            if not is_subgee_profile(profile):
                continue
            if any(c > a for c, a in zip(profile, gee.a)):
                continue
            block_choices = [
                combinations(range(prefix[i] + 1, prefix[i + 1] + 1), profile[i])
                for i in range(gee.k)
            ]
            for picks in product(*block_choices):
                found.append(IndexSet(j for block in picks for j in block))
    found.sort(key=lambda s: (len(s.elements), s.elements))
    yield from found


def _ascending_tuples(parts: int, total: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of `parts` integers >= lo summing to total, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for v in range(lo, total // parts + 1):
        for rest in _ascending_tuples(parts - 1, total - v, v):
            yield (v, *rest)


def realize_gee(gee: GeeParams, search_bound: int = 40) -> LengthVector:
    """Search for an integer length vector whose genetic code is the single gene.

    Candidates are scanned in increasing total length; for each total, the
    side count n runs from max(3, span+1) up to a window of k+2 beyond that
    minimum (larger n only helps when the gene needs more slack below it),
    and sorted positive integer vectors for that (total, n) are tried in
    lexicographic order.  The first vector whose genetic code round-trips
    to the requested gene wins, so results are deterministic.

    Raises RealizationNotFoundError when no candidate with total length
    <= search_bound realizes the code.
    """
    if search_bound < 1:
        raise ValueError(f"search bound must be positive, got {search_bound}")
    n_min = max(3, gee.span + 1)
    n_max = n_min + gee.k + 2
    for total in range(n_min, search_bound + 1):
        for n in range(n_min, min(n_max, total) + 1):
            target = GeneticCode((IndexSet([*gee.gee(), n]),), n)
            for parts in _ascending_tuples(n, total):
                candidate = LengthVector(tuple(Fraction(p) for p in parts))
                try:
                    code = genetic_code(candidate)
                except (NotGenericError, EmptySpaceError):
                    continue
                if code == target:
                    return candidate
    raise RealizationNotFoundError(
        f"no integer length vector with total <= {search_bound} realizes gee {gee.a}"
    )
