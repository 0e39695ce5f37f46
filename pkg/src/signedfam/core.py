"""Signed sets, plain sets, and the families that hold them.

A signed set is a size-k subset of [n] = {1, ..., n} with a sign from
[r] = {1, ..., r} attached to each element, stored canonically as a
tuple of (element, sign) pairs sorted by element.  Plain sets are
sorted tuples of distinct integers.  Families bundle a duplicate-free,
canonically sorted tuple of members with the parameters they live
under, so equality, hashing, and iteration order are all structural.

Two signed sets intersect when they share an identical (element, sign)
pair.  Sharing an element under different signs does not count.

Everything here is an immutable value; operations never mutate their
arguments and are safe to run concurrently on shared inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .errors import (
    DuplicateElement,
    NonUniform,
    OutOfRange,
    TooLarge,
    WrongSize,
)

Pair = tuple[int, int]
SignedSet = tuple[Pair, ...]
PlainSet = tuple[int, ...]

#: Default ceiling on the number of members universe() and star() will build.
DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class Params:
    """Problem parameters: ground-set size n, set size k, sign count r."""

    n: int
    k: int
    r: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.r < 1:
            raise ValueError(f"need r >= 1, got r={self.r}")


def make_signed_set(pairs, params: Params) -> SignedSet:
    """Validate and canonicalize (element, sign) pairs into a signed set.

    Raises OutOfRange, DuplicateElement, or WrongSize when the input is
    not a well-formed member of the universe for ``params``.
    """
    canon: list[Pair] = []
    for x, a in pairs:
        if not 1 <= x <= params.n:
            raise OutOfRange(f"element {x} outside [1, {params.n}]")
        if not 1 <= a <= params.r:
            raise OutOfRange(f"sign {a} outside [1, {params.r}]")
        canon.append((x, a))
    elements = [x for x, _ in canon]
    if len(set(elements)) != len(elements):
        dup = next(x for i, x in enumerate(elements) if x in elements[:i])
        raise DuplicateElement(f"element {dup} appears in two pairs")
    if len(canon) != params.k:
        raise WrongSize(f"expected {params.k} pairs, got {len(canon)}")
    return tuple(sorted(canon))


def support(sset: SignedSet) -> PlainSet:
    """The set of first coordinates of a signed set."""
    return tuple(x for x, _ in sset)


def mod_one_based(v: int, y: int) -> int:
    """Reduce v modulo y onto the representatives 1..y.

    Multiples of y map to y rather than 0.  Negative v is handled, so
    the result is always in [1, y] and congruent to v mod y.
    """
    if y < 1:
        raise ValueError(f"modulus must be >= 1, got {y}")
    return (v - 1) % y + 1


def shift_signs(sset: SignedSet, q: int, r: int) -> SignedSet:
    """Advance every sign cyclically by q within 1..r.

    The support is untouched, so the canonical pair order is preserved.
    Negative q undoes the corresponding positive shift.
    """
    return tuple((x, mod_one_based(a + q, r)) for x, a in sset)


def intersects(a: SignedSet, b: SignedSet) -> bool:
    """True when the two signed sets share an (element, sign) pair."""
    return not set(a).isdisjoint(b)


def _pair_mask(sset: SignedSet, r: int) -> int:
    """Bit-packed encoding with one bit per (element, sign) slot.

    Internal fast path: two signed sets intersect iff their masks AND
    to a nonzero value.  Observable behavior stays on the tuple form.
    """
    m = 0
    for x, a in sset:
        m |= 1 << ((x - 1) * r + (a - 1))
    return m


@dataclass(frozen=True)
class SignedFamily:
    """A duplicate-free collection of signed sets under common parameters.

    Members are stored sorted, each in canonical pair order.  Member
    size is uniform but may be smaller than params.k: derived views,
    such as a family with a common pair removed from every member, are
    legal values of this type.  Serialized interchange is stricter and
    requires size exactly k.
    """

    params: Params
    members: tuple[SignedSet, ...]

    def __post_init__(self) -> None:
        norm = [tuple(sorted((x, a) for x, a in m)) for m in self.members]
        norm.sort()
        object.__setattr__(self, "members", tuple(norm))
        n, r = self.params.n, self.params.r
        size = None
        prev = None
        for m in self.members:
            if m == prev:
                raise ValueError(f"duplicate member {m}")
            prev = m
            if size is None:
                size = len(m)
            elif len(m) != size:
                raise NonUniform("members must share a common size")
            last = 0
            for x, a in m:
                if not 1 <= x <= n:
                    raise OutOfRange(f"element {x} outside [1, {n}]")
                if not 1 <= a <= r:
                    raise OutOfRange(f"sign {a} outside [1, {r}]")
                if x <= last:
                    raise DuplicateElement(f"element {x} repeated in {m}")
                last = x

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, sset) -> bool:
        return sset in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)


@dataclass(frozen=True)
class PlainFamily:
    """Uniform-size plain subsets of [ground], duplicate-free and sorted."""

    ground: int
    members: tuple[PlainSet, ...]

    def __post_init__(self) -> None:
        if self.ground < 1:
            raise ValueError(f"ground-set size must be >= 1, got {self.ground}")
        norm = [tuple(sorted(m)) for m in self.members]
        norm.sort()
        object.__setattr__(self, "members", tuple(norm))
        size = None
        prev = None
        for m in self.members:
            if m == prev:
                raise ValueError(f"duplicate member {m}")
            prev = m
            if size is None:
                size = len(m)
            elif len(m) != size:
                raise NonUniform("members must share a common size")
            last = 0
            for x in m:
                if not 1 <= x <= self.ground:
                    raise OutOfRange(f"element {x} outside [1, {self.ground}]")
                if x <= last:
                    raise DuplicateElement(f"element {x} repeated in {m}")
                last = x

    @property
    def size(self):
        """Common member size, or None for the empty family."""
        return len(self.members[0]) if self.members else None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, pset) -> bool:
        return pset in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)


def is_intersecting(fam: SignedFamily) -> bool:
    """True when every two members share a signed pair (vacuous below 2)."""
    masks = [_pair_mask(m, fam.params.r) for m in fam.members]
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if not mi & masks[j]:
                return False
    return True


def bound_value(params: Params) -> int:
    """The extremal size r^(k-1) * C(n-1, k-1), computed exactly."""
    return params.r ** (params.k - 1) * comb(params.n - 1, params.k - 1)


def universe(params: Params, cap: int = DEFAULT_CAP) -> SignedFamily:
    """All signed k-sets on [n] with signs in [r].

    Raises TooLarge when the member count r^k * C(n, k) exceeds cap.
    """
    total = params.r ** params.k * comb(params.n, params.k)
    if total > cap:
        raise TooLarge(f"universe has {total} members, cap is {cap}")
    signs = range(1, params.r + 1)
    members = tuple(
        tuple(zip(elems, vec))
        for elems in itertools.combinations(range(1, params.n + 1), params.k)
        for vec in itertools.product(signs, repeat=params.k)
    )
    return SignedFamily(params, members)


def star(params: Params, cap: int = DEFAULT_CAP) -> SignedFamily:
    """All members of the universe containing the pair (1, 1).

    This is the canonical extremal intersecting family; its size is
    exactly bound_value(params).
    """
    total = bound_value(params)
    if total > cap:
        raise TooLarge(f"star has {total} members, cap is {cap}")
    signs = range(1, params.r + 1)
    members = tuple(
        ((1, 1),) + tuple(zip(elems, vec))
        for elems in itertools.combinations(range(2, params.n + 1), params.k - 1)
        for vec in itertools.product(signs, repeat=params.k - 1)
    )
    return SignedFamily(params, members)


def shift_signs_family(fam: SignedFamily, q: int) -> SignedFamily:
    """Member-wise cyclic sign shift; a bijection, so the size is kept."""
    r = fam.params.r
    return SignedFamily(fam.params, tuple(shift_signs(m, q, r) for m in fam.members))
