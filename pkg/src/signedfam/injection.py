"""An explicit, verified injection of an intersecting family into the star.

The pipeline splits the input family by the pair it carries on element
1.  Members already containing (1, 1) map to themselves.  Members
containing (1, i) for i >= 2 lose that pair, have their remaining
signs cyclically advanced by i - 1, and gain (1, 1).  Members avoiding
element 1 entirely (the "free" class) are re-housed on fresh supports:
each support's tail complement is matched injectively to one of its
own (k-1)-subsets via augmenting paths, and the members of a support
class receive the sign vectors of the matched target in lexicographic
order.  Hall's condition for the matching follows from the
intersection-shadow inequality applied to subfamilies of the tail
complements, which inherit the pairwise intersection floor n - 2k.

The construction is only valid for r >= 2 and 2k <= n and refuses to
run outside that range.  It re-verifies every certificate it emits
instead of trusting its own reasoning, and it is deterministic: a
fixed input always produces a bit-identical certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Params,
    PlainFamily,
    PlainSet,
    SignedFamily,
    SignedSet,
    bound_value,
    is_intersecting,
    make_signed_set,
    shift_signs,
    support,
)
from .errors import (
    ContainsOne,
    Error,
    GroupOverflow,
    MissingPair,
    NoPerfectMatching,
    NotIntersecting,
    OutOfRange,
    UnsupportedRange,
    VerificationFailed,
)
from .shadow import shadow_to


@dataclass(frozen=True)
class Partition:
    """Split of a family by the pair it carries on element 1.

    free holds the members whose support avoids element 1; anchored[i-1]
    holds the members containing (1, i).  The blocks are disjoint and
    their union is the input family.
    """

    free: SignedFamily
    anchored: tuple[SignedFamily, ...]


def partition_family(fam: SignedFamily) -> Partition:
    """Classify members by the sign attached to element 1, if any."""
    r = fam.params.r
    free: list[SignedSet] = []
    blocks: list[list[SignedSet]] = [[] for _ in range(r)]
    for m in fam.members:
        # element 1, when present, sits in the first pair of the canonical form
        if m and m[0][0] == 1:
            blocks[m[0][1] - 1].append(m)
        else:
            free.append(m)
    return Partition(
        SignedFamily(fam.params, tuple(free)),
        tuple(SignedFamily(fam.params, tuple(b)) for b in blocks),
    )


def strip_first(block: SignedFamily, i: int) -> SignedFamily:
    """Remove the common pair (1, i) from every member.

    Removal of a shared pair is injective, so the size is preserved.
    """
    pair = (1, i)
    out = []
    for m in block.members:
        if pair not in m:
            raise MissingPair(f"member {m} lacks {pair}")
        out.append(tuple(p for p in m if p != pair))
    return SignedFamily(block.params, tuple(out))


def build_supports(fam: SignedFamily) -> PlainFamily:
    """Deduplicated supports of all members."""
    return PlainFamily(fam.params.n, tuple({support(m) for m in fam.members}))


def complements_in_tail(supports: PlainFamily, n: int) -> PlainFamily:
    """Complement every member within the tail {2, ..., n}.

    Complementation is a bijection, so the member count is preserved.
    """
    out = []
    for m in supports.members:
        if 1 in m:
            raise ContainsOne(f"member {m} contains element 1")
        if m and m[-1] > n:
            raise OutOfRange(f"member {m} reaches beyond ground size {n}")
        mem = set(m)
        out.append(tuple(x for x in range(2, n + 1) if x not in mem))
    return PlainFamily(n, tuple(out))


def signed_versions(shadow_fam: PlainFamily, r: int) -> SignedFamily:
    """Every way of signing every member with signs from 1..r.

    The result has exactly r^(member size) * len(shadow_fam) members.
    Its parameters carry k = member size + 1 (1 for an empty input),
    matching the pipeline where members one short of k are signed.
    """
    base = shadow_fam.size
    k = 1 if base is None else base + 1
    params = Params(shadow_fam.ground, k, r)
    signs = range(1, r + 1)
    members = tuple(
        tuple(zip(m, vec))
        for m in shadow_fam.members
        for vec in itertools.product(signs, repeat=len(m))
    )
    return SignedFamily(params, members)


@dataclass
class MatchingResult:
    """Injective choice of one of its own subsets for each member."""

    assignment: dict[PlainSet, PlainSet]


def match_to_shadow(tails: PlainFamily) -> MatchingResult:
    """Match every member injectively to one of its own (k-1)-subsets.

    k is recovered from the family shape: members have size
    ground - 1 - k.  Augmenting-path search over the membership graph
    between the family and its (k-1)-shadow.  For families that arise
    from an intersecting input with 2k <= n, every subfamily inherits
    the pairwise intersection floor n - 2k, the intersection-shadow
    inequality then gives Hall's condition, and the matching always
    exists.  Failure therefore signals a precondition violation and is
    surfaced as NoPerfectMatching, never swallowed.
    """
    if not tails.members:
        return MatchingResult({})
    msize = tails.size
    k = tails.ground - 1 - msize
    if k < 1:
        raise NoPerfectMatching(
            f"member size {msize} leaves no valid set size for ground {tails.ground}"
        )
    sh = shadow_to(tails, k - 1)
    right_index = {m: i for i, m in enumerate(sh.members)}
    adjacency = [
        [right_index[sub] for sub in itertools.combinations(m, k - 1)]
        for m in tails.members
    ]
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adjacency[u]:
            if v in seen:
                continue
            seen.add(v)
            w = match_right.get(v)
            if w is None or augment(w, seen):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in range(len(tails.members)):
        if not augment(u, set()):
            raise NoPerfectMatching(
                f"no injective shadow assignment covers {tails.members[u]}"
            )
    assignment = {tails.members[u]: sh.members[v] for u, v in match_left.items()}
    return MatchingResult(assignment)


def sign_assign(
    free: SignedFamily, matching: MatchingResult
) -> dict[SignedSet, SignedSet]:
    """Injectively re-house the free class on matched shadow supports.

    Members sharing a support are ordered canonically and receive the
    sign vectors over their matched target support in lexicographic
    order (positions by ascending element).  Injectivity across
    classes follows from the matching being injective.  A class larger
    than r^(k-1) cannot be pairwise intersecting and is rejected.
    """
    p = free.params
    groups: dict[PlainSet, list[SignedSet]] = {}
    for m in free.members:
        groups.setdefault(support(m), []).append(m)
    out: dict[SignedSet, SignedSet] = {}
    for sup in sorted(groups):
        members = groups[sup]
        limit = p.r ** (len(sup) - 1)
        if len(members) > limit:
            raise GroupOverflow(
                f"support {sup} carries {len(members)} members, more than the "
                f"{limit} that can pairwise intersect"
            )
        hidden = set(sup)
        tail_complement = tuple(x for x in range(2, p.n + 1) if x not in hidden)
        try:
            target = matching.assignment[tail_complement]
        except KeyError:
            raise ValueError(
                f"matching does not cover the tail complement {tail_complement}"
            ) from None
        vectors = itertools.product(range(1, p.r + 1), repeat=len(target))
        for m, vec in zip(members, vectors):
            out[m] = tuple(zip(target, vec))
    return out


@dataclass(frozen=True)
class InjectionCertificate:
    """Explicit injective map from a family into the star at (1, 1).

    block_sizes lists the partition class sizes, free class first and
    then one entry per sign.  free_pool_size counts the signed shadow
    targets available to the free class; for valid inputs it is at
    least block_sizes[0].
    """

    params: Params
    domain: SignedFamily
    mapping: tuple[tuple[SignedSet, SignedSet], ...]
    block_sizes: tuple[int, ...]
    free_pool_size: int


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    domain_size: int
    bound: int
    problems: tuple[str, ...]


def assemble_injection(fam: SignedFamily) -> InjectionCertificate:
    """Build and re-verify the injection of an intersecting family into the star.

    Raises UnsupportedRange outside r >= 2, 2k <= n (the construction
    is unproven there and can genuinely fail), NotIntersecting for
    inputs with a disjoint pair, and propagates NoPerfectMatching or
    GroupOverflow, which cannot occur for valid in-range inputs.
    """
    p = fam.params
    if p.r < 2 or 2 * p.k > p.n:
        raise UnsupportedRange(
            f"injection is only constructed for r >= 2 and 2k <= n, got {p}"
        )
    if not is_intersecting(fam):
        raise NotIntersecting("input family has a disjoint pair of members")
    part = partition_family(fam)
    pairs: list[tuple[SignedSet, SignedSet]] = []
    for m in part.anchored[0].members:
        pairs.append((m, m))
    for i in range(2, p.r + 1):
        for m in part.anchored[i - 1].members:
            shifted = shift_signs(tuple(q for q in m if q != (1, i)), i - 1, p.r)
            pairs.append((m, tuple(sorted(shifted + ((1, 1),)))))
    tails = complements_in_tail(build_supports(part.free), p.n)
    matching = match_to_shadow(tails)
    pool = p.r ** (p.k - 1) * len(shadow_to(tails, p.k - 1))
    for m, housed in sign_assign(part.free, matching).items():
        pairs.append((m, tuple(sorted(housed + ((1, 1),)))))
    pairs.sort()
    cert = InjectionCertificate(
        params=p,
        domain=fam,
        mapping=tuple(pairs),
        block_sizes=(len(part.free),) + tuple(len(b) for b in part.anchored),
        free_pool_size=pool,
    )
    report = verify_certificate(cert)
    if not report.ok:
        raise VerificationFailed("; ".join(report.problems))
    return cert


def verify_certificate(cert: InjectionCertificate) -> CertificateReport:
    """Re-check a certificate from scratch, trusting nothing.

    Confirms the mapping is total on the domain, targets are pairwise
    distinct, every target contains (1, 1) and is a valid signed k-set,
    and the domain size respects the extremal bound.  Failures are
    report content and name the offending pairs; nothing is raised.
    """
    problems: list[str] = []
    p = cert.params
    sources = [s for s, _ in cert.mapping]
    if len(set(sources)) != len(sources):
        problems.append("a source appears more than once in the mapping")
    missing = cert.domain.member_set - set(sources)
    if missing:
        problems.append(f"domain members without an image: {sorted(missing)}")
    extra = set(sources) - cert.domain.member_set
    if extra:
        problems.append(f"mapped sources outside the domain: {sorted(extra)}")
    by_target: dict[SignedSet, list[SignedSet]] = {}
    for s, t in cert.mapping:
        by_target.setdefault(t, []).append(s)
    for t, srcs in sorted(by_target.items()):
        if len(srcs) > 1:
            problems.append(f"target {t} is shared by sources {srcs}")
    for s, t in cert.mapping:
        if (1, 1) not in t:
            problems.append(f"target {t} of source {s} misses the pair (1, 1)")
            continue
        try:
            make_signed_set(t, p)
        except Error as exc:
            problems.append(f"target {t} of source {s} is invalid: {exc}")
    bound = bound_value(p)
    if len(cert.domain) > bound:
        problems.append(f"domain size {len(cert.domain)} exceeds the bound {bound}")
    return CertificateReport(not problems, len(cert.domain), bound, tuple(problems))
