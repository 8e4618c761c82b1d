"""Exponent profiles, orbits, base points and the living/dead structure.

Orbits are defined by equality of exponent profiles.  Everything else in this
module (base points, blocks, head and tail sets) is derived from that ground
truth and cross-checked against an independent construction, so a modeling
error surfaces as a :class:`ConsistencyError` instead of a wrong table.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .coset import DEFAULT_CAP, Shuffle, enumerate_shuffles, segment_diagram
from .errors import ConsistencyError, DomainError


def label_exponent(label, ctx):
    s1 = ctx.s / 2
    if label <= ctx.m:
        return Fraction(1 - ctx.m, 2) + (label - 1) + s1
    return Fraction(1 - ctx.n, 2) + (label - ctx.m - 1) - s1


def exponent_profile(w, ctx):
    """Exponents read off position by position; a tuple of Fractions."""
    if (w.m, w.n) != (ctx.m, ctx.n):
        raise DomainError(f"shuffle of shape ({w.m},{w.n}) used with context ({ctx.m},{ctx.n})")
    return tuple(label_exponent(x, ctx) for x in w.arrangement)


def format_profile(profile):
    return "(" + ",".join(str(v) for v in profile) + ")"


# -- orbit generation -------------------------------------------------------


def _swap(w, pairs):
    arr = list(w.arrangement)
    pos = w.w
    for i, j in pairs:
        a, b = pos[i] - 1, pos[j] - 1
        arr[a], arr[b] = arr[b], arr[a]
    return arr


def _is_shuffle(arr, m):
    last_g = last_r = 0
    for x in arr:
        if x <= m:
            if x < last_g:
                return False
            last_g = x
        else:
            if x < last_r:
                return False
            last_r = x
    return True


def orbit_of(w, ctx):
    """The orbit of ``w`` generated by exchanging paired labels.

    A profile-preserving shuffle can only move label i to its own position or
    to its partner's, so trying every subset of pair swaps is exhaustive.
    """
    pairs = ctx.pairs()
    out = set()
    for mask in product((False, True), repeat=len(pairs)):
        arr = _swap(w, [p for p, bit in zip(pairs, mask) if bit])
        if _is_shuffle(arr, ctx.m):
            out.add(Shuffle(ctx.m, ctx.n, tuple(arr)))
    return sorted(out, key=lambda s: s.arrangement)


def living_labels(members):
    members = list(members)
    ref = members[0].w
    return frozenset(
        label for label in ref if any(x.w[label] != ref[label] for x in members[1:])
    )


# -- base point -------------------------------------------------------------


def base_point(members, ctx, living=None):
    """The unique member whose living pairs sit green-before-red.

    Only pairs of living labels are constrained.  Requiring the inequality for
    dead pairs too has no solution on some orbits once sigma > min(m, n),
    because a dead pair may be frozen in reversed order.
    """
    members = list(members)
    if living is None:
        living = living_labels(members)
    pairs = [(i, j) for i, j in ctx.pairs() if i in living]
    hits = [x for x in members if all(x.w[i] < x.w[j] for i, j in pairs)]
    if len(hits) != 1:
        raise ConsistencyError(
            f"expected one base point in orbit {[str(x) for x in members]} at sigma={ctx.sigma}, "
            f"found {len(hits)}"
        )
    return hits[0]


def literal_base_candidates(members, ctx):
    """Members satisfying the inequality for every pair, living or dead."""
    return [x for x in members if all(x.w[i] < x.w[j] for i, j in ctx.pairs())]


# -- blocks -----------------------------------------------------------------


def _runs(labels_by_position):
    """Split an ordered list of (position, label) into runs of consecutive positions."""
    runs = []
    for p, label in labels_by_position:
        if runs and runs[-1][-1][0] == p - 1:
            runs[-1].append((p, label))
        else:
            runs.append([(p, label)])
    return runs


def refined_blocks(base, ctx, living):
    """Blocks via refined-interval labeling on the base point.

    The k-th living green (left to right) is paired with the k-th living red.
    Cut points are the counts at which a green run or a red run ends; the
    refined intervals between cuts are labeled 1..N in each color, and a red
    interval k closes a block exactly when the largest green label lying
    wholly to its left equals k.
    """
    pos = base.w
    greens = sorted((pos[x], x) for x in living if x <= ctx.m)
    reds = sorted((pos[x], x) for x in living if x > ctx.m)
    if len(greens) != len(reds):
        raise ConsistencyError(f"unbalanced living labels on base point {base}")
    if not greens:
        return []
    cuts = set()
    for runs in (_runs(greens), _runs(reds)):
        count = 0
        for run in runs:
            count += len(run)
            cuts.add(count)
    cuts = sorted(cuts)
    bounds = list(zip([0] + cuts[:-1], cuts))
    green_iv = [greens[a:b] for a, b in bounds]
    red_iv = [reds[a:b] for a, b in bounds]
    q = []
    for k, red in enumerate(red_iv, start=1):
        left = [g for g, iv in enumerate(green_iv, start=1) if iv[-1][0] < red[0][0]]
        if left and max(left) == k:
            q.append(k)
    if not q or q[-1] != len(bounds):
        raise ConsistencyError(f"refined labeling did not close the last block on {base}")
    blocks = []
    prev = 0
    for k in q:
        K = tuple(sorted(x for iv in green_iv[prev:k] for _, x in iv))
        L = tuple(sorted(x for iv in red_iv[prev:k] for _, x in iv))
        blocks.append((K, L))
        prev = k
    return blocks


def comovement_blocks(members, base, living):
    """Brute-force oracle: group living labels by the set of members moving them."""
    groups = defaultdict(list)
    for label in living:
        key = tuple(x.w[label] != base.w[label] for x in members)
        groups[key].append(label)
    blocks = []
    for labels in groups.values():
        K = tuple(sorted(x for x in labels if x <= base.m))
        L = tuple(sorted(x for x in labels if x > base.m))
        blocks.append((K, L))
    blocks.sort(key=lambda b: base.w[b[0][0]] if b[0] else base.w[b[1][0]])
    return blocks


@dataclass(frozen=True)
class Orbit:
    members: tuple
    base_point: Shuffle
    blocks: tuple
    living: frozenset

    @property
    def rank(self):
        return len(self.blocks)

    @property
    def size(self):
        return len(self.members)

    def to_json(self):
        return {
            "members": [str(x) for x in self.members],
            "basePoint": str(self.base_point),
            "blocks": [{"K": list(K), "L": list(L)} for K, L in self.blocks],
            "rank": self.rank,
        }


def living_blocks(orbit, ctx):
    """Blocks by refined labeling, checked against co-movement grouping."""
    algo = refined_blocks(orbit.base_point, ctx, orbit.living)
    oracle = comovement_blocks(orbit.members, orbit.base_point, orbit.living)
    if [tuple(map(tuple, b)) for b in algo] != oracle:
        raise ConsistencyError(
            f"block algorithm {algo} disagrees with co-movement {oracle} "
            f"on base point {orbit.base_point} at sigma={ctx.sigma}"
        )
    return algo


def block_swap(w, block):
    """Exchange each label of K with its partner in L."""
    K, L = block
    arr = list(w.arrangement)
    for k, l in zip(K, L):
        arr[w.w[k] - 1], arr[w.w[l] - 1] = l, k
    return Shuffle(w.m, w.n, tuple(arr))


def _build_orbit(members, ctx):
    members = tuple(sorted(members, key=lambda s: s.arrangement))
    size = len(members)
    if size & (size - 1):
        raise ConsistencyError(f"orbit of size {size} is not a power of two at sigma={ctx.sigma}")
    living = living_labels(members)
    base = base_point(members, ctx, living)
    orbit = Orbit(members, base, (), living)
    blocks = tuple(living_blocks(orbit, ctx))
    if 2 ** len(blocks) != size:
        raise ConsistencyError(f"orbit size {size} does not match rank {len(blocks)}")
    return Orbit(members, base, blocks, living)


def compute_orbits(ctx, cap=DEFAULT_CAP):
    groups = defaultdict(list)
    for w in enumerate_shuffles(ctx.m, ctx.n, cap):
        groups[exponent_profile(w, ctx)].append(w)
    orbits = [_build_orbit(members, ctx) for members in groups.values()]
    orbits.sort(key=lambda o: o.base_point.arrangement)
    return orbits


def orbit_containing(w, ctx):
    return _build_orbit(orbit_of(w, ctx), ctx)


def orbits_to_json(ctx, orbits):
    return {
        "m": ctx.m,
        "n": ctx.n,
        "sigma": ctx.sigma,
        "orbits": [o.to_json() for o in orbits],
    }


# -- head and tail ----------------------------------------------------------


@dataclass(frozen=True)
class HeadTailReport:
    head_kind: str  # "R", "R'" or "" when no head procedure applies
    head_sets: tuple  # R_j as green labels; R'_j as red indices j (label m+j)
    tail_kind: str  # "S", "S'" or ""
    tail_sets: tuple  # S_j as red labels; S'_j as green labels
    head_dead: frozenset
    tail_dead: frozenset
    dead: frozenset
    first_living: object
    last_living: object


def _head(w, ctx):
    m, n, sigma, size = ctx.m, ctx.n, ctx.sigma, ctx.m + ctx.n
    pos = w.w
    sets = []
    dead = set()
    kind = ""
    if sigma < n:
        kind = "R"
        dead |= set(range(m + 1, m + n - sigma + 1))
        total = 0
        while m + n - sigma + total <= size:
            bound = pos[m + n - sigma + total]
            rj = frozenset(i for i in range(total + 1, m + 1) if pos[i] < bound)
            sets.append(rj)
            if not rj:
                break
            total += len(rj)
            if len(sets) > size:
                raise ConsistencyError(f"head procedure does not terminate on {w}")
        else:
            sets.append(frozenset())
        for rj in sets:
            for i in rj:
                dead.add(i)
                if i in ctx.paired_indices():
                    dead.add(ctx.partner(i))
    elif sigma > n:
        kind = "R'"
        dead |= set(range(1, sigma - n + 1))
        total = 0
        while sigma - n + total <= m:
            bound = pos[sigma - n + total]
            rj = frozenset(
                j - m for j in range(m + 1 + total, size + 1) if pos[j] < bound
            )
            sets.append(rj)
            if not rj:
                break
            total += len(rj)
            if len(sets) > size:
                raise ConsistencyError(f"head procedure does not terminate on {w}")
        else:
            sets.append(frozenset())
        for rj in sets:
            for j in rj:
                dead.add(m + j)
                dead.add(m + j - ctx.offset)
    else:
        sets.append(frozenset())
    return kind, tuple(sets), frozenset(dead)


def _tail(w, ctx):
    m, n, sigma, size = ctx.m, ctx.n, ctx.sigma, ctx.m + ctx.n
    pos = w.w
    sets = []
    dead = set()
    kind = ""
    if sigma < m:
        kind = "S"
        dead |= set(range(sigma + 1, m + 1))
        total = 0
        while sigma - total + 1 >= 1:
            bound = pos[sigma - total + 1]
            sj = frozenset(j for j in range(m + 1, size + 1 - total) if pos[j] > bound)
            sets.append(sj)
            if not sj:
                break
            total += len(sj)
            if len(sets) > size:
                raise ConsistencyError(f"tail procedure does not terminate on {w}")
        else:
            sets.append(frozenset())
        for sj in sets:
            for j in sj:
                dead.add(j)
                i = j - ctx.offset
                if 1 <= i <= m:
                    dead.add(i)
    elif sigma > m:
        kind = "S'"
        start = 2 * m + n - sigma + 1
        dead |= set(range(start, size + 1))
        total = 0
        while start - total > m:
            bound = pos[start - total]
            sj = frozenset(i for i in range(1, m + 1 - total) if pos[i] > bound)
            sets.append(sj)
            if not sj:
                break
            total += len(sj)
            if len(sets) > size:
                raise ConsistencyError(f"tail procedure does not terminate on {w}")
        else:
            sets.append(frozenset())
        for sj in sets:
            for i in sj:
                dead.add(i)
                dead.add(ctx.partner(i))
    else:
        sets.append(frozenset())
    return kind, tuple(sets), frozenset(dead)


def head_tail(base, ctx, living=None):
    """Run the head and tail procedures on a base point.

    When ``living`` is omitted it is computed from the orbit of ``base``; the
    dead set produced by the procedures must be its exact complement.
    """
    hk, hs, hd = _head(base, ctx)
    tk, ts, td = _tail(base, ctx)
    dead = hd | td
    if living is None:
        living = living_labels(orbit_of(base, ctx))
    expected = frozenset(range(1, ctx.m + ctx.n + 1)) - living
    if dead != expected:
        raise ConsistencyError(
            f"head/tail dead set {sorted(dead)} differs from orbit dead set "
            f"{sorted(expected)} on {base} at sigma={ctx.sigma}"
        )
    alive_pos = [base.w[x] for x in living]
    return HeadTailReport(
        hk, hs, tk, ts, hd, td, dead,
        min(alive_pos) if alive_pos else None,
        max(alive_pos) if alive_pos else None,
    )


# -- structural lemmas ------------------------------------------------------


def _prefix_sums(sets):
    acc = [0]
    for x in sets:
        acc.append(acc[-1] + len(x))
    return acc


def check_counting_lemmas(base, ctx, report, living):
    """Literal check of the position bounds along the head and tail sets.

    Returns a list of human-readable failures (empty when all bounds hold).
    """
    m, n, sigma = ctx.m, ctx.n, ctx.sigma
    pos = base.w
    fails = []
    if report.head_kind == "R":
        R = [r for r in report.head_sets if r]
        acc = _prefix_sums(R)
        for j, rj in enumerate(R):
            for i in rj:
                lo = i if j == 0 else n - sigma + acc[j - 1] + i
                hi = n - sigma + acc[j] + i
                if not lo <= pos[i] < hi:
                    fails.append(f"head: w({i})={pos[i]} not in [{lo},{hi})")
    if report.head_kind == "R'":
        R = [r for r in report.head_sets if r]
        k = len(R)
        acc = _prefix_sums(R)
        for i in range(1, sigma - n + 1):
            hi = i + (acc[1] if k else 0)
            if not i <= pos[i] <= hi:
                fails.append(f"head': w({i})={pos[i]} not in [{i},{hi}]")
            if i == sigma - n and k and not i < pos[i]:
                fails.append(f"head': w({i})={pos[i]} not strictly above {i}")
        for j in range(1, k + 1):
            for r in R[j - 1]:
                i = sigma - n + r
                if j < k:
                    ok = i + acc[j] <= pos[i] <= i + acc[j + 1]
                else:
                    ok = pos[i] == i + acc[k]
                if not ok:
                    fails.append(f"head': w({i})={pos[i]} violates batch {j}")
    living_reds = [x for x in living if x > m]
    if report.tail_kind == "S" and living_reds:
        S = [s for s in report.tail_sets if s]
        k = len(S)
        q = max(living_reds)
        for j in range(k, 0, -1):
            for red in S[j - 1]:
                i = red - ctx.offset
                if i < 1:
                    continue
                if j == k:
                    ok = pos[i] == q - m + i
                else:
                    ok = pos[i] >= q - m + sum(len(S[l - 1]) for l in range(j + 2, k + 1)) + i
                if not ok:
                    fails.append(f"tail: w({i})={pos[i]} violates batch {j} (q={q})")
    if report.tail_kind == "S'":
        S = [s for s in report.tail_sets if s]
        k = len(S)
        qp = m - sum(map(len, S))
        for j in range(k, 0, -1):
            for i in S[j - 1]:
                lo = n - sigma + qp + sum(len(S[l - 1]) for l in range(j, k + 1)) + i
                ok = pos[i] > lo
                if j >= 2:
                    hi = n - sigma + qp + sum(len(S[l - 1]) for l in range(j - 1, k + 1)) + i
                    ok = ok and pos[i] <= hi
                if not ok:
                    fails.append(f"tail': w({i})={pos[i]} violates batch {j}")
    return fails


def check_interval_shape(base, living):
    """Living greens end each green run, living reds start each red run,
    and the living region is gap-free, opening green and closing red."""
    fails = []
    for iv in segment_diagram(base).intervals:
        flags = [x in living for x in iv.labels]
        if not flags:
            continue
        if iv.kind == "V":
            first = flags.index(True) if True in flags else len(flags)
            if not all(flags[first:]):
                fails.append(f"green run {iv.labels}: living labels not a suffix")
        else:
            first = flags.index(False) if False in flags else len(flags)
            if any(flags[first:]):
                fails.append(f"red run {iv.labels}: living labels not a prefix")
    if living:
        ps = [base.w[x] for x in living]
        lo, hi = min(ps), max(ps)
        arr = base.arrangement
        if arr[lo - 1] > base.m:
            fails.append("first living label is red")
        if arr[hi - 1] <= base.m:
            fails.append("last living label is green")
        if any(arr[p - 1] not in living for p in range(lo, hi + 1)):
            fails.append("dead label inside the living region")
    return fails


def check_first_last_living(base, ctx, report):
    """The first living green is the leftmost green outside the head-dead set
    with every head-dead red to its left; symmetrically for the last living red."""
    m, size = ctx.m, ctx.m + ctx.n
    pos = base.w
    if report.first_living is None:
        return []
    fails = []
    hd, td = report.head_dead, report.tail_dead
    cand = [
        pos[g] for g in range(1, m + 1)
        if g not in hd and all(pos[r] < pos[g] for r in hd if r > m)
    ]
    if not cand or min(cand) != report.first_living:
        fails.append(f"first living position {report.first_living} not predicted by head")
    cand = [
        pos[r] for r in range(m + 1, size + 1)
        if r not in td and all(pos[g] > pos[r] for g in td if g <= m)
    ]
    if not cand or max(cand) != report.last_living:
        fails.append(f"last living position {report.last_living} not predicted by tail")
    return fails


# -- residue Weyl elements --------------------------------------------------


def _compose(f, g):
    """(f o g)(x) = f(g(x)) on one-line tuples."""
    return tuple(f[g[x] - 1] for x in range(len(g)))


@dataclass(frozen=True)
class WeylRelation:
    w1: tuple
    w_sigma: tuple
    w_sigma_prime: tuple
    w1_prime: tuple
    relation_holds: bool
    convention: str
    standard_holds: bool
    reversed_holds: bool
    displayed_w1_prime: tuple
    displayed_holds: bool


def residue_weyl_elements(ctx):
    """The four permutations attached to a pole and the relation among them.

    ``w1_prime`` reverses both of its blocks; with the unreversed second block
    the relation fails for sigma >= 2 under either composition order (kept
    as ``displayed_*`` for reference).  The relation is first tested as
    ``w_sigma o w1 == w1' o w_sigma'`` and then with the factors read in the
    opposite order; ``convention`` names the one that holds.
    """
    m, n, sigma = ctx.m, ctx.n, ctx.sigma
    if not 0 <= sigma <= min(m, n) - 1:
        raise DomainError(
            f"sigma={sigma} outside [0, {min(m, n) - 1}] required for the residue elements"
        )
    size = m + n
    w1 = tuple(range(m, 0, -1)) + tuple(range(size, m, -1))
    ws = tuple(range(m + 1, size - sigma + 1)) + tuple(range(1, m + 1)) + tuple(
        range(size - sigma + 1, size + 1)
    )
    wsp = tuple(range(1, m + 1)) + tuple(range(m + sigma + 1, size + 1)) + tuple(
        range(m + 1, m + sigma + 1)
    )
    w1p = tuple(range(size - sigma, 0, -1)) + tuple(range(size, size - sigma, -1))
    shown = tuple(range(size - sigma, 0, -1)) + tuple(range(size - sigma + 1, size + 1))

    def both(b):
        return (
            _compose(ws, w1) == _compose(b, wsp),
            _compose(w1, ws) == _compose(wsp, b),
        )

    std, rev = both(w1p)
    shown_std, shown_rev = both(shown)
    if std:
        conv = "f(g(x))"
    elif rev:
        conv = "g(f(x))"
    else:
        conv = "none"
    return WeylRelation(w1, ws, wsp, w1p, std or rev, conv, std, rev, shown, shown_std or shown_rev)
