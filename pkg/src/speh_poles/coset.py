"""Shuffle representatives of S_m x S_n \\ S_{m+n} and their basic invariants.

A shuffle is stored as its *arrangement*: the label sitting at each position
1..m+n, read left to right.  Labels 1..m (the first block, drawn "green" in the
diagrams) and m+1..m+n (the second block, "red") each appear in increasing
order.  The position map ``w`` (label -> position) is derived on demand.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import DomainError, EnumerationLimitError

DEFAULT_CAP = 16


@dataclass(frozen=True, order=True)
class Shuffle:
    """A coset representative given by its one-line arrangement."""

    m: int
    n: int
    arrangement: tuple

    def __post_init__(self):
        arr = tuple(int(x) for x in self.arrangement)
        object.__setattr__(self, "arrangement", arr)
        if self.m < 1 or self.n < 1:
            raise DomainError(f"block sizes must be positive, got m={self.m}, n={self.n}")
        size = self.m + self.n
        if sorted(arr) != list(range(1, size + 1)):
            raise DomainError(f"{arr} is not a permutation of 1..{size}")
        greens = [x for x in arr if x <= self.m]
        reds = [x for x in arr if x > self.m]
        if greens != sorted(greens) or reds != sorted(reds):
            raise DomainError(f"{arr} does not preserve the order inside each block")

    @classmethod
    def parse(cls, m, n, text):
        """Build a shuffle from ``"3142"``, ``"10,1,11,2"`` or ``"e"``."""
        text = text.strip().strip("()")
        if text == "e":
            return cls.identity(m, n)
        if "," in text:
            arr = tuple(int(x) for x in text.split(","))
        else:
            arr = tuple(int(ch) for ch in text)
        return cls(m, n, arr)

    @classmethod
    def identity(cls, m, n):
        return cls(m, n, tuple(range(1, m + n + 1)))

    @property
    def size(self):
        return self.m + self.n

    @cached_property
    def w(self):
        """Position map: ``w[label]`` is the 1-based position of ``label``."""
        return {label: p for p, label in enumerate(self.arrangement, start=1)}

    def is_identity(self):
        return self.arrangement == tuple(range(1, self.size + 1))

    def is_green(self, label):
        return label <= self.m

    def to_string(self):
        if self.size <= 9:
            return "".join(str(x) for x in self.arrangement)
        return ",".join(str(x) for x in self.arrangement)

    def label(self):
        """Table label: ``e`` for the identity, otherwise ``(1324)``."""
        return "e" if self.is_identity() else f"({self.to_string()})"

    def __str__(self):
        return self.to_string()


def enumerate_shuffles(m, n, cap=DEFAULT_CAP):
    """All C(m+n, m) shuffles, in lexicographic order of arrangement."""
    if m < 1 or n < 1:
        raise DomainError(f"block sizes must be positive, got m={m}, n={n}")
    if m + n > cap:
        raise EnumerationLimitError(m, n, cap)
    size = m + n
    out = []
    for green_positions in combinations(range(1, size + 1), m):
        gset = set(green_positions)
        greens = iter(range(1, m + 1))
        reds = iter(range(m + 1, size + 1))
        arr = tuple(next(greens) if p in gset else next(reds) for p in range(1, size + 1))
        out.append(Shuffle(m, n, arr))
    out.sort(key=lambda s: s.arrangement)
    return out


@dataclass(frozen=True)
class Interval:
    kind: str  # "V" (block-1 labels) or "U" (block-2 labels)
    labels: tuple
    start: int  # first position, 1-based; for an empty v_0 this is 1

    @property
    def end(self):
        return self.start + len(self.labels) - 1


@dataclass(frozen=True)
class SegmentDiagram:
    """Alternating v/u decomposition of an arrangement.

    ``intervals[0]`` is always ``v_0`` (possibly empty); afterwards the kinds
    alternate u_1, v_1, u_2, v_2, ...
    """

    m: int
    n: int
    intervals: tuple

    def v_intervals(self):
        return [iv for iv in self.intervals if iv.kind == "V"]

    def u_intervals(self):
        return [iv for iv in self.intervals if iv.kind == "U"]

    def arrangement(self):
        return tuple(x for iv in self.intervals for x in iv.labels)

    def precedes(self, a, b):
        """``a`` lies entirely to the left of ``b``."""
        return a.end < b.start


def segment_diagram(w):
    runs = []
    for label in w.arrangement:
        kind = "V" if label <= w.m else "U"
        if runs and runs[-1][0] == kind:
            runs[-1][1].append(label)
        else:
            runs.append((kind, [label]))
    if runs[0][0] == "U":
        runs.insert(0, ("V", []))
    intervals = []
    pos = 1
    for kind, labels in runs:
        intervals.append(Interval(kind, tuple(labels), pos))
        pos += len(labels)
    return SegmentDiagram(w.m, w.n, tuple(intervals))


@dataclass(frozen=True)
class InversionSet:
    pairs: frozenset
    iw: object  # smallest block-1 label in an inversion, or None

    def __len__(self):
        return len(self.pairs)


def inversions(w):
    m, size = w.m, w.size
    pos = w.w
    pairs = frozenset(
        (i, j) for i in range(1, m + 1) for j in range(m + 1, size + 1) if pos[i] > pos[j]
    )
    for i in range(1, m + 1):
        js = {j for (a, j) in pairs if a == i}
        expected = set(range(m + 1, m + pos[i] - i + 1))
        if js != expected:  # pragma: no cover - guarded by the Shuffle invariant
            raise AssertionError(f"inversions of label {i} in {w} are not contiguous")
    iw = min((i for i, _ in pairs), default=None)
    return InversionSet(pairs, iw)


@dataclass(frozen=True)
class SigmaContext:
    m: int
    n: int
    sigma: int
    s: Fraction = field(init=False)
    case: str = field(init=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError(f"block sizes must be positive, got m={self.m}, n={self.n}")
        hi = (self.m + self.n) // 2
        if not 0 <= self.sigma <= hi:
            raise DomainError(
                f"sigma={self.sigma} outside the admissible interval [0, {hi}] "
                f"for m={self.m}, n={self.n}"
            )
        object.__setattr__(self, "s", Fraction(self.m + self.n, 2) - self.sigma)
        m, n, sigma = self.m, self.n, self.sigma
        if sigma >= n and sigma <= m:
            case = "III"
        elif sigma >= m and sigma <= n:
            case = "II"
        else:
            case = "I"
        object.__setattr__(self, "case", case)

    @property
    def offset(self):
        """m+n-sigma: label i of block 1 pairs with label offset+i."""
        return self.m + self.n - self.sigma

    def paired_indices(self):
        """Block-1 labels i whose partner offset+i lies in block 2."""
        lo = max(1, self.sigma - self.n + 1)
        hi = min(self.m, self.sigma)
        return range(lo, hi + 1)

    def partner(self, i):
        return self.offset + i

    def pairs(self):
        return [(i, self.offset + i) for i in self.paired_indices()]


def sigma_context(m, n, sigma):
    return SigmaContext(m, n, sigma)
