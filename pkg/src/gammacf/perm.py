"""
Permutations of [n] and their linear, cyclic, crossing and pattern statistics.

Words are 1-based: a permutation of size n is a tuple holding each of
1..n exactly once.  Statistic functions accept any such sequence; the
`Permutation` wrapper only adds parsing, printing and validation.

>>> s = Permutation.parse("9 3 7 4 6 10 5 8 1 2")
>>> crossing_stats(s)
CrossingStats(cros=5, nest=10)
"""

from __future__ import annotations

import enum
from itertools import permutations
from typing import Callable, Iterator, NamedTuple, Sequence

__all__ = [
    "Permutation", "BoundaryConvention",
    "LinearStats", "CrossingStats", "CyclicStats", "BoundaryStats",
    "PatternStats", "VincularCounts",
    "linear_stats", "crossing_stats", "cyclic_stats", "boundary_stats",
    "pattern_stats", "vincular_counts", "fmax", "inverse",
    "des", "maj", "inv", "exc", "drop", "fix", "dd_sigma0",
    "all_permutations", "class_DD", "class_DE", "class_Snkj",
    "class_Snkj_star", "class_coderangements", "class_derangements",
    "MATERIALIZE_MAX",
]

Word = Sequence[int]

# class lists above this size are returned as lazy iterators
MATERIALIZE_MAX = 9


class Permutation(tuple):
    """One-line word of a permutation of [n], 1-based."""

    def __new__(cls, word: Sequence[int] = ()):
        self = super().__new__(cls, word)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of [{len(self)}]: {tuple(word)}")
        return self

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(int(tok) for tok in text.replace(",", " ").split())

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> Permutation:
        return Permutation(inverse(self))

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


class BoundaryConvention(enum.Enum):
    PAD_ZERO_ZERO = "0,0"  # sigma(0) = sigma(n+1) = 0
    PAD_ZERO_NP1 = "0,n+1"  # sigma(0) = 0, sigma(n+1) = n+1
    PAD_RIGHT_ZERO = "right0"  # sigma(n+1) = 0, positions 1 < i <= n


class LinearStats(NamedTuple):
    des: int
    maj: int
    inv: int
    exc: int
    drop: int
    fix: int
    wex: int


class CrossingStats(NamedTuple):
    cros: int
    nest: int


class CyclicStats(NamedTuple):
    cpeak: int
    cvalley: int
    cda: int
    cdd: int
    fix: int


class BoundaryStats(NamedTuple):
    peak: int
    valley: int
    da: int
    dd: int


class PatternStats(NamedTuple):
    res: int
    res2: int
    les: int
    les2: int


class VincularCounts(NamedTuple):
    p132: int  # occurrences of 13-2
    p231: int  # occurrences of 2-31


def inverse(w: Word) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, v in enumerate(w, 1):
        out[v - 1] = i
    return tuple(out)


# ----------------------------------------------------------------------
# linear statistics


def des(w: Word) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj(w: Word) -> int:
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inv(w: Word) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def exc(w: Word) -> int:
    return sum(1 for i, v in enumerate(w, 1) if i < v)


def drop(w: Word) -> int:
    return sum(1 for i, v in enumerate(w, 1) if i > v)


def fix(w: Word) -> int:
    return sum(1 for i, v in enumerate(w, 1) if i == v)


def linear_stats(w: Word) -> LinearStats:
    e, f = exc(w), fix(w)
    return LinearStats(des(w), maj(w), inv(w), e, drop(w), f, e + f)


# ----------------------------------------------------------------------
# arc-diagram statistics


def crossing_stats(w: Word) -> CrossingStats:
    n = len(w)
    cros = nest = 0
    for i in range(1, n + 1):
        si = w[i - 1]
        for j in range(1, n + 1):
            sj = w[j - 1]
            if i < j:
                if j <= si < sj:
                    cros += 1
                elif j <= sj < si:
                    nest += 1
            elif i > j:
                if j > si > sj:
                    cros += 1
                elif j > sj > si:
                    nest += 1
    return CrossingStats(cros, nest)


def cyclic_stats(w: Word) -> CyclicStats:
    """Classify each value x by comparing sigma^-1(x), x and sigma(x)."""
    winv = inverse(w)
    cpeak = cvalley = cda = cdd = fx = 0
    for x in range(1, len(w) + 1):
        before, after = winv[x - 1], w[x - 1]
        if after == x:
            fx += 1
        elif before < x:
            if x > after:
                cpeak += 1
            else:
                cda += 1
        else:
            if x < after:
                cvalley += 1
            else:
                cdd += 1
    return CyclicStats(cpeak, cvalley, cda, cdd, fx)


# ----------------------------------------------------------------------
# peaks, valleys and double ascents/descents of the padded word


def boundary_stats(w: Word, conv: BoundaryConvention) -> BoundaryStats:
    n = len(w)
    if conv is BoundaryConvention.PAD_ZERO_ZERO:
        padded, lo = (0, *w, 0), 1
    elif conv is BoundaryConvention.PAD_ZERO_NP1:
        padded, lo = (0, *w, n + 1), 1
    elif conv is BoundaryConvention.PAD_RIGHT_ZERO:
        padded, lo = (0, *w, 0), 2
    else:
        raise ValueError(conv)
    peak = valley = da = dd = 0
    for i in range(lo, n + 1):
        a, b, c = padded[i - 1], padded[i], padded[i + 1]
        if a < b > c:
            peak += 1
        elif a > b < c:
            valley += 1
        elif a < b < c:
            da += 1
        else:
            dd += 1
    return BoundaryStats(peak, valley, da, dd)


def dd_sigma0(w: Word) -> int:
    """Double descents of the word sigma(1)...sigma(n)0 at positions 1 < i <= n."""
    n = len(w)
    count = 0
    for i in range(1, n):
        nxt = w[i + 1] if i + 1 < n else 0
        if w[i - 1] > w[i] > nxt:
            count += 1
    return count


def fmax(w: Word) -> int:
    """Double ascents (with sigma(0)=0, sigma(n+1)=n+1) that are left-to-right maxima."""
    n = len(w)
    padded = (0, *w, n + 1)
    best = 0
    count = 0
    for i in range(1, n + 1):
        b = padded[i]
        if padded[i - 1] < b < padded[i + 1] and b > best:
            count += 1
        best = max(best, b)
    return count


# ----------------------------------------------------------------------
# pattern statistics


def pattern_stats(w: Word) -> PatternStats:
    n = len(w)
    res = res2 = les = les2 = 0
    # res / res': 1 <= i < j <= n-1, compare sigma(i) with the pair (j, j+1)
    for j in range(1, n - 1):
        lo, hi = w[j], w[j + 1]
        for i in range(j):
            v = w[i]
            if hi > v > lo:
                res += 1
            elif hi < v < lo:
                res2 += 1
    # les / les': 2 <= i < j <= n, compare sigma(j) with the pair (i-1, i)
    for i in range(1, n):
        a, b = w[i - 1], w[i]
        for j in range(i + 1, n):
            v = w[j]
            if a > v > b:
                les += 1
            elif a < v < b:
                les2 += 1
    return PatternStats(res, res2, les, les2)


def vincular_counts(w: Word) -> VincularCounts:
    n = len(w)
    p132 = p231 = 0
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        for j in range(i + 2, n):
            if a < w[j] < b:
                p132 += 1
    for j in range(1, n - 1):
        b, c = w[j], w[j + 1]
        for i in range(j):
            if c < w[i] < b:
                p231 += 1
    return VincularCounts(p132, p231)


# ----------------------------------------------------------------------
# enumeration and distinguished classes


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    for w in permutations(range(1, n + 1)):
        yield tuple.__new__(Permutation, w)


def _select(n: int, pred: Callable[[Word], bool]):
    it = (w for w in all_permutations(n) if pred(w))
    return list(it) if n <= MATERIALIZE_MAX else it


def class_DD(n: int, k: int):
    """des = k and no double descent in sigma 0."""
    return _select(n, lambda w: des(w) == k and dd_sigma0(w) == 0)


def class_DE(n: int, k: int):
    """Derangements with k excedances and no cyclic double ascent."""
    return _select(
        n, lambda w: exc(w) == k and fix(w) == 0 and cyclic_stats(w).cda == 0
    )


def class_Snkj(n: int, k: int, j: int):
    """cvalley = k, fix = j and cda = 0."""
    def pred(w):
        c = cyclic_stats(w)
        return c.cvalley == k and c.fix == j and c.cda == 0
    return _select(n, pred)


def class_Snkj_star(n: int, k: int, j: int):
    """Every double ascent is a foremaximum, valley = k and da = j."""
    def pred(w):
        b = boundary_stats(w, BoundaryConvention.PAD_ZERO_NP1)
        return b.valley == k and b.da == j and fmax(w) == b.da
    return _select(n, pred)


def class_coderangements(n: int):
    return _select(n, lambda w: fmax(w) == 0)


def class_derangements(n: int):
    return _select(n, lambda w: fix(w) == 0)
