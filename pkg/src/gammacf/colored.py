"""
Colored permutations of the wreath product Z_r wr S_n.

A colored permutation is a pair (pi, z): `pi` a 1-based one-line word and
`z` a color in 0..r-1 for each position.  The letter at position i is
written ``v^c`` (``v`` when c = 0); for r = 2 the signed form ``-v``
is also accepted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, NamedTuple, Sequence

from .perm import Permutation
from .poly import Poly

__all__ = [
    "ColoredPermutation", "OrderKind", "ColoredStats", "BExcedanceStats",
    "letter_key", "colored_stats", "cros_colored", "b_excedance_stats",
    "all_colored", "derangements_r", "D_poly", "d_poly",
    "local_distribution",
]


@dataclass(frozen=True)
class ColoredPermutation:
    pi: tuple[int, ...]
    z: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if len(self.z) != len(self.pi):
            raise ValueError("need one color per position")
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise ValueError(f"not a permutation: {self.pi}")
        if any(not 0 <= c < self.r for c in self.z):
            raise ValueError(f"colors must lie in 0..{self.r - 1}")

    @property
    def n(self) -> int:
        return len(self.pi)

    @classmethod
    def plain(cls, word: Sequence[int], r: int = 1) -> ColoredPermutation:
        return cls(tuple(word), (0,) * len(word), r)

    @classmethod
    def parse(cls, text: str, r: int) -> ColoredPermutation:
        """Parse ``"4 7^1 2 5^1 1^2 6 3"``; for r = 2 also ``"4 -7 2 -5 1 6 3"``."""
        pi, z = [], []
        for tok in text.replace(",", " ").split():
            if "^" in tok:
                v, c = tok.split("^")
                pi.append(int(v))
                z.append(int(c))
            elif tok.startswith("-"):
                if r != 2:
                    raise ValueError("signed letters are only accepted when r = 2")
                pi.append(int(tok[1:]))
                z.append(1)
            else:
                pi.append(int(tok))
                z.append(0)
        return cls(tuple(pi), tuple(z), r)

    def signed(self) -> tuple[int, ...]:
        """Signed window notation, only meaningful for r <= 2."""
        if self.r > 2:
            raise ValueError("signed values need r <= 2")
        return tuple(-v if c else v for v, c in zip(self.pi, self.z))

    def __str__(self) -> str:
        return " ".join(
            str(v) if c == 0 else f"{v}^{c}" for v, c in zip(self.pi, self.z)
        )


class OrderKind(enum.Enum):
    FRIENDS = "friends"
    COLOR = "color"
    NATURAL = "natural"


def letter_key(value: int, color: int, order: OrderKind, r: int) -> tuple:
    """Sort key realising the chosen total order on colored letters."""
    if order is OrderKind.FRIENDS:
        return (value, color)
    if order is OrderKind.COLOR:
        return (-color, value)
    if order is OrderKind.NATURAL:
        if r > 2:
            raise ValueError("the natural order is only defined for r <= 2")
        return (-value if color else value,)
    raise ValueError(order)


class ColoredStats(NamedTuple):
    exc_friends: int
    fexc: int
    exca: int
    wexa: int
    wexc: int
    fixa: int
    fixc: int
    dropa: int
    dropc: int
    csum: int
    csumw: int
    csumd: int


class BExcedanceStats(NamedTuple):
    exc_B: int
    des_B: int


def colored_stats(s: ColoredPermutation) -> ColoredStats:
    exc_f = exca = wexa = wexc = fixa = fixc = dropa = dropc = 0
    csum = csumw = csumd = 0
    for i, (v, c) in enumerate(zip(s.pi, s.z), 1):
        csum += c
        if i < v or (i == v and c > 0):
            exc_f += 1
        if i <= v:
            csumw += c
            if c == 0:
                wexa += 1
                if i == v:
                    fixa += 1
                else:
                    exca += 1
            else:
                wexc += 1
                if i == v:
                    fixc += 1
        else:
            csumd += c
            if c == 0:
                dropa += 1
            else:
                dropc += 1
    fexc = s.r * exca + csum
    return ColoredStats(exc_f, fexc, exca, wexa, wexc, fixa, fixc,
                        dropa, dropc, csum, csumw, csumd)


def cros_colored(s: ColoredPermutation) -> int:
    """Count crossing pairs (i, j) using the five clauses on (z_i, z_j)."""
    pi, z = s.pi, s.z
    n = len(pi)
    count = 0
    for i in range(1, n + 1):
        pii, zi = pi[i - 1], z[i - 1]
        for j in range(1, n + 1):
            if i == j:
                continue
            pij, zj = pi[j - 1], z[j - 1]
            if zi == 0 and zj == 0:
                if i < j <= pii < pij or pii < pij < i < j:
                    count += 1
            elif zi > 0 and zj == 0:
                if j <= pii < pij or pij < i < j:
                    count += 1
            elif zi > 0 and zj > 0:
                if i < j and pij < pii:
                    count += 1
    return count


def b_excedance_stats(s: ColoredPermutation) -> BExcedanceStats:
    """B-excedances and B-descents (sigma(0) = 0) of a signed permutation."""
    if s.r != 2:
        raise ValueError("B-excedances are defined for r = 2 only")
    sv = s.signed()

    def sigma(k: int) -> int:
        return sv[k - 1] if k > 0 else -sv[-k - 1]

    exc_b = 0
    for i in range(1, s.n + 1):
        x = sv[i - 1]
        if x < sigma(abs(x)) or x == -i:
            exc_b += 1
    padded = (0, *sv)
    des_b = sum(1 for i in range(s.n) if padded[i] > padded[i + 1])
    return BExcedanceStats(exc_b, des_b)


# ----------------------------------------------------------------------
# enumeration


def all_colored(n: int, r: int) -> Iterator[ColoredPermutation]:
    """All of Z_r wr S_n, ordered by (pi lexicographic, z lexicographic)."""
    colorings = list(product(range(r), repeat=n))
    for pi in permutations(range(1, n + 1)):
        for z in colorings:
            yield ColoredPermutation(pi, z, r)


def derangements_r(n: int, r: int) -> Iterator[ColoredPermutation]:
    """Colored permutations with no position i having pi_i = i and z_i = 0."""
    colorings = list(product(range(r), repeat=n))
    for pi in permutations(range(1, n + 1)):
        fixed = [i for i, v in enumerate(pi) if v == i + 1]
        for z in colorings:
            if all(z[i] for i in fixed):
                yield ColoredPermutation(pi, z, r)


def local_distribution(n: int, r: int, weight) -> Poly:
    """
    Distribution polynomial of a statistic that is a sum of per-position
    contributions ``weight(i, v, c)`` (an exponent, or None to forbid the
    letter), summed over Z_r wr S_n.

    Computed by dynamic programming over the set of used values, so it is
    exact and polynomial-time in 2^n rather than n! r^n.
    """
    # table[mask] = distribution over placements of positions 1..popcount(mask)
    table: dict[int, dict[int, int]] = {0: {0: 1}}
    for i in range(1, n + 1):
        nxt: dict[int, dict[int, int]] = {}
        for mask, dist in table.items():
            for v in range(1, n + 1):
                bit = 1 << (v - 1)
                if mask & bit:
                    continue
                for c in range(r):
                    e = weight(i, v, c)
                    if e is None:
                        continue
                    target = nxt.setdefault(mask | bit, {})
                    for k, cnt in dist.items():
                        target[k + e] = target.get(k + e, 0) + cnt
        table = nxt
    return Poly.from_counts(table.get((1 << n) - 1, {}))


def _derangement_weight(stat: str, r: int):
    def w(i: int, v: int, c: int):
        if v == i and c == 0:
            return None
        if stat == "fexc":
            return r * (1 if (c == 0 and i < v) else 0) + c
        return 1 if (i < v or (i == v and c > 0)) else 0
    return w


def D_poly(n: int, r: int, method: str = "dp") -> Poly:
    """sum of t^fexc over the r-colored derangements of size n."""
    if n == 0:
        return Poly.const(1)
    if method == "enumerate":
        counts: dict[int, int] = {}
        for s in derangements_r(n, r):
            k = colored_stats(s).fexc
            counts[k] = counts.get(k, 0) + 1
        return Poly.from_counts(counts)
    return local_distribution(n, r, _derangement_weight("fexc", r))


def d_poly(n: int, r: int, method: str = "dp") -> Poly:
    """sum of t^exc (friends order) over the r-colored derangements of size n."""
    if n == 0:
        return Poly.const(1)
    if method == "enumerate":
        counts: dict[int, int] = {}
        for s in derangements_r(n, r):
            k = colored_stats(s).exc_friends
            counts[k] = counts.get(k, 0) + 1
        return Poly.from_counts(counts)
    return local_distribution(n, r, _derangement_weight("exc", r))
