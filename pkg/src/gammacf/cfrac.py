"""
Jacobi continued fractions and their moments.

    sum_n mu_n z^n = 1 / (1 - b_0 z - lam_1 z^2 / (1 - b_1 z - lam_2 z^2 / ...))

The coefficients may be elements of any exact commutative ring that supports
``+``, ``*`` and ``**`` (ints, Fractions, `Poly`, sympy expressions).
Moments are computed by a height-indexed transfer over weighted Motzkin
paths; `jacobi_rogers` evaluates the closed multi-sum as an independent
route.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterator, Mapping, Sequence

from .poly import Poly, binomial, q_int

__all__ = [
    "JFraction", "CFFamily", "Family", "jf_moments", "jacobi_rogers",
    "family_jfraction", "qint_at", "pqint_at", "FAMILY_PARAMS",
]


@dataclass(frozen=True)
class JFraction:
    b: tuple  # b_0 .. b_H
    lam: tuple  # lam_1 .. lam_H

    @property
    def height(self) -> int:
        return min(len(self.b) - 1, len(self.lam))

    def lam_at(self, h: int) -> Any:
        return self.lam[h - 1]


def _one_like(values: Sequence[Any]) -> Any:
    for v in values:
        if not isinstance(v, int):
            return v ** 0
    return 1


def jf_moments(jf: JFraction, N: int) -> list:
    """mu_0 .. mu_N as weighted sums over Motzkin paths."""
    need = N // 2
    if len(jf.b) < min(need + 1, N) or len(jf.lam) < need:
        raise ValueError(
            f"order {N} needs b_0..b_{need} and lam_1..lam_{need}; "
            f"got {len(jf.b)} and {len(jf.lam)}"
        )
    one = _one_like(list(jf.b) + list(jf.lam))
    v: list[Any] = [one]
    moments = [one]
    for step in range(1, N + 1):
        top = min(step, N - step)
        new: list[Any] = []
        for h in range(top + 1):
            acc: Any = 0
            if 1 <= h <= len(v):
                acc = acc + v[h - 1]
            if h < len(v):
                acc = acc + v[h] * jf.b[h]
            if h + 1 < len(v):
                acc = acc + v[h + 1] * jf.lam[h]
            new.append(acc)
        v = new
        moments.append(v[0])
    return moments


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first, *rest)


def jacobi_rogers(jf: JFraction, n: int) -> Any:
    """
    mu_n = sum over h, n_0..n_(h-1) >= 1, m_0..m_h >= 0 with
    2 sum(n) + sum(m) = n of b^m lam^n rho(n, m), where

        rho = prod_j C(n_j + n_(j+1) - 1, n_j - 1)
              * prod_l C(m_l + n_l + n_(l-1) - 1, m_l)

    and n_(-1) = 1, n_h = 0.
    """
    one = _one_like(list(jf.b) + list(jf.lam))
    total: Any = 0
    for h in range(n // 2 + 1):
        for ns in _compositions_upto(n, h):
            rest = n - 2 * sum(ns)
            ext = {-1: 1, h: 0}

            def nn(j: int) -> int:
                return ext[j] if j in ext else ns[j]

            rho_n = 1
            for j in range(h):
                rho_n *= binomial(nn(j) + nn(j + 1) - 1, nn(j) - 1)
            if rho_n == 0:
                continue
            lam_part: Any = one
            for j in range(h):
                lam_part = lam_part * jf.lam[j] ** ns[j]
            for ms in _compositions(rest, h + 1, 0):
                rho = rho_n
                for l in range(h + 1):
                    rho *= binomial(ms[l] + nn(l) + nn(l - 1) - 1, ms[l])
                if rho == 0:
                    continue
                term: Any = lam_part
                for l in range(h + 1):
                    if ms[l]:
                        term = term * jf.b[l] ** ms[l]
                total = total + term * rho
    return total if n else one


def _compositions_upto(n: int, h: int) -> Iterator[tuple[int, ...]]:
    """Tuples (n_0..n_(h-1)) of positive ints with 2*sum <= n."""
    if h == 0:
        yield ()
        return
    for s in range(h, n // 2 + 1):
        yield from _compositions(s, h, 1)


# ----------------------------------------------------------------------
# coefficient families


def qint_at(h: int, q: Any) -> Any:
    """[h]_q evaluated at a ring element q."""
    acc: Any = 0
    power: Any = q ** 0
    for _ in range(h):
        acc = acc + power
        power = power * q
    return acc


def pqint_at(h: int, p: Any, q: Any) -> Any:
    """[h]_{p,q} = sum_{i<h} p^i q^(h-1-i) at ring elements p, q."""
    acc: Any = 0
    for i in range(h):
        acc = acc + p ** i * q ** (h - 1 - i)
    return acc


class Family(enum.Enum):
    SZ12_A = "sz12-a"
    B_FULL = "b-full"
    DERANGE_D = "derange-D"
    DERANGE_d = "derange-d"
    WREATH = "wreath"
    R_EULER = "r-euler"


FAMILY_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.SZ12_A: ("p", "q", "t", "u", "v", "w"),
    Family.B_FULL: ("p", "q", "t", "u", "v", "w", "y"),
    Family.DERANGE_D: ("r", "t"),
    Family.DERANGE_d: ("r", "t"),
    Family.WREATH: ("r", "q", "t", "tt", "w", "wt", "x", "xt", "y", "yt"),
    Family.R_EULER: ("r",),
}


@dataclass(frozen=True)
class CFFamily:
    tag: Family
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        want = set(FAMILY_PARAMS[self.tag])
        extra = set(self.params) - want
        if extra:
            raise ValueError(f"{self.tag.value}: unknown parameters {sorted(extra)}")
        missing = want - set(self.params)
        if self.tag in (Family.DERANGE_D, Family.DERANGE_d):
            missing -= {"t"}
        if missing:
            raise ValueError(f"{self.tag.value}: missing parameters {sorted(missing)}")


def _wreath_abc(h: int, P: Mapping[str, Any]):
    r, q = P["r"], P["q"]
    t, tt, w, wt = P["t"], P["tt"], P["w"], P["wt"]
    x, xt, y, yt = P["x"], P["xt"], P["y"], P["yt"]
    ry, ryt = qint_at(r - 1, y), qint_at(r - 1, yt)
    qh = qint_at(h, q)
    a = (t + w * y * ry * q ** h) * (tt + wt * yt * ryt * q ** (h + 1))
    b = ((tt + wt * yt * ryt * q ** h) * qh + t * (x + q * qh)
         + w * y * ry * q ** h * (qh + xt * q ** h))
    c = qh * qh
    return a, b, c


def family_jfraction(fam: CFFamily, order: int) -> JFraction:
    """Materialise (b_h, lam_h) for heights needed up to moment `order`."""
    H = order // 2 + 1
    P = fam.params
    bs: list[Any] = []
    lams: list[Any] = []
    tag = fam.tag
    if tag is Family.SZ12_A:
        p, q, t, u, v, w = (P[k] for k in FAMILY_PARAMS[tag])
        for h in range(H + 1):
            bs.append((u + t * v) * pqint_at(h + 1, p, q))
            if h:
                lams.append(pqint_at(h, p, q) * pqint_at(h + 1, p, q) * t * w)
    elif tag is Family.B_FULL:
        p, q, t, u, v, w, y = (P[k] for k in FAMILY_PARAMS[tag])
        for h in range(H + 1):
            bs.append(y * p ** h + (q * u + t * v) * pqint_at(h, p, q))
            if h:
                # a_(h-1) c_h with a_h = t w [h+1]_{p,q}, c_h = [h]_{p,q}
                lams.append(t * w * pqint_at(h, p, q) * pqint_at(h, p, q))
    elif tag is Family.DERANGE_D:
        r = P["r"]
        t = P.get("t", Poly.gen())
        rm1, rr = qint_at(r - 1, t), qint_at(r, t)
        for h in range(H + 1):
            bs.append(t * rm1 + (1 + t) * rr * h)
            if h:
                lams.append(t * rr * rr * (h * h))
    elif tag is Family.DERANGE_d:
        r = P["r"]
        t = P.get("t", Poly.gen())
        for h in range(H + 1):
            bs.append(t * (r - 1) + (1 + t) * (r * h))
            if h:
                lams.append(t * (r * h) ** 2)
    elif tag is Family.WREATH:
        prev_a = None
        for h in range(H + 1):
            a, b, c = _wreath_abc(h, P)
            bs.append(b)
            if h:
                lams.append(prev_a * c)
            prev_a = a
    elif tag is Family.R_EULER:
        r = P["r"]
        for h in range(H + 1):
            bs.append((2 * h + 1) * r)
            if h:
                lams.append(r * r * h * h)
    else:
        raise ValueError(tag)
    return JFraction(tuple(bs), tuple(lams))
