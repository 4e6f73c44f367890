"""
r-colored Laguerre histories and the colored Foata-Zeilberger bijection.

A history of length n is a Motzkin path (steps "NE", "E", "SE") with an
integer label (p, q) on every step.  `phi` sends a colored permutation to
its history by scanning the pignose diagram left to right: at position k
the left vertex either opens a half-arc (p <= 0, p = -color) or closes a
waiting one (p > 0, p - 1 = crossings created); the right vertex does the
same with q.  `phi_inverse` replays that state machine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .colored import ColoredPermutation, colored_stats, cros_colored
from .perm import inverse

__all__ = [
    "MotzkinPath", "LaguerreHistory", "WeightParams", "InvalidHistory",
    "validate_history", "enumerate_histories", "count_histories",
    "phi", "phi_inverse", "step_weight", "history_weight", "sigma_weight",
    "weight_sums", "coeff_formula", "construction_crossings",
]

NE, E, SE = "NE", "E", "SE"
_DELTA = {NE: 1, E: 0, SE: -1}


class InvalidHistory(ValueError):
    pass


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[str, ...]

    @property
    def heights(self) -> tuple[int, ...]:
        """h_0 = 0, then the height after each step."""
        hs = [0]
        for s in self.steps:
            hs.append(hs[-1] + _DELTA[s])
        return tuple(hs)

    def is_valid(self) -> bool:
        hs = self.heights
        return all(s in _DELTA for s in self.steps) and min(hs) >= 0 and hs[-1] == 0


@dataclass(frozen=True)
class LaguerreHistory:
    path: MotzkinPath
    labels: tuple[tuple[int, int], ...]
    r: int

    @classmethod
    def build(cls, steps: Sequence[str], labels: Sequence[Sequence[int]], r: int):
        return cls(MotzkinPath(tuple(steps)), tuple((int(p), int(q)) for p, q in labels), r)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def steps(self) -> tuple[str, ...]:
        return self.path.steps

    def to_json(self) -> dict:
        return {"steps": list(self.steps), "labels": [list(l) for l in self.labels], "r": self.r}

    @classmethod
    def from_json(cls, doc: dict | str) -> LaguerreHistory:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls.build(doc["steps"], doc["labels"], doc["r"])

    def ascii(self) -> str:
        """One line per step: index, step, height before, label."""
        hs = self.path.heights
        return "\n".join(
            f"{k + 1:>3} {s:<2} h={hs[k]} {lab}"
            for k, (s, lab) in enumerate(zip(self.steps, self.labels))
        )


@dataclass(frozen=True)
class WeightParams:
    q: Any = 1
    t: Any = 1
    tt: Any = 1
    w: Any = 1
    wt: Any = 1
    x: Any = 1
    xt: Any = 1
    y: Any = 1
    yt: Any = 1


def _label_ok(step: str, h: int, p: int, q: int, r: int) -> bool:
    lo = -(r - 1)
    if step == NE:
        return lo <= p <= 0 and lo <= q <= 0
    if step == E:
        return (1 <= p <= h and lo <= q <= 0) or (lo <= p <= 0 and 1 <= q <= h + 1)
    if step == SE:
        return 1 <= p <= h and 1 <= q <= h
    return False


def validate_history(hist: LaguerreHistory) -> tuple[bool, str | None]:
    """Return (True, None) or (False, description of the first violation)."""
    if len(hist.steps) != len(hist.labels):
        return False, "path length and label count differ"
    h = 0
    for k, (step, (p, q)) in enumerate(zip(hist.steps, hist.labels), 1):
        if step not in _DELTA:
            return False, f"step {k}: unknown direction {step!r}"
        if not _label_ok(step, h, p, q, hist.r):
            return False, f"step {k}: label {(p, q)} not allowed for {step} at height {h}"
        h += _DELTA[step]
        if h < 0:
            return False, f"step {k}: path goes below zero"
    if h != 0:
        return False, f"path ends at height {h}"
    return True, None


def _labels_for(step: str, h: int, r: int) -> list[tuple[int, int]]:
    nonpos = range(-(r - 1), 1)
    if step == NE:
        return [(p, q) for p in nonpos for q in nonpos]
    if step == E:
        return ([(p, q) for p in range(1, h + 1) for q in nonpos]
                + [(p, q) for p in nonpos for q in range(1, h + 2)])
    return [(p, q) for p in range(1, h + 1) for q in range(1, h + 1)]


def _raw_histories(n: int, r: int) -> Iterator[tuple[tuple[str, ...], tuple]]:
    steps: list[str] = []
    labels: list[tuple[int, int]] = []

    def rec(k: int, h: int):
        if k == n:
            if h == 0:
                yield tuple(steps), tuple(labels)
            return
        left = n - k
        for step in (NE, E, SE):
            nh = h + _DELTA[step]
            if nh < 0 or nh > left - 1:
                continue
            for lab in _labels_for(step, h, r):
                steps.append(step)
                labels.append(lab)
                yield from rec(k + 1, nh)
                steps.pop()
                labels.pop()

    yield from rec(0, 0)


def enumerate_histories(n: int, r: int) -> Iterator[LaguerreHistory]:
    """All r-colored Laguerre histories of length n, in a fixed order."""
    for steps, labels in _raw_histories(n, r):
        yield LaguerreHistory(MotzkinPath(steps), labels, r)


def count_histories(n: int, r: int) -> int:
    return sum(1 for _ in _raw_histories(n, r))


# ----------------------------------------------------------------------
# the bijection


def phi(s: ColoredPermutation) -> LaguerreHistory:
    pi, z, n = s.pi, s.z, s.n
    ell_of = inverse(pi)  # ell_of[k-1] = position whose value is k
    steps: list[str] = []
    labels: list[tuple[int, int]] = []
    for k in range(1, n + 1):
        pk, zk = pi[k - 1], z[k - 1]
        if k <= pk:
            p = -zk
        elif zk == 0:
            p = 1 + sum(1 for j in range(k + 1, n + 1)
                        if z[j - 1] == 0 and pk < pi[j - 1] < k)
        else:
            p = 1 + sum(1 for j in range(k + 1, n + 1)
                        if pi[j - 1] < k and (z[j - 1] == 0 or pi[j - 1] < pk))
        ell = ell_of[k - 1]
        zl = z[ell - 1]
        if ell > k:
            q = -zl
        elif zl == 0:
            q = 1 + sum(1 for j in range(ell + 1, k + 1)
                        if z[j - 1] == 0 and pi[j - 1] > k)
        else:
            q = 1 + sum(1 for j in range(1, k + 1)
                        if pi[j - 1] > k and j <= pi[j - 1]
                        and (z[j - 1] == 0 or j < ell))
        positive = (p > 0) + (q > 0)
        steps.append((NE, E, SE)[positive])
        labels.append((p, q))
    return LaguerreHistory(MotzkinPath(tuple(steps)), tuple(labels), s.r)


def _pick(open_arcs: list[tuple[int, int]], rank: int) -> int:
    """
    Index into `open_arcs` (opening order, entries (vertex, color)) of the
    arc whose closing creates exactly `rank` crossings: uncolored arcs
    count the uncolored arcs opened after them; colored arcs count every
    uncolored arc plus the colored arcs opened before them.
    """
    uncolored = [i for i, (_, c) in enumerate(open_arcs) if c == 0]
    colored = [i for i, (_, c) in enumerate(open_arcs) if c > 0]
    if rank < len(uncolored):
        return uncolored[len(uncolored) - 1 - rank]
    rank -= len(uncolored)
    if rank < len(colored):
        return colored[rank]
    raise InvalidHistory(f"no open half-arc of rank {rank}")


def phi_inverse(hist: LaguerreHistory) -> ColoredPermutation:
    ok, why = validate_history(hist)
    if not ok:
        raise InvalidHistory(why)
    n = hist.n
    pi = [0] * n
    z = [0] * n
    wait_left: list[tuple[int, int]] = []  # opened at a right vertex
    wait_right: list[tuple[int, int]] = []  # opened at a left vertex
    for k, (p, q) in enumerate(hist.labels, 1):
        if p <= 0:
            wait_right.append((k, -p))
        else:
            j, c = wait_left.pop(_pick(wait_left, p - 1))
            pi[k - 1], z[k - 1] = j, c
        if q <= 0:
            wait_left.append((k, -q))
        else:
            i, c = wait_right.pop(_pick(wait_right, q - 1))
            pi[i - 1], z[i - 1] = k, c
    if wait_left or wait_right:
        raise InvalidHistory("half-arcs left open")
    return ColoredPermutation(tuple(pi), tuple(z), hist.r)


def construction_crossings(hist: LaguerreHistory) -> int:
    """Crossings accumulated while building the pignose diagram step by step."""
    total = 0
    hs = hist.path.heights
    for k, (p, q) in enumerate(hist.labels):
        h = hs[k]
        if p > 0:
            total += p - 1
        elif p < 0:
            total += h
        if q > 0:
            total += q - 1
        elif q < 0:
            total += h if p > 0 else h + 1
    return total


# ----------------------------------------------------------------------
# weights


def _wl(zz: int, h: int, wp: WeightParams) -> Any:
    if zz > 0:
        return wp.q ** (zz - 1)
    if zz == 0:
        return wp.t
    return wp.w * wp.y ** (-zz) * wp.q ** h


def _wr(zz: int, h: int, wp: WeightParams) -> Any:
    if zz > 0:
        return wp.q ** (zz - 1)
    if zz == 0:
        return wp.tt
    return wp.wt * wp.yt ** (-zz) * wp.q ** h


def step_weight(h: int, p: int, q: int, wp: WeightParams, rule: str = "corrected") -> Any:
    """
    Weight of a step of starting height h with label (p, q).

    ``rule="corrected"`` marks fixed points at (0, 1) and (p < 0, h + 1);
    ``rule="printed"`` uses the alternative (0, 0) and (0, h + 1) cases,
    kept only to show that they do not reproduce the coefficient formulas.
    """
    if p > 0:
        return _wl(p, h, wp) * _wr(q, h, wp)
    base = _wl(p, h, wp) * _wr(q, h + 1, wp)
    if rule == "corrected":
        if p == 0 and q == 1:
            return wp.x * base
        if p < 0 and q == h + 1:
            return wp.xt * base
    elif rule == "printed":
        if (p, q) == (0, 0):
            return wp.x * base
        if (p, q) == (0, h + 1):
            return wp.xt * base
    else:
        raise ValueError(rule)
    return base


def history_weight(hist: LaguerreHistory, wp: WeightParams, rule: str = "corrected") -> Any:
    hs = hist.path.heights
    acc: Any = 1
    for k, (p, q) in enumerate(hist.labels):
        acc = acc * step_weight(hs[k], p, q, wp, rule)
    return acc


def sigma_weight(s: ColoredPermutation, wp: WeightParams) -> Any:
    st = colored_stats(s)
    return (wp.q ** cros_colored(s) * wp.t ** st.wexa * wp.tt ** st.dropa
            * wp.w ** st.wexc * wp.wt ** st.dropc * wp.x ** st.fixa
            * wp.xt ** st.fixc * wp.y ** st.csumw * wp.yt ** st.csumd)


def weight_sums(h: int, r: int, wp: WeightParams, rule: str = "corrected"):
    """Sum of step weights over all admissible labels: (NE, E, SE) at height h."""
    def total(step: str) -> Any:
        acc: Any = 0
        for p, q in _labels_for(step, h, r):
            acc = acc + step_weight(h, p, q, wp, rule)
        return acc
    return total(NE), total(E), total(SE)


def coeff_formula(h: int, r: int, wp: WeightParams):
    """Closed-form (a_h, b_h, c_h) of the nine-parameter continued fraction."""
    from .cfrac import _wreath_abc
    params = dict(r=r, q=wp.q, t=wp.t, tt=wp.tt, w=wp.w, wt=wp.wt,
                  x=wp.x, xt=wp.xt, y=wp.y, yt=wp.yt)
    return _wreath_abc(h, params)
