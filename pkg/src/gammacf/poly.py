"""
Exact dense polynomials, truncated power series and basis expansions.

`Poly` is a univariate polynomial whose coefficients may be any exact ring
elements: Python ints, `fractions.Fraction`, or other `Poly` objects.  A
`Poly` with `Poly` coefficients is a bivariate polynomial (`BiPoly`); the
outer variable is the one the top-level coefficient list is indexed by.

>>> t = Poly.gen()
>>> (1 + t) ** 3
Poly([1, 3, 3, 1])
>>> gamma_expand(Poly([1, 11, 11, 1]), 3).gammas
(1, 8)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Iterable, Sequence

__all__ = [
    "Poly", "IntPoly", "BiPoly", "TruncSeries", "GammaVector",
    "NotGammaExpressible", "NotExpressible",
    "q_int", "pq_int", "gamma_expand", "gamma_reconstruct",
    "expand_SZ_basis", "eval_AS_form",
    "series_exp", "series_mul", "series_add", "series_scale_poly",
    "is_symmetric", "is_unimodal", "is_strictly_unimodal_to", "is_spiral",
    "poly_to_json", "poly_from_json", "bipoly_to_json", "bipoly_from_json",
]


def _is_zero(c: Any) -> bool:
    return c == 0


class Poly:
    """Immutable dense polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def gen(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: Any) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_counts(cls, counts: dict[int, Any]) -> Poly:
        """Build `sum c * t**k` from a `{k: c}` mapping."""
        if not counts:
            return cls()
        cs: list[Any] = [0] * (max(counts) + 1)
        for k, c in counts.items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            cs[k] = cs[k] + c
        return cls(cs)

    # basic protocol

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, Poly) else str(c)
            if k == 0:
                terms.append(cs)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    # arithmetic

    def _coerce(self, other: Any) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other: Any) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            out: list[Any] = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if _is_zero(x):
                    continue
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Any) -> Poly:
        """Multiply every coefficient by the ring element `c`."""
        return Poly(x * c for x in self.coeffs)

    def shift(self, k: int) -> Poly:
        """Multiply by `t**k`."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def inflate(self, r: int) -> Poly:
        """Substitute `t -> t**r`."""
        if r == 1 or not self.coeffs:
            return self
        out: list[Any] = [0] * (r * self.degree + 1)
        for k, c in enumerate(self.coeffs):
            out[r * k] = c
        return Poly(out)

    def __call__(self, x: Any) -> Any:
        """Evaluate by Horner's rule at any ring element `x`."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, f) -> Poly:
        return Poly(f(c) for c in self.coeffs)

    def divmod_monic(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Long division by a divisor whose leading coefficient is 1."""
        if not divisor.coeffs or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return Poly(), Poly(rem)
        quot: list[Any] = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if _is_zero(c):
                continue
            quot[k - d] = c
            for i, dc in enumerate(divisor.coeffs):
                rem[k - d + i] = rem[k - d + i] - c * dc
        return Poly(quot), Poly(rem[:d])

    def divisible_by(self, divisor: Poly) -> bool:
        return not self.divmod_monic(divisor)[1]


IntPoly = Poly
BiPoly = Poly


def q_int(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly([1] * n)


def pq_int(n: int) -> Poly:
    """[n]_{p,q} = sum p^i q^(n-1-i), as a polynomial in p over Z[q]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(Poly.monomial(n - 1 - i) for i in range(n))


# ----------------------------------------------------------------------
# basis expansions


class NotExpressible(ValueError):
    """Triangular peeling left a nonzero residual."""

    def __init__(self, message: str, residual: Poly):
        super().__init__(f"{message}; residual {residual!r}")
        self.residual = residual


class NotGammaExpressible(NotExpressible):
    pass


@dataclass(frozen=True)
class GammaVector:
    center2: int
    gammas: tuple

    def reconstruct(self) -> Poly:
        return gamma_reconstruct(self.gammas, self.center2)


def gamma_reconstruct(gammas: Sequence[Any], d: int) -> Poly:
    t = Poly.gen()
    total = Poly()
    for k, g in enumerate(gammas):
        if _is_zero(g):
            continue
        total = total + (t ** k * (1 + t) ** (d - 2 * k)).scale(g)
    return total


def gamma_expand(p: Poly, d: int) -> GammaVector:
    """
    Coefficients of `p` in the basis t^k (1+t)^(d-2k), k = 0..floor(d/2).

    Works over any coefficient ring.  Raises NotGammaExpressible with the
    leftover residual when `p` is not in the span (for instance, when it is
    not symmetric about d/2).
    """
    if p.degree > d:
        raise NotGammaExpressible(f"degree {p.degree} exceeds {d}", p)
    t = Poly.gen()
    residual = p
    gammas = []
    for k in range(d // 2 + 1):
        g = residual[k]
        gammas.append(g)
        if not _is_zero(g):
            residual = residual - (t ** k * (1 + t) ** (d - 2 * k)).scale(g)
    if residual:
        raise NotGammaExpressible("not in the gamma basis", residual)
    return GammaVector(d, tuple(gammas))


def expand_SZ_basis(p: Poly, n: int) -> tuple:
    """Coefficients of `p` in the basis t^k (1+t^2)^(n-k), k = 0..n."""
    if p.degree > 2 * n:
        raise NotExpressible(f"degree {p.degree} exceeds {2 * n}", p)
    one_t2 = Poly([1, 0, 1])
    residual = p
    out = []
    for k in range(n + 1):
        c = residual[k]
        out.append(c)
        if not _is_zero(c):
            residual = residual - (one_t2 ** (n - k)).shift(k).scale(c)
    if residual:
        raise NotExpressible("not in the t^k(1+t^2)^(n-k) basis", residual)
    return tuple(out)


def eval_AS_form(coeffs: Sequence[Any], n: int) -> Poly:
    """sum_k coeffs[k] * t^ceil(k/2) * (1+t)^(n-k)."""
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    one_t = Poly([1, 1])
    total = Poly()
    for k, c in enumerate(coeffs):
        if _is_zero(c):
            continue
        total = total + (one_t ** (n - k)).shift((k + 1) // 2).scale(c)
    return total


# ----------------------------------------------------------------------
# truncated series in z with coefficients in Q[t]


class TruncSeries:
    """Power series sum_n c_n(t) z^n truncated after z^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Any], order: int):
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [Poly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_egf(cls, terms: Sequence[Any], order: int) -> TruncSeries:
        """Series sum_n terms[n] z^n / n!."""
        out = []
        fact = 1
        for n in range(order + 1):
            if n:
                fact *= n
            c = terms[n] if n < len(terms) else 0
            c = c if isinstance(c, Poly) else Poly.const(c)
            out.append(c.scale(Fraction(1, fact)))
        return cls(out, order)

    @classmethod
    def exp_linear(cls, c: Any, order: int) -> TruncSeries:
        """exp(c z) for a constant c in Q[t]."""
        c = c if isinstance(c, Poly) else Poly.const(c)
        out = []
        power = Poly.const(1)
        fact = 1
        for n in range(order + 1):
            if n:
                fact *= n
                power = power * c
            out.append(power.scale(Fraction(1, fact)))
        return cls(out, order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return series_add(self, series_scale_poly(other, Poly.const(-1)))

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return series_mul(self, other)

    def first_mismatch(self, other: TruncSeries) -> int | None:
        m = min(self.order, other.order)
        for n in range(m + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    order = min(a.order, b.order)
    return TruncSeries((a[n] + b[n] for n in range(order + 1)), order)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = Poly()
        for k in range(n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return TruncSeries(out, order)


def series_scale_poly(a: TruncSeries, p: Poly) -> TruncSeries:
    return TruncSeries((c * p for c in a.coeffs), a.order)


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) for a series with zero constant term."""
    if a[0]:
        raise ValueError("series_exp needs a zero constant term")
    order = a.order
    f = [Poly.const(1)]
    for n in range(1, order + 1):
        acc = Poly()
        for k in range(1, n + 1):
            if a[k]:
                acc = acc + (a[k] * f[n - k]).scale(k)
        f.append(acc.scale(Fraction(1, n)))
    return TruncSeries(f, order)


# ----------------------------------------------------------------------
# coefficient-sequence shape checks


def _seq(p: Poly | Sequence[Any]) -> list:
    return list(p.coeffs) if isinstance(p, Poly) else list(p)


def is_symmetric(p: Poly | Sequence[Any], d: int) -> bool:
    """True iff the coefficients satisfy c_k = c_(d-k) and deg <= d."""
    cs = _seq(p)
    if len(cs) - 1 > d:
        return False
    cs += [0] * (d + 1 - len(cs))
    return all(cs[k] == cs[d - k] for k in range(d + 1))


def is_unimodal(p: Poly | Sequence[Any]) -> bool:
    """Weakly increasing up to some index, weakly decreasing after it."""
    cs = _seq(p)
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i >= len(cs) - 1


def is_strictly_unimodal_to(p: Poly | Sequence[Any], m: int) -> bool:
    """c_0 < c_1 < ... < c_m (missing coefficients count as zero)."""
    cs = _seq(p)
    cs += [0] * (m + 1 - len(cs))
    return all(cs[k] < cs[k + 1] for k in range(m))


def is_spiral(coeffs: Poly | Sequence[Any], n: int) -> bool:
    """
    d_k < d_(n-k) < d_(k+1) for 0 <= k < floor(n/2), and additionally
    d_floor(n/2) < d_ceil(n/2) when n is odd.
    """
    cs = _seq(coeffs)
    cs += [0] * (n + 1 - len(cs))
    for k in range(n // 2):
        if not cs[k] < cs[n - k] < cs[k + 1]:
            return False
    if n % 2 == 1 and not cs[n // 2] < cs[(n + 1) // 2]:
        return False
    return True


# ----------------------------------------------------------------------
# JSON


def _json_coeff(c: Any) -> Any:
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else c.numerator
    return c


def poly_to_json(p: Poly, var: str = "t") -> dict:
    return {"var": var, "coeffs": [_json_coeff(c) for c in p.coeffs]}


def _parse_coeff(c: Any) -> Any:
    if isinstance(c, str):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    return c


def poly_from_json(doc: dict | str) -> Poly:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return Poly(_parse_coeff(c) for c in doc["coeffs"])


def bipoly_to_json(p: Poly, vars: tuple[str, str] = ("q", "t")) -> dict:
    """Outer index is the second variable (t), inner lists ascend in q."""
    rows = []
    for c in p.coeffs:
        inner = c if isinstance(c, Poly) else Poly.const(c)
        rows.append([_json_coeff(x) for x in inner.coeffs])
    return {"vars": list(vars), "coeffs": rows}


def bipoly_from_json(doc: dict | str) -> Poly:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return Poly(Poly(_parse_coeff(x) for x in row) for row in doc["coeffs"])


def binomial(p: int, k: int) -> int:
    """C(p, k) with the convention C(p, -1) = [p == -1]."""
    if k == -1:
        return 1 if p == -1 else 0
    if k < 0 or p < 0 or k > p:
        return 0
    return comb(p, k)
