"""Exact truncated power series and the infinite products of the identities.

Coefficients are Python ints, so products never overflow.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateExponent, InvalidParams
from .params import Family, FamilyParams

__all__ = [
    "TruncatedSeries",
    "product_factor",
    "series_mul",
    "series_inv",
    "gf_Bj",
    "gf_A0bar",
    "gf_B0bar_product",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{n <= bound} coeffs[n] q^n; nothing above ``bound`` is kept."""

    bound: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError("bound must be >= 0")
        c = tuple(int(x) for x in self.coeffs[: self.bound + 1])
        c += (0,) * (self.bound + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls(bound, (1,))

    @classmethod
    def from_list(cls, coeffs: Sequence[int], bound: int | None = None) -> "TruncatedSeries":
        return cls(len(coeffs) - 1 if bound is None else bound, tuple(coeffs))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n <= self.bound else 0

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def inv(self) -> "TruncatedSeries":
        return series_inv(self)

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        w.writerows(enumerate(self.coeffs))
        return buf.getvalue()


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.bound != b.bound:
        raise ValueError(f"mismatched bounds {a.bound} and {b.bound}")
    n = a.bound
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(n + 1 - i):
                if bc[j]:
                    out[i + j] += x * bc[j]
    return TruncatedSeries(n, tuple(out))


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    n = a.bound
    out = [0] * (n + 1)
    out[0] = c0
    for m in range(1, n + 1):
        acc = sum(a.coeffs[i] * out[m - i] for i in range(1, m + 1))
        # c0 * out[m] = -acc and c0 = 1/c0
        out[m] = -acc * c0
    return TruncatedSeries(n, tuple(out))


def product_factor(sign: int, a: int, m: int, bound: int) -> TruncatedSeries:
    """prod_{i >= 0} (1 + sign q^(a + i m)) truncated at ``bound``.

    ``sign=+1`` gives (-q^a; q^m)_inf, ``sign=-1`` gives (q^a; q^m)_inf.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 1 or m < 1:
        raise DegenerateExponent(f"product_factor needs a >= 1 and m >= 1, got a={a}, m={m}")
    out = [0] * (bound + 1)
    out[0] = 1
    e = a
    while e <= bound:
        # multiply in place by (1 + sign q^e), high degrees first
        for d in range(bound, e - 1, -1):
            out[d] += sign * out[d - e]
        e += m
    return TruncatedSeries(bound, tuple(out))


def _exponent(twice: int, what: str) -> int:
    """Exponent given as twice its value, so half-integers can be rejected."""
    if twice % 2:
        raise DegenerateExponent(f"exponent {what} = {twice}/2 is not an integer")
    if twice <= 0:
        raise DegenerateExponent(f"exponent {what} = {twice // 2} is not positive")
    return twice // 2


def _bressoud_product(p: FamilyParams, shift: int, bound: int, overline_eta: bool) -> TruncatedSeries:
    """(-q^alpha..;q^eta)(q^a, q^(M-a), q^M; q^M) / (q^eta; q^eta), M = eta(2k-lambda+shift)."""
    eta, k, r, lam = p.eta, p.k, p.r, p.lam
    lo = _exponent(eta * (2 * r - lam), "eta(r - lambda/2)")
    hi = _exponent(eta * (4 * k - 2 * r - lam + 2 * shift), "eta(2k - r - lambda/2 + shift)")
    mod = _exponent(2 * eta * (2 * k - lam + shift), "eta(2k - lambda + shift)")
    s = TruncatedSeries.one(bound)
    for a in p.alphas:
        s = s * product_factor(1, a, eta, bound)
    if overline_eta:
        s = s * product_factor(1, eta, eta, bound)
    for e in (lo, hi, mod):
        s = s * product_factor(-1, e, mod, bound)
    return s * product_factor(-1, eta, eta, bound).inv()


def gf_Bj(p: FamilyParams, j: int, bound: int) -> TruncatedSeries:
    """Product side of the B_j generating function, truncated at ``bound``."""
    p.with_j(j).check(Family.Bj)
    return _bressoud_product(p, j, bound, overline_eta=False)


def gf_A0bar(p: FamilyParams, bound: int) -> TruncatedSeries:
    """Product side of the A0bar generating function, truncated at ``bound``."""
    p.check_base()
    if not p.k >= p.r >= p.lam:
        raise InvalidParams(f"A0bar generating function needs k >= r >= lambda; got {p}")
    return _bressoud_product(p, -1, bound, overline_eta=True)


def gf_B0bar_product(p: FamilyParams, bound: int) -> TruncatedSeries:
    """(-q^eta; q^eta)_inf times the B_1 product with k - 1 in place of k."""
    return product_factor(1, p.eta, p.eta, bound) * gf_Bj(p.with_k(p.k - 1), 1, bound)
