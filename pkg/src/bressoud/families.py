"""Membership predicates for every partition family.

Overpartition families (``A0bar``, ``Bbar``, ``B0bar``, ``B1``) take an
:class:`~bressoud.parts.Overpartition`; the classical families ``A_j``,
``B_j`` and ``D_eta`` take ordinary partitions (weakly decreasing tuples of
ints).  Congruences always use Python's ``%``, i.e. residues in ``[0, m)``.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .bands import Band, Parity, band_parity, find_bands, g_of, is_band
from .errors import NotInB0bar
from .params import Family, FamilyParams
from .parts import (
    Overpartition,
    Part,
    PartOrInf,
    bound,
    key_of,
    measures,
    smallest_overlined_multiple,
)

__all__ = [
    "WindowKind",
    "WindowClass",
    "is_in_Bbar",
    "is_in_B0bar",
    "is_in_B0bar_literal",
    "is_in_B1",
    "is_in_A0bar",
    "is_in_Bj_classical",
    "is_in_Aj_classical",
    "is_in_Deta",
    "classify_window",
    "member",
]


def _pm(x: int, m: int) -> set[int]:
    return {x % m, (-x) % m}


def _residues_ok(sizes, p: FamilyParams) -> bool:
    res = p.residues
    return all(s % p.eta in res for s in sizes)


# -- overpartition families -------------------------------------------------


def _spacing_ok(pi: Overpartition, k: int, eta: int) -> bool:
    """pi_i >= pi_{i+k-1} + eta for all i, strictly when pi_i is plain."""
    for i in range(len(pi) - k + 1):
        first = pi.parts[i]
        shifted = pi.parts[i + k - 1].shift(eta)
        if first.overlined:
            if first < shifted:
                return False
        elif first <= shifted:
            return False
    return True


def is_in_Bbar(pi: Overpartition, p: FamilyParams) -> bool:
    """Residues, plain parts divisible by eta, k-spacing, and f_{<=eta} <= r."""
    p.check(Family.Bbar)
    eta = p.eta
    if not _residues_ok(pi.sizes(), p):
        return False
    if any(not x.overlined and x.size % eta for x in pi):
        return False
    if not _spacing_ok(pi, p.k, eta):
        return False
    return measures(pi, eta)[2] <= p.r


def _all_bands_even(pi: Overpartition, p: FamilyParams) -> bool:
    return all(band_parity(pi, b, p) is Parity.Even for b in find_bands(pi, p.k - 1, p.eta))


def is_in_B0bar(pi: Overpartition, p: FamilyParams) -> bool:
    """B0bar membership, with the small-parts band condition read through s(pi) and g(pi).

    That condition becomes: if f_{<=eta} = r and s(pi) > overline(eta) then
    eta <= g(pi) < overline(2 eta).
    """
    p.check(Family.B0bar)
    if not is_in_Bbar(pi, p):
        return False
    eta = p.eta
    if measures(pi, eta)[2] == p.r and key_of(smallest_overlined_multiple(pi, eta)) > bound(eta, True):
        g = key_of(g_of(pi, p))
        if not (bound(eta) <= g < bound(2 * eta, True)):
            return False
    return _all_bands_even(pi, p)


def is_in_B0bar_literal(pi: Overpartition, p: FamilyParams) -> bool:
    """B0bar membership with the small-parts band condition taken literally (cross-check)."""
    p.check(Family.B0bar)
    if not is_in_Bbar(pi, p):
        return False
    eta, k = p.eta, p.k
    if measures(pi, eta)[2] == p.r and Part(eta, True) not in pi.parts:
        cap = bound(2 * eta, True)
        if not any(
            pi.at(i).key < cap and is_band(pi, i, k - 1, eta)
            for i in range(1, len(pi) - k + 3)
        ):
            return False
    for i in range(1, len(pi) - k + 3):
        if is_band(pi, i, k - 1, eta):
            if band_parity(pi, Band(i, k - 1), p) is not Parity.Even:
                return False
    return True


def is_in_B1(pi: Overpartition, p: FamilyParams) -> bool:
    """B1 membership; callers pass ``k - 1`` when targeting the image of phi."""
    p.check(Family.B1)
    if not is_in_Bbar(pi, p):
        return False
    if any(x.overlined and x.size % p.eta == 0 for x in pi):
        return False
    return measures(pi, p.eta)[2] <= p.r - 1


def is_in_A0bar(pi: Overpartition, p: FamilyParams) -> bool:
    p.check(Family.A0bar)
    eta, k, r, lam = p.eta, p.k, p.r, p.lam
    if not _residues_ok(pi.sizes(), p):
        return False
    plain = [x.size for x in pi if not x.overlined]
    if lam % 2 == 0:
        mod = eta * (2 * k - lam - 1)
        banned = {0} | _pm(eta * (r - lam // 2), mod)
        return all(s % eta == 0 and s % mod not in banned for s in plain)
    half = eta // 2
    mod = eta * (2 * k - lam - 1)
    banned = {0} | _pm(half * (2 * r - lam), mod)
    for s in plain:
        if s % half or s % (2 * eta) == eta or s % mod in banned:
            return False
    return all(x.size % eta != half for x in pi if x.overlined)


# -- ordinary partition families --------------------------------------------


def is_in_Bj_classical(pi: Sequence[int], p: FamilyParams, j: int | None = None) -> bool:
    """Classical B_j membership of an ordinary partition; the parity clause applies only for j = 0."""
    j = p.j if j is None else j
    p = p.with_j(j).check(Family.Bj)
    eta, k, r = p.eta, p.k, p.r
    pi = tuple(pi)
    ell = len(pi)
    if not _residues_ok(pi, p):
        return False
    if any(c > 1 and s % eta for s, c in Counter(pi).items()):
        return False
    for i in range(ell - k + 1):
        a, b = pi[i], pi[i + k - 1] + eta
        if a < b or (a == b and a % eta == 0):
            return False
    if sum(1 for s in pi if s <= eta) > r - 1:
        return False
    if j == 1:
        return True
    for i in range(ell - k + 2):
        a, b = pi[i], pi[i + k - 2] + eta
        if a < b or (a == b and a % eta == 0):
            window = pi[i : i + k - 1]
            v = sum(1 for s in pi if s <= a and s % eta)
            if (sum(s // eta for s in window) - (r - 1) - v) % 2:
                return False
    return True


def is_in_Aj_classical(pi: Sequence[int], p: FamilyParams, j: int | None = None) -> bool:
    """Residue, repetition and forbidden-congruence clauses of A_j.

    The odd-lambda, j = 0 clause is implemented literally; no worked example
    for that case is available to test against, only the enumeration
    identity ``A_0 = B_0``.
    """
    j = p.j if j is None else j
    p = p.with_j(j).check(Family.Aj)
    eta, k, r, lam = p.eta, p.k, p.r, p.lam
    pi = tuple(pi)
    if not _residues_ok(pi, p):
        return False
    counts = Counter(pi)
    if lam % 2 == 0:
        mod = eta * (2 * k - lam + j)
        banned = {0} | _pm(eta * (r - lam // 2), mod)
        if any(c > 1 and s % eta for s, c in counts.items()):
            return False
        return all(s % mod not in banned for s in counts)
    half = eta // 2
    if any(s % (2 * eta) == eta for s in counts):
        return False
    if j == 1:
        mod = eta * (2 * k - lam + 1)
        banned = {0} | _pm(half * (2 * r - lam), mod)
        if any(c > 1 and s % half for s, c in counts.items()):
            return False
        return all(s % mod not in banned for s in counts)
    mod = eta * (2 * k - lam)
    special = half * (2 * k - lam) % mod
    for s, c in counts.items():
        if c > 1 and (s % half or s % mod == special):
            return False
    banned = _pm(half * (2 * r - lam), mod)
    return all(s % (2 * mod) != 0 and s % mod not in banned for s in counts)


def is_in_Deta(tau: Sequence[int], eta: int) -> bool:
    return len(set(tau)) == len(tau) and all(s > 0 and s % eta == 0 for s in tau)


# -- window subsets ---------------------------------------------------------


class WindowKind(str, enum.Enum):
    Equal = "Equal"
    Greater = "Greater"
    Neither = "Neither"


@dataclass(frozen=True)
class WindowClass:
    kind: WindowKind
    t: int

    def __str__(self) -> str:
        return f"{self.kind.value}({self.t})"


def _window_kind(s: PartOrInf, g: PartOrInf, t: int, eta: int) -> WindowKind:
    ks, kg = key_of(s), key_of(g)
    t_bar = bound(t * eta, True)
    next_bar = bound((t + 1) * eta, True)
    if (ks == t_bar and kg >= t_bar) or (ks > t_bar and bound(t * eta) <= kg < next_bar):
        return WindowKind.Equal
    if ks > t_bar and kg >= next_bar:
        return WindowKind.Greater
    return WindowKind.Neither


def classify_window(pi: Overpartition, p: FamilyParams, t: int, *, checked: bool = True) -> WindowClass:
    """Which window subset (equal or greater, at ``t``) ``pi`` falls in.

    ``checked=False`` skips the B0bar membership test for callers that have
    already established it.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if checked and not is_in_B0bar(pi, p):
        raise NotInB0bar(f"{pi} is not in B0bar{p}")
    s = smallest_overlined_multiple(pi, p.eta)
    g = g_of(pi, p)
    return WindowClass(_window_kind(s, g, t, p.eta), t)


# -- dispatch ---------------------------------------------------------------


def member(family: Family | str, pi, p: FamilyParams) -> bool:
    """Dispatch to the predicate for ``family``; ``p.j`` selects A_j / B_j."""
    family = Family(family)
    if family is Family.Aj:
        return is_in_Aj_classical(pi, p)
    if family is Family.Bj:
        return is_in_Bj_classical(pi, p)
    if family is Family.Deta:
        return is_in_Deta(pi, p.eta)
    if family is Family.A0bar:
        return is_in_A0bar(pi, p)
    if family is Family.Bbar:
        return is_in_Bbar(pi, p)
    if family is Family.B0bar:
        return is_in_B0bar(pi, p)
    return is_in_B1(pi, p)
