"""m-bands, windows, parity of (k-1)-bands, types of (k-2)-bands, and g(pi).

An m-band is a run of m consecutive parts pi_i, ..., pi_{i+m-1} with
pi_i <= pi_{i+m-1} + eta in the part order, strictly when pi_i is
overlined.  Start indices are 1-based.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BandError, InvariantViolation, NoBandInWindow
from .params import FamilyParams
from .parts import (
    INF,
    Overpartition,
    Part,
    PartOrInf,
    bound,
    count_O,
    count_V,
)

__all__ = [
    "Band",
    "Window",
    "Parity",
    "BandType",
    "is_band",
    "find_bands",
    "band_in_window",
    "g_of",
    "band_parity",
    "band_type",
    "window_band_types",
    "shared_band_type",
]


class Parity(str, enum.Enum):
    Even = "even"
    Odd = "odd"


class BandType(str, enum.Enum):
    N = "N"
    O = "O"


@dataclass(frozen=True)
class Band:
    start: int
    width: int

    @property
    def end(self) -> int:
        return self.start + self.width - 1

    def parts(self, pi: Overpartition) -> tuple[Part, ...]:
        return pi.parts[self.start - 1 : self.end]

    def indices(self) -> list[int]:
        return list(range(self.start, self.end + 1))

    def render(self, pi: Overpartition) -> str:
        return "{" + ",".join(p.token() for p in self.parts(pi)) + "}"


@dataclass(frozen=True)
class Window:
    """``[(t-1)eta, (t+1)eta]``, or ``[(t-1)eta, overline((t+1)eta))`` when open."""

    t: int
    upper_open_overlined: bool = False

    def contains(self, low: Part, high: Part, eta: int) -> bool:
        if low.key < bound((self.t - 1) * eta):
            return False
        if self.upper_open_overlined:
            return high.key < bound((self.t + 1) * eta, overlined=True)
        return high.key <= bound((self.t + 1) * eta)


def is_band(pi: Overpartition, start: int, width: int, eta: int) -> bool:
    if width < 1 or start < 1 or start + width - 1 > len(pi):
        return False
    first = pi.at(start)
    shifted = pi.at(start + width - 1).shift(eta)
    return first < shifted if first.overlined else first <= shifted


def find_bands(pi: Overpartition, m: int, eta: int) -> list[Band]:
    """All m-bands of ``pi`` in increasing order of start index."""
    if m < 1:
        raise BandError(f"band width must be >= 1, got {m}")
    return [Band(i, m) for i in range(1, len(pi) - m + 2) if is_band(pi, i, m, eta)]


def band_in_window(pi: Overpartition, band: Band, w: Window, eta: int) -> bool:
    return w.contains(pi.at(band.end), pi.at(band.start), eta)


def g_of(pi: Overpartition, p: FamilyParams) -> PartOrInf:
    """g(pi): smallest leading part of a (k-1)-band, ``INF`` if there is none."""
    m = p.k - 1
    if m < 1:
        raise BandError("g(pi) needs k >= 2")
    for i in range(len(pi) - m + 1, 0, -1):
        if is_band(pi, i, m, p.eta):
            return pi.at(i)
    return INF


def _band_residue(pi: Overpartition, band: Band, eta: int) -> int:
    """sum of [|part|/eta] minus V(pi_i) minus O(pi_end), mod 2."""
    parts = band.parts(pi)
    total = sum(x.size // eta for x in parts)
    total -= count_V(pi, parts[0], eta) + count_O(pi, parts[-1], eta)
    return total % 2


def _require_band(pi: Overpartition, band: Band, width: int, eta: int) -> None:
    if band.width != width:
        raise BandError(f"expected a {width}-band, got width {band.width}")
    if not is_band(pi, band.start, band.width, eta):
        raise BandError(f"{band} is not a band of {pi}")


def band_parity(pi: Overpartition, band: Band, p: FamilyParams) -> Parity:
    _require_band(pi, band, p.k - 1, p.eta)
    even = _band_residue(pi, band, p.eta) == (p.r - 1) % 2
    return Parity.Even if even else Parity.Odd


def band_type(mu: Overpartition, band: Band, t: int, p: FamilyParams) -> BandType:
    """Type N/O of a (k-2)-band of ``mu`` lying in the half-open window at ``t``."""
    _require_band(mu, band, p.k - 2, p.eta)
    if not band_in_window(mu, band, Window(t, True), p.eta):
        raise NoBandInWindow(f"{band.render(mu)} is not in the open window at t={t}")
    n = _band_residue(mu, band, p.eta) == (t + p.r - 1) % 2
    return BandType.N if n else BandType.O


def window_band_types(mu: Overpartition, t: int, p: FamilyParams) -> list[tuple[Band, BandType]]:
    """Every (k-2)-band of ``mu`` in the half-open window at ``t``, with its type."""
    m = p.k - 2
    if m < 1:
        raise BandError("(k-2)-bands need k >= 3")
    w = Window(t, True)
    return [
        (b, band_type(mu, b, t, p))
        for b in find_bands(mu, m, p.eta)
        if band_in_window(mu, b, w, p.eta)
    ]


def shared_band_type(mu: Overpartition, t: int, p: FamilyParams) -> BandType:
    """The common type of the (k-2)-bands in the window at ``t``.

    Raises ``NoBandInWindow`` when the window holds no such band and
    ``InvariantViolation`` when the bands disagree.
    """
    types = {bt for _, bt in window_band_types(mu, t, p)}
    if not types:
        raise NoBandInWindow(f"no {p.k - 2}-band of {mu} in the open window at t={t}")
    if len(types) > 1:
        raise InvariantViolation(f"mixed band types in the window at t={t}")
    return types.pop()
