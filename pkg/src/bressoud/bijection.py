"""The (k-1)-reduction D_t, the (k-1)-augmentation C_t, and the maps phi/psi.

``phi`` sends an overpartition in B0bar(alpha; eta, k, r) to a pair
``(tau, mu)`` with ``tau`` a partition into distinct multiples of eta and
``mu`` in B1(alpha; eta, k-1, r); ``psi`` is its inverse.  Both record a
trace of every D_t / C_t step.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Sequence

from .bands import Band, BandType, g_of, window_band_types
from .errors import (
    InvalidParams,
    InvariantViolation,
    NotInB0bar,
    NotInB1,
    NotInDeta,
    WindowMismatch,
)
from .families import (
    WindowKind,
    classify_window,
    is_in_B0bar,
    is_in_B1,
    is_in_Deta,
)
from .params import Family, FamilyParams
from .parts import (
    INF,
    Overpartition,
    Part,
    PartOrInf,
    Partition,
    floor_div,
    smallest_overlined_multiple,
)

__all__ = [
    "Action",
    "TraceStep",
    "BijectionResult",
    "PsiResult",
    "reduce",
    "augment",
    "phi",
    "psi",
    "trace_to_json",
]


class Action(str, enum.Enum):
    RemovedOverlined = "RemovedOverlined"
    RemovedPlain = "RemovedPlain"
    InsertedOverlined = "InsertedOverlined"
    InsertedPlain = "InsertedPlain"


@dataclass(frozen=True)
class TraceStep:
    t: int
    action: Action
    part: Part
    s_before: PartOrInf
    g_before: PartOrInf
    evidence: Band | None = None

    def __post_init__(self) -> None:
        if (self.action is Action.InsertedPlain) != (self.evidence is not None):
            raise InvariantViolation("a type-N witness accompanies exactly the plain insertions")

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "action": self.action.value,
            "removed_or_inserted": self.part.token(),
            "s_before": self.s_before.token(),
            "g_before": self.g_before.token(),
            "witness": self.evidence.indices() if self.evidence else None,
        }


@dataclass(frozen=True)
class BijectionResult:
    tau: Partition
    mu: Overpartition
    trace: tuple[TraceStep, ...] = field(default=())

    @property
    def t_sequence(self) -> tuple[int, ...]:
        return tuple(s.t for s in self.trace)

    def to_json(self) -> dict:
        return {
            "tau": list(self.tau),
            "mu": self.mu.render(),
            "trace": trace_to_json(self.trace),
        }


@dataclass(frozen=True)
class PsiResult:
    pi: Overpartition
    trace: tuple[TraceStep, ...] = field(default=())

    def to_json(self) -> dict:
        return {"pi": self.pi.render(), "trace": trace_to_json(self.trace)}


def trace_to_json(trace: Sequence[TraceStep]) -> list[dict]:
    return [s.to_json() for s in trace]


def _require_bijection_params(p: FamilyParams) -> None:
    p.check(Family.B0bar)
    if p.k < 3:
        raise InvalidParams("the augmentation uses (k-2)-bands, so k >= 3 is required")


def _reduce_step(pi: Overpartition, t: int, p: FamilyParams, *, checked: bool) -> tuple[Overpartition, TraceStep]:
    cls = classify_window(pi, p, t, checked=checked)
    if cls.kind is not WindowKind.Equal:
        raise WindowMismatch(f"{pi} is {cls}, D_{t} needs Equal({t})")
    s = smallest_overlined_multiple(pi, p.eta)
    g = g_of(pi, p)
    size = t * p.eta
    if s == Part(size, True):
        return pi.remove(s), TraceStep(t, Action.RemovedOverlined, s, s, g)
    plain = Part(size)
    if plain not in pi.parts:
        raise InvariantViolation(f"{size} must occur in {pi} when s > overline({size})")
    return pi.remove(plain), TraceStep(t, Action.RemovedPlain, plain, s, g)


def _augment_step(mu: Overpartition, t: int, p: FamilyParams, *, checked: bool) -> tuple[Overpartition, TraceStep]:
    cls = classify_window(mu, p, t, checked=checked)
    if cls.kind is not WindowKind.Greater:
        raise WindowMismatch(f"{mu} is {cls}, C_{t} needs Greater({t})")
    s = smallest_overlined_multiple(mu, p.eta)
    g = g_of(mu, p)
    size = t * p.eta
    witness = next((b for b, bt in window_band_types(mu, t, p) if bt is BandType.N), None)
    if witness is not None:
        part = Part(size)
        return mu.insert(part), TraceStep(t, Action.InsertedPlain, part, s, g, witness)
    part = Part(size, True)
    return mu.insert(part), TraceStep(t, Action.InsertedOverlined, part, s, g)


def reduce(pi: Overpartition, t: int, p: FamilyParams) -> Overpartition:
    """D_t: remove overline(t eta) if it is s(pi), otherwise one plain t eta."""
    _require_bijection_params(p)
    return _reduce_step(pi, t, p, checked=True)[0]


def augment(mu: Overpartition, t: int, p: FamilyParams) -> Overpartition:
    """C_t: insert plain t eta if a type-N (k-2)-band sits in the window, else overline(t eta)."""
    _require_bijection_params(p)
    return _augment_step(mu, t, p, checked=True)[0]


def phi(pi: Overpartition, p: FamilyParams) -> BijectionResult:
    """Repeatedly apply D_t with t = min([|s|/eta], [|g|/eta]) until s = g = INF."""
    _require_bijection_params(p)
    if not is_in_B0bar(pi, p):
        raise NotInB0bar(f"{pi} is not in B0bar{p}")
    cur = pi
    trace: list[TraceStep] = []
    taus: list[int] = []
    while True:
        s = smallest_overlined_multiple(cur, p.eta)
        g = g_of(cur, p)
        if s is INF and g is INF:
            break
        if len(trace) >= len(pi):
            raise InvariantViolation("phi did not terminate within len(pi) steps")
        t = int(min(floor_div(s, p.eta), floor_div(g, p.eta)))
        if taus and t <= taus[-1] // p.eta:
            raise InvariantViolation(f"t-sequence not strictly increasing at t={t}")
        # membership of every intermediate step is re-checked inside
        cur, step = _reduce_step(cur, t, p, checked=True)
        trace.append(step)
        taus.append(t * p.eta)
    result = BijectionResult(tuple(reversed(taus)), cur, tuple(trace))
    if cur.weight + sum(taus) != pi.weight or cur.length + len(taus) != pi.length:
        raise InvariantViolation("weight or length not additive")
    return result


def psi(tau: Sequence[int], mu: Overpartition, p: FamilyParams) -> PsiResult:
    """Inverse of :func:`phi`: apply C_t for the parts of tau, largest first."""
    _require_bijection_params(p)
    if not is_in_Deta(tau, p.eta):
        raise NotInDeta(f"{tuple(tau)} is not a partition into distinct multiples of {p.eta}")
    if not is_in_B1(mu, p.with_k(p.k - 1)):
        raise NotInB1(f"{mu} is not in B1{p.with_k(p.k - 1)}")
    cur = mu
    trace: list[TraceStep] = []
    for part in sorted(tau, reverse=True):
        cur, step = _augment_step(cur, part // p.eta, p, checked=True)
        trace.append(step)
    if cur.weight != mu.weight + sum(tau) or cur.length != mu.length + len(tau):
        raise InvariantViolation("weight or length not additive")
    return PsiResult(cur, tuple(trace))


def dumps_trace(trace: Sequence[TraceStep]) -> str:
    return json.dumps(trace_to_json(trace), indent=2)
