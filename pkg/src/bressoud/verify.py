"""Exhaustive enumeration, family counts, and identity / round-trip reports.

Enumeration builds parts largest-first.  Each family supplies a pruning
rule that only discards prefixes no member can extend (necessary
conditions only); the full membership predicate is then applied to every
complete candidate, so pruning never decides membership on its own.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable, Iterable, Iterator, Sequence

from .bijection import phi, psi
from .errors import InvalidParams
from .families import is_in_B1, is_in_Deta, member
from .params import Family, FamilyParams
from .parts import Overpartition, Part, Partition, bound, render_partition
from .qseries import gf_A0bar, gf_B0bar_product, gf_Bj

__all__ = [
    "Identity",
    "Row",
    "VerifyReport",
    "enumerate_overpartitions",
    "enumerate_partitions",
    "enumerate_family",
    "count_overpartitions",
    "count_partitions",
    "count_family",
    "family_counts",
    "verify_identity",
    "roundtrip_check",
    "resolve_threads",
]


# -- raw enumeration ----------------------------------------------------------


def _sizes(n: int, residues: Iterable[int], eta: int) -> list[int]:
    res = {x % eta for x in residues}
    return [s for s in range(n, 0, -1) if s % eta in res]


def enumerate_overpartitions(
    n: int,
    allowed_residues: Iterable[int],
    eta: int,
    *,
    plain_ok: Callable[[int], bool] | None = None,
    overline_ok: Callable[[int], bool] | None = None,
    accept_prefix: Callable[[tuple[Part, ...]], bool] | None = None,
) -> Iterator[Overpartition]:
    """Every canonical overpartition of ``n`` with part sizes in the residues.

    ``plain_ok`` / ``overline_ok`` restrict which sizes may appear plain or
    overlined; ``accept_prefix`` is called on each new prefix (largest parts
    first) and may reject it.  The order of the stream is deterministic.
    """
    sizes = _sizes(n, allowed_residues, eta)

    def rec(rest: int, prefix: tuple[Part, ...], last: tuple[int, int]) -> Iterator[Overpartition]:
        if rest == 0:
            yield Overpartition(prefix)
            return
        for s in sizes:
            if s > rest:
                continue
            for over in (False, True):
                key = bound(s, over)
                if key > last or (key == last and over):
                    continue
                if over and overline_ok is not None and not overline_ok(s):
                    continue
                if not over and plain_ok is not None and not plain_ok(s):
                    continue
                nxt = prefix + (Part(s, over),)
                if accept_prefix is not None and not accept_prefix(nxt):
                    continue
                yield from rec(rest - s, nxt, key)

    yield from rec(n, (), (n + 1, 1))


def enumerate_partitions(
    n: int,
    allowed_residues: Iterable[int],
    eta: int,
    *,
    size_ok: Callable[[int], bool] | None = None,
    repeat_ok: Callable[[int], bool] | None = None,
    accept_prefix: Callable[[Partition], bool] | None = None,
) -> Iterator[Partition]:
    """Every ordinary partition of ``n`` (weakly decreasing) with sizes in the residues."""
    sizes = _sizes(n, allowed_residues, eta)
    if size_ok is not None:
        sizes = [s for s in sizes if size_ok(s)]

    def rec(rest: int, prefix: Partition, last: int) -> Iterator[Partition]:
        if rest == 0:
            yield prefix
            return
        for s in sizes:
            if s > rest or s > last:
                continue
            if s == last and repeat_ok is not None and not repeat_ok(s):
                continue
            nxt = prefix + (s,)
            if accept_prefix is not None and not accept_prefix(nxt):
                continue
            yield from rec(rest - s, nxt, s)

    yield from rec(n, (), n + 1)


@lru_cache(maxsize=None)
def _count_over(n: int, largest: int, residues: frozenset[int], eta: int) -> int:
    if n == 0:
        return 1
    if largest == 0:
        return 0
    total = _count_over(n, largest - 1, residues, eta)
    if largest % eta in residues:
        m = 1
        while m * largest <= n:
            # m copies of this size; the last copy may or may not be overlined
            total += 2 * _count_over(n - m * largest, largest - 1, residues, eta)
            m += 1
    return total


def count_overpartitions(n: int, allowed_residues: Iterable[int], eta: int) -> int:
    """Independent counting oracle for :func:`enumerate_overpartitions` (no restrictions)."""
    return _count_over(n, n, frozenset(x % eta for x in allowed_residues), eta)


@lru_cache(maxsize=None)
def _count_part(n: int, largest: int, residues: frozenset[int], eta: int) -> int:
    if n == 0:
        return 1
    if largest == 0:
        return 0
    total = _count_part(n, largest - 1, residues, eta)
    if largest % eta in residues and largest <= n:
        total += _count_part(n - largest, largest, residues, eta)
    return total


def count_partitions(n: int, allowed_residues: Iterable[int], eta: int) -> int:
    return _count_part(n, n, frozenset(x % eta for x in allowed_residues), eta)


# -- family-aware enumeration -----------------------------------------------


def _spacing_prefix(k: int, eta: int) -> Callable[[tuple[Part, ...]], bool]:
    def ok(prefix: tuple[Part, ...]) -> bool:
        if len(prefix) < k:
            return True
        first = prefix[-k]
        shifted = prefix[-1].shift(eta)
        return first >= shifted if first.overlined else first > shifted

    return ok


def _small_parts_prefix(limit: int, eta: int) -> Callable[[tuple[Part, ...]], bool]:
    cap = bound(eta)

    def ok(prefix: tuple[Part, ...]) -> bool:
        return sum(1 for x in prefix[-(limit + 1):] if x.key <= cap) <= limit

    return ok


def _all(*checks):
    return lambda prefix: all(c(prefix) for c in checks)


def enumerate_family(family: Family | str, p: FamilyParams, n: int) -> Iterator:
    """Members of ``family`` with weight ``n``, in enumeration order."""
    family = Family(family)
    p.check(family)
    eta, res = p.eta, p.residues
    if family is Family.Deta:
        cands = enumerate_partitions(n, {0}, eta, repeat_ok=lambda s: False)
    elif family is Family.Bj:
        k = p.k

        def accept(prefix: Partition) -> bool:
            if len(prefix) >= k:
                a, b = prefix[-k], prefix[-1] + eta
                if a < b or (a == b and a % eta == 0):
                    return False
            return sum(1 for s in prefix if s <= eta) <= p.r - 1

        cands = enumerate_partitions(
            n, res, eta, repeat_ok=lambda s: s % eta == 0, accept_prefix=accept
        )
    elif family is Family.Aj:
        # every A_j clause except repetition concerns one part at a time
        half = eta // 2 if p.lam % 2 else eta
        cands = enumerate_partitions(
            n,
            res,
            eta,
            size_ok=lambda s: member(Family.Aj, (s,), p),
            repeat_ok=lambda s: s % half == 0,
        )
    elif family is Family.A0bar:
        cands = enumerate_overpartitions(
            n,
            res,
            eta,
            plain_ok=lambda s: member(Family.A0bar, Overpartition((Part(s),)), p),
            overline_ok=lambda s: member(Family.A0bar, Overpartition((Part(s, True),)), p),
        )
    else:
        limit = p.r - 1 if family is Family.B1 else p.r
        over_ok = (lambda s: s % eta != 0) if family is Family.B1 else None
        if limit < 0:
            return iter(())
        cands = enumerate_overpartitions(
            n,
            res,
            eta,
            plain_ok=lambda s: s % eta == 0,
            overline_ok=over_ok,
            accept_prefix=_all(_spacing_prefix(p.k, eta), _small_parts_prefix(limit, eta)),
        )
    return (c for c in cands if member(family, c, p))


def count_family(family: Family | str, p: FamilyParams, n: int) -> int:
    return sum(1 for _ in enumerate_family(family, p, n))


def resolve_threads(threads: int | None = None) -> int:
    """``threads`` if given, else ``BRESSOUD_THREADS``, else the CPU count."""
    if threads is None:
        env = os.environ.get("BRESSOUD_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(threads))


def _per_n(func: Callable[[int], object], ns: Sequence[int], threads: int | None) -> list:
    workers = resolve_threads(threads)
    if workers == 1 or len(ns) < 2:
        return [func(n) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, ns))


def family_counts(family: Family | str, p: FamilyParams, max_n: int, threads: int | None = None) -> list[int]:
    """``[count_family(family, p, n) for n in 0..max_n]``, parallel over n."""
    return _per_n(partial(count_family, Family(family), p), list(range(max_n + 1)), threads)


# -- reports ------------------------------------------------------------------


class Identity(str, enum.Enum):
    A0bar_eq_B0bar = "A0bar_eq_B0bar"
    gfBj = "gfBj"
    gfA0bar = "gfA0bar"
    B0bar_eq_product = "B0bar_eq_product"
    Aj_eq_Bj = "Aj_eq_Bj"
    roundtrip = "roundtrip"


@dataclass(frozen=True)
class Row:
    n: int
    lhs: int
    rhs: int
    ok: bool


@dataclass
class VerifyReport:
    identity: Identity
    params: FamilyParams
    max_n: int
    rows: list[Row] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    lhs_label: str = "lhs"
    rhs_label: str = "rhs"

    @property
    def overall(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_json(self) -> dict:
        p = self.params
        return {
            "identity": self.identity.value,
            "params": {"alphas": list(p.alphas), "eta": p.eta, "k": p.k, "r": p.r, "j": p.j},
            "max_n": self.max_n,
            "lhs": self.lhs_label,
            "rhs": self.rhs_label,
            "per_n": [{"n": r.n, "lhs": r.lhs, "rhs": r.rhs, "pass": r.ok} for r in self.rows],
            "overall": self.overall,
            "witnesses": self.witnesses,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", self.lhs_label, self.rhs_label, "pass"])
        for r in self.rows:
            w.writerow([r.n, r.lhs, r.rhs, int(r.ok)])
        return buf.getvalue()

    def render(self) -> str:
        head = f"{self.identity.value} {self.params} j={self.params.j} max_n={self.max_n}"
        lines = [head, f"{'n':>4} {self.lhs_label:>12} {self.rhs_label:>12}  pass"]
        for r in self.rows:
            lines.append(f"{r.n:>4} {r.lhs:>12} {r.rhs:>12}  {'ok' if r.ok else 'FAIL'}")
        lines.append("overall: " + ("PASS" if self.overall else "FAIL"))
        for w in self.witnesses:
            lines.append("witness: " + json.dumps(w))
        return "\n".join(lines)


def _compare(identity, p, max_n, lhs, rhs, labels) -> VerifyReport:
    rep = VerifyReport(identity, p, max_n, lhs_label=labels[0], rhs_label=labels[1])
    for n in range(max_n + 1):
        ok = lhs[n] == rhs[n]
        rep.rows.append(Row(n, lhs[n], rhs[n], ok))
        if not ok:
            rep.witnesses.append({"n": n, labels[0]: lhs[n], labels[1]: rhs[n]})
    return rep


def verify_identity(
    which: Identity | str,
    p: FamilyParams,
    max_n: int,
    j: int | None = None,
    threads: int | None = None,
) -> VerifyReport:
    """Compare two independently computed count sequences for n = 0..max_n."""
    which = Identity(which)
    j = p.j if j is None else j
    p = p.with_j(j)
    if which is Identity.A0bar_eq_B0bar:
        lhs = family_counts(Family.A0bar, p, max_n, threads)
        rhs = family_counts(Family.B0bar, p, max_n, threads)
        labels = ("A0bar", "B0bar")
    elif which is Identity.gfBj:
        lhs = family_counts(Family.Bj, p, max_n, threads)
        rhs = list(gf_Bj(p, j, max_n).coeffs)
        labels = (f"B{j}", "product")
    elif which is Identity.gfA0bar:
        lhs = family_counts(Family.A0bar, p, max_n, threads)
        rhs = list(gf_A0bar(p, max_n).coeffs)
        labels = ("A0bar", "product")
    elif which is Identity.B0bar_eq_product:
        p.check(Family.B0bar)
        lhs = family_counts(Family.B0bar, p, max_n, threads)
        rhs = list(gf_B0bar_product(p, max_n).coeffs)
        labels = ("B0bar", "product")
    elif which is Identity.Aj_eq_Bj:
        lhs = family_counts(Family.Aj, p, max_n, threads)
        rhs = family_counts(Family.Bj, p, max_n, threads)
        labels = (f"A{j}", f"B{j}")
    else:
        return roundtrip_check(p, max_n, threads)
    return _compare(which, p, max_n, lhs, rhs, labels)


# -- round trip ---------------------------------------------------------------


def _forward_at(p: FamilyParams, n: int) -> tuple[int, list[dict]]:
    """phi then psi on every B0bar member of weight n."""
    target = p.with_k(p.k - 1)
    count, bad = 0, []
    for pi in enumerate_family(Family.B0bar, p, n):
        count += 1
        try:
            res = phi(pi, p)
            problems = []
            if not is_in_Deta(res.tau, p.eta):
                problems.append("tau not in D_eta")
            if not is_in_B1(res.mu, target):
                problems.append("mu not in B1(k-1)")
            if sum(res.tau) + res.mu.weight != pi.weight:
                problems.append("weight not additive")
            if len(res.tau) + res.mu.length != pi.length:
                problems.append("length not additive")
            if psi(res.tau, res.mu, p).pi != pi:
                problems.append("psi(phi(pi)) != pi")
        except Exception as exc:  # every failure becomes a witness
            problems = [f"{type(exc).__name__}: {exc}"]
        if problems:
            bad.append({"direction": "phi", "pi": pi.render(), "problems": problems})
    return count, bad


def _deta_upto(max_w: int, eta: int) -> list[Partition]:
    out = []
    for w in range(0, max_w + 1, eta):
        out.extend(enumerate_family(Family.Deta, FamilyParams((), eta, 1, 0), w))
    return out


def _backward_at(p: FamilyParams, n: int) -> tuple[int, list[dict]]:
    """psi then phi on every (tau, mu) pair with |tau| + |mu| = n."""
    target = p.with_k(p.k - 1)
    count, bad = 0, []
    for tau in _deta_upto(n, p.eta):
        for mu in enumerate_family(Family.B1, target, n - sum(tau)):
            count += 1
            try:
                pi = psi(tau, mu, p).pi
                back = phi(pi, p)
                problems = [] if (back.tau, back.mu) == (tuple(tau), mu) else ["phi(psi(tau, mu)) != (tau, mu)"]
            except Exception as exc:
                problems = [f"{type(exc).__name__}: {exc}"]
            if problems:
                bad.append(
                    {
                        "direction": "psi",
                        "tau": render_partition(tau),
                        "mu": mu.render(),
                        "problems": problems,
                    }
                )
    return count, bad


def _roundtrip_at(p: FamilyParams, n: int) -> tuple[int, int, list[dict]]:
    fwd, bad_f = _forward_at(p, n)
    bwd, bad_b = _backward_at(p, n)
    return fwd, bwd, bad_f + bad_b


def roundtrip_check(p: FamilyParams, max_n: int, threads: int | None = None) -> VerifyReport:
    """psi(phi(pi)) = pi over B0bar and phi(psi(tau, mu)) = (tau, mu) over pairs, up to max_n."""
    p.check(Family.B0bar)
    if p.k < 3:
        raise InvalidParams("round trip needs k >= 3")
    results = _per_n(partial(_roundtrip_at, p), list(range(max_n + 1)), threads)
    rep = VerifyReport(Identity.roundtrip, p, max_n, lhs_label="B0bar", rhs_label="pairs")
    for n, (fwd, bwd, bad) in enumerate(results):
        rep.rows.append(Row(n, fwd, bwd, fwd == bwd and not bad))
        if fwd != bwd:
            rep.witnesses.append({"n": n, "B0bar": fwd, "pairs": bwd})
        rep.witnesses.extend(bad)
    return rep
