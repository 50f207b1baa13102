"""Parameter tuples ``(alpha_1, ..., alpha_lambda; eta, k, r)`` and family tags."""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import InvalidParams

__all__ = ["Family", "FamilyParams"]


class Family(str, enum.Enum):
    Aj = "Aj"
    Bj = "Bj"
    A0bar = "A0bar"
    Bbar = "Bbar"
    B0bar = "B0bar"
    B1 = "B1"
    Deta = "Deta"

    @property
    def ordinary(self) -> bool:
        """True for families of ordinary (non-overlined) partitions."""
        return self in (Family.Aj, Family.Bj, Family.Deta)


@dataclass(frozen=True)
class FamilyParams:
    alphas: tuple[int, ...]
    eta: int
    k: int
    r: int
    j: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))

    @classmethod
    def of(cls, alphas: Sequence[int], eta: int, k: int, r: int, j: int = 0) -> "FamilyParams":
        return cls(tuple(alphas), eta, k, r, j)

    @property
    def lam(self) -> int:
        return len(self.alphas)

    @property
    def residues(self) -> frozenset[int]:
        """Allowed part residues modulo eta: 0 and the alphas."""
        return frozenset((0,) + self.alphas)

    def with_k(self, k: int) -> "FamilyParams":
        return replace(self, k=k)

    def with_j(self, j: int) -> "FamilyParams":
        return replace(self, j=j)

    def __str__(self) -> str:
        a = ",".join(map(str, self.alphas))
        return f"({a};{self.eta},{self.k},{self.r})"

    def check_base(self) -> None:
        a, eta = self.alphas, self.eta
        if eta < 1:
            raise InvalidParams(f"eta must be positive, got {eta}")
        if any(x <= 0 or x >= eta for x in a):
            raise InvalidParams(f"alphas must lie strictly between 0 and eta: {a}")
        if any(y <= x for x, y in zip(a, a[1:])):
            raise InvalidParams(f"alphas must be strictly increasing: {a}")
        if any(a[i] != eta - a[-1 - i] for i in range(len(a))):
            raise InvalidParams(f"alphas must satisfy alpha_i = eta - alpha_(lambda+1-i): {a}")
        if self.lam % 2 and eta % 2:
            raise InvalidParams("odd lambda requires even eta")
        if self.j not in (0, 1):
            raise InvalidParams(f"j must be 0 or 1, got {self.j}")
        if self.k < 1 or self.r < 0:
            raise InvalidParams(f"need k >= 1 and r >= 0, got k={self.k}, r={self.r}")

    def check(self, family: Family | str) -> "FamilyParams":
        """Validate for ``family``; returns ``self`` so calls can be chained."""
        family = Family(family)
        self.check_base()
        k, r, lam = self.k, self.r, self.lam
        if family in (Family.B0bar, Family.A0bar):
            ok = k > r >= lam and k - 1 > lam
            need = "k > r >= lambda and k-1 > lambda"
        elif family in (Family.Bbar, Family.B1):
            # B1 is queried with k-1 in place of k, so k > r cannot be required here.
            ok = k >= r >= lam and k - 1 >= lam
            need = "k >= r >= lambda and k-1 >= lambda"
        elif family is Family.Bj:
            ok = k >= r >= lam
            need = "k >= r >= lambda"
        elif family is Family.Aj:
            ok = 2 * k + self.j > 2 * r and r >= lam
            need = "(2k+j)/2 > r >= lambda"
        else:
            ok, need = True, ""
        if not ok:
            raise InvalidParams(f"{family.value} requires {need}; got {self}")
        return self
