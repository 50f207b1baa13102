"""Parts, overpartitions and their elementary statistics.

Parts are totally ordered by ``1~ < 1 < 2~ < 2 < ...`` where ``~`` marks an
overlined part.  An :class:`Overpartition` stores its parts weakly
decreasing in that order, so the overlined copy of a size (if any) comes
after every plain copy of the same size.  Indices used elsewhere in the
package are 1-based positions in this canonical sequence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParseError

__all__ = [
    "Part",
    "Infinity",
    "INF",
    "PartOrInf",
    "Overpartition",
    "Partition",
    "cmp_parts",
    "key_of",
    "floor_div",
    "parse_overpartition",
    "parse_partition",
    "render_partition",
    "measures",
    "count_V",
    "count_O",
    "smallest_overlined_multiple",
]


@dataclass(frozen=True)
class Part:
    """A part of an overpartition: a positive size and an overline flag."""

    size: int
    overlined: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or isinstance(self.size, bool):
            raise TypeError(f"part size must be an int, got {self.size!r}")
        if self.size < 1:
            raise ValueError(f"part size must be >= 1, got {self.size}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.size, 0 if self.overlined else 1)

    def shift(self, b: int) -> "Part":
        """Add ``b`` to the size, keeping the overline flag."""
        return Part(self.size + b, self.overlined)

    def token(self) -> str:
        return f"{self.size}~" if self.overlined else str(self.size)

    def __lt__(self, other: object) -> bool:
        return key_of(self) < key_of(other)

    def __le__(self, other: object) -> bool:
        return key_of(self) <= key_of(other)

    def __gt__(self, other: object) -> bool:
        return key_of(self) > key_of(other)

    def __ge__(self, other: object) -> bool:
        return key_of(self) >= key_of(other)

    def __str__(self) -> str:
        return self.token()


class Infinity:
    """Sentinel above every :class:`Part`; used for s(pi) and g(pi) when absent."""

    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (Infinity, ())

    def __lt__(self, other: object) -> bool:
        return key_of(self) < key_of(other)

    def __le__(self, other: object) -> bool:
        return key_of(self) <= key_of(other)

    def __gt__(self, other: object) -> bool:
        return key_of(self) > key_of(other)

    def __ge__(self, other: object) -> bool:
        return key_of(self) >= key_of(other)

    def __repr__(self) -> str:
        return "INF"

    def token(self) -> str:
        return "inf"


INF = Infinity()
PartOrInf = Union[Part, Infinity]

_INF_KEY = (float("inf"), 1)


def key_of(x: object) -> tuple:
    """Order key; also accepts a raw ``(size, rank)`` tuple used for bounds."""
    if isinstance(x, Part):
        return x.key
    if isinstance(x, Infinity):
        return _INF_KEY
    if isinstance(x, tuple):
        return x
    return NotImplemented  # type: ignore[return-value]


def bound(size: int, overlined: bool = False) -> tuple[int, int]:
    """Order key of a (possibly zero-sized) comparison point such as ``(t-1)*eta``."""
    return (size, 0 if overlined else 1)


def cmp_parts(a: PartOrInf, b: PartOrInf) -> int:
    """Three-way comparison in the part order: -1, 0 or 1."""
    ka, kb = key_of(a), key_of(b)
    return (ka > kb) - (ka < kb)


def floor_div(x: PartOrInf, eta: int) -> float | int:
    """``[|x| / eta]``, with Infinity mapped to ``math.inf``."""
    if isinstance(x, Infinity):
        return float("inf")
    return x.size // eta


@dataclass(frozen=True)
class Overpartition:
    """Canonical overpartition, parts weakly decreasing in the part order."""

    parts: tuple[Part, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts out of order: {a} before {b}")
            if a == b and a.overlined:
                raise ValueError(f"overlined part {a} repeated")

    @classmethod
    def from_parts(cls, parts: Iterable[Part]) -> "Overpartition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, key=lambda p: p.key, reverse=True)))

    @classmethod
    def of(cls, *tokens: int | str) -> "Overpartition":
        """Shorthand: ``Overpartition.of(60, 60, "53~")``."""
        return cls.from_parts(_parse_token(str(t)) for t in tokens)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Part]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def at(self, i: int) -> Part:
        """1-based access, matching the indexing of the combinatorial statements."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1]

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def count(self, part: Part) -> int:
        return self.parts.count(part)

    def remove(self, part: Part) -> "Overpartition":
        """Remove one copy of ``part``; ``ValueError`` if absent."""
        parts = list(self.parts)
        parts.remove(part)
        return Overpartition(tuple(parts))

    def insert(self, part: Part) -> "Overpartition":
        """Insert ``part`` at its canonical slot."""
        return Overpartition.from_parts(self.parts + (part,))

    def merge(self, other: "Overpartition") -> "Overpartition":
        return Overpartition.from_parts(self.parts + other.parts)

    def sizes(self) -> tuple[int, ...]:
        return tuple(p.size for p in self.parts)

    def render(self) -> str:
        return ",".join(p.token() for p in self.parts)

    def to_json(self) -> dict:
        return {"parts": [{"size": p.size, "overlined": p.overlined} for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Overpartition":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            parts = [Part(int(d["size"]), bool(d["overlined"])) for d in data["parts"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad overpartition JSON: {exc}") from exc
        return _checked(parts, "JSON")

    def __str__(self) -> str:
        return "(" + self.render() + ")"


# Ordinary partitions are plain tuples of ints, weakly decreasing.
Partition = tuple[int, ...]


def _parse_token(tok: str) -> Part:
    tok = tok.strip()
    overlined = tok.endswith("~")
    body = tok[:-1] if overlined else tok
    if not body.isdigit():
        raise ParseError(f"malformed part token {tok!r}")
    size = int(body)
    if size < 1:
        raise ParseError(f"part size must be >= 1 in token {tok!r}")
    return Part(size, overlined)


def _checked(parts: Sequence[Part], text: str) -> Overpartition:
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ParseError(f"order violation in {text!r}: {a} precedes {b}")
        if a == b and a.overlined:
            raise ParseError(f"duplicate overlined part {a} in {text!r}")
    return Overpartition(tuple(parts))


def parse_overpartition(text: str) -> Overpartition:
    """Parse ``"60,60,53~,50~"``; the empty string is the empty overpartition."""
    text = text.strip()
    if not text:
        return Overpartition()
    return _checked([_parse_token(t) for t in text.split(",")], text)


def parse_partition(text: str) -> Partition:
    """Parse an ordinary partition such as ``"50,30,20,10"`` (no overlines)."""
    text = text.strip()
    if not text:
        return ()
    sizes = []
    for tok in text.split(","):
        part = _parse_token(tok)
        if part.overlined:
            raise ParseError(f"ordinary partition cannot contain overlined {tok!r}")
        sizes.append(part.size)
    if any(b > a for a, b in zip(sizes, sizes[1:])):
        raise ParseError(f"order violation in {text!r}")
    return tuple(sizes)


def render_partition(pi: Sequence[int]) -> str:
    return ",".join(str(x) for x in pi)


def measures(pi: Overpartition, eta: int) -> tuple[int, int, int]:
    """Return ``(weight, length, f_le_eta)``; overlined eta counts as <= eta."""
    cap = bound(eta)
    f_le = sum(1 for p in pi if p.key <= cap)
    return pi.weight, pi.length, f_le


def count_V(pi: Overpartition, x: PartOrInf, eta: int) -> int:
    """Overlined parts ``<= x`` whose size is not divisible by ``eta``."""
    kx = key_of(x)
    return sum(1 for p in pi if p.overlined and p.size % eta and p.key <= kx)


def count_O(pi: Overpartition, x: PartOrInf, eta: int) -> int:
    """Overlined parts ``>= x`` whose size is divisible by ``eta``."""
    kx = key_of(x)
    return sum(1 for p in pi if p.overlined and p.size % eta == 0 and p.key >= kx)


def smallest_overlined_multiple(pi: Overpartition, eta: int) -> PartOrInf:
    """s(pi): the smallest overlined part divisible by ``eta``, or ``INF``."""
    for p in reversed(pi.parts):
        if p.overlined and p.size % eta == 0:
            return p
    return INF
