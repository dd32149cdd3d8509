"""Integer partitions used as types of finite abelian p-groups.

A partition ``(4, 2, 2)`` stands for ``Z_{p^4} x Z_{p^2} x Z_{p^2}``.
Trailing zeros are stripped, so ``Partition((3, 1, 0))`` equals ``Partition((3, 1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(x for x in parts if x > 0))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the dotted form ``"4.2.2"``; ``"0"`` or ``""`` is the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        try:
            return cls(int(x) for x in text.split("."))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    def __str__(self) -> str:
        return ".".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, j: int) -> int:
        # 0-based; parts past the end read as 0
        return self.parts[j] if 0 <= j < len(self.parts) else 0

    def rank(self) -> int:
        return len(self.parts)

    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def truncate(self, i: int) -> Partition:
        """Cap every part at ``i``."""
        return Partition(min(x, i) for x in self.parts)


def as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(x)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    return Partition(sum(1 for x in lam.parts if x >= i) for i in range(1, lam.first() + 1))


def contains(lam, mu) -> bool:
    """True iff ``mu[i] <= lam[i]`` for every i."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= lam[j] for j, m in enumerate(mu.parts))


def _bounded_partitions(bounds: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing sequences x with x[j] <= min(bounds[j], previous), in decreasing lex order
    if not bounds:
        yield ()
        return
    top = min(bounds[0], cap)
    for x in range(top, 0, -1):
        for rest in _bounded_partitions(bounds[1:], x):
            yield (x,) + rest
    yield ()


def subpartitions_with_first_part(lam, i: int) -> list[Partition]:
    """All ``mu`` contained in ``lam`` with ``mu[0] == i``, lexicographically decreasing."""
    lam = as_partition(lam)
    if i < 0 or i > lam.first():
        return []
    if i == 0:
        return [Partition()]
    out = []
    for rest in _bounded_partitions(lam.parts[1:], i):
        out.append(Partition((i,) + rest))
    return out


def subpartitions(lam) -> list[Partition]:
    """Every partition contained in ``lam`` (including the empty one)."""
    lam = as_partition(lam)
    out = []
    for i in range(lam.first(), -1, -1):
        out.extend(subpartitions_with_first_part(lam, i))
    return out


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with optional bounds on the largest part and the number of parts."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for x in range(min(rem, cap), 0, -1):
            for rest in rec(rem - x, x, slots - 1):
                yield (x,) + rest

    for parts in rec(n, max_part, max_len):
        yield Partition(parts)
