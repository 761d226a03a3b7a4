"""Partitions and Young-diagram data: conjugates, contents, hooks."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from any iterable, sorting and discarding zero parts."""
        return cls(tuple(sorted((p for p in parts if p != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"[4,2,2]"``; ``"[]"`` is the empty partition."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad partition syntax {text!r}") from exc
        if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
            raise ValueError(f"bad partition syntax {text!r}")
        return cls(tuple(data))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        """Largest part (0 for the empty partition)."""
        return self.parts[0] if self.parts else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(i, j)`` with 1-based row ``i`` and column ``j``."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def contents(self) -> list[int]:
        return [j - i for i, j in self.cells()]

    def hooks(self) -> list[int]:
        conj = self.conjugate.parts
        return [(self.parts[i - 1] - j) + (conj[j - 1] - i) + 1 for i, j in self.cells()]

    @property
    def n_lambda(self) -> int:
        """sum((i - 1) * lambda_i), the exponent n(lambda) of the hook-content formula."""
        return sum(i * p for i, p in enumerate(self.parts))


EMPTY = Partition()


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate


def cell_data(lam: Partition) -> dict:
    return {"contents": lam.contents(), "hooks": lam.hooks(), "n_lambda": lam.n_lambda}


def complement_union(lam: Partition, mu: Partition, N: int) -> Partition:
    """The partition with parts lambda_i together with N - mu_j."""
    if N < lam.first + mu.first:
        raise ValueError(
            f"complement_union needs N >= lambda_1 + mu_1 = {lam.first + mu.first}, got N={N}"
        )
    return Partition.from_parts(list(lam.parts) + [N - m for m in mu.parts])


def enumerate_partitions(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if n < 0:
        return []
    out: list[Partition] = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_parts is not None and len(acc) >= max_parts:
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out

