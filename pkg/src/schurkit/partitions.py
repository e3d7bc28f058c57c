"""Integer partitions, Young diagrams, skew shapes and their orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Partition:
    """A weakly decreasing sequence of positive integers.

    Zero parts are never stored; the empty partition represents 0.
    Instances are immutable and hashable.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must weakly decrease, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def size(self) -> int:
        return sum(self._parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero-padded beyond the stored length."""
        return self._parts[i] if 0 <= i < len(self._parts) else 0

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the bracketed text form, e.g. "[3,3,2]" or "[]"."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"partition text must be bracketed, got {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls()
        try:
            return cls(int(tok) for tok in body.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition text {text!r}: {exc}") from None

    def conjugate(self) -> "Partition":
        """Reflect the Young diagram across its main diagonal."""
        if not self._parts:
            return Partition()
        cols = self._parts[0]
        return Partition(sum(1 for p in self._parts if p >= j) for j in range(1, cols + 1))

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams: every row of self covers other's."""
        return all(self.part(i) >= p for i, p in enumerate(other.parts))

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: equal size and all prefix sums of self are >=.

        Returns False (not an error) when the sizes differ.
        """
        if self.size() != other.size():
            return False
        acc_s = acc_o = 0
        for i in range(max(len(self), len(other))):
            acc_s += self.part(i)
            acc_o += other.part(i)
            if acc_s < acc_o:
                return False
        return True

    def durfee_rank(self) -> int:
        return sum(1 for i, p in enumerate(self._parts) if p >= i + 1)

    def to_frobenius(self) -> "FrobeniusCoords":
        """Arm/leg lengths measured from the diagonal cells."""
        conj = self.conjugate()
        d = self.durfee_rank()
        arms = tuple(self._parts[i] - (i + 1) for i in range(d))
        legs = tuple(conj.parts[i] - (i + 1) for i in range(d))
        return FrobeniusCoords(arms, legs)

    def remove_corner_rows(self) -> list[int]:
        """Row indices (0-based) whose last box is removable."""
        return [
            i
            for i, p in enumerate(self._parts)
            if p > (self._parts[i + 1] if i + 1 < len(self._parts) else 0)
        ]


@dataclass(frozen=True)
class SkewShape:
    """A difference of Young diagrams outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def row_bounds(self) -> list[tuple[int, int]]:
        """Per row of outer: (first filled column, row length), 0-based."""
        return [(self.inner.part(i), self.outer.part(i)) for i in range(len(self.outer))]

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @classmethod
    def from_text(cls, text: str) -> "SkewShape":
        outer_text, sep, inner_text = text.partition("/")
        inner = Partition.from_text(inner_text) if sep else Partition()
        return cls(Partition.from_text(outer_text), inner)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Strictly decreasing arm and leg lengths of equal count (the Durfee rank)."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(a <= b for a, b in zip(seq, seq[1:])) or any(a < 0 for a in seq):
                raise ValueError(f"coordinates must strictly decrease and be >= 0: {seq}")

    def rank(self) -> int:
        return len(self.arms)

    def to_partition(self) -> Partition:
        d = self.rank()
        rows = []
        for i in range(d):
            rows.append(self.arms[i] + i + 1)
        # column lengths below the diagonal determine the remaining rows
        extra_rows = max((self.legs[i] + i + 1 for i in range(d)), default=0)
        for r in range(d, extra_rows):
            rows.append(sum(1 for i in range(d) if self.legs[i] + i + 1 > r))
        return Partition(rows)


def is_horizontal_strip(shape: SkewShape) -> bool:
    """At most one box of outer/inner in every column."""
    outer_c = shape.outer.conjugate()
    inner_c = shape.inner.conjugate()
    return all(outer_c.part(j) - inner_c.part(j) <= 1 for j in range(len(outer_c)))


def is_vertical_strip(shape: SkewShape) -> bool:
    """At most one box of outer/inner in every row."""
    return all(shape.outer.part(i) - shape.inner.part(i) <= 1 for i in range(len(shape.outer)))


def partitions_of(
    d: int, max_parts: int | None = None, max_part: int | None = None
) -> list[Partition]:
    """All partitions of d under the bounds, in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be non-negative")
    limit_parts = d if max_parts is None else max_parts
    limit_part = d if max_part is None else max_part

    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int], slots: int):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if slots == 0:
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix, slots - 1)
            prefix.pop()

    rec(d, limit_part, [], limit_parts)
    return out


def strip_extensions(
    lam: Partition, k: int, kind: str, max_parts: int | None = None
) -> list[Partition]:
    """All mu containing lam with mu/lam a horizontal or vertical strip of size k.

    kind is "horizontal" or "vertical"; results come in reverse-lex order.
    """
    if kind not in ("horizontal", "vertical"):
        raise ValueError(f"kind must be horizontal or vertical, got {kind!r}")
    if k < 0:
        raise ValueError("strip size must be non-negative")
    rows = len(lam) + k  # adding k boxes can extend at most k rows
    if max_parts is not None:
        rows = min(rows, max_parts)

    out: list[Partition] = []

    def rec(i: int, remaining: int, prev: int, prefix: list[int]):
        if i == rows:
            if remaining == 0:
                out.append(Partition(prefix))
            return
        base = lam.part(i)
        if kind == "horizontal":
            # interleaving: lam_{i-1} >= mu_i >= lam_i keeps mu/lam column-sparse
            cap = lam.part(i - 1) if i > 0 else base + remaining
            hi = min(cap, base + remaining)
        else:
            # each row gains at most one box
            hi = min(prev, base + min(1, remaining))
        for val in range(hi, base - 1, -1):
            if val == 0:
                if remaining == 0:
                    out.append(Partition(prefix))
                return
            prefix.append(val)
            rec(i + 1, remaining - (val - base), val, prefix)
            prefix.pop()

    rec(0, k, lam.part(0) + 1, [])
    return sorted(out, key=lambda p: p.parts, reverse=True)
