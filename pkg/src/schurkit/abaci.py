"""Alternants, Cauchy's bialternant Schur polynomials, and labeled abaci.

An abacus is a finite word over {0..n} whose nonzero letters are a
permutation of 1..n: letter i at position k is a bead labeled i sitting on
slot k of a single runner, 0 is an empty slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .partitions import Partition, strip_extensions
from .polynomials import IntPolynomial, exact_div


class LabeledAbacus:
    """Bead configuration with sign, support, weight and shape statistics."""

    __slots__ = ("_slots", "_n")

    def __init__(self, slots):
        slots = tuple(int(s) for s in slots)
        while slots and slots[-1] == 0:
            slots = slots[:-1]
        beads = [s for s in slots if s > 0]
        n = len(beads)
        if sorted(beads) != list(range(1, n + 1)):
            raise ValueError(f"nonzero letters must permute 1..n, got {slots}")
        self._slots = slots
        self._n = n

    @property
    def slots(self) -> tuple[int, ...]:
        return self._slots

    @property
    def bead_count(self) -> int:
        return self._n

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self._slots) if s > 0)

    def permutation(self) -> tuple[int, ...]:
        """One-line word of the bead labels read by increasing position."""
        return tuple(s for s in self._slots if s > 0)

    def sign(self) -> int:
        word = self.permutation()
        inv = sum(
            1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j]
        )
        return -1 if inv % 2 else 1

    def shape(self) -> Partition:
        """Partition lam with lam + (n-1,...,1,0) equal to the sorted support."""
        desc = sorted(self.support(), reverse=True)
        return Partition(pos - (self._n - 1 - i) for i, pos in enumerate(desc))

    def weight_exponents(self) -> tuple[int, ...]:
        """Exponent of x_i is the position of bead i."""
        exps = [0] * self._n
        for k, s in enumerate(self._slots):
            if s > 0:
                exps[s - 1] = k
        return tuple(exps)

    def weight(self) -> IntPolynomial:
        return IntPolynomial.monomial(self._n, self.weight_exponents())

    def position_of(self, label: int) -> int:
        return self._slots.index(label)

    def swap_labels(self, a: int, b: int) -> "LabeledAbacus":
        out = list(self._slots)
        ia, ib = out.index(a), out.index(b)
        out[ia], out[ib] = out[ib], out[ia]
        return LabeledAbacus(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledAbacus) and self._slots == other._slots

    def __hash__(self) -> int:
        return hash(self._slots)

    def __repr__(self) -> str:
        return f"LabeledAbacus({list(self._slots)})"

    def __str__(self) -> str:
        if self._n <= 9:
            return "".join(str(s) for s in self._slots)
        return ",".join(str(s) for s in self._slots)

    @classmethod
    def from_text(cls, text: str) -> "LabeledAbacus":
        text = text.strip()
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        if not text.isdigit():
            raise ValueError(f"abacus text must be digits or comma-separated: {text!r}")
        return cls(int(ch) for ch in text)


@dataclass(frozen=True)
class Fixed:
    """Collision-free outcome of a Pieri bead move: the shifted abacus."""

    result: LabeledAbacus


@dataclass(frozen=True)
class Swapped:
    """First-collision outcome: two bead labels interchanged in the original
    abacus, with the colliding exponent mass transferred."""

    abacus: LabeledAbacus
    exponents: tuple[int, ...]


PieriMove = Fixed | Swapped


def abacus_stats(w: LabeledAbacus) -> tuple[int, Partition, IntPolynomial]:
    return w.sign(), w.shape(), w.weight()


def enumerate_abaci(lam: Partition, n: int) -> list[LabeledAbacus]:
    """All n! abaci of shape lam: label assignments over the fixed support."""
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    positions = sorted(lam.part(i) + (n - 1 - i) for i in range(n))
    width = (positions[-1] + 1) if positions else 0
    out = []
    for labels in permutations(range(1, n + 1)):
        slots = [0] * width
        for pos, label in zip(positions, labels):
            slots[pos] = label
        out.append(LabeledAbacus(slots))
    return out


def alternant_det(lam: Partition, n: int) -> IntPolynomial:
    """The n x n determinant det(x_i^(lam_j + n - j)), expanded exactly."""
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    exps = [lam.part(j) + n - 1 - j for j in range(n)]  # strictly decreasing
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        key = [0] * n
        for j, i in enumerate(perm):
            key[i] = exps[j]
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        terms[tuple(key)] = -1 if inv % 2 else 1
    return IntPolynomial(n, terms)


def vandermonde(n: int) -> IntPolynomial:
    """The product of (x_i - x_j) over i < j."""
    result = IntPolynomial.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (IntPolynomial.variable(n, i) - IntPolynomial.variable(n, j))
    return result


def schur_bialternant(lam: Partition, n: int) -> IntPolynomial:
    """Schur polynomial as the exact alternant quotient; 0 beyond n parts."""
    if len(lam) > n:
        return IntPolynomial.zero(n)
    if n == 0:
        return IntPolynomial.one(0)
    return exact_div(alternant_det(lam, n), alternant_det(Partition(), n))


def alternant_via_abaci(lam: Partition, n: int) -> IntPolynomial:
    """Signed bead-weight sum over all abaci of shape lam.

    Equals alternant_det(lam, n) after the global (-1)^(n//2) correction.
    """
    total = IntPolynomial.zero(n)
    for w in enumerate_abaci(lam, n):
        total = total + w.weight() * w.sign()
    return total * (-1 if (n // 2) % 2 else 1)


def schur_via_abaci(lam: Partition, n: int) -> IntPolynomial:
    """Schur polynomial computed as a quotient of abacus alternants."""
    if len(lam) > n:
        return IntPolynomial.zero(n)
    if n == 0:
        return IntPolynomial.one(0)
    return exact_div(alternant_via_abaci(lam, n), alternant_via_abaci(Partition(), n))


def _scan_width(w: LabeledAbacus, alpha) -> int:
    return len(w.slots) + sum(alpha) + 1


def pieri_involution_h(w: LabeledAbacus, alpha) -> PieriMove:
    """Move bead i rightward alpha_i slots, scanning beads left to right.

    A collision-free pass yields Fixed(shifted abacus): equal sign, shape
    grown by a horizontal strip of size sum(alpha). On the first collision
    (bead j runs into bead k sitting p slots right of j's start) the two
    labels are interchanged in the *original* abacus and p units of exponent
    move from alpha_j to alpha_k, which flips the sign and preserves the
    total weight. Applying the map twice returns the input.
    """
    alpha = tuple(int(a) for a in alpha)
    n = w.bead_count
    if len(alpha) != n:
        raise ValueError(f"expected {n} exponents, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be non-negative")
    grid = list(w.slots) + [0] * (sum(alpha) + 1)
    order = [(pos, label) for pos, label in enumerate(w.slots) if label > 0]
    for start, label in order:
        pos = start
        for _ in range(alpha[label - 1]):
            nxt = pos + 1
            if grid[nxt]:
                other = grid[nxt]
                p = nxt - start
                new_alpha = list(alpha)
                new_alpha[label - 1] -= p
                new_alpha[other - 1] += p
                return Swapped(w.swap_labels(label, other), tuple(new_alpha))
            grid[nxt] = label
            grid[pos] = 0
            pos = nxt
    return Fixed(LabeledAbacus(grid))


def pieri_involution_e(w: LabeledAbacus, alpha) -> PieriMove:
    """Shift each alpha-marked bead one slot right, scanning right to left.

    Collision-free passes grow the shape by a vertical strip; a collision
    (necessarily with an unmarked adjacent bead) interchanges the two labels
    in the original abacus and swaps their alpha entries.
    """
    alpha = tuple(int(a) for a in alpha)
    n = w.bead_count
    if len(alpha) != n:
        raise ValueError(f"expected {n} exponents, got {len(alpha)}")
    if any(a not in (0, 1) for a in alpha):
        raise ValueError("exponents must be 0 or 1")
    grid = list(w.slots) + [0] * 2
    order = [(pos, label) for pos, label in enumerate(w.slots) if label > 0]
    for start, label in reversed(order):
        if alpha[label - 1] == 0:
            continue
        nxt = start + 1
        if grid[nxt]:
            other = grid[nxt]
            new_alpha = list(alpha)
            new_alpha[label - 1], new_alpha[other - 1] = (
                new_alpha[other - 1],
                new_alpha[label - 1],
            )
            return Swapped(w.swap_labels(label, other), tuple(new_alpha))
        grid[nxt] = label
        grid[start] = 0
    return Fixed(LabeledAbacus(grid))


def pieri_product(lam: Partition, k: int, n: int, kind: str) -> dict[Partition, int]:
    """Expansion of s_lam times h_k (kind "h") or e_k (kind "e") over n variables."""
    if kind not in ("h", "e"):
        raise ValueError(f"kind must be 'h' or 'e', got {kind!r}")
    strip = "horizontal" if kind == "h" else "vertical"
    return {mu: 1 for mu in strip_extensions(lam, k, strip, max_parts=n)}


def compositions(n: int, k: int) -> list[tuple[int, ...]]:
    """All vectors of n non-negative integers with sum k."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == n - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for v in range(remaining + 1):
            rec(i + 1, remaining - v, prefix + [v])

    if n == 0:
        return [()] if k == 0 else []
    rec(0, k, [])
    return out


def binary_vectors(n: int, k: int) -> list[tuple[int, ...]]:
    """All 0/1 vectors of length n with sum k."""
    return [v for v in compositions(n, k) if all(a <= 1 for a in v)]
