"""Basis conversions among the monomial, elementary, complete and Schur
families, matrix-count coefficients, and Schur decomposition of symmetric
polynomials."""

from __future__ import annotations

from functools import lru_cache

from .abaci import schur_bialternant
from .partitions import Partition, partitions_of
from .polynomials import (
    IntPolynomial,
    e_mu,
    e_poly,
    h_mu,
    h_poly,
    is_symmetric,
)
from .tableaux import kostka

Matrix = tuple[tuple[int, ...], ...]


def enumerate_matrices(row_sums, col_sums, zero_one: bool = False) -> list[Matrix]:
    """All non-negative (or 0/1) integer matrices with the given margins."""
    row_sums = tuple(int(r) for r in row_sums)
    col_sums = tuple(int(c) for c in col_sums)
    if any(r < 0 for r in row_sums) or any(c < 0 for c in col_sums):
        raise ValueError("margins must be non-negative")
    if sum(row_sums) != sum(col_sums):
        return []
    n = len(col_sums)
    out: list[Matrix] = []

    def fill_row(i: int, remaining_cols: tuple[int, ...], rows: list[tuple[int, ...]]):
        if i == len(row_sums):
            if all(c == 0 for c in remaining_cols):
                out.append(tuple(rows))
            return

        def fill_cell(j: int, left: int, row: list[int], cols: list[int]):
            if j == n:
                if left == 0:
                    rows.append(tuple(row))
                    fill_row(i + 1, tuple(cols), rows)
                    rows.pop()
                return
            cap = min(left, cols[j], 1 if zero_one else left)
            for v in range(cap + 1):
                row.append(v)
                cols[j] -= v
                fill_cell(j + 1, left - v, row, cols)
                cols[j] += v
                row.pop()

        fill_cell(0, row_sums[i], [], list(remaining_cols))

    fill_row(0, col_sums, [])
    return out


def count_matrices(lam: Partition, mu: Partition) -> int:
    """Matrices over the non-negative integers with row sums lam, column sums mu."""
    return len(enumerate_matrices(lam.parts, mu.parts))


def count_binary_matrices(lam: Partition, mu: Partition) -> int:
    """0/1 matrices with row sums lam and column sums mu."""
    return len(enumerate_matrices(lam.parts, mu.parts, zero_one=True))


def h_in_m(lam: Partition) -> dict[Partition, int]:
    """Monomial expansion of the complete product indexed by lam."""
    table = {}
    for mu in partitions_of(lam.size()):
        count = count_matrices(lam, mu)
        if count:
            table[mu] = count
    return table


def e_in_m(lam: Partition) -> dict[Partition, int]:
    """Monomial expansion of the elementary product indexed by lam."""
    table = {}
    for mu in partitions_of(lam.size()):
        count = count_binary_matrices(lam, mu)
        if count:
            table[mu] = count
    return table


def h_in_s(mu: Partition) -> dict[Partition, int]:
    """Schur expansion of the complete product: Kostka column of mu."""
    table = {}
    for lam in partitions_of(mu.size()):
        k = kostka(lam, mu)
        if k:
            table[lam] = k
    return table


def e_in_s(mu: Partition) -> dict[Partition, int]:
    """Schur expansion of the elementary product: conjugate Kostka column."""
    table = {}
    for lam in partitions_of(mu.size()):
        k = kostka(lam.conjugate(), mu)
        if k:
            table[lam] = k
    return table


@lru_cache(maxsize=None)
def _schur_poly(parts: tuple[int, ...], nvars: int) -> IntPolynomial:
    return schur_bialternant(Partition(parts), nvars)


def to_schur_basis(p: IntPolynomial, nvars: int) -> dict[Partition, int]:
    """Integer coordinates of a homogeneous symmetric polynomial in the Schur
    basis, by repeated subtraction at the lexicographically leading monomial.

    The leading exponent vector of a symmetric polynomial is weakly
    decreasing, so it names a partition whose Schur polynomial has the same
    leading monomial with coefficient one; subtracting strictly lowers the
    leading monomial, which bounds the loop.
    """
    if p.nvars != nvars:
        raise ValueError("variable count mismatch")
    if not p.is_homogeneous():
        raise ValueError("polynomial must be homogeneous")
    if not is_symmetric(p):
        raise ValueError("polynomial must be symmetric")
    coords: dict[Partition, int] = {}
    remainder = p
    prev_leading: tuple[int, ...] | None = None
    while not remainder.is_zero():
        exps, coeff = remainder.leading_term()
        if any(a < b for a, b in zip(exps, exps[1:])):
            raise ValueError(f"leading exponent {exps} is not a partition")
        if prev_leading is not None and exps >= prev_leading:
            raise ArithmeticError("leading term failed to decrease")
        prev_leading = exps
        lam = Partition(exps)
        coords[lam] = coeff
        remainder = remainder - _schur_poly(lam.parts, nvars) * coeff
    return coords


def hook_via_he(arm: int, leg: int) -> bool:
    """Check the alternating h/e sum against the hook Schur polynomial.

    Works in arm + leg + 1 variables, enough for every term to be faithful.
    """
    nvars = arm + leg + 1
    total = IntPolynomial.zero(nvars)
    for l in range(leg + 1):
        term = h_poly(arm + l + 1, nvars) * e_poly(leg - l, nvars)
        total = total + (term if l % 2 == 0 else -term)
    hook = Partition([arm + 1] + [1] * leg)
    return total == schur_bialternant(hook, nvars)
