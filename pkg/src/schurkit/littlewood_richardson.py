"""Littlewood-Richardson coefficients via Yamanouchi skew tableaux, the
Schur product and skew expansions, and the skew Kostka identity."""

from __future__ import annotations

from .partitions import Partition, SkewShape, partitions_of
from .tableaux import (
    enumerate_ssyt,
    is_yamanouchi,
    knuth_equivalent,
    kostka,
    yamanouchi_tableau,
)


def lr_coefficient(lam: Partition, alpha: Partition, beta: Partition) -> int:
    """Multiplicity of the Schur polynomial of lam in the product for
    (alpha, beta): Yamanouchi-word skew tableaux of shape lam/alpha, type beta."""
    if lam.size() != alpha.size() + beta.size() or not lam.contains(alpha):
        return 0
    shape = SkewShape(lam, alpha)
    return sum(
        1
        for t in enumerate_ssyt(shape, content=beta.parts)
        if is_yamanouchi(t.reading_word())
    )


def lr_coefficient_via_knuth(lam: Partition, alpha: Partition, beta: Partition) -> int:
    """Slow oracle: count skew tableaux whose reading word is plactically
    equivalent to the unique tableau of shape and type beta."""
    if lam.size() != alpha.size() + beta.size() or not lam.contains(alpha):
        return 0
    target = yamanouchi_tableau(beta).reading_word()
    shape = SkewShape(lam, alpha)
    return sum(
        1
        for t in enumerate_ssyt(shape, content=beta.parts)
        if knuth_equivalent(t.reading_word(), target)
    )


def schur_product(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """Expansion of the product of two Schur polynomials, nonzero terms only."""
    out = {}
    for lam in partitions_of(alpha.size() + beta.size()):
        c = lr_coefficient(lam, alpha, beta)
        if c:
            out[lam] = c
    return out


def skew_expansion(shape: SkewShape) -> dict[Partition, int]:
    """Schur expansion of a skew Schur polynomial, nonzero terms only."""
    out = {}
    for beta in partitions_of(shape.size()):
        c = lr_coefficient(shape.outer, shape.inner, beta)
        if c:
            out[beta] = c
    return out


def skew_kostka(shape: SkewShape, mu) -> int:
    """Number of skew tableaux of the shape with type mu."""
    mu_counts = tuple(mu.parts) if isinstance(mu, Partition) else tuple(mu)
    return len(enumerate_ssyt(shape, content=mu_counts))


def skew_kostka_identity_holds(shape: SkewShape, mu: Partition) -> bool:
    """Check the skew count against its expansion through straight shapes."""
    direct = skew_kostka(shape, mu)
    via_expansion = sum(
        c * kostka(beta, mu) for beta, c in skew_expansion(shape).items()
    )
    return direct == via_expansion
