import random

import pytest

from schurkit.abaci import schur_bialternant
from schurkit.expansions import (
    count_binary_matrices,
    count_matrices,
    e_in_m,
    e_in_s,
    enumerate_matrices,
    h_in_m,
    h_in_s,
    hook_via_he,
    to_schur_basis,
)
from schurkit.partitions import Partition, partitions_of
from schurkit.polynomials import (
    IntPolynomial,
    e_mu,
    e_poly,
    h_mu,
    h_poly,
    m_poly,
)

P = Partition


def test_enumerate_matrices():
    ms = enumerate_matrices((2, 1), (2, 1))
    assert ((2, 0), (0, 1)) in ms and ((1, 1), (1, 0)) in ms
    assert len(ms) == 2
    assert enumerate_matrices((1,), (2,)) == []
    assert enumerate_matrices((), ()) == [()]
    zero_one = enumerate_matrices((2, 1), (1, 1, 1), zero_one=True)
    assert len(zero_one) == 3
    assert all(all(v <= 1 for row in m for v in row) for m in zero_one)


def test_count_examples():
    assert count_matrices(P([2, 1]), P([2, 1])) == 2
    assert count_binary_matrices(P([2, 1]), P([1, 1, 1])) == 3
    for d in range(5):
        for lam in partitions_of(d):
            assert count_matrices(lam, lam) >= 1


def test_counts_are_symmetric():
    for d in range(6):
        for lam in partitions_of(d):
            for mu in partitions_of(d):
                assert count_matrices(lam, mu) == count_matrices(mu, lam)
                assert count_binary_matrices(lam, mu) == count_binary_matrices(mu, lam)


def test_h_in_m_polynomial_identity():
    assert h_in_m(P([2])) == {P([2]): 1, P([1, 1]): 1}
    for d in range(1, 6):
        for lam in partitions_of(d):
            n = d
            lhs = h_mu(lam, n)
            rhs = IntPolynomial.zero(n)
            for mu, c in h_in_m(lam).items():
                rhs = rhs + m_poly(mu, n) * c
            assert lhs == rhs, lam


def test_e_in_m_polynomial_identity():
    assert e_in_m(P([2])) == {P([1, 1]): 1}
    assert e_in_m(P([2, 1])) == {P([2, 1]): 1, P([1, 1, 1]): 3}
    for d in range(1, 6):
        for lam in partitions_of(d):
            n = d
            lhs = e_mu(lam, n)
            rhs = IntPolynomial.zero(n)
            for mu, c in e_in_m(lam).items():
                rhs = rhs + m_poly(mu, n) * c
            assert lhs == rhs, lam


def test_schur_expansions_match_worked_tables():
    assert h_in_s(P([2, 2, 1])) == {
        P([5]): 1,
        P([4, 1]): 2,
        P([3, 2]): 2,
        P([3, 1, 1]): 1,
        P([2, 2, 1]): 1,
    }
    assert e_in_s(P([2, 2, 1])) == {
        P([3, 2]): 1,
        P([2, 2, 1]): 2,
        P([3, 1, 1]): 1,
        P([2, 1, 1, 1]): 2,
        P([1, 1, 1, 1, 1]): 1,
    }
    assert h_in_s(P([4])) == {P([4]): 1}


def test_schur_expansions_polynomial_identities():
    for d in range(1, 6):
        for mu in partitions_of(d):
            n = d
            lhs = h_mu(mu, n)
            rhs = IntPolynomial.zero(n)
            for lam, c in h_in_s(mu).items():
                rhs = rhs + schur_bialternant(lam, n) * c
            assert lhs == rhs, mu
            lhs = e_mu(mu, n)
            rhs = IntPolynomial.zero(n)
            for lam, c in e_in_s(mu).items():
                rhs = rhs + schur_bialternant(lam, n) * c
            assert lhs == rhs, mu


def test_kostka_unitriangularity():
    from schurkit.tableaux import kostka

    for d in range(7):
        parts = partitions_of(d)  # reverse-lex refines dominance
        for i, lam in enumerate(parts):
            assert kostka(lam, lam) == 1
            for j, mu in enumerate(parts):
                if kostka(lam, mu) > 0:
                    assert lam.dominates(mu)
                    assert i <= j


def test_to_schur_basis():
    p = h_poly(2, 5) * h_poly(2, 5) * h_poly(1, 5)
    assert to_schur_basis(p, 5) == {
        P([5]): 1,
        P([4, 1]): 2,
        P([3, 2]): 2,
        P([3, 1, 1]): 1,
        P([2, 2, 1]): 1,
    }
    assert to_schur_basis(schur_bialternant(P([2, 1]), 3), 3) == {P([2, 1]): 1}
    assert to_schur_basis(e_poly(1, 3) ** 3, 3) == {
        P([3]): 1,
        P([2, 1]): 2,
        P([1, 1, 1]): 1,
    }
    assert to_schur_basis(IntPolynomial.zero(3), 3) == {}
    with pytest.raises(ValueError):
        to_schur_basis(IntPolynomial.monomial(2, (2, 1)), 2)
    with pytest.raises(ValueError):
        to_schur_basis(h_poly(1, 2) + h_poly(2, 2), 2)


def test_to_schur_basis_round_trips_kostka_columns():
    for d in range(1, 6):
        for mu in partitions_of(d):
            coords = to_schur_basis(h_mu(mu, d), d)
            assert coords == h_in_s(mu), mu


def test_he_bases_decompose_symmetric_polynomials():
    # the bounded h and e families span over the integers: a triangular
    # solve in Schur coordinates terminates with a zero remainder and the
    # recombined polynomial reproduces the input exactly
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 3)
        d = rng.randint(1, 5)
        target = IntPolynomial.zero(n)
        for _ in range(rng.randint(1, 3)):
            lam = rng.choice(partitions_of(d, max_parts=n))
            target = target + m_poly(lam, n) * rng.randint(-3, 3)
        index = partitions_of(d, max_parts=n)  # reverse-lex refines dominance
        svec = to_schur_basis(target, n)
        for family in ("h", "e"):
            coords: dict[P, int] = {}
            remaining = dict(svec)
            order = reversed(index) if family == "h" else index
            for lam in order:
                mu = lam if family == "h" else lam.conjugate()
                c = remaining.get(lam, 0)
                if c:
                    coords[mu] = c
                    column = h_in_s(mu) if family == "h" else e_in_s(mu)
                    for lam2, k in column.items():
                        if len(lam2) > n:
                            continue
                        remaining[lam2] = remaining.get(lam2, 0) - c * k
            assert all(v == 0 for v in remaining.values()), (family, target)
            rebuilt = IntPolynomial.zero(n)
            for mu, c in coords.items():
                basis_poly = h_mu(mu, n) if family == "h" else e_mu(mu, n)
                rebuilt = rebuilt + basis_poly * c
            assert rebuilt == target
            if family == "h":
                assert all(len(mu) <= n for mu in coords)
            else:
                assert all(mu.part(0) <= n for mu in coords)


def test_hook_via_he():
    assert hook_via_he(0, 0)
    assert hook_via_he(1, 1)
    assert hook_via_he(0, 2)
    for arm in range(3):
        for leg in range(3):
            assert hook_via_he(arm, leg), (arm, leg)
