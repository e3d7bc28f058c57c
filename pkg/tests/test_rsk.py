from itertools import product

import pytest

from schurkit.expansions import enumerate_matrices
from schurkit.partitions import Partition, partitions_of
from schurkit.rsk import (
    IntMatrix,
    burge,
    matrix_words,
    rsk,
    rsk_inverse,
    rsk_star,
    verify_knuth_bijection,
)
from schurkit.tableaux import Tableau, greene_invariants, p_tableau

P = Partition


def test_matrix_type():
    m = IntMatrix([[1, 0], [0, 1]])
    assert m.row_sums() == (1, 1) and m.col_sums() == (1, 1)
    assert m.is_zero_one()
    assert not IntMatrix([[2]]).is_zero_one()
    assert IntMatrix.from_text("1,0;0,1") == m
    assert str(m) == "1,0;0,1"
    with pytest.raises(ValueError):
        IntMatrix([[1], [1, 2]])
    with pytest.raises(ValueError):
        IntMatrix([[-1]])


def test_matrix_words():
    assert matrix_words(IntMatrix([[1, 0], [0, 1]])) == (
        (1, 2),
        (1, 2),
        (1, 2),
        (1, 2),
    )
    words = matrix_words(IntMatrix([[0, 1], [1, 0]]))
    assert words.col_word == (2, 1) and words.row_word == (2, 1)
    assert matrix_words(IntMatrix([[2]])).col_word == (1, 1)
    words = matrix_words(IntMatrix([[1, 2], [1, 0]]))
    assert words.col_word == (1, 2, 2, 1)
    assert words.rev_col_word == (2, 2, 1, 1)
    assert words.row_word == (1, 2, 1, 1)
    assert words.rev_row_word == (2, 1, 1, 1)


def test_rsk_examples():
    assert rsk(IntMatrix([[1, 0], [0, 1]])) == (Tableau([[1, 2]]), Tableau([[1, 2]]))
    assert rsk(IntMatrix([[0, 1], [1, 0]])) == (Tableau([[1], [2]]), Tableau([[1], [2]]))
    assert rsk(IntMatrix([[3]])) == (Tableau([[1, 1, 1]]), Tableau([[1, 1, 1]]))


def test_rsk_shapes_and_content():
    for shape in ((2, 2), (2, 3), (3, 2)):
        for entries in product(range(3), repeat=shape[0] * shape[1]):
            m = IntMatrix(
                [
                    entries[i * shape[1] : (i + 1) * shape[1]]
                    for i in range(shape[0])
                ]
            )
            if sum(entries) > 6:
                continue
            p, q = rsk(m)
            assert p.shape() == q.shape()
            assert sum(p.content()) == sum(m.col_sums())
            assert sum(q.content()) == sum(m.row_sums())


def test_rsk_inverse_round_trip():
    for entries in product(range(3), repeat=4):
        m = IntMatrix([entries[:2], entries[2:]])
        p, q = rsk(m)
        assert rsk_inverse(p, q, nrows=2, ncols=2) == m
    for entries in product(range(2), repeat=6):
        m = IntMatrix([entries[:3], entries[3:]])
        p, q = rsk(m)
        assert rsk_inverse(p, q, nrows=2, ncols=3) == m
    assert rsk_inverse(Tableau([[1, 2]]), Tableau([[1, 2]])) == IntMatrix([[1, 0], [0, 1]])
    assert rsk_inverse(Tableau(()), Tableau(())) == IntMatrix([])


def test_rsk_inverse_rejects_bad_pairs():
    with pytest.raises(ValueError):
        rsk_inverse(Tableau([[1, 1]]), Tableau([[1], [2]]))
    # shape-compatible but inconsistent pair
    with pytest.raises(ValueError):
        rsk_inverse(Tableau([[1], [2]]), Tableau([[1], [2]]), nrows=1, ncols=2)


def test_rsk_star_requires_zero_one():
    with pytest.raises(ValueError):
        rsk_star(IntMatrix([[2]]))


def test_same_shape_exhaustive_zero_one():
    for mrows in (1, 2, 3):
        for ncols in (1, 2, 3):
            for bits in product((0, 1), repeat=mrows * ncols):
                m = IntMatrix(
                    [bits[i * ncols : (i + 1) * ncols] for i in range(mrows)]
                )
                ps, q = rsk_star(m)
                assert ps.shape() == q.shape(), m
                pb, qb = burge(m)
                assert pb.shape() == qb.shape(), m


def test_burge_same_shape_on_general_matrices():
    for entries in product(range(3), repeat=4):
        m = IntMatrix([entries[:2], entries[2:]])
        pb, qb = burge(m)
        assert pb.shape() == qb.shape(), m


def test_bijection_audits():
    for d in range(1, 5):
        for mu in partitions_of(d):
            for nu in partitions_of(d):
                rep = verify_knuth_bijection(mu, nu, "rsk")
                assert rep.bijective and rep.shape_equal and rep.type_correct, rep
    rep = verify_knuth_bijection(P([2, 1]), P([2, 1]), "rsk")
    assert rep.matrix_count == 2
    rep = verify_knuth_bijection(P([1, 1]), P([1, 1]), "rsk")
    assert rep.matrix_count == 2
    rep = verify_knuth_bijection(P([1]), P([1]), "rsk")
    assert rep.matrix_count == 1


def test_bijection_audits_star_and_burge():
    for d in range(1, 5):
        for mu in partitions_of(d, max_parts=3, max_part=3):
            for nu in partitions_of(d, max_parts=3, max_part=3):
                star = verify_knuth_bijection(mu, nu, "rsk_star")
                assert star.bijective and star.shape_equal and star.type_correct, star
                assert star.reversed_u_shape_equal in (False, True)
                bur = verify_knuth_bijection(mu, nu, "burge")
                assert bur.bijective and bur.shape_equal and bur.type_correct, bur


def test_reversed_u_convention_fails_same_shape_somewhere():
    # documents why the unreversed column word is the audited convention
    rep = verify_knuth_bijection(P([2, 1]), P([2, 1]), "rsk_star")
    assert rep.reversed_u_shape_equal is False


def chain_union_max(matrix, k, strict_cols):
    """Greene chain law oracle: max entry-weight of k chains in the grid poset."""
    cells = [
        (i, j)
        for i in range(len(matrix))
        for j in range(len(matrix[0]))
        if matrix[i][j]
    ]

    best = 0
    for mask in range(1 << len(cells)):
        chosen = [cells[i] for i in range(len(cells)) if mask >> i & 1]
        weight = sum(matrix[i][j] for i, j in chosen)
        if weight <= best:
            continue
        if _cover_by_chains(chosen, k, strict_cols):
            best = weight
    return best


def _cover_by_chains(cells, k, strict_cols):
    chains = []

    def le(a, b):
        if strict_cols:
            return a[0] <= b[0] and a[1] < b[1]
        return a[0] <= b[0] and a[1] <= b[1]

    def place(pos):
        if pos == len(cells):
            return True
        cell = cells[pos]
        for chain in chains:
            if le(chain[-1], cell):
                chain.append(cell)
                if place(pos + 1):
                    return True
                chain.pop()
        if len(chains) < k:
            chains.append([cell])
            if place(pos + 1):
                return True
            chains.pop()
        return False

    cells.sort()
    return place(0)


def test_greene_chain_law_on_matrices():
    # increasing subwords of the column word match chain unions in the poset
    for entries in product(range(3), repeat=6):
        if sum(entries) > 4:
            continue
        rows = [entries[:3], entries[3:]]
        m = IntMatrix(rows)
        u = matrix_words(m).col_word
        for k in (1, 2, 3):
            inc, _ = greene_invariants(u, k)
            assert inc == chain_union_max(rows, k, strict_cols=False), (rows, k)


def test_knuth_theorem_statement_on_margins():
    # |M_xy| equals the count of same-shape tableau pairs with those contents
    from schurkit.tableaux import enumerate_ssyt

    for d in range(1, 5):
        for mu in partitions_of(d):
            for nu in partitions_of(d):
                lhs = len(enumerate_matrices(mu.parts, nu.parts))
                rhs = sum(
                    len(enumerate_ssyt(lam, content=nu.parts))
                    * len(enumerate_ssyt(lam, content=mu.parts))
                    for lam in partitions_of(d)
                )
                assert lhs == rhs, (mu, nu)
