import pytest

from schurkit.partitions import (
    FrobeniusCoords,
    Partition,
    SkewShape,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
    strip_extensions,
)

P = Partition


def brute_conjugate(lam):
    """Independent oracle: count boxes column by column."""
    cols = []
    j = 1
    while any(p >= j for p in lam.parts):
        cols.append(sum(1 for p in lam.parts if p >= j))
        j += 1
    return P(cols)


def test_construction_and_text():
    assert P([3, 2, 0, 0]).parts == (3, 2)
    assert str(P([3, 3, 2, 2])) == "[3,3,2,2]"
    assert str(P()) == "[]"
    assert P.from_text("[3,3,2,2]") == P([3, 3, 2, 2])
    assert P.from_text("[]") == P()
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, -1])
    with pytest.raises(ValueError):
        P.from_text("3,2")


def test_conjugate_examples():
    assert P([2, 2, 1]).conjugate() == P([3, 2])
    assert P().conjugate() == P()
    assert P([7, 3, 2]).conjugate() == brute_conjugate(P([7, 3, 2]))
    assert P([7, 3, 2]).conjugate() == P([3, 3, 2, 1, 1, 1, 1])


def test_conjugate_is_involution():
    for d in range(9):
        for lam in partitions_of(d):
            assert lam.conjugate().conjugate() == lam


def test_dominance_examples():
    assert P([2, 1]).dominates(P([1, 1, 1]))
    assert not P([3, 3]).dominates(P([4, 1, 1]))
    assert not P([4, 1, 1]).dominates(P([3, 3]))
    assert P([3]).dominates(P([3]))
    assert not P([3]).dominates(P([2]))  # unequal size


def test_dominance_partial_order():
    for d in range(8):
        parts = partitions_of(d)
        for a in parts:
            assert a.dominates(a)
            for b in parts:
                if a.dominates(b) and b.dominates(a):
                    assert a == b
                for c in parts:
                    if a.dominates(b) and b.dominates(c):
                        assert a.dominates(c)
        if d:
            top, bottom = P([d]), P([1] * d)
            assert all(top.dominates(x) and x.dominates(bottom) for x in parts)


def test_smallest_non_linear_dominance_order():
    def is_linear(d):
        parts = partitions_of(d)
        return all(
            a.dominates(b) or b.dominates(a) for a in parts for b in parts
        )

    assert all(is_linear(d) for d in range(6))
    assert not is_linear(6)


def test_dominance_reverses_under_conjugation():
    for d in range(8):
        for a in partitions_of(d):
            for b in partitions_of(d):
                assert a.dominates(b) == b.conjugate().dominates(a.conjugate())


def test_containment_and_strips():
    assert P([3, 3, 2, 2]).contains(P([3, 2, 2]))
    assert not P([3, 2]).contains(P([2, 2, 1]))
    strip = SkewShape(P([3, 3, 3, 2, 2]), P([3, 3, 2, 2]))
    assert strip.size() == 3
    assert is_horizontal_strip(strip)
    assert not is_horizontal_strip(SkewShape(P([2, 2]), P([1])))
    assert not is_vertical_strip(SkewShape(P([2, 2]), P([1])))
    assert is_vertical_strip(SkewShape(P([2, 2]), P([1, 1])))
    assert not is_horizontal_strip(SkewShape(P([2, 2]), P([1, 1])))
    with pytest.raises(ValueError):
        SkewShape(P([2]), P([3]))


def test_skew_text():
    sk = SkewShape.from_text("[3,2]/[1]")
    assert sk.outer == P([3, 2]) and sk.inner == P([1])
    assert str(sk) == "[3,2]/[1]"
    assert SkewShape.from_text("[2,2]").inner == P()


def test_frobenius_round_trip():
    fc = P([6, 4, 4, 2, 2]).to_frobenius()
    assert fc.arms == (5, 2, 1) and fc.legs == (4, 3, 0)
    assert fc.to_partition() == P([6, 4, 4, 2, 2])
    assert P([4, 1, 1]).to_frobenius() == FrobeniusCoords((3,), (2,))
    assert P().to_frobenius() == FrobeniusCoords((), ())
    for d in range(9):
        for lam in partitions_of(d):
            fc = lam.to_frobenius()
            assert fc.to_partition() == lam
            assert fc.rank() + sum(fc.arms) + sum(fc.legs) == d
            conj = lam.conjugate().to_frobenius()
            assert conj.arms == fc.legs and conj.legs == fc.arms


def test_partitions_of_orders_and_bounds():
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert [p.parts for p in partitions_of(4, max_parts=2)] == [(4,), (3, 1), (2, 2)]
    assert partitions_of(0) == [P()]
    assert [p.parts for p in partitions_of(4, max_part=2)] == [
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    for d in range(8):
        full = partitions_of(d)
        assert len(set(full)) == len(full)
        assert full == sorted(full, key=lambda p: p.parts, reverse=True)
        assert [p for p in full if len(p) <= 3] == partitions_of(d, max_parts=3)


@pytest.mark.parametrize("kind", ["horizontal", "vertical"])
def test_strip_extensions_against_brute_force(kind):
    predicate = is_horizontal_strip if kind == "horizontal" else is_vertical_strip
    for d in range(5):
        for lam in partitions_of(d):
            for k in range(1, 4):
                got = strip_extensions(lam, k, kind)
                want = [
                    mu
                    for mu in partitions_of(d + k)
                    if mu.contains(lam) and predicate(SkewShape(mu, lam))
                ]
                assert sorted(got, key=lambda p: p.parts) == sorted(
                    want, key=lambda p: p.parts
                ), (lam, k, kind)


def test_strip_extensions_examples():
    assert [m.parts for m in strip_extensions(P([2, 2]), 1, "horizontal", 3)] == [
        (3, 2),
        (2, 2, 1),
    ]
    assert [m.parts for m in strip_extensions(P(), 2, "vertical")] == [(1, 1)]
    assert [m.parts for m in strip_extensions(P([2]), 2, "horizontal", 2)] == [
        (4,),
        (3, 1),
        (2, 2),
    ]
