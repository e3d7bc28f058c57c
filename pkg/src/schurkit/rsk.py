"""Matrix words and the insertion correspondences between integer matrices
and pairs of tableaux, with exhaustive bijection audits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .expansions import enumerate_matrices
from .partitions import Partition, partitions_of
from .tableaux import (
    DualTableau,
    Tableau,
    Word,
    delete,
    enumerate_ssyt,
    p_star_tableau,
    p_tableau,
    tableau_to_dual,
)


class IntMatrix:
    """Dense rectangle of non-negative integers; optionally 0/1-restricted."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, entries, ncols: int | None = None):
        rows = tuple(tuple(int(a) for a in row) for row in entries)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("rows must have equal length")
        self._ncols = widths.pop() if widths else (ncols or 0)
        if any(a < 0 for row in rows for a in row):
            raise ValueError("entries must be non-negative")
        self._rows = rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    def is_zero_one(self) -> bool:
        return all(a <= 1 for row in self._rows for a in row)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self._rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self._rows) for j in range(self._ncols))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self._rows == other._rows
            and self._ncols == other._ncols
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._ncols))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        return ";".join(",".join(str(a) for a in row) for row in self._rows)

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        """Rows as comma-separated integers, semicolon-separated, e.g. "1,0;0,1"."""
        rows = []
        for part in text.strip().split(";"):
            part = part.strip()
            if not part:
                raise ValueError(f"empty row in matrix text {text!r}")
            rows.append([int(tok) for tok in part.split(",")])
        return cls(rows)


class MatrixWords(NamedTuple):
    col_word: Word
    row_word: Word
    rev_col_word: Word
    rev_row_word: Word


def matrix_words(a: IntMatrix) -> MatrixWords:
    """The four reading words of a matrix.

    col_word lists column indices row block by row block with multiplicity;
    row_word lists row indices column block by column block; the rev_ words
    reverse the letters inside each block.
    """
    col_blocks = [
        [j + 1 for j in range(a.ncols) for _ in range(row[j])] for row in a.rows
    ]
    row_blocks = [
        [i + 1 for i in range(a.nrows) for _ in range(a.rows[i][j])]
        for j in range(a.ncols)
    ]
    flat = lambda blocks: tuple(x for block in blocks for x in block)
    rev = lambda blocks: tuple(x for block in blocks for x in reversed(block))
    return MatrixWords(flat(col_blocks), flat(row_blocks), rev(col_blocks), rev(row_blocks))


def rsk(a: IntMatrix) -> tuple[Tableau, Tableau]:
    """Insertion pair (P, Q): P records the column word, Q the row word.

    The two tableaux always share their shape; the content of P is the
    column-sum vector and the content of Q the row-sum vector.
    """
    words = matrix_words(a)
    return p_tableau(words.col_word), p_tableau(words.row_word)


def rsk_star(a: IntMatrix, reversed_u: bool = False) -> tuple[DualTableau, Tableau]:
    """Dual correspondence for 0/1 matrices: (dual insertion of the column
    word, plain insertion of the block-reversed row word).

    reversed_u switches the first component to the block-reversed column
    word; the audits certify the unreversed convention.
    """
    if not a.is_zero_one():
        raise ValueError("dual correspondence needs a 0/1 matrix")
    words = matrix_words(a)
    u = words.rev_col_word if reversed_u else words.col_word
    return p_star_tableau(u), p_tableau(words.rev_row_word)


def burge(a: IntMatrix) -> tuple[DualTableau, DualTableau]:
    """Burge correspondence: dual insertion of both block-reversed words."""
    words = matrix_words(a)
    return p_star_tableau(words.rev_col_word), p_star_tableau(words.rev_row_word)


def rsk_inverse(
    p: Tableau, q: Tableau, nrows: int | None = None, ncols: int | None = None
) -> IntMatrix:
    """The unique matrix with insertion pair (p, q).

    Peels the cells of q holding its maximal letter (a horizontal strip) and
    un-inserts the matching boxes of p right to left; each pass recovers one
    matrix row. Shape mismatches or a non-row peel signal an invalid pair.
    """
    if p.shape() != q.shape():
        raise ValueError("tableaux must have equal shape")
    m = nrows if nrows is not None else max((a for row in q.rows for a in row), default=0)
    n = ncols if ncols is not None else max((a for row in p.rows for a in row), default=0)
    if any(a > m for row in q.rows for a in row):
        raise ValueError(f"recording tableau uses letters above {m}")
    if any(a > n for row in p.rows for a in row):
        raise ValueError(f"insertion tableau uses letters above {n}")
    entries = [[0] * n for _ in range(m)]
    cur_p, cur_q = p, q
    for letter in range(m, 0, -1):
        cells = [
            (i, j)
            for i, row in enumerate(cur_q.rows)
            for j, a in enumerate(row)
            if a == letter
        ]
        letters_out = []
        for i, j in sorted(cells, key=lambda c: -c[1]):
            if cur_p.shape().part(i) - 1 != j:
                raise ValueError("peel cell is not at the end of its row")
            cur_p, x = delete(cur_p, i + 1)
            letters_out.append(x)
        row_word = list(reversed(letters_out))
        if any(x > y for x, y in zip(row_word, row_word[1:])):
            raise ValueError("peeled letters do not form a row")
        for x in row_word:
            entries[letter - 1][x - 1] += 1
        cur_q = Tableau(tuple(a for a in row if a != letter) for row in cur_q.rows)
    if cur_p.size() != 0:
        raise ValueError("leftover cells after peeling")
    return IntMatrix(entries, ncols=n)


def _dual_tableaux(lam: Partition, content) -> list[DualTableau]:
    """Dual tableaux of the given raw shape: conjugated semistandard ones."""
    return [tableau_to_dual(t) for t in enumerate_ssyt(lam.conjugate(), content=content)]


@dataclass(frozen=True)
class BijectionReport:
    flavor: str
    matrix_count: int
    pair_count: int
    injective: bool
    surjective: bool
    type_correct: bool
    shape_equal: bool
    reversed_u_shape_equal: bool | None = None

    @property
    def bijective(self) -> bool:
        return (
            self.injective and self.surjective and self.matrix_count == self.pair_count
        )


def verify_knuth_bijection(mu: Partition, nu: Partition, flavor: str) -> BijectionReport:
    """Exhaustively audit one correspondence on the margin class (mu, nu).

    Enumerates the matrix side and the tableau-pair side independently and
    confirms the map is injective, surjective and type-correct.
    """
    if flavor not in ("rsk", "rsk_star", "burge"):
        raise ValueError(f"unknown flavor {flavor!r}")
    zero_one = flavor == "rsk_star"
    raw = enumerate_matrices(mu.parts, nu.parts, zero_one=zero_one)
    matrices = [IntMatrix(rows, ncols=len(nu.parts)) for rows in raw]

    images = []
    shape_equal = True
    type_correct = True
    rev_shape_equal: bool | None = None
    if flavor == "rsk_star":
        rev_shape_equal = True
    for a in matrices:
        if flavor == "rsk":
            left, right = rsk(a)
        elif flavor == "rsk_star":
            left, right = rsk_star(a)
            alt_left, alt_right = rsk_star(a, reversed_u=True)
            if alt_left.shape() != alt_right.shape():
                rev_shape_equal = False
        else:
            left, right = burge(a)
        if left.shape() != right.shape():
            shape_equal = False
        if _padded(left.content(), len(nu.parts)) != tuple(nu.parts) or _padded(
            right.content(), len(mu.parts)
        ) != tuple(mu.parts):
            type_correct = False
        images.append((left, right))

    expected = set()
    d = mu.size()
    for lam in partitions_of(d):
        if flavor == "rsk":
            lefts: list = enumerate_ssyt(lam, content=nu.parts)
            rights: list = enumerate_ssyt(lam, content=mu.parts)
        elif flavor == "rsk_star":
            lefts = _dual_tableaux(lam, nu.parts)
            rights = enumerate_ssyt(lam, content=mu.parts)
        else:
            lefts = _dual_tableaux(lam, nu.parts)
            rights = _dual_tableaux(lam, mu.parts)
        for left in lefts:
            for right in rights:
                expected.add((left, right))

    image_set = set(images)
    return BijectionReport(
        flavor=flavor,
        matrix_count=len(matrices),
        pair_count=len(expected),
        injective=len(image_set) == len(images),
        surjective=image_set == expected,
        type_correct=type_correct,
        shape_equal=shape_equal,
        reversed_u_shape_equal=rev_shape_equal,
    )


def _padded(content: tuple[int, ...], length: int) -> tuple[int, ...]:
    if len(content) > length:
        return content
    return content + (0,) * (length - len(content))
