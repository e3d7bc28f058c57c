"""Semistandard tableaux, reading words, Schensted insertion, Greene
invariants, Knuth equivalence, Yamanouchi words and Kostka numbers."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from functools import lru_cache

from .partitions import Partition, SkewShape

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Digit-string word form, one letter per digit (alphabet at most 9)."""
    text = text.strip()
    if not text:
        return ()
    if not text.isdigit() or "0" in text:
        raise ValueError(f"word text must be digits 1..9, got {text!r}")
    return tuple(int(ch) for ch in text)


def format_word(word: Word) -> str:
    if any(a > 9 for a in word):
        return ",".join(str(a) for a in word)
    return "".join(str(a) for a in word)


def word_content(word: Word) -> tuple[int, ...]:
    """Letter multiplicities, indexed 1..max letter."""
    if not word:
        return ()
    counts = [0] * max(word)
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


class Tableau:
    """Rows weakly increase, columns strictly increase, row lengths weakly
    decrease. Identified with its bottom-to-top reading word."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        rows = tuple(row for row in rows if row)
        for row in rows:
            if any(a < 1 for a in row):
                raise ValueError("letters must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must weakly decrease")
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must strictly increase")
        self._rows = rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def shape(self) -> Partition:
        return Partition(len(row) for row in self._rows)

    def size(self) -> int:
        return sum(len(row) for row in self._rows)

    def content(self) -> tuple[int, ...]:
        return word_content(self.reading_word())

    def reading_word(self) -> Word:
        out: list[int] = []
        for row in reversed(self._rows):
            out.extend(row)
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self._rows)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        """One row per line, letters space-separated, top row first."""
        rows = []
        for line in text.strip().splitlines():
            line = line.strip()
            if line:
                rows.append([int(tok) for tok in line.split()])
        return cls(rows)


class DualTableau:
    """Transpose-semistandard filling: rows strictly increase, columns
    weakly increase. Produced by dual insertion; its conjugate is a Tableau."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        rows = tuple(row for row in rows if row)
        for row in rows:
            if any(a < 1 for a in row):
                raise ValueError("letters must be positive")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must weakly decrease")
            if any(upper[j] > lower[j] for j in range(len(lower))):
                raise ValueError("columns must weakly increase")
        self._rows = rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def shape(self) -> Partition:
        return Partition(len(row) for row in self._rows)

    def size(self) -> int:
        return sum(len(row) for row in self._rows)

    def content(self) -> tuple[int, ...]:
        letters = [a for row in self._rows for a in row]
        return word_content(tuple(letters))

    def conjugate(self) -> Tableau:
        """The transposed filling, a semistandard tableau."""
        if not self._rows:
            return Tableau(())
        cols = len(self._rows[0])
        out = [
            [row[j] for row in self._rows if len(row) > j] for j in range(cols)
        ]
        return Tableau(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DualTableau) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(("dual", self._rows))

    def __repr__(self) -> str:
        return f"DualTableau({[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self._rows)


class SkewTableau:
    """Semistandard filling of a skew shape; row i stores its filled cells."""

    __slots__ = ("_shape", "_rows")

    def __init__(self, shape: SkewShape, rows):
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        outer, inner = shape.outer, shape.inner
        if len(rows) != len(outer):
            raise ValueError("one entry row per outer row is required")
        for i, row in enumerate(rows):
            if len(row) != outer.part(i) - inner.part(i):
                raise ValueError(f"row {i} has wrong length")
            if any(a < 1 for a in row):
                raise ValueError("letters must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
        for i in range(1, len(rows)):
            for j in range(inner.part(i), outer.part(i)):
                if j >= inner.part(i - 1) and j < outer.part(i - 1):
                    above = rows[i - 1][j - inner.part(i - 1)]
                    here = rows[i][j - inner.part(i)]
                    if above >= here:
                        raise ValueError("columns must strictly increase")
        self._shape = shape
        self._rows = rows

    @property
    def shape(self) -> SkewShape:
        return self._shape

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def size(self) -> int:
        return sum(len(row) for row in self._rows)

    def content(self) -> tuple[int, ...]:
        return word_content(self.reading_word())

    def reading_word(self) -> Word:
        out: list[int] = []
        for row in reversed(self._rows):
            out.extend(row)
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewTableau)
            and self._shape == other._shape
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._shape.outer, self._shape.inner, self._rows))

    def __repr__(self) -> str:
        return f"SkewTableau({self._shape}, {[list(r) for r in self._rows]})"

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self._rows):
            cells = ["."] * self._shape.inner.part(i) + [str(a) for a in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def reading_word(t: Tableau | SkewTableau) -> Word:
    return t.reading_word()


def tableau_to_dual(t: Tableau) -> DualTableau:
    """Transpose a semistandard tableau into its dual (conjugate) form."""
    if not t.rows:
        return DualTableau(())
    cols = len(t.rows[0])
    return DualTableau(
        [[row[j] for row in t.rows if len(row) > j] for j in range(cols)]
    )


def word_to_tableau(word: Word) -> Tableau | None:
    """Rebuild a tableau by cutting the word at descents; None if the cuts
    do not assemble into a valid tableau."""
    segments: list[list[int]] = [[]]
    for a in word:
        if segments[-1] and a < segments[-1][-1]:
            segments.append([])
        segments[-1].append(a)
    rows = list(reversed(segments))
    try:
        t = Tableau(rows)
    except ValueError:
        return None
    if t.reading_word() != tuple(word):
        return None
    return t


def row_insert(row, x: int) -> tuple[int | None, tuple[int, ...]]:
    """Schensted bump into a weakly increasing row.

    Appends x when it is >= every entry; otherwise x replaces the leftmost
    entry strictly greater than it, which is bumped out.
    """
    row = tuple(row)
    if any(a > b for a, b in zip(row, row[1:])):
        raise ValueError(f"{row} is not a row")
    j = bisect_right(row, x)
    if j == len(row):
        return None, row + (x,)
    return row[j], row[:j] + (x,) + row[j + 1 :]


def row_uninsert(row, y: int) -> tuple[tuple[int, ...], int]:
    """Inverse bump: y re-enters at the rightmost entry smaller than it."""
    row = tuple(row)
    j = bisect_left(row, y) - 1
    if j < 0:
        raise ValueError(f"cannot reverse-bump {y} into {row}")
    return row[:j] + (y,) + row[j + 1 :], row[j]


def insert(t: Tableau, x: int) -> Tableau:
    """Schensted insertion; the shape grows by exactly one box."""
    rows = [list(r) for r in t.rows]
    carry: int | None = x
    for i, row in enumerate(rows):
        carry, new_row = row_insert(tuple(row), carry)
        rows[i] = list(new_row)
        if carry is None:
            return Tableau(rows)
    rows.append([carry])
    return Tableau(rows)


def delete(t: Tableau, r: int) -> tuple[Tableau, int]:
    """Inverse of insert at the last box of row r (1-based).

    Requires that removing that box leaves a partition shape.
    """
    rows = [list(row) for row in t.rows]
    if not 1 <= r <= len(rows):
        raise ValueError(f"row {r} out of range")
    i = r - 1
    if i + 1 < len(rows) and len(rows[i]) == len(rows[i + 1]):
        raise ValueError(f"row {r} has no removable box")
    carry = rows[i].pop()
    if not rows[i]:
        rows.pop(i)
    for u in range(i - 1, -1, -1):
        new_row, carry = row_uninsert(tuple(rows[u]), carry)
        rows[u] = list(new_row)
    return Tableau(rows), carry


def p_tableau(word) -> Tableau:
    """Left fold of Schensted insertion over the word."""
    t = Tableau(())
    for a in word:
        t = insert(t, a)
    return t


def dual_insert(t: DualTableau, x: int) -> DualTableau:
    """Dual Schensted step: x displaces the leftmost entry >= x (ties bump)."""
    rows = [list(r) for r in t.rows]
    carry: int | None = x
    for i, row in enumerate(rows):
        j = bisect_left(tuple(row), carry)
        if j == len(row):
            rows[i] = row + [carry]
            carry = None
            break
        carry, rows[i][j] = rows[i][j], carry
    if carry is not None:
        rows.append([carry])
    return DualTableau(rows)


def p_star_tableau(word) -> DualTableau:
    t = DualTableau(())
    for a in word:
        t = dual_insert(t, a)
    return t


_EMPTY_INC = 0


def _greene_best(word: Word, k: int, strict_decreasing: bool) -> int:
    """Maximum total size of k index-disjoint chains, by memoized search
    over all ways of extending the chains letter by letter."""
    if k <= 0 or not word:
        return 0
    empty = (max(word) + 1) if strict_decreasing else _EMPTY_INC

    @lru_cache(maxsize=None)
    def best(pos: int, ends: tuple[int, ...]) -> int:
        if pos == len(word):
            return 0
        x = word[pos]
        result = best(pos + 1, ends)
        tried = set()
        for idx, end in enumerate(ends):
            if end in tried:
                continue
            tried.add(end)
            ok = (x < end) if strict_decreasing else (x >= end)
            if end == empty or ok:
                nxt = tuple(sorted(ends[:idx] + (x,) + ends[idx + 1 :]))
                candidate = 1 + best(pos + 1, nxt)
                if candidate > result:
                    result = candidate
        return result

    answer = best(0, tuple([empty] * k))
    best.cache_clear()
    return answer


def greene_invariants(word, k: int) -> tuple[int, int]:
    """Largest unions of k disjoint weakly increasing / strictly decreasing
    subwords (disjointness is on index sets)."""
    word = tuple(word)
    return (
        _greene_best(word, k, strict_decreasing=False),
        _greene_best(word, k, strict_decreasing=True),
    )


def shape_from_greene(word) -> tuple[Partition, Partition]:
    """Partitions cut out of the two Greene invariant sequences.

    The first differences of the increasing invariants form the first
    partition, those of the decreasing invariants the second; they are
    mutually conjugate and the first is the shape of the insertion tableau.
    """
    word = tuple(word)
    m = len(word)
    lam, prev, k = [], 0, 1
    while prev < m:
        cur = _greene_best(word, k, strict_decreasing=False)
        lam.append(cur - prev)
        prev, k = cur, k + 1
    mu, prev, k = [], 0, 1
    while prev < m:
        cur = _greene_best(word, k, strict_decreasing=True)
        mu.append(cur - prev)
        prev, k = cur, k + 1
    return Partition(lam), Partition(mu)


def _triple_rewrites(a: int, b: int, c: int, relations: str):
    """Rewrites of one consecutive triple, both directions of each relation."""
    if relations == "knuth":
        # xzy <-> zxy with x <= y < z : swap the first two letters
        if (a <= c < b) or (b <= c < a):
            yield b, a, c
        # yxz <-> yzx with x < y <= z : swap the last two letters
        if (b < a <= c) or (c < a <= b):
            yield a, c, b
    else:
        # forgotten relations: xzy <-> yxz with x < y < z
        if a < c < b:
            yield c, a, b
        if b < a < c:
            yield b, c, a
        # zxy <-> yzx with x <= y <= z
        if b <= c <= a:
            yield c, a, b
        if c <= a <= b:
            yield b, c, a


def _rewrite_class(word: Word, relations: str, max_size: int | None) -> set[Word]:
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 2):
            for triple in _triple_rewrites(w[i], w[i + 1], w[i + 2], relations):
                nxt = w[:i] + triple + w[i + 3 :]
                if nxt not in seen:
                    if max_size is not None and len(seen) >= max_size:
                        raise ValueError(f"class size exceeds bound {max_size}")
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def knuth_class(word, max_size: int | None = None) -> set[Word]:
    """Closure of the word under both Knuth relations in both directions."""
    return _rewrite_class(tuple(word), "knuth", max_size)


def forgotten_class(word, max_size: int | None = None) -> set[Word]:
    """Closure under the forgotten relations in both directions."""
    return _rewrite_class(tuple(word), "forgotten", max_size)


_BFS_LIMIT = 8


def knuth_equivalent(u, v) -> bool:
    """Decide plactic equivalence: rewrite closure up to length 8, equality
    of insertion tableaux beyond (the two agree on the overlap)."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v) or sorted(u) != sorted(v):
        return False
    if len(u) <= _BFS_LIMIT:
        return v in knuth_class(u)
    return p_tableau(u) == p_tableau(v)


def is_yamanouchi(word) -> bool:
    """Every suffix contains at least as many letters i as letters i+1."""
    word = tuple(word)
    if not word:
        return True
    counts = [0] * max(word)
    for a in reversed(word):
        counts[a - 1] += 1
        if a >= 2 and counts[a - 1] > counts[a - 2]:
            return False
    return True


def yamanouchi_tableau(lam: Partition) -> Tableau:
    """The unique tableau of shape and type lam: row i filled with i."""
    return Tableau(tuple((i + 1,) * p for i, p in enumerate(lam)))


def enumerate_ssyt(
    shape: Partition | SkewShape,
    content=None,
    max_letter: int | None = None,
) -> list[Tableau] | list[SkewTableau]:
    """All semistandard fillings of the shape, ordered by reading word.

    Exactly one of content (letter multiplicities, 1-indexed) and max_letter
    must be given.
    """
    if (content is None) == (max_letter is None):
        raise ValueError("give exactly one of content= or max_letter=")
    skew = shape if isinstance(shape, SkewShape) else SkewShape(shape, Partition())
    outer, inner = skew.outer, skew.inner
    if content is not None:
        content = tuple(int(c) for c in content)
        if sum(content) != skew.size():
            return []
        nmax = len(content)
        remaining = list(content)
    else:
        nmax = max_letter
        remaining = None

    cells = [
        (i, j) for i in range(len(outer)) for j in range(inner.part(i), outer.part(i))
    ]
    grid: dict[tuple[int, int], int] = {}
    found: list = []

    def rec(idx: int):
        if idx == len(cells):
            rows = [
                tuple(grid[(i, j)] for j in range(inner.part(i), outer.part(i)))
                for i in range(len(outer))
            ]
            found.append(rows)
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in grid:
            lo = max(lo, grid[(i, j - 1)])
        if (i - 1, j) in grid:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, nmax + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            grid[(i, j)] = v
            rec(idx + 1)
            del grid[(i, j)]
            if remaining is not None:
                remaining[v - 1] += 1

    rec(0)
    if isinstance(shape, SkewShape):
        out = [SkewTableau(skew, rows) for rows in found]
    else:
        out = [Tableau(rows) for rows in found]
    out.sort(key=lambda t: t.reading_word())
    return out


@lru_cache(maxsize=None)
def _kostka_cached(shape_parts: tuple[int, ...], content: tuple[int, ...]) -> int:
    return len(enumerate_ssyt(Partition(shape_parts), content=content))


def kostka(lam: Partition, mu) -> int:
    """Number of semistandard tableaux of shape lam and type mu."""
    mu_counts = tuple(mu.parts) if isinstance(mu, Partition) else tuple(mu)
    return _kostka_cached(lam.parts, mu_counts)


def f_number(lam: Partition) -> int:
    """Number of standard tableaux of shape lam."""
    return kostka(lam, (1,) * lam.size())


def canonical_tableau(lam: Partition, mu: Partition) -> Tableau:
    """Constructive witness for positive Kostka numbers.

    Repeatedly places the largest remaining letter m along the bottom rim of
    the leftmost columns and the right end of the pivot row, shrinking the
    unfilled region to a smaller dominating pair. Requires lam to dominate mu.
    """
    if not lam.dominates(mu):
        raise ValueError(f"{lam} does not dominate {mu}")
    grid = [[0] * p for p in lam.parts]
    cur = list(lam.parts)
    parts = list(mu.parts)
    while parts:
        m = len(parts)
        if m == 1:
            for j in range(cur[0]):
                grid[0][j] = 1
            break
        last = parts.pop()
        pivot = max(idx for idx, v in enumerate(cur) if v >= last)  # 0-based
        below = cur[pivot + 1] if pivot + 1 < len(cur) else 0
        for c in range(below):
            r = max(r for r in range(len(cur)) if cur[r] >= c + 1)
            grid[r][c] = m
        for c in range(cur[pivot] - (last - below), cur[pivot]):
            grid[pivot][c] = m
        cur = (
            cur[:pivot]
            + [cur[pivot] - last + below]
            + [cur[r + 1] if r + 1 < len(cur) else 0 for r in range(pivot + 1, len(cur))]
        )
        while cur and cur[-1] == 0:
            cur.pop()
    return Tableau(grid)
