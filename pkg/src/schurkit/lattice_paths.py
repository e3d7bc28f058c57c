"""Weighted lattice paths, the non-crossing determinant lemma, and the
determinantal Schur identities built on it.

Edge weights are single variables or 1, so a path weight is a monomial and
the monomial is encoded as an exponent-count vector while enumerating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable

from .partitions import Partition, SkewShape
from .polynomials import IntPolynomial, e_poly, h_poly, poly_determinant
from .tableaux import SkewTableau, Tableau

Point = tuple[int, int]
Step = tuple[Point, int | None]  # destination, variable index (None = weight 1)


class WeightedGrid:
    """Finite window of integer points with a per-point step rule."""

    def __init__(
        self,
        nvars: int,
        step_rule: Callable[[Point], Iterable[Step]],
        x_range: tuple[int, int],
        y_range: tuple[int, int],
    ):
        self.nvars = nvars
        self._step_rule = step_rule
        self.x_range = x_range
        self.y_range = y_range

    def in_window(self, pt: Point) -> bool:
        return (
            self.x_range[0] <= pt[0] <= self.x_range[1]
            and self.y_range[0] <= pt[1] <= self.y_range[1]
        )

    def steps(self, pt: Point) -> list[Step]:
        if not self.in_window(pt):
            return []
        return [s for s in self._step_rule(pt) if self.in_window(s[0])]


def h_model_grid(nvars: int, max_x: int) -> WeightedGrid:
    """Rightward steps in row j weigh x_j, upward steps weigh 1."""

    def rule(pt: Point) -> list[Step]:
        x, y = pt
        out: list[Step] = [((x + 1, y), y - 1)]
        if y < nvars:
            out.append(((x, y + 1), None))
        return out

    return WeightedGrid(nvars, rule, (0, max_x), (1, nvars))


def e_model_grid(nvars: int, max_x: int) -> WeightedGrid:
    """Up-right diagonal steps ending in row j weigh x_j, upward steps 1."""

    def rule(pt: Point) -> list[Step]:
        x, y = pt
        out: list[Step] = []
        if y < nvars:
            out.append(((x + 1, y + 1), y))  # ends in row y+1
            out.append(((x, y + 1), None))
        return out

    return WeightedGrid(nvars, rule, (0, max_x), (0, nvars))


def giambelli_grid(nvars: int, min_x: int, max_x: int) -> WeightedGrid:
    """Two-regime grid for hook Schur entries.

    Left of the axis paths descend: plain down steps weigh 1 and down-right
    diagonals ending in row j weigh x_j. From the axis on the rule is the
    h-model. The worked path from (-4, n+1) to (3, n) with column {1,2,4,5}
    and arm {1,1,3} pins this reconstruction down.
    """

    def rule(pt: Point) -> list[Step]:
        x, y = pt
        out: list[Step] = []
        if x < 0:
            if y > 1:
                out.append(((x, y - 1), None))
                out.append(((x + 1, y - 1), y - 2))  # ends in row y-1
        else:
            if y <= nvars:
                out.append(((x + 1, y), y - 1))
            if y < nvars:
                out.append(((x, y + 1), None))
        return out

    return WeightedGrid(nvars, rule, (min_x, max_x), (1, nvars + 1))


def enumerate_paths(
    grid: WeightedGrid, a: Point, b: Point
) -> list[tuple[tuple[Point, ...], tuple[int, ...]]]:
    """All simple nonzero-weight paths from a to b with their weight exponents."""
    out: list[tuple[tuple[Point, ...], tuple[int, ...]]] = []
    if not (grid.in_window(a) and grid.in_window(b)):
        return out
    exps = [0] * grid.nvars

    def dfs(pt: Point, trail: list[Point]):
        if pt == b:
            out.append((tuple(trail), tuple(exps)))
            return
        for dest, var in grid.steps(pt):
            if dest[0] > b[0]:
                continue
            if var is not None:
                exps[var] += 1
            trail.append(dest)
            dfs(dest, trail)
            trail.pop()
            if var is not None:
                exps[var] -= 1

    dfs(a, [a])
    return out


def path_sum(grid: WeightedGrid, a: Point, b: Point) -> IntPolynomial:
    """Exact generating polynomial of all paths from a to b."""
    total = IntPolynomial.zero(grid.nvars)
    for _, exps in enumerate_paths(grid, a, b):
        total = total + IntPolynomial.monomial(grid.nvars, exps)
    return total


def paths_cross(p: tuple[Point, ...], q: tuple[Point, ...]) -> bool:
    return bool(set(p) & set(q))


@dataclass(frozen=True)
class PathSystem:
    """A tuple of paths joining sources to sinks under some matching."""

    sources: tuple[Point, ...]
    sinks: tuple[Point, ...]
    paths: tuple[tuple[Point, ...], ...]

    def permutation(self) -> tuple[int, ...]:
        """0-based sink index reached from each source."""
        endpoints = {s: i for i, s in enumerate(self.sinks)}
        return tuple(endpoints[p[-1]] for p in self.paths)

    def sign(self) -> int:
        perm = self.permutation()
        inv = sum(
            1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
        )
        return -1 if inv % 2 else 1

    def is_noncrossing(self) -> bool:
        for i in range(len(self.paths)):
            for j in range(i + 1, len(self.paths)):
                if paths_cross(self.paths[i], self.paths[j]):
                    return False
        return True


def swap_first_crossing(system: PathSystem) -> PathSystem:
    """Tail swap at the first crossing of the first crossing path.

    Sign-flipping, weight-preserving, and an involution on crossing systems.
    """
    paths = system.paths
    n = len(paths)
    first = None
    for i in range(n):
        if any(paths_cross(paths[i], paths[j]) for j in range(n) if j != i):
            first = i
            break
    if first is None:
        raise ValueError("system has no crossing")
    partner = min(j for j in range(n) if j != first and paths_cross(paths[j], paths[first]))
    on_partner = set(paths[partner])
    m = next(k for k, pt in enumerate(paths[first]) if pt in on_partner)
    r = paths[partner].index(paths[first][m])
    new_first = paths[first][: m + 1] + paths[partner][r + 1 :]
    new_partner = paths[partner][: r + 1] + paths[first][m + 1 :]
    new_paths = list(paths)
    new_paths[first] = new_first
    new_paths[partner] = new_partner
    return PathSystem(system.sources, system.sinks, tuple(new_paths))


@dataclass(frozen=True)
class LGVReport:
    determinant: IntPolynomial
    noncrossing_sum: IntPolynomial
    crossing_condition: bool
    determinant_matches: bool
    involution_ok: bool
    system_count: int
    noncrossing_count: int

    @property
    def ok(self) -> bool:
        return self.crossing_condition and self.determinant_matches and self.involution_ok


def all_path_systems(
    grid: WeightedGrid, sources, sinks
) -> list[tuple[PathSystem, tuple[int, ...]]]:
    """Every tuple of paths joining sources to sinks under every matching,
    with total weight exponents."""
    sources = tuple(sources)
    sinks = tuple(sinks)
    n = len(sources)
    table = {
        (i, j): enumerate_paths(grid, sources[i], sinks[j])
        for i in range(n)
        for j in range(n)
    }
    out = []
    for perm in permutations(range(n)):
        choices = [table[(i, perm[i])] for i in range(n)]
        if any(not c for c in choices):
            continue

        def rec(i: int, acc_paths: list, acc_exps: list[int]):
            if i == n:
                system = PathSystem(sources, sinks, tuple(acc_paths))
                out.append((system, tuple(acc_exps)))
                return
            for path, exps in choices[i]:
                rec(
                    i + 1,
                    acc_paths + [path],
                    [a + b for a, b in zip(acc_exps, exps)],
                )

        rec(0, [], [0] * grid.nvars)
    return out


def noncrossing_systems(grid: WeightedGrid, sources, sinks) -> list[PathSystem]:
    return [s for s, _ in all_path_systems(grid, sources, sinks) if s.is_noncrossing()]


def lgv_check(grid: WeightedGrid, sources, sinks) -> LGVReport:
    """Audit the non-crossing determinant identity on one configuration.

    Checks the crossing condition pairwise, compares the determinant of the
    path-sum matrix with the enumerated non-crossing weight sum, and verifies
    the tail-swap involution pointwise on every crossing system.
    """
    sources = tuple(sources)
    sinks = tuple(sinks)
    n = len(sources)
    table = {
        (i, j): enumerate_paths(grid, sources[i], sinks[j])
        for i in range(n)
        for j in range(n)
    }

    crossing_condition = True
    for i in range(n):
        for j in range(i + 1, n):
            for ip in range(n):
                for jp in range(ip + 1, n):
                    for omega, _ in table[(i, jp)]:
                        for eta, _ in table[(j, ip)]:
                            if not paths_cross(omega, eta):
                                crossing_condition = False

    matrix = [
        [
            sum(
                (IntPolynomial.monomial(grid.nvars, e) for _, e in table[(i, j)]),
                IntPolynomial.zero(grid.nvars),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    det = poly_determinant(matrix) if n else IntPolynomial.one(grid.nvars)

    systems = all_path_systems(grid, sources, sinks)
    noncrossing_sum = IntPolynomial.zero(grid.nvars)
    noncrossing_count = 0
    involution_ok = True
    for system, exps in systems:
        if system.is_noncrossing():
            noncrossing_count += 1
            term = IntPolynomial.monomial(grid.nvars, exps) * system.sign()
            noncrossing_sum = noncrossing_sum + term
        else:
            image = swap_first_crossing(system)
            back = swap_first_crossing(image)
            weight_image = tuple(
                sum(1 for p in image.paths for e in _path_exps(grid, p) if e == v)
                for v in range(grid.nvars)
            )
            if (
                back != system
                or image.sign() != -system.sign()
                or weight_image != exps
            ):
                involution_ok = False

    return LGVReport(
        determinant=det,
        noncrossing_sum=noncrossing_sum,
        crossing_condition=crossing_condition,
        determinant_matches=det == noncrossing_sum,
        involution_ok=involution_ok,
        system_count=len(systems),
        noncrossing_count=noncrossing_count,
    )


def _path_exps(grid: WeightedGrid, path: tuple[Point, ...]) -> list[int]:
    exps = []
    for src, dst in zip(path, path[1:]):
        for dest, var in grid.steps(src):
            if dest == dst:
                if var is not None:
                    exps.append(var)
                break
        else:
            raise ValueError(f"no step from {src} to {dst}")
    return exps


def h_model_endpoints(lam: Partition, nvars: int, inner: Partition | None = None):
    """Sources and sinks realizing the (skew) complete-entry determinant."""
    mu = inner if inner is not None else Partition()
    l = max(len(lam), 1)
    sources = tuple((mu.part(i) + l - 1 - i, 1) for i in range(l))
    sinks = tuple((lam.part(i) + l - 1 - i, nvars) for i in range(l))
    return sources, sinks


def e_model_endpoints(lam: Partition, nvars: int):
    """Sources and sinks realizing the elementary-entry determinant."""
    conj = lam.conjugate()
    l = max(len(conj), 1)
    sources = tuple((l - 1 - i, 0) for i in range(l))
    sinks = tuple((conj.part(i) + l - 1 - i, nvars) for i in range(l))
    return sources, sinks


def jacobi_trudi_h(lam: Partition, nvars: int) -> IntPolynomial:
    """Determinant of complete symmetric polynomials indexed by the rows."""
    l = len(lam)
    if l == 0:
        return IntPolynomial.one(nvars)
    matrix = [
        [_h_or_zero(lam.part(i) - i + j, nvars) for j in range(l)] for i in range(l)
    ]
    return poly_determinant(matrix)


def jacobi_trudi_e(lam: Partition, nvars: int) -> IntPolynomial:
    """Determinant of elementary symmetric polynomials indexed by the columns."""
    conj = lam.conjugate()
    l = len(conj)
    if l == 0:
        return IntPolynomial.one(nvars)
    matrix = [
        [_e_or_zero(conj.part(i) - i + j, nvars) for j in range(l)] for i in range(l)
    ]
    return poly_determinant(matrix)


def _h_or_zero(k: int, nvars: int) -> IntPolynomial:
    return h_poly(k, nvars) if k >= 0 else IntPolynomial.zero(nvars)


def _e_or_zero(k: int, nvars: int) -> IntPolynomial:
    return e_poly(k, nvars) if k >= 0 else IntPolynomial.zero(nvars)


def skew_schur(shape: SkewShape, nvars: int, method: str = "det_h") -> IntPolynomial:
    """Skew Schur polynomial by either determinant or the tableau sum."""
    if method not in ("det_h", "det_e", "tableaux"):
        raise ValueError(f"unknown method {method!r}")
    outer, inner = shape.outer, shape.inner
    if method == "tableaux":
        from .polynomials import word_weight

        total = IntPolynomial.zero(nvars)
        for t in enumerate_ssyt_cached(shape, nvars):
            total = total + word_weight(t.reading_word(), nvars)
        return total
    if method == "det_e":
        conj = shape.conjugate()
        outer, inner = conj.outer, conj.inner
        entry = _e_or_zero
    else:
        entry = _h_or_zero
    l = len(outer)
    if l == 0:
        return IntPolynomial.one(nvars)
    matrix = [
        [entry(outer.part(i) - inner.part(j) - i + j, nvars) for j in range(l)]
        for i in range(l)
    ]
    return poly_determinant(matrix)


def enumerate_ssyt_cached(shape: SkewShape, nvars: int):
    from .tableaux import enumerate_ssyt

    return enumerate_ssyt(shape, max_letter=nvars)


def hook_schur(arm: int, leg: int, nvars: int) -> IntPolynomial:
    """Alternating complete/elementary sum for a hook-shaped Schur polynomial."""
    if arm < 0 or leg < 0:
        raise ValueError("arm and leg must be non-negative")
    total = IntPolynomial.zero(nvars)
    for l in range(leg + 1):
        term = h_poly(arm + l + 1, nvars) * e_poly(leg - l, nvars)
        total = total + (term if l % 2 == 0 else -term)
    return total


def giambelli(lam: Partition, nvars: int) -> IntPolynomial:
    """Determinant of hook Schur polynomials over the diagonal coordinates."""
    fc = lam.to_frobenius()
    d = fc.rank()
    if d == 0:
        return IntPolynomial.one(nvars)
    matrix = [
        [hook_schur(fc.arms[j], fc.legs[i], nvars) for j in range(d)] for i in range(d)
    ]
    return poly_determinant(matrix)


def giambelli_endpoints(lam: Partition, nvars: int):
    """Sources and sinks on the two-regime grid for the hook determinant."""
    fc = lam.to_frobenius()
    sources = tuple((-(fc.legs[i] + 1), nvars + 1) for i in range(fc.rank()))
    sinks = tuple((fc.arms[j], nvars) for j in range(fc.rank()))
    return sources, sinks


def _step_kinds(path: tuple[Point, ...]):
    for (x0, y0), (x1, y1) in zip(path, path[1:]):
        yield (x1 - x0, y1 - y0), (x0, y0), (x1, y1)


def paths_to_tableau(system: PathSystem, model: str):
    """Read a non-crossing system as the semistandard filling it encodes.

    h/skew: the rows of the rightward steps of path i fill row i.
    e: the termination rows of the diagonal steps of path i fill column i.
    giambelli: path i contributes the i-th diagonal hook, the reversed
    diagonal-step rows forming the column and the rightward-step rows the arm.
    """
    if not system.is_noncrossing():
        raise ValueError("system has crossing paths")
    if model in ("h", "skew"):
        l = len(system.paths)
        entry_rows = []
        for path in system.paths:
            entry_rows.append([y0 for (dx, dy), (x0, y0), _ in _step_kinds(path) if (dx, dy) == (1, 0)])
        if model == "h":
            return Tableau(entry_rows)
        inner = _partition_from_sources(system.sources)
        outer = _partition_from_sinks(system.sinks)
        return SkewTableau(SkewShape(outer, inner), entry_rows)
    if model == "e":
        cols = [
            [y1 for (dx, dy), _, (x1, y1) in _step_kinds(path) if (dx, dy) == (1, 1)]
            for path in system.paths
        ]
        if not cols or not cols[0]:
            return Tableau(())
        rows = [
            [col[r] for col in cols if len(col) > r] for r in range(len(cols[0]))
        ]
        return Tableau(rows)
    if model == "giambelli":
        d = len(system.paths)
        grid_cells: dict[tuple[int, int], int] = {}
        for i, path in enumerate(system.paths):
            diag = [y1 for (dx, dy), _, (x1, y1) in _step_kinds(path) if (dx, dy) == (1, -1)]
            arm = [y0 for (dx, dy), (x0, y0), _ in _step_kinds(path) if (dx, dy) == (1, 0)]
            column = list(reversed(diag))  # corner first, then below
            if not column:
                raise ValueError("hook path lacks its diagonal steps")
            grid_cells[(i, i)] = column[0]
            for k, v in enumerate(column[1:], start=1):
                grid_cells[(i + k, i)] = v
            for k, v in enumerate(arm, start=1):
                grid_cells[(i, i + k)] = v
        nrows = 1 + max(r for r, _ in grid_cells)
        rows = []
        for r in range(nrows):
            cols_r = sorted(c for (rr, c) in grid_cells if rr == r)
            rows.append([grid_cells[(r, c)] for c in cols_r])
        return Tableau(rows)
    raise ValueError(f"unknown model {model!r}")


def _partition_from_sources(sources) -> Partition:
    l = len(sources)
    return Partition(
        sorted((x - (l - 1 - i) for i, (x, _) in enumerate(sources)), reverse=True)
    )


def _partition_from_sinks(sinks) -> Partition:
    l = len(sinks)
    return Partition(
        sorted((x - (l - 1 - i) for i, (x, _) in enumerate(sinks)), reverse=True)
    )


def render_system(grid: WeightedGrid, system: PathSystem | None = None) -> str:
    """ASCII picture of the window, rows top-down; sources S, sinks T,
    path vertices o with -, |, / and \\ step marks."""
    xlo, xhi = grid.x_range
    ylo, yhi = grid.y_range
    width = 2 * (xhi - xlo) + 1
    height = 2 * (yhi - ylo) + 1
    canvas = [[" "] * width for _ in range(height)]

    def pos(pt: Point) -> tuple[int, int]:
        return 2 * (yhi - pt[1]), 2 * (pt[0] - xlo)

    for x in range(xlo, xhi + 1):
        for y in range(ylo, yhi + 1):
            r, c = pos((x, y))
            canvas[r][c] = "."
    if system is not None:
        for path in system.paths:
            for (dx, dy), src, dst in _step_kinds(path):
                r0, c0 = pos(src)
                r1, c1 = pos(dst)
                rm, cm = (r0 + r1) // 2, (c0 + c1) // 2
                if (dx, dy) == (1, 0):
                    canvas[rm][cm] = "-"
                elif (dx, dy) == (0, 1) or (dx, dy) == (0, -1):
                    canvas[rm][cm] = "|"
                elif (dx, dy) == (1, 1):
                    canvas[rm][cm] = "/"
                else:
                    canvas[rm][cm] = "\\"
            for pt in path:
                r, c = pos(pt)
                canvas[r][c] = "o"
        for pt in system.sources:
            r, c = pos(pt)
            canvas[r][c] = "S"
        for pt in system.sinks:
            r, c = pos(pt)
            canvas[r][c] = "T"
    return "\n".join("".join(row).rstrip() for row in canvas)
