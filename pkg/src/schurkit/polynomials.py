"""Sparse exact-integer multivariate polynomials in a fixed number of variables."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Sequence

from .partitions import Partition


class ExactDivisionError(ArithmeticError):
    """Raised when a quotient in the integer polynomial ring does not exist."""


class IntPolynomial:
    """A finite map from exponent vectors to nonzero integer coefficients.

    The variable count is fixed per instance; arithmetic between instances
    requires matching counts. Values are treated as immutable.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        self._n = nvars
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for n={nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, value: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "IntPolynomial":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "IntPolynomial":
        """The generator x_{index+1} (0-based index)."""
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @property
    def nvars(self) -> int:
        return self._n

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending lexicographic order of exponent vector."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def _require_same_ring(self, other: "IntPolynomial"):
        if not isinstance(other, IntPolynomial):
            raise TypeError(f"expected IntPolynomial, got {type(other).__name__}")
        if other._n != self._n:
            raise ValueError(f"variable counts differ: {self._n} vs {other._n}")

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._require_same_ring(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return IntPolynomial(self._n, terms)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self._n, {e: c * other for e, c in self._terms.items()})
        self._require_same_ring(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        return IntPolynomial(self._n, terms)

    def __rmul__(self, other) -> "IntPolynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one(self._n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self._n == other._n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"IntPolynomial({self._n}, {self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms():
            factors = [str(coeff)]
            factors += [
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e
            ]
            pieces.append("*".join(factors))
        return " + ".join(pieces)


def exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact quotient p/q in the integer polynomial ring.

    Long division by the single divisor q using lexicographic leading terms;
    raises ExactDivisionError as soon as a leading term fails to divide.
    """
    p._require_same_ring(q)
    if q.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    q_exps, q_coeff = q.leading_term()
    quotient: dict[tuple[int, ...], int] = {}
    remainder = p
    while not remainder.is_zero():
        r_exps, r_coeff = remainder.leading_term()
        exps = tuple(a - b for a, b in zip(r_exps, q_exps))
        if any(e < 0 for e in exps) or r_coeff % q_coeff != 0:
            raise ExactDivisionError(f"{r_exps} term not divisible by divisor leading term")
        coeff = r_coeff // q_coeff
        quotient[exps] = coeff
        remainder = remainder - IntPolynomial.monomial(p.nvars, exps, coeff) * q
    return IntPolynomial(p.nvars, quotient)


def _swap_adjacent(exps: tuple[int, ...], i: int) -> tuple[int, ...]:
    out = list(exps)
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def is_symmetric(p: IntPolynomial) -> bool:
    """Invariance under every adjacent transposition of the variables."""
    for i in range(p.nvars - 1):
        for exps, coeff in p.terms():
            if p.coefficient(_swap_adjacent(exps, i)) != coeff:
                return False
    return True


def is_alternating(p: IntPolynomial) -> bool:
    """Sign reversal under every adjacent transposition of the variables."""
    for i in range(p.nvars - 1):
        for exps, coeff in p.terms():
            if p.coefficient(_swap_adjacent(exps, i)) != -coeff:
                return False
    return True


def m_poly(lam: Partition, nvars: int) -> IntPolynomial:
    """Monomial symmetric polynomial: the orbit sum of x^lam."""
    if len(lam) > nvars:
        return IntPolynomial.zero(nvars)
    padded = tuple(lam.part(i) for i in range(nvars))
    exponents = set(permutations(padded))
    return IntPolynomial(nvars, {e: 1 for e in exponents})


def e_poly(k: int, nvars: int) -> IntPolynomial:
    """Elementary symmetric polynomial: squarefree degree-k monomials."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return IntPolynomial.one(nvars)
    if k > nvars:
        return IntPolynomial.zero(nvars)
    terms = {}
    for chosen in combinations(range(nvars), k):
        exps = [0] * nvars
        for i in chosen:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return IntPolynomial(nvars, terms)


def h_poly(k: int, nvars: int) -> IntPolynomial:
    """Complete symmetric polynomial: all degree-k monomials."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return IntPolynomial.one(nvars)
    if nvars == 0:
        return IntPolynomial.zero(0)
    terms = {}
    for chosen in combinations_with_replacement(range(nvars), k):
        exps = [0] * nvars
        for i in chosen:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return IntPolynomial(nvars, terms)


def e_mu(mu: Partition, nvars: int) -> IntPolynomial:
    result = IntPolynomial.one(nvars)
    for p in mu:
        result = result * e_poly(p, nvars)
    return result


def h_mu(mu: Partition, nvars: int) -> IntPolynomial:
    result = IntPolynomial.one(nvars)
    for p in mu:
        result = result * h_poly(p, nvars)
    return result


def word_weight(word: Iterable[int], nvars: int) -> IntPolynomial:
    """The monomial x_{a_1} x_{a_2} ... for a word over {1..nvars}."""
    exps = [0] * nvars
    for a in word:
        if not 1 <= a <= nvars:
            raise ValueError(f"letter {a} outside 1..{nvars}")
        exps[a - 1] += 1
    return IntPolynomial.monomial(nvars, exps)


def poly_determinant(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Exact determinant of a square matrix of polynomials.

    Permutation expansion for small orders, cofactor expansion beyond.
    """
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix; caller decides the empty-determinant convention")
    nvars = matrix[0][0].nvars
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if size <= 5:
        total = IntPolynomial.zero(nvars)
        for perm in permutations(range(size)):
            prod = IntPolynomial.one(nvars)
            for i, j in enumerate(perm):
                prod = prod * matrix[i][j]
            total = total + prod * _perm_sign(perm)
        return total
    total = IntPolynomial.zero(nvars)
    for j in range(size):
        if matrix[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(size) if c != j] for row in matrix[1:]]
        cofactor = poly_determinant(minor)
        term = matrix[0][j] * cofactor
        total = total + (term if j % 2 == 0 else -term)
    return total


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1
