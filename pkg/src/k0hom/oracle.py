"""Brute-force reference implementations for validating the fast paths.

Nothing in this module shares code with :mod:`k0hom.intlin`: determinants
come from permutation expansion or cofactor recursion instead of fraction-
free elimination, ranks come from rational Gaussian elimination, and the
torsion decision comes from determinantal divisors (gcds of all minors of a
given size) instead of an elimination-based Smith normal form.  These
implementations optimise for obviousness and exist only for the test
surface; they are not exported by the package front door or the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd
from typing import Callable, Iterable, Optional

from .intlin import DimensionError, IntMatrix, PreconditionError

__all__ = [
    "OracleReport",
    "TorsionWitness",
    "det_permutation",
    "torsion_free_by_snf",
    "invariant_factors_by_minors",
    "bounded_torsion_search",
    "check_agreement",
]

_PERMUTATION_DET_LIMIT = 8
_SEARCH_DIM_LIMIT = 4
_SEARCH_BOX_LIMIT = 5
_SEARCH_MULTIPLIER_LIMIT = 6


@dataclass(frozen=True)
class OracleReport:
    """Outcome of cross-checking one operation over a batch of inputs."""

    subject: str
    agreed: bool
    counterexample: Optional[str]


@dataclass(frozen=True)
class TorsionWitness:
    """A vector outside the column span whose multiple lies inside it."""

    vector: tuple[int, ...]
    multiplier: int


def check_agreement(
    subject: str, cases: Iterable[object], predicate: Callable[[object], bool]
) -> OracleReport:
    """Run a boolean check over cases; report the first failure verbatim."""
    for case in cases:
        if not predicate(case):
            return OracleReport(subject=subject, agreed=False, counterexample=repr(case))
    return OracleReport(subject=subject, agreed=True, counterexample=None)


def _signed_permutations(n: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        out.append((-1 if inversions % 2 else 1, perm))
    return out


_PERM_CACHE: dict[int, list[tuple[int, tuple[int, ...]]]] = {}


def det_permutation(m: IntMatrix) -> int:
    """Determinant as the signed sum over all permutations.

    Factorial time, so guarded to n <= 8; meant as an oracle for the
    elimination-based determinant, not for use at scale.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n > _PERMUTATION_DET_LIMIT:
        raise PreconditionError(
            f"permutation expansion is guarded to n <= {_PERMUTATION_DET_LIMIT}"
        )
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = _signed_permutations(n)
    rows = m.to_rows()
    total = 0
    for sign, perm in _PERM_CACHE[n]:
        term = sign
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if term == 0:
                break
        total += term
    return total


def _cofactor_det(rows: list[list[int]]) -> int:
    # First-row Laplace expansion; exponential but exact at any size.
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = x * _cofactor_det(minor)
        total += -term if j % 2 else term
    return total


def _rational_rank(rows: list[list[int]]) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        for r in range(rank + 1, nrows):
            if mat[r][col] != 0:
                factor = mat[r][col] / lead
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _minor_gcd_at_size(rows: list[list[int]], size: int) -> int:
    g = 0
    nrows = len(rows)
    ncols = len(rows[0])
    for ridx in combinations(range(nrows), size):
        for cidx in combinations(range(ncols), size):
            sub = [[rows[i][j] for j in cidx] for i in ridx]
            g = gcd(g, _cofactor_det(sub))
            if g == 1:
                return 1
    return g


def torsion_free_by_snf(e: IntMatrix) -> bool:
    """True iff every nonzero invariant factor of e equals 1.

    The invariant factors are read off determinantal divisors: with r the
    rank, their product is the gcd of all r x r minors, so they are all 1
    exactly when that gcd is 1.  A zero matrix has no nonzero invariant
    factors and counts as torsion free (the cokernel is free).
    """
    rows = e.to_rows()
    r = _rational_rank(rows)
    if r == 0:
        return True
    return _minor_gcd_at_size(rows, r) == 1


def invariant_factors_by_minors(e: IntMatrix) -> tuple[int, ...]:
    """Invariant factors as successive quotients of determinantal divisors.

    The gcd D_i of all i x i minors satisfies D_i = f_1 * ... * f_i for the
    invariant factors f_i, so f_i = D_i / D_{i-1}.  Exponential in the
    matrix size; intended for cross-checking on small matrices.
    """
    rows = e.to_rows()
    divisors = []
    for size in range(1, min(e.rows, e.cols) + 1):
        g = 0
        for ridx in combinations(range(e.rows), size):
            for cidx in combinations(range(e.cols), size):
                sub = [[rows[i][j] for j in cidx] for i in ridx]
                g = gcd(g, _cofactor_det(sub))
        if g == 0:
            break
        divisors.append(g)
    factors = []
    previous = 1
    for d in divisors:
        factors.append(d // previous)
        previous = d
    return tuple(factors)


def _in_column_span(rows: list[list[int]], target: tuple[int, ...]) -> bool:
    # Classical solvability criterion for an integer linear system: the
    # augmented matrix must have the same rank and the same gcd of
    # rank-sized minors as the coefficient matrix.
    rank = _rational_rank(rows)
    augmented = [row + [t] for row, t in zip(rows, target)]
    if _rational_rank(augmented) != rank:
        return False
    if rank == 0:
        return True
    return _minor_gcd_at_size(rows, rank) == _minor_gcd_at_size(augmented, rank)


def bounded_torsion_search(
    e: IntMatrix, box: int, max_n: int
) -> Optional[TorsionWitness]:
    """Exhaustively look for a torsion element of the cokernel of e.

    Scans every vector with entries in [-box, box] and every multiplier n in
    [2, max_n] for a vector outside the column span whose n-th multiple lies
    inside it.  Returns the first witness in scan order, or None.  Absence
    of a witness proves nothing: torsion witnesses can live outside any
    fixed box.  Guarded to dimensions <= 4, box <= 5, max_n <= 6.
    """
    if e.rows > _SEARCH_DIM_LIMIT or e.cols > _SEARCH_DIM_LIMIT:
        raise PreconditionError(
            f"search is guarded to dimensions <= {_SEARCH_DIM_LIMIT}"
        )
    if not 1 <= box <= _SEARCH_BOX_LIMIT:
        raise PreconditionError(f"box must be in [1, {_SEARCH_BOX_LIMIT}]")
    if not 2 <= max_n <= _SEARCH_MULTIPLIER_LIMIT:
        raise PreconditionError(
            f"max_n must be in [2, {_SEARCH_MULTIPLIER_LIMIT}]"
        )
    rows = e.to_rows()
    for vector in product(range(-box, box + 1), repeat=e.rows):
        if all(x == 0 for x in vector):
            continue
        if _in_column_span(rows, vector):
            continue
        for n in range(2, max_n + 1):
            multiple = tuple(n * x for x in vector)
            if _in_column_span(rows, multiple):
                return TorsionWitness(vector=vector, multiplier=n)
    return None
