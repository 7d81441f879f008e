"""Shared test helpers: independent oracles kept deliberately separate from
the library code paths they check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from germkit import fixtures
from germkit.liealg import LieAlgebra
from germkit.scalars import Scalar, ZERO, scalar


# -- independent rank computation (plain Fractions, no germkit.linalg) ----------


def frac_rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def to_fraction(x: Scalar) -> Fraction:
    assert x.is_rational(), "oracle expects rational data"
    return x.re


# -- independent Chevalley-Eilenberg differential -------------------------------
#
# Multilinear formula: for w a p-cochain and K = (k0 < ... < kp),
#   (d w)(X_{k0}, .., X_{kp})
#       = sum_{s<t} (-1)^{s+t} w([X_{ks}, X_{kt}], X_{k0}, .., ^s, .., ^t, ..)
# where the hat marks omitted arguments.  On degree one this evaluates to
# -w([X, Y]) for the stored constants, matching the engine's convention.


def _det(matrix: list[list[Scalar]]) -> Scalar:
    n = len(matrix)
    if n == 0:
        return scalar(1)
    if n == 1:
        return matrix[0][0]
    total = ZERO
    sign = 1
    for c in range(n):
        if matrix[0][c]:
            minor = [row[:c] + row[c + 1 :] for row in matrix[1:]]
            term = matrix[0][c] * _det(minor)
            total = total + (term if sign == 1 else -term)
        sign = -sign
    return total


def _eval_monomial(mono: tuple[int, ...], args: list[list[Scalar]]) -> Scalar:
    # x_mono(v_1, .., v_p) = det with rows indexed by mono, columns by args
    return _det([[v[i] for v in args] for i in mono])


def oracle_d_matrix(algebra: LieAlgebra, p: int) -> list[list[Scalar]]:
    """Degree-p differential of the full complex by the multilinear formula."""
    n = algebra.dim
    source = list(itertools.combinations(range(n), p))
    target = list(itertools.combinations(range(n), p + 1))
    rows = []
    for big in target:
        row = []
        for mono in source:
            total = ZERO
            for s in range(p + 1):
                for t in range(s + 1, p + 1):
                    bracket = algebra.bracket(
                        algebra.basis_vector(big[s]), algebra.basis_vector(big[t])
                    )
                    if not any(bracket):
                        continue
                    rest = [
                        algebra.basis_vector(big[u])
                        for u in range(p + 1)
                        if u != s and u != t
                    ]
                    value = _eval_monomial(mono, [bracket] + rest)
                    if value:
                        term = value if (s + t) % 2 == 0 else -value
                        total = total + term
            row.append(total)
        rows.append(row)
    return rows


def oracle_betti(algebra: LieAlgebra) -> list[int]:
    """Cohomology dimensions from the oracle differentials and frac_rank."""
    n = algebra.dim
    dims = [len(list(itertools.combinations(range(n), p))) for p in range(n + 1)]
    ranks = []
    for p in range(n + 1):
        matrix = oracle_d_matrix(algebra, p) if p < n else []
        if matrix and dims[p]:
            ranks.append(frac_rank([[to_fraction(x) for x in row] for row in matrix]))
        else:
            ranks.append(0)
    betti = []
    for p in range(n + 1):
        incoming = ranks[p - 1] if p >= 1 else 0
        betti.append(dims[p] - ranks[p] - incoming)
    return betti


# -- fixture registry ------------------------------------------------------------


GRADED_NILPOTENT = {
    "abelian3": fixtures.abelian(3),
    "h3": fixtures.heisenberg3(),
    "h5": fixtures.heisenberg5(),
    "filiform4": fixtures.filiform4(),
    "q_plus_h3": fixtures.q_plus_heisenberg3(),
}

UNIMODULAR = {
    **GRADED_NILPOTENT,
    "solv_heisenberg": fixtures.solvable_heisenberg(),
    "sol3": fixtures.sol3(),
    "sl2": fixtures.sl2(),
}


def non_unimodular2() -> LieAlgebra:
    return LieAlgebra(("T", "X"), {(0, 1): {1: scalar(1)}})


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    import pathlib

    return pathlib.Path(__file__).resolve().parents[1] / "fixtures"
