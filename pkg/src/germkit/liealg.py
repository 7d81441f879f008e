"""Lie algebras presented by structure constants over Q(i).

A bracket table stores only pairs i < j, so antisymmetry is built in.  The
Jacobi identity is checked at construction unless the caller explicitly opts
out (tests use that to exercise the failure paths).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import PreconditionError
from .linalg import Matrix, Vector
from .scalars import ONE, Scalar, ZERO, scalar


class LieAlgebra:
    """Finite-dimensional Lie algebra on a labelled basis."""

    __slots__ = ("labels", "_brackets")

    def __init__(
        self,
        labels: Sequence[str],
        brackets: Mapping[tuple[int, int], Mapping[int, Scalar]],
        *,
        validate: bool = True,
    ):
        self.labels: tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        if n == 0:
            raise ValueError("a Lie algebra needs at least one basis vector")
        if len(set(self.labels)) != n:
            raise ValueError("duplicate basis labels")
        table: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for (i, j), comps in brackets.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key ({i}, {j}) out of range or not i<j")
            entries = tuple(
                (k, c) for k, c in sorted(comps.items()) if 0 <= k < n and c
            )
            if any(not (0 <= k < n) for k in comps):
                raise ValueError(f"bracket ({i},{j}) targets an unknown index")
            if entries:
                table[(i, j)] = entries
        self._brackets = table
        if validate:
            bad = self.jacobi_counterexample()
            if bad is not None:
                i, j, k, total = bad
                raise PreconditionError(
                    "Jacobi identity fails on basis triple "
                    f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]}); "
                    f"cyclic sum = {self.vector_str(total)}"
                )

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        if i == j:
            return ZERO
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for kk, c in self._brackets.get((i, j), ()):
            if kk == k:
                return c if sign == 1 else -c
        return ZERO

    def bracket_basis(self, i: int, j: int) -> dict[int, Scalar]:
        """[X_i, X_j] as a sparse vector."""
        if i == j:
            return {}
        if i < j:
            return dict(self._brackets.get((i, j), ()))
        return {k: -c for k, c in self._brackets.get((j, i), ())}

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        """Bilinear extension of the basis bracket."""
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b or i == j:
                    continue
                ab = a * b
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out[k] + ab * c
        return out

    def ad_matrix(self, v: Sequence[Scalar]) -> Matrix:
        """Matrix of ad_v : w -> [v, w] in the given basis."""
        n = self.dim
        cols = []
        for j in range(n):
            basis_j = [ZERO] * n
            basis_j[j] = scalar(1)
            cols.append(self.bracket(v, basis_j))
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def basis_vector(self, i: int) -> Vector:
        v = [ZERO] * self.dim
        v[i] = scalar(1)
        return v

    def vector_str(self, v: Sequence[Scalar]) -> str:
        parts = [f"{c}*{self.labels[i]}" for i, c in enumerate(v) if c]
        return " + ".join(parts) if parts else "0"

    def nonzero_brackets(self) -> list[tuple[int, int, dict[int, Scalar]]]:
        return [
            (i, j, dict(entries))
            for (i, j), entries in sorted(self._brackets.items())
        ]

    # -- checks ---------------------------------------------------------------

    def jacobi_counterexample(self) -> tuple[int, int, int, Vector] | None:
        """None if the Jacobi identity holds, else a violating triple.

        The returned vector is the nonzero cyclic sum
        [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]].
        """
        n = self.dim
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    total = self.bracket(ei, self.bracket(ej, ek))
                    for x, c in enumerate(self.bracket(ej, self.bracket(ek, ei))):
                        total[x] = total[x] + c
                    for x, c in enumerate(self.bracket(ek, self.bracket(ei, ej))):
                        total[x] = total[x] + c
                    if any(total):
                        return (i, j, k, total)
        return None

    def is_unimodular(self) -> bool:
        """True iff every ad_X is traceless."""
        for i in range(self.dim):
            ad = self.ad_matrix(self.basis_vector(i))
            trace = ZERO
            for d in range(self.dim):
                trace = trace + ad[d][d]
            if trace:
                return False
        return True

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={self.labels})"


def jacobi_check(algebra: LieAlgebra) -> tuple[int, int, int, Vector] | None:
    """Module-level alias; None means pass."""
    return algebra.jacobi_counterexample()


# -- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q(i)^n in canonical reduced echelon form.

    Equality of subspaces is literal equality of the stored rows.
    """

    ambient_dim: int
    rows: tuple[tuple[Scalar, ...], ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(
        cls, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]
    ) -> "Subspace":
        reduced, pivots = linalg.rref([list(v) for v in vectors], ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_vectors(ambient_dim, linalg.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def contains(self, v: Sequence[Scalar]) -> bool:
        return linalg.in_row_space(
            [list(r) for r in self.rows], list(self.pivots), v
        )

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(
            self.ambient_dim, [list(r) for r in self.rows + other.rows]
        )

    def intersection_dim(self, other: "Subspace") -> int:
        return self.dim + other.dim - self.add(other).dim

    def basis_vectors(self) -> list[Vector]:
        return [list(r) for r in self.rows]


def span_of_brackets(
    algebra: LieAlgebra, left: Subspace, right: Subspace
) -> Subspace:
    """Span of all [u, v] with u in ``left`` and v in ``right``."""
    vectors = [
        algebra.bracket(list(u), list(v)) for u in left.rows for v in right.rows
    ]
    return Subspace.from_vectors(algebra.dim, vectors)


# -- series ---------------------------------------------------------------------


@dataclass(frozen=True)
class LowerCentralSeries:
    """Chain g = g^(1) >= g^(2) >= ... until stabilization.

    ``nu`` is the nilpotency class when the chain reaches zero, else None.
    """

    chain: tuple[Subspace, ...]
    nu: int | None

    @property
    def is_nilpotent(self) -> bool:
        return self.nu is not None

    def dims(self) -> list[int]:
        return [s.dim for s in self.chain]


def lower_central_series(algebra: LieAlgebra) -> LowerCentralSeries:
    full = Subspace.full(algebra.dim)
    chain = [full]
    while True:
        nxt = span_of_brackets(algebra, full, chain[-1])
        if nxt.dim == chain[-1].dim:
            # stabilized without reaching zero (only possible when nonzero)
            return LowerCentralSeries(tuple(chain), None)
        chain.append(nxt)
        if nxt.is_zero():
            return LowerCentralSeries(tuple(chain), len(chain) - 1)


def derived_series(algebra: LieAlgebra) -> list[Subspace]:
    chain = [Subspace.full(algebra.dim)]
    while True:
        nxt = span_of_brackets(algebra, chain[-1], chain[-1])
        if nxt.dim == chain[-1].dim:
            return chain
        chain.append(nxt)
        if nxt.is_zero():
            return chain


def is_solvable(algebra: LieAlgebra) -> bool:
    return derived_series(algebra)[-1].is_zero()


def derived_subalgebra(algebra: LieAlgebra) -> Subspace:
    full = Subspace.full(algebra.dim)
    return span_of_brackets(algebra, full, full)


def restricted_lower_central_series(
    algebra: LieAlgebra, sub: Subspace
) -> LowerCentralSeries:
    """Lower central series of a subalgebra, bracketed inside the ambient."""
    chain = [sub]
    while True:
        nxt = span_of_brackets(algebra, sub, chain[-1])
        if nxt.dim == chain[-1].dim:
            return LowerCentralSeries(tuple(chain), None)
        chain.append(nxt)
        if nxt.is_zero():
            return LowerCentralSeries(tuple(chain), len(chain) - 1)


# -- gradings --------------------------------------------------------------------


@dataclass(frozen=True)
class Grading:
    """Layers a^(1), ..., a^(nu) splitting the lower central series."""

    layers: tuple[Subspace, ...]

    @property
    def depth(self) -> int:
        return len(self.layers)


def verify_natural_grading(algebra: LieAlgebra, grading: Grading) -> str | None:
    """None if the grading is natural, else a violation message.

    Checks: the algebra is nilpotent of class nu = number of layers, layer i
    complements g^(i+1) inside g^(i), and every [layer_i, layer_j] lands in
    layer_{i+j} (the zero space when i+j exceeds nu).
    """
    lcs = lower_central_series(algebra)
    if lcs.nu is None:
        return "algebra is not nilpotent"
    nu = lcs.nu
    if grading.depth != nu:
        raise PreconditionError(
            f"grading has {grading.depth} layers but the nilpotency class is {nu}"
        )
    chain = list(lcs.chain) + [Subspace.zero(algebra.dim)]
    for i, layer in enumerate(grading.layers, start=1):
        step, nxt = chain[i - 1], chain[i]
        if not step.contains_subspace(layer):
            return f"layer {i} is not contained in term {i} of the series"
        if layer.intersection_dim(nxt) != 0:
            return f"layer {i} meets term {i + 1} of the series nontrivially"
        if layer.dim + nxt.dim != step.dim:
            return f"layer {i} does not complement term {i + 1} (dimension)"
    zero = Subspace.zero(algebra.dim)
    for i, li in enumerate(grading.layers, start=1):
        for j, lj in enumerate(grading.layers[i - 1 :], start=i):
            target = grading.layers[i + j - 1] if i + j <= nu else zero
            generated = span_of_brackets(algebra, li, lj)
            if not target.contains_subspace(generated):
                return (
                    f"[layer {i}, layer {j}] is not contained in "
                    f"layer {i + j}" + ("" if i + j <= nu else " (= 0)")
                )
    return None


def infer_grading_basis_aligned(algebra: LieAlgebra) -> Grading | None:
    """Search for a natural grading spanned by input basis vectors.

    Greedy, smallest basis indices first.  Returning None does not prove
    that no natural grading exists; it only means no coordinate-aligned
    one was found by this rule.
    """
    lcs = lower_central_series(algebra)
    if lcs.nu is None:
        return None
    nu = lcs.nu
    chain = list(lcs.chain) + [Subspace.zero(algebra.dim)]
    layers = []
    for i in range(1, nu + 1):
        step, nxt = chain[i - 1], chain[i]
        chosen: list[Vector] = []
        span = nxt
        for k in range(algebra.dim):
            if span.dim == step.dim:
                break
            e = algebra.basis_vector(k)
            if not step.contains(e) or span.contains(e):
                continue
            chosen.append(e)
            span = span.add(Subspace.from_vectors(algebra.dim, [e]))
        if span.dim != step.dim:
            return None
        layers.append(Subspace.from_vectors(algebra.dim, chosen))
    grading = Grading(tuple(layers))
    if verify_natural_grading(algebra, grading) is not None:
        return None
    return grading


def basis_aligned_weights(grading: Grading) -> list[int] | None:
    """Per-basis-index weights when every layer is a coordinate subspace.

    Returns None when some layer row is not a standard basis vector; the
    weight machinery downstream requires alignment with the input basis.
    """
    if not grading.layers:
        return None
    n = grading.layers[0].ambient_dim
    weights: list[int | None] = [None] * n
    for w, layer in enumerate(grading.layers, start=1):
        for row in layer.rows:
            support = [i for i, c in enumerate(row) if c]
            if len(support) != 1 or row[support[0]] != ONE:
                return None
            if weights[support[0]] is not None:
                return None
            weights[support[0]] = w
    if any(w is None for w in weights):
        return None
    return [w for w in weights if w is not None]
