"""Per-degree splittings of a monomial cochain complex.

Two strategies produce the same shape of data:

* ``metric``: declare the monomial basis orthonormal for the Hermitian form
  <u, v> = sum u_i conj(v_i).  Then the adjoint of d is its conjugate
  transpose, the Laplacian is d d* + d* d, harmonic means ker(Laplacian),
  the exact part is im(d) and the chosen complement of the cocycles is
  im(d*).  Every degree splits as harmonic + exact + complement.

* ``pivot``: a metric-free generic splitting.  The complement of the
  cocycles is spanned by the standard basis vectors sitting on the pivot
  columns of d (lexicographically smallest choice); harmonic representatives
  extend the exact part greedily inside the cocycles.

Both yield the homotopy ``delta = d^{-1} o beta`` (invert d from the chosen
complement onto the exact part, after projecting), the only operator the
deformation recursion consumes.  When a coordinate-aligned grading is
supplied, the differential must preserve weights; the construction then
produces weight-homogeneous bases automatically and verifies that it did.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cedga import Dga, Monomial
from .errors import InternalCheckError, PreconditionError
from .liealg import Grading, basis_aligned_weights, verify_natural_grading
from .linalg import Matrix, Vector
from .scalars import ONE, Scalar, ZERO

Strategy = str  # "metric" | "pivot"


def hermitian(u: Vector, v: Vector) -> Scalar:
    """<u, v> = sum u_i conj(v_i); linear on the left."""
    acc = ZERO
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y.conjugate()
    return acc


def _mul(a: Matrix, b: Matrix, nrows: int, inner: int, ncols: int) -> Matrix:
    if nrows == 0 or ncols == 0 or inner == 0:
        return linalg.zeros(nrows, ncols)
    return linalg.mat_mul(a, b)


def monomial_weight(weights: list[int], mono: Monomial) -> int:
    return sum(weights[i] for i in mono)


@dataclass
class DegreeSplit:
    """Bases and projections for one degree of the complex."""

    harmonic: Matrix        # rows spanning the harmonic representatives
    exact: Matrix           # rows spanning im(d)
    complement: Matrix      # rows spanning the chosen complement of ker(d)
    proj_harmonic: Matrix   # dim x dim projection onto the harmonic part
    proj_exact: Matrix      # dim x dim projection onto the exact part
    harmonic_coords: Matrix  # b_p x dim: coordinates in the harmonic basis


class Decomposition:
    """Splitting of every degree plus the homotopy operator delta."""

    __slots__ = ("dga", "strategy", "grading", "weights", "splits", "delta", "dstar")

    def __init__(
        self,
        dga: Dga,
        strategy: Strategy,
        grading: Grading | None,
        weights: list[int] | None,
        splits: list[DegreeSplit],
        delta: list[Matrix],
        dstar: list[Matrix] | None,
    ):
        self.dga = dga
        self.strategy = strategy
        self.grading = grading
        self.weights = weights
        self.splits = splits
        self.delta = delta
        self.dstar = dstar

    def betti(self) -> list[int]:
        return [len(split.harmonic) for split in self.splits]

    def harmonic_basis(self, p: int) -> Matrix:
        return self.splits[p].harmonic

    def harmonic_coords(self, p: int) -> Matrix:
        return self.splits[p].harmonic_coords

    def proj_harmonic(self, p: int) -> Matrix:
        return self.splits[p].proj_harmonic

    def proj_exact(self, p: int) -> Matrix:
        return self.splits[p].proj_exact

    def apply_delta(self, p: int, v: Vector) -> Vector:
        return linalg.mat_vec(self.delta[p], v)

    def laplacian(self, p: int) -> Matrix:
        """d d* + d* d in degree p (metric strategy only)."""
        if self.dstar is None:
            raise ValueError("laplacian is defined for the metric strategy")
        dims = self.dga.dims()
        n = len(dims) - 1
        dim_p = dims[p]
        up = _mul(
            self.dstar[p + 1] if p + 1 <= n else [],
            self.dga.d[p],
            dim_p,
            dims[p + 1] if p + 1 <= n else 0,
            dim_p,
        )
        down = _mul(
            self.dga.d[p - 1] if p >= 1 else [],
            self.dstar[p],
            dim_p,
            dims[p - 1] if p >= 1 else 0,
            dim_p,
        )
        return linalg.mat_add(up, down)


def betti_numbers(dec: Decomposition) -> list[int]:
    return dec.betti()


def split_complex(
    dga: Dga,
    strategy: Strategy = "metric",
    grading: Grading | None = None,
) -> Decomposition:
    """Build the per-degree splitting; see the module docstring."""
    if strategy not in ("metric", "pivot"):
        raise ValueError(f"unknown strategy {strategy!r}")
    dims = dga.dims()
    n = len(dims) - 1

    weights = None
    if grading is not None:
        weights = basis_aligned_weights(grading)
        if weights is None or len(weights) != dga.algebra.dim:
            raise PreconditionError(
                "grading layers must be spanned by input basis vectors to "
                "drive the weight machinery"
            )
        _check_weight_homogeneous_differential(dga, weights)

    dstar: list[Matrix] | None = None
    if strategy == "metric":
        dstar = [linalg.zeros(0, dims[0])]
        for p in range(1, n + 1):
            dstar.append(linalg.conj_transpose(dga.d[p - 1], dims[p - 1]))

    splits: list[DegreeSplit] = []
    for p in range(n + 1):
        dim_p = dims[p]
        exact = (
            linalg.image_basis(dga.d[p - 1], dims[p - 1]) if p >= 1 else []
        )
        if strategy == "metric":
            assert dstar is not None
            up = _mul(
                dstar[p + 1] if p + 1 <= n else [],
                dga.d[p],
                dim_p,
                dims[p + 1] if p + 1 <= n else 0,
                dim_p,
            )
            down = _mul(
                dga.d[p - 1] if p >= 1 else [],
                dstar[p],
                dim_p,
                dims[p - 1] if p >= 1 else 0,
                dim_p,
            )
            laplacian = linalg.mat_add(up, down)
            harmonic = linalg.kernel_basis(laplacian, dim_p)
            complement = (
                linalg.image_basis(dstar[p + 1], dims[p + 1]) if p + 1 <= n else []
            )
        else:
            kernel = linalg.kernel_basis(dga.d[p], dim_p)
            _, pivots = linalg.rref(dga.d[p], dim_p)
            complement = []
            for c in pivots:
                e = [ZERO] * dim_p
                e[c] = ONE
                complement.append(e)
            harmonic = _extend_basis(exact, kernel, dim_p)
        if len(harmonic) + len(exact) + len(complement) != dim_p:
            raise InternalCheckError(
                f"three-way splitting of degree {p} does not fill the space"
            )
        splits.append(_assemble_split(harmonic, exact, complement, dim_p))

    delta = _build_delta(dga, splits, dims)
    dec = Decomposition(dga, strategy, grading, weights, splits, delta, dstar)
    _verify_decomposition(dec, dims)
    return dec


def _extend_basis(base: Matrix, inside: Matrix, dim: int) -> Matrix:
    """Greedily extend ``base`` to span ``inside`` using rows of ``inside``."""
    rows = [list(r) for r in base]
    reduced, pivots = linalg.rref(rows, dim)
    chosen = []
    for row in inside:
        if linalg.in_row_space(reduced, pivots, row):
            continue
        chosen.append(list(row))
        reduced, pivots = linalg.rref(reduced + [list(row)], dim)
    return chosen


def _assemble_split(
    harmonic: Matrix, exact: Matrix, complement: Matrix, dim: int
) -> DegreeSplit:
    stacked = [list(r) for r in harmonic + exact + complement]
    basis_cols = linalg.transpose(stacked, dim)  # columns are basis vectors
    try:
        inv = linalg.inverse(basis_cols)
    except ValueError:
        raise InternalCheckError("splitting pieces are not independent") from None
    b = len(harmonic)
    e = len(exact)
    coords_h = inv[:b]
    coords_e = inv[b : b + e]
    cols_h = linalg.transpose([list(r) for r in harmonic], dim)
    cols_e = linalg.transpose([list(r) for r in exact], dim)
    proj_h = _mul(cols_h, coords_h, dim, b, dim)
    proj_e = _mul(cols_e, coords_e, dim, e, dim)
    return DegreeSplit(
        harmonic=[list(r) for r in harmonic],
        exact=[list(r) for r in exact],
        complement=[list(r) for r in complement],
        proj_harmonic=proj_h,
        proj_exact=proj_e,
        harmonic_coords=coords_h,
    )


def _build_delta(
    dga: Dga, splits: list[DegreeSplit], dims: list[int]
) -> list[Matrix]:
    n = len(dims) - 1
    delta: list[Matrix] = [linalg.zeros(0, dims[0])]
    for p in range(1, n + 1):
        comp = splits[p - 1].complement
        if not comp or dims[p] == 0:
            delta.append(linalg.zeros(dims[p - 1], dims[p]))
            continue
        comp_cols = linalg.transpose([list(r) for r in comp], dims[p - 1])
        d_comp = _mul(dga.d[p - 1], comp_cols, dims[p], dims[p - 1], len(comp))
        beta = splits[p].proj_exact
        rhs = [[beta[i][j] for i in range(dims[p])] for j in range(dims[p])]
        ys = linalg.solve_many(d_comp, rhs, len(comp))
        if ys is None:
            raise InternalCheckError(
                f"exact part of degree {p} is not in the image of d"
            )
        y_cols = linalg.transpose(ys, len(comp))  # len(comp) x dim_p
        delta.append(_mul(comp_cols, y_cols, dims[p - 1], len(comp), dims[p]))
    return delta


def _check_weight_homogeneous_differential(dga: Dga, weights: list[int]) -> None:
    dims = dga.dims()
    for p in range(len(dims) - 1):
        for col, mono in enumerate(dga.monomials[p]):
            w = monomial_weight(weights, mono)
            for row in range(dims[p + 1]):
                if dga.d[p][row][col]:
                    target = dga.monomials[p + 1][row]
                    tw = monomial_weight(weights, target)
                    if tw != w:
                        raise PreconditionError(
                            "differential is not weight-homogeneous: "
                            f"d({dga.monomial_label(mono)}) of weight {w} has a "
                            f"component on {dga.monomial_label(target)} of "
                            f"weight {tw}; the grading does not send each "
                            "dual layer into the matching degree-2 weight space"
                        )


def _vector_weights(dga: Dga, weights: list[int], p: int, v: Vector) -> set[int]:
    return {
        monomial_weight(weights, dga.monomials[p][i]) for i, c in enumerate(v) if c
    }


def _verify_decomposition(dec: Decomposition, dims: list[int]) -> None:
    dga = dec.dga
    n = len(dims) - 1
    for p in range(1, n + 1):
        d_delta = _mul(dga.d[p - 1], dec.delta[p], dims[p], dims[p - 1], dims[p])
        if not linalg.mat_eq(d_delta, dec.splits[p].proj_exact):
            raise InternalCheckError(f"d o delta != beta in degree {p}")
        if p >= 2:
            dd = _mul(
                dec.delta[p - 1], dec.delta[p], dims[p - 2], dims[p - 1], dims[p]
            )
            if not linalg.is_zero_matrix(dd):
                raise InternalCheckError(f"delta o delta != 0 in degree {p}")
        for row in dec.splits[p].harmonic + dec.splits[p].complement:
            if any(linalg.mat_vec(dec.delta[p], list(row))):
                raise InternalCheckError(
                    f"delta does not vanish off the exact part in degree {p}"
                )
    for p in range(n):
        hd = _mul(
            dec.splits[p + 1].proj_harmonic,
            dga.d[p],
            dims[p + 1],
            dims[p + 1],
            dims[p],
        )
        if not linalg.is_zero_matrix(hd):
            raise InternalCheckError(f"H o d != 0 in degree {p}")
    if dec.weights is not None:
        for p in range(n + 1):
            split = dec.splits[p]
            for row in split.harmonic + split.exact + split.complement:
                if len(_vector_weights(dga, dec.weights, p, list(row))) > 1:
                    raise InternalCheckError(
                        f"splitting basis of degree {p} mixes weights"
                    )


def kernel_containment_check(
    dga: Dga, grading: Grading
) -> tuple[Vector, int] | None:
    """Check that degree-2 cocycles carry weight at most nu + 1.

    Returns None on pass, else a witness (cocycle, offending weight).  The
    grading must be natural and aligned with the input basis.
    """
    violation = verify_natural_grading(dga.algebra, grading)
    if violation is not None:
        raise PreconditionError(f"grading is not natural: {violation}")
    weights = basis_aligned_weights(grading)
    if weights is None:
        raise PreconditionError(
            "grading layers must be spanned by input basis vectors"
        )
    nu = grading.depth
    kernel = linalg.kernel_basis(dga.d[2], dga.dim_at(2))
    for row in kernel:
        for weight in sorted(_vector_weights(dga, weights, 2, row)):
            if weight > nu + 1:
                return list(row), weight
    return None


def degree2_weight_table(dga: Dga, weights: list[int]) -> dict[int, list[Monomial]]:
    """Degree-2 monomials bucketed by weight (for reports and tests)."""
    table: dict[int, list[Monomial]] = {}
    for mono in dga.monomials[2]:
        table.setdefault(monomial_weight(weights, mono), []).append(mono)
    return dict(sorted(table.items()))
