"""Exterior-algebra cochain complexes of Lie algebras.

The complex on the dual of an n-dimensional algebra has the monomial basis
{x_I : I subset of {1..n}} graded by |I|, listed in lexicographic order
inside each degree.  The differential acts on degree-one generators by

    d x^k = - sum_{i<j} c_ij^k  x^i wedge x^j

and extends as an odd derivation; equivalently (d w)(X, Y) = -w([X, Y]) in
degree one.  This sign convention is fixed globally: frozen expected values
throughout the test suite are computed under it.

A monomial sub-DGA is a per-degree selection of monomials that contains the
unit and is closed under both d and wedge.  Character data (exponent vectors
on a finitely generated abelian group, with optional torsion) selects the
monomials whose exponent sums vanish, which is how invariant sub-DGAs of
diagonalizable actions enter the pipeline.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .errors import PreconditionError
from .liealg import LieAlgebra
from .linalg import Matrix, Vector
from .scalars import ONE, Scalar, ZERO, scalar

Monomial = tuple[int, ...]


def sort_with_sign(indices: tuple[int, ...]) -> tuple[int, Monomial] | None:
    """Sort an index sequence, tracking permutation parity.

    Returns None when an index repeats (the wedge vanishes).
    """
    if len(set(indices)) != len(indices):
        return None
    inversions = 0
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def wedge_monomials(left: Monomial, right: Monomial) -> tuple[int, Monomial] | None:
    return sort_with_sign(left + right)


class Dga:
    """A monomial cochain complex with wedge product.

    Covers both the full exterior complex of an algebra and any monomial
    sub-DGA of it (same generator differentials, restricted basis).
    Construction fails if the differential leaves the chosen span or if
    d composed with itself is nonzero.
    """

    __slots__ = ("algebra", "monomials", "position", "d", "_gen_diff")

    def __init__(
        self,
        algebra: LieAlgebra,
        monomials: list[list[Monomial]] | None = None,
    ):
        self.algebra = algebra
        n = algebra.dim
        if monomials is None:
            monomials = [
                list(itertools.combinations(range(n), p)) for p in range(n + 1)
            ]
        if len(monomials) != n + 1:
            raise ValueError("monomial table must cover degrees 0..dim")
        self.monomials: tuple[tuple[Monomial, ...], ...] = tuple(
            tuple(sorted(set(level))) for level in monomials
        )
        for p, level in enumerate(self.monomials):
            for mono in level:
                if len(mono) != p or list(mono) != sorted(set(mono)):
                    raise ValueError(f"bad degree-{p} monomial {mono}")
                if mono and not (0 <= mono[0] and mono[-1] < n):
                    raise ValueError(f"monomial {mono} out of range")
        self.position: dict[Monomial, tuple[int, int]] = {}
        for p, level in enumerate(self.monomials):
            for idx, mono in enumerate(level):
                self.position[mono] = (p, idx)

        self._gen_diff: list[dict[Monomial, Scalar]] = [
            {} for _ in range(n)
        ]
        for i, j, comps in algebra.nonzero_brackets():
            for k, c in comps.items():
                acc = self._gen_diff[k]
                acc[(i, j)] = acc.get((i, j), ZERO) - c

        self.d: list[Matrix] = []
        for p in range(n + 1):
            rows = len(self.monomials[p + 1]) if p + 1 <= n else 0
            matrix = linalg.zeros(rows, len(self.monomials[p]))
            for col, mono in enumerate(self.monomials[p]):
                for target, coeff in self._diff_monomial(mono).items():
                    spot = self.position.get(target)
                    if spot is None or spot[0] != p + 1:
                        raise PreconditionError(
                            f"differential leaves the span: d({self.monomial_label(mono)}) "
                            f"has a component on {self._raw_label(target)} "
                            "outside the complex"
                        )
                    matrix[spot[1]][col] = coeff
            self.d.append(matrix)

        for p in range(n):
            if not self.d[p + 1]:
                continue
            square = linalg.mat_mul(self.d[p + 1], self.d[p])
            for r, row in enumerate(square):
                for c, value in enumerate(row):
                    if value:
                        raise PreconditionError(
                            "d o d != 0: degree "
                            f"{p} entry (row {self._raw_label(self.monomials[p + 2][r])}, "
                            f"column {self.monomial_label(self.monomials[p][c])}) "
                            f"= {value}; the structure constants violate the "
                            "Jacobi identity"
                        )

    # -- structure ---------------------------------------------------------

    @property
    def top_degree(self) -> int:
        return max(p for p, level in enumerate(self.monomials) if level)

    def dim_at(self, p: int) -> int:
        if 0 <= p < len(self.monomials):
            return len(self.monomials[p])
        return 0

    def dims(self) -> list[int]:
        return [len(level) for level in self.monomials]

    def _diff_monomial(self, mono: Monomial) -> dict[Monomial, Scalar]:
        """d(x_mono) in the ambient free exterior algebra."""
        out: dict[Monomial, Scalar] = {}
        for t, gen in enumerate(mono):
            for pair, coeff in self._gen_diff[gen].items():
                seq = mono[:t] + pair + mono[t + 1 :]
                sorted_ = sort_with_sign(seq)
                if sorted_ is None:
                    continue
                sign, target = sorted_
                total = out.get(target, ZERO) + scalar(sign * (-1) ** t) * coeff
                if total:
                    out[target] = total
                else:
                    out.pop(target, None)
        return out

    def monomial_label(self, mono: Monomial) -> str:
        return self._raw_label(mono)

    def _raw_label(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        return "∧".join(self.algebra.labels[i] for i in mono)

    def cochain_label(self, degree: int, coeffs: Vector) -> str:
        parts = []
        for idx, c in enumerate(coeffs):
            if not c:
                continue
            mono = self.monomial_label(self.monomials[degree][idx])
            if c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts) if parts else "0"

    # -- operations ---------------------------------------------------------

    def wedge_vectors(
        self, p: int, u: Vector, q: int, v: Vector
    ) -> Vector:
        """Wedge of coefficient vectors; result in degree p+q of this complex."""
        out = [ZERO] * self.dim_at(p + q)
        for iu, cu in enumerate(u):
            if not cu:
                continue
            left = self.monomials[p][iu]
            for iv, cv in enumerate(v):
                if not cv:
                    continue
                merged = wedge_monomials(left, self.monomials[q][iv])
                if merged is None:
                    continue
                sign, target = merged
                spot = self.position.get(target)
                if spot is None or spot[0] != p + q:
                    raise PreconditionError(
                        f"wedge leaves the span: {self._raw_label(target)} "
                        "is not in the complex"
                    )
                out[spot[1]] = out[spot[1]] + scalar(sign) * cu * cv
        return out

    def apply_d(self, p: int, u: Vector) -> Vector:
        return linalg.mat_vec(self.d[p], u)


@dataclass(frozen=True)
class Cochain:
    """A homogeneous element of a Dga, stored as dense coefficients."""

    dga: Dga
    degree: int
    coeffs: tuple[Scalar, ...]

    @classmethod
    def from_monomial(cls, dga: Dga, mono: Monomial) -> "Cochain":
        p, idx = dga.position[mono]
        coeffs = [ZERO] * dga.dim_at(p)
        coeffs[idx] = ONE
        return cls(dga, p, tuple(coeffs))

    def wedge(self, other: "Cochain") -> "Cochain":
        assert self.dga is other.dga, "operands live in different complexes"
        out = self.dga.wedge_vectors(
            self.degree, list(self.coeffs), other.degree, list(other.coeffs)
        )
        return Cochain(self.dga, self.degree + other.degree, tuple(out))

    def d(self) -> "Cochain":
        out = self.dga.apply_d(self.degree, list(self.coeffs))
        return Cochain(self.dga, self.degree + 1, tuple(out))

    def __add__(self, other: "Cochain") -> "Cochain":
        assert self.dga is other.dga and self.degree == other.degree
        return Cochain(
            self.dga,
            self.degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def scale(self, c: Scalar) -> "Cochain":
        return Cochain(self.dga, self.degree, tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return self.dga.cochain_label(self.degree, list(self.coeffs))


def ce_complex(algebra: LieAlgebra) -> Dga:
    """The full exterior cochain complex of an algebra."""
    return Dga(algebra)


def pd_type_check(dga: Dga) -> str | None:
    """None when the complex has Poincare-duality type, else the violation.

    Conditions: degree 0 is spanned by the unit, the top nonzero degree is
    one-dimensional, every intermediate wedge pairing into the top degree is
    nondegenerate, and d vanishes on degree 0 and on degree top-1.
    """
    if dga.monomials[0] != ((),):
        return "degree 0 is not spanned by the unit"
    top = dga.top_degree
    if top == 0:
        return "no positive top degree"
    if dga.dim_at(top) != 1:
        return f"top degree {top} has dimension {dga.dim_at(top)}, not 1"
    if not linalg.is_zero_matrix(dga.d[0]):
        return "d does not vanish on degree 0"
    if not linalg.is_zero_matrix(dga.d[top - 1]):
        return f"d does not vanish on degree {top - 1} (top - 1)"
    top_mono = dga.monomials[top][0]
    for i in range(1, top):
        rows = dga.monomials[i]
        cols = dga.monomials[top - i]
        if len(rows) != len(cols):
            return (
                f"pairing of degrees {i} and {top - i} is not square "
                f"({len(rows)} vs {len(cols)})"
            )
        pairing = []
        for left in rows:
            row = []
            for right in cols:
                merged = wedge_monomials(left, right)
                if merged is not None and merged[1] == top_mono:
                    row.append(scalar(merged[0]))
                else:
                    row.append(ZERO)
            pairing.append(row)
        if linalg.rank(pairing, len(cols)) != len(cols):
            return f"pairing of degrees {i} and {top - i} is degenerate"
    return None


def bar_star(dga: Dga, degree: int, coeffs: Vector) -> Vector:
    """The conjugate-linear duality map into the complementary degree.

    Defined by  alpha wedge bar_star(beta) = <alpha, beta> * volume  with the
    monomial basis orthonormal; requires a one-dimensional top degree whose
    monomial contains every selected index.
    """
    top = dga.top_degree
    if dga.dim_at(top) != 1:
        raise ValueError("duality map needs a one-dimensional top degree")
    top_mono = dga.monomials[top][0]
    top_set = set(top_mono)
    out = [ZERO] * dga.dim_at(top - degree)
    for idx, c in enumerate(coeffs):
        if not c:
            continue
        mono = dga.monomials[degree][idx]
        if not set(mono) <= top_set:
            raise ValueError(
                f"monomial {dga.monomial_label(mono)} is not below the volume"
            )
        complement = tuple(i for i in top_mono if i not in mono)
        merged = wedge_monomials(mono, complement)
        assert merged is not None and merged[1] == top_mono
        spot = dga.position.get(complement)
        if spot is None or spot[0] != top - degree:
            raise ValueError("complementary monomial missing from the complex")
        out[spot[1]] = out[spot[1]] + scalar(merged[0]) * c.conjugate()
    return out


# -- monomial sub-DGAs -----------------------------------------------------


@dataclass(frozen=True)
class SubDga:
    """A per-degree monomial selection inside a parent complex."""

    parent: Dga
    selected: tuple[tuple[Monomial, ...], ...]

    def complex(self) -> Dga:
        """The selection as a complex of its own (verified on construction)."""
        return Dga(self.parent.algebra, [list(level) for level in self.selected])

    def selected_set(self) -> set[Monomial]:
        return {mono for level in self.selected for mono in level}

    def degree_counts(self) -> list[int]:
        return [len(level) for level in self.selected]


def verify_subdga(sub: SubDga) -> str | None:
    """None if the selection is a genuine sub-DGA, else the violation."""
    chosen = sub.selected_set()
    if () not in chosen:
        return "selection does not contain the degree-0 unit"
    parent = sub.parent
    for mono in sorted(chosen):
        for target, coeff in parent._diff_monomial(mono).items():
            if coeff and target not in chosen:
                return (
                    f"not closed under d: d({parent.monomial_label(mono)}) "
                    f"has a component on {parent.monomial_label(target)}"
                )
    ordered = sorted(chosen)
    for left in ordered:
        for right in ordered:
            merged = wedge_monomials(left, right)
            if merged is not None and merged[1] not in chosen:
                return (
                    f"not closed under wedge: {parent.monomial_label(left)} "
                    f"wedge {parent.monomial_label(right)} leaves the selection"
                )
    return None


@dataclass(frozen=True)
class TorsionComponent:
    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("torsion modulus must be at least 2")


@dataclass(frozen=True)
class CharacterData:
    """Exponent vectors of basis characters on a f.g. abelian value group.

    A monomial x_I is invariant exactly when the exponents over I sum to
    zero in every free coordinate and to zero modulo each torsion modulus.
    """

    rank: int
    exponents: tuple[tuple[int, ...], ...]
    torsion: tuple[TorsionComponent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for vec in self.exponents:
            if len(vec) != self.rank:
                raise ValueError(
                    f"exponent vector {vec} does not have rank {self.rank}"
                )
        for comp in self.torsion:
            if len(comp.residues) != len(self.exponents):
                raise ValueError("torsion residues must cover every basis index")

    def selects(self, mono: Monomial) -> bool:
        for coord in range(self.rank):
            if sum(self.exponents[i][coord] for i in mono) != 0:
                return False
        for comp in self.torsion:
            if sum(comp.residues[i] for i in mono) % comp.modulus != 0:
                return False
        return True


def subdga_from_characters(dga: Dga, characters: CharacterData) -> SubDga:
    """Select the character-invariant monomials of ``dga``.

    Raises PreconditionError when the exponent data is incompatible with the
    differential or the product (the selection would not be a sub-DGA).
    """
    if len(characters.exponents) != dga.algebra.dim:
        raise PreconditionError(
            f"need one exponent vector per basis index "
            f"({dga.algebra.dim}), got {len(characters.exponents)}"
        )
    selected = tuple(
        tuple(mono for mono in level if characters.selects(mono))
        for level in dga.monomials
    )
    sub = SubDga(dga, selected)
    violation = verify_subdga(sub)
    if violation is not None:
        raise PreconditionError(
            f"character data does not define a sub-DGA: {violation}"
        )
    return sub
