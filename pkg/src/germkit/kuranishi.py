"""Deformation functor machinery on a tensor DGLA.

Given a monomial complex C* and a coefficient Lie algebra a, the graded
space L^p = C^p tensor a carries the bracket

    [alpha (x) u, beta (x) v] = (alpha wedge beta) (x) [u, v]

and the differential d (x) id.  Degree-one elements w are flat exactly when
the Maurer-Cartan equation d w + (1/2)[w, w] = 0 holds.

With a splitting of C* fixed, the deformation series in the parameters
t = (t_1 .. t_m), m = dim H^1(C*) * dim a, is built degree by degree:

    phi_1 = sum t_i zeta_i            (zeta: basis of harmonic L^1)
    phi_r = -(1/2) sum_{s=1}^{r-1} delta [phi_s, phi_{r-s}]

The obstruction system is the harmonic projection of [phi, phi] written in
coordinates of (harmonic 2-forms) tensor a: finitely many polynomials with
no constant or linear part whose zero set presents the flat germ at the
origin on the harmonic slice.

Termination bookkeeping: if phi_j = 0 for rho < j <= 2*rho then every later
degree vanishes too (each bracket pair has a factor of degree > rho), so the
series is certified finite as soon as the trailing window of zeros reaches
the last nonzero degree.  Otherwise the result is flagged truncated and the
system is only valid modulo higher degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cedga import Dga, SubDga, wedge_monomials
from .decomp import Decomposition
from .errors import InternalCheckError, PreconditionError
from .liealg import LieAlgebra
from .linalg import Matrix
from .multipoly import ExponentVector, MultiPoly
from .scalars import ONE, Scalar, ZERO, scalar

SparseVec = dict[int, Scalar]

HALF = Scalar(Fraction(1, 2))


def vec_add_into(dst: SparseVec, src: SparseVec, factor: Scalar = ONE) -> None:
    if not factor:
        return
    for idx, c in src.items():
        total = dst.get(idx, ZERO) + factor * c
        if total:
            dst[idx] = total
        else:
            dst.pop(idx, None)


def vec_scale(v: SparseVec, factor: Scalar) -> SparseVec:
    if not factor:
        return {}
    return {i: factor * c for i, c in v.items()}


def vec_is_zero(v: SparseVec) -> bool:
    return not v


class TensorDgla:
    """L^p = C^p tensor a with flat indexing (monomial, basis) -> int."""

    __slots__ = ("dga", "target", "_bracket_table", "_wedge11", "_d_cols")

    def __init__(self, dga: Dga, target: LieAlgebra):
        self.dga = dga
        self.target = target
        ta = target.dim
        self._bracket_table = [
            [target.bracket_basis(s, t) for t in range(ta)] for s in range(ta)
        ]
        ones = self.dga.monomials[1]
        table: list[list[tuple[int, int] | None]] = []
        for left in ones:
            row: list[tuple[int, int] | None] = []
            for right in ones:
                if left == right:
                    row.append(None)
                    continue
                merged = tuple(sorted(left + right))
                spot = self.dga.position.get(merged)
                if spot is None or spot[0] != 2:
                    raise PreconditionError(
                        "degree-1 wedge leaves the complex; the selection "
                        "is not closed under products"
                    )
                sign = 1 if left < right else -1
                row.append((sign, spot[1]))
            table.append(row)
        self._wedge11 = table
        self._d_cols: list[list[list[tuple[int, Scalar]]]] = []
        for p, matrix in enumerate(dga.d):
            cols = []
            for j in range(dga.dim_at(p)):
                cols.append(
                    [(i, matrix[i][j]) for i in range(len(matrix)) if matrix[i][j]]
                )
            self._d_cols.append(cols)

    # -- indexing -----------------------------------------------------------

    def dim(self, p: int) -> int:
        return self.dga.dim_at(p) * self.target.dim

    def flat(self, mono_idx: int, a_idx: int) -> int:
        return mono_idx * self.target.dim + a_idx

    def unflat(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.target.dim)

    def basis_label(self, p: int, idx: int) -> str:
        mono, a = self.unflat(idx)
        return (
            f"{self.dga.monomial_label(self.dga.monomials[p][mono])}"
            f"⊗{self.target.labels[a]}"
        )

    def element_str(self, p: int, v: SparseVec) -> str:
        parts = [
            f"({c})*{self.basis_label(p, i)}" for i, c in sorted(v.items())
        ]
        return " + ".join(parts) if parts else "0"

    # -- operations -----------------------------------------------------------

    def bracket11(self, u: SparseVec, v: SparseVec) -> SparseVec:
        """[u, v] for degree-one u, v (the hot path of the recursion)."""
        ta = self.target.dim
        out: SparseVec = {}
        for iu, cu in u.items():
            mu, au = divmod(iu, ta)
            wrow = self._wedge11[mu]
            brow = self._bracket_table[au]
            for iv, cv in v.items():
                mv, av = divmod(iv, ta)
                merged = wrow[mv]
                if merged is None:
                    continue
                sign, target_idx = merged
                coeff = cu * cv if sign == 1 else -(cu * cv)
                base = target_idx * ta
                for k, c in brow[av].items():
                    spot = base + k
                    total = out.get(spot, ZERO) + coeff * c
                    if total:
                        out[spot] = total
                    else:
                        out.pop(spot, None)
        return out

    def bracket(self, p: int, u: SparseVec, q: int, v: SparseVec) -> SparseVec:
        """[u, v] for arbitrary degrees (general path, used by checks)."""
        if p == 1 and q == 1:
            return self.bracket11(u, v)
        ta = self.target.dim
        out: SparseVec = {}
        for iu, cu in u.items():
            mu, au = divmod(iu, ta)
            left = self.dga.monomials[p][mu]
            for iv, cv in v.items():
                mv, av = divmod(iv, ta)
                right = self.dga.monomials[q][mv]
                merged = wedge_monomials(left, right)
                if merged is None:
                    continue
                sign, target = merged
                spot = self.dga.position.get(target)
                if spot is None or spot[0] != p + q:
                    raise PreconditionError(
                        "bracket leaves the complex; selection not closed"
                    )
                coeff = scalar(sign) * cu * cv
                base = spot[1] * ta
                for k, c in self._bracket_table[au][av].items():
                    vec_add_into(out, {base + k: c}, coeff)
        return out

    def apply_d(self, p: int, u: SparseVec) -> SparseVec:
        ta = self.target.dim
        out: SparseVec = {}
        for iu, cu in u.items():
            mu, au = divmod(iu, ta)
            for i, val in self._d_cols[p][mu]:
                spot = i * ta + au
                total = out.get(spot, ZERO) + cu * val
                if total:
                    out[spot] = total
                else:
                    out.pop(spot, None)
        return out

    def apply_matrix(self, matrix_cols: list[list[tuple[int, Scalar]]], u: SparseVec) -> SparseVec:
        """Apply (matrix tensor id) given sparse columns of the matrix."""
        ta = self.target.dim
        out: SparseVec = {}
        for iu, cu in u.items():
            mu, au = divmod(iu, ta)
            for i, val in matrix_cols[mu]:
                spot = i * ta + au
                total = out.get(spot, ZERO) + cu * val
                if total:
                    out[spot] = total
                else:
                    out.pop(spot, None)
        return out


def sparse_columns(matrix: Matrix, ncols: int) -> list[list[tuple[int, Scalar]]]:
    return [
        [(i, matrix[i][j]) for i in range(len(matrix)) if matrix[i][j]]
        for j in range(ncols)
    ]


def mc_residual(tdgla: TensorDgla, omega: SparseVec) -> SparseVec:
    """d(omega) + (1/2)[omega, omega] for a degree-one element."""
    out = tdgla.apply_d(1, omega)
    vec_add_into(out, tdgla.bracket11(omega, omega), HALF)
    return out


# -- polynomial cochains ------------------------------------------------------


Slice = dict[ExponentVector, SparseVec]


def _clean_slice(terms: Slice) -> Slice:
    return {e: v for e, v in terms.items() if v}


@dataclass
class PolyCochain:
    """Cochain-valued polynomial in the deformation parameters.

    ``slices[r]`` is the homogeneous part of total degree r, mapping
    exponent vectors to sparse L^degree vectors.
    """

    variables: tuple[str, ...]
    degree: int
    slices: dict[int, Slice] = field(default_factory=dict)

    def cleaned(self) -> "PolyCochain":
        slices = {
            r: _clean_slice(terms)
            for r, terms in self.slices.items()
            if _clean_slice(terms)
        }
        return PolyCochain(self.variables, self.degree, slices)

    def slice(self, r: int) -> Slice:
        return self.slices.get(r, {})

    def is_zero(self) -> bool:
        return not self.cleaned().slices

    def term_count(self) -> int:
        return sum(len(s) for s in self.slices.values())

    def add(self, other: "PolyCochain") -> "PolyCochain":
        assert self.variables == other.variables and self.degree == other.degree
        out: dict[int, Slice] = {r: dict(s) for r, s in self.slices.items()}
        for r, terms in other.slices.items():
            dst = out.setdefault(r, {})
            for e, v in terms.items():
                acc = dict(dst.get(e, {}))
                vec_add_into(acc, v)
                if acc:
                    dst[e] = acc
                else:
                    dst.pop(e, None)
        return PolyCochain(self.variables, self.degree, out).cleaned()

    def scale(self, factor: Scalar) -> "PolyCochain":
        return PolyCochain(
            self.variables,
            self.degree,
            {
                r: {e: vec_scale(v, factor) for e, v in terms.items()}
                for r, terms in self.slices.items()
            },
        ).cleaned()

    def apply(self, fn, new_degree: int) -> "PolyCochain":
        out: dict[int, Slice] = {}
        for r, terms in self.slices.items():
            dst: Slice = {}
            for e, v in terms.items():
                w = fn(v)
                if w:
                    dst[e] = w
            if dst:
                out[r] = dst
        return PolyCochain(self.variables, new_degree, out)

    def eval(self, point: list[Scalar]) -> SparseVec:
        if len(point) != len(self.variables):
            raise ValueError(
                f"point has {len(point)} coordinates for "
                f"{len(self.variables)} variables"
            )
        out: SparseVec = {}
        for terms in self.slices.values():
            for exps, vec in terms.items():
                factor = ONE
                for value, e in zip(point, exps):
                    if e:
                        factor = factor * value**e
                vec_add_into(out, vec, factor)
        return out

    def equals(self, other: "PolyCochain") -> bool:
        return (
            self.variables == other.variables
            and self.degree == other.degree
            and self.cleaned().slices == other.cleaned().slices
        )


def bracket_slices(tdgla: TensorDgla, a: Slice, b: Slice) -> Slice:
    """Pointwise bracket of two homogeneous degree-one slices."""
    out: Slice = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            w = tdgla.bracket11(va, vb)
            if not w:
                continue
            exps = tuple(x + y for x, y in zip(ea, eb))
            dst = out.get(exps)
            if dst is None:
                out[exps] = w
            else:
                vec_add_into(dst, w)
                if not dst:
                    del out[exps]
    return out


def bracket_poly(tdgla: TensorDgla, a: PolyCochain, b: PolyCochain) -> PolyCochain:
    assert a.degree == 1 and b.degree == 1
    out: dict[int, Slice] = {}
    for ra, sa in a.slices.items():
        for rb, sb in b.slices.items():
            piece = bracket_slices(tdgla, sa, sb)
            if not piece:
                continue
            dst = out.setdefault(ra + rb, {})
            for e, v in piece.items():
                acc = dst.get(e)
                if acc is None:
                    dst[e] = v
                else:
                    vec_add_into(acc, v)
                    if not acc:
                        del dst[e]
    return PolyCochain(a.variables, 2, out).cleaned()


# -- the deformation series ----------------------------------------------------


@dataclass
class KuranishiSeries:
    """The solved series with its context and termination certificate."""

    tdgla: TensorDgla
    decomposition: Decomposition
    variables: tuple[str, ...]
    zeta: list[SparseVec]
    zeta_info: list[tuple[int, int]]  # (harmonic 1-form index, target index)
    slices: dict[int, Slice]
    cap: int
    terminated: bool
    last_nonzero: int

    def phi(self) -> PolyCochain:
        return PolyCochain(self.variables, 1, {r: s for r, s in self.slices.items()})

    def phi1(self) -> PolyCochain:
        return PolyCochain(self.variables, 1, {1: dict(self.slices.get(1, {}))})

    def eval_phi(self, point: list[Scalar]) -> SparseVec:
        return self.phi().eval(point)

    def num_variables(self) -> int:
        return len(self.variables)


def kuranishi_series(
    dec: Decomposition, target: LieAlgebra, cap: int | None = None
) -> KuranishiSeries:
    """Solve the recursion up to ``cap`` (default 2*nu, or 2*dim ungraded)."""
    tdgla = TensorDgla(dec.dga, target)
    if cap is None:
        if dec.grading is not None:
            cap = 2 * dec.grading.depth
        else:
            cap = 2 * dec.dga.algebra.dim
    if cap < 2:
        raise PreconditionError("series cap must be at least 2")

    harm1 = dec.harmonic_basis(1)
    ta = target.dim
    zeta: list[SparseVec] = []
    zeta_info: list[tuple[int, int]] = []
    for h, row in enumerate(harm1):
        for a in range(ta):
            vec = {
                tdgla.flat(i, a): c for i, c in enumerate(row) if c
            }
            zeta.append(vec)
            zeta_info.append((h, a))
    m = len(zeta)
    variables = tuple(f"t{i + 1}" for i in range(m))

    def unit_exp(i: int) -> ExponentVector:
        return tuple(1 if k == i else 0 for k in range(m))

    slices: dict[int, Slice] = {}
    phi1: Slice = {unit_exp(i): dict(z) for i, z in enumerate(zeta) if z}
    if phi1:
        slices[1] = phi1

    delta2_cols = sparse_columns(dec.delta[2], dec.dga.dim_at(2)) if len(
        dec.delta
    ) > 2 else []

    rho = 1
    terminated = m == 0  # an empty series is trivially finite
    if not terminated:
        for r in range(2, cap + 1):
            bracket_sum: Slice = {}
            for s in range(1, r // 2 + 1):
                left = slices.get(s)
                right = slices.get(r - s)
                if not left or not right:
                    continue
                piece = bracket_slices(tdgla, left, right)
                factor = ONE if 2 * s == r else scalar(2)
                for e, v in piece.items():
                    dst = bracket_sum.get(e)
                    if dst is None:
                        bracket_sum[e] = vec_scale(v, factor)
                    else:
                        vec_add_into(dst, v, factor)
                        if not dst:
                            del bracket_sum[e]
            phi_r: Slice = {}
            for e, v in bracket_sum.items():
                w = tdgla.apply_matrix(delta2_cols, v)
                if w:
                    phi_r[e] = vec_scale(w, -HALF)
            if phi_r:
                slices[r] = phi_r
                rho = r
            if r >= 2 * rho:
                terminated = True
                break

    return KuranishiSeries(
        tdgla=tdgla,
        decomposition=dec,
        variables=variables,
        zeta=zeta,
        zeta_info=zeta_info,
        slices=slices,
        cap=cap,
        terminated=terminated,
        last_nonzero=rho if m else 0,
    )


# -- obstruction systems ---------------------------------------------------------


@dataclass(frozen=True)
class ObstructionSystem:
    """Polynomials presenting the flat germ on the harmonic slice."""

    variables: tuple[str, ...]
    coordinates: tuple[str, ...]
    polynomials: tuple[MultiPoly, ...]
    nu: int | None
    cap: int
    terminated: bool

    @property
    def max_degree(self) -> int:
        degrees = [p.total_degree() for p in self.polynomials if not p.is_zero()]
        return max(degrees, default=0)

    @property
    def is_smooth(self) -> bool:
        return all(p.is_zero() for p in self.polynomials)

    @property
    def valid_modulo(self) -> int | None:
        """Degree beyond which the system is unreliable, None if exact."""
        return None if self.terminated else self.cap + 1

    def homogeneous_degrees(self) -> list[list[int]]:
        return [
            [deg for deg, _ in p.homogeneous_components()] for p in self.polynomials
        ]


def obstruction_system(series: KuranishiSeries) -> ObstructionSystem:
    """Harmonic coordinates of [phi, phi] as exact polynomials."""
    dec = series.decomposition
    tdgla = series.tdgla
    ta = tdgla.target.dim
    dim2 = dec.dga.dim_at(2)
    coords = dec.harmonic_coords(2) if len(dec.splits) > 2 else []
    b2 = len(coords)

    phi = series.phi()
    square = bracket_poly(tdgla, phi, phi)

    polys: list[dict[ExponentVector, Scalar]] = [
        {} for _ in range(b2 * ta)
    ]
    for terms in square.slices.values():
        for exps, vec in terms.items():
            for a in range(ta):
                dense = [ZERO] * dim2
                present = False
                for idx, c in vec.items():
                    mono, ai = divmod(idx, ta)
                    if ai == a:
                        dense[mono] = c
                        present = True
                if not present:
                    continue
                for h in range(b2):
                    acc = ZERO
                    for j, c in enumerate(coords[h]):
                        if c and dense[j]:
                            acc = acc + c * dense[j]
                    if acc:
                        spot = polys[h * ta + a]
                        total = spot.get(exps, ZERO) + acc
                        if total:
                            spot[exps] = total
                        else:
                            spot.pop(exps, None)

    labels = tuple(
        f"h2[{h}]⊗{tdgla.target.labels[a]}"
        for h in range(b2)
        for a in range(ta)
    )
    polynomials = tuple(
        MultiPoly(series.variables, terms) for terms in polys
    )
    for poly in polynomials:
        for exps, _ in poly.terms.items():
            if sum(exps) < 2:
                raise InternalCheckError(
                    "obstruction polynomial has a constant or linear part"
                )
    nu = dec.grading.depth if dec.grading is not None else None
    return ObstructionSystem(
        variables=series.variables,
        coordinates=labels,
        polynomials=polynomials,
        nu=nu,
        cap=series.cap,
        terminated=series.terminated,
    )


def verify_degree_bound(system: ObstructionSystem, nu: int) -> MultiPoly | None:
    """None when every polynomial has total degree <= nu + 1, else a witness."""
    for poly in system.polynomials:
        if not poly.is_zero() and poly.total_degree() > nu + 1:
            return poly
    return None


def gauge_identity_check(series: KuranishiSeries) -> str | None:
    """Verify the two exact polynomial identities of a terminated series.

    First, delta kills the whole series coefficientwise.  Second, the
    series inverts the normal-form map:  phi + (1/2) delta [phi, phi]
    equals the linear part phi_1.
    """
    if not series.terminated:
        raise PreconditionError("gauge identities require a terminated series")
    dec = series.decomposition
    tdgla = series.tdgla
    delta1_cols = sparse_columns(dec.delta[1], dec.dga.dim_at(1))
    phi = series.phi()
    gauge = phi.apply(lambda v: tdgla.apply_matrix(delta1_cols, v), 0)
    if not gauge.is_zero():
        return "delta(phi) is not identically zero"
    delta2_cols = (
        sparse_columns(dec.delta[2], dec.dga.dim_at(2))
        if len(dec.delta) > 2
        else []
    )
    square = bracket_poly(tdgla, phi, phi)
    corrected = square.apply(
        lambda v: tdgla.apply_matrix(delta2_cols, v), 1
    ).scale(HALF)
    lhs = phi.add(corrected)
    if not lhs.equals(series.phi1()):
        return "phi + (1/2) delta[phi, phi] differs from the linear part"
    return None


# -- point checks -------------------------------------------------------------------


@dataclass
class SpotCheckResult:
    obstruction_values: list[Scalar]
    residual: SparseVec
    gauge: SparseVec

    @property
    def obstructions_vanish(self) -> bool:
        return all(not v for v in self.obstruction_values)

    @property
    def residual_is_zero(self) -> bool:
        return not self.residual

    @property
    def gauge_is_zero(self) -> bool:
        return not self.gauge

    @property
    def consistent(self) -> bool:
        """Vanishing obstructions must force an exactly flat point."""
        if self.obstructions_vanish:
            return self.residual_is_zero and self.gauge_is_zero
        return True


def mc_spot_check(
    series: KuranishiSeries,
    system: ObstructionSystem,
    point: list[Scalar],
) -> SpotCheckResult:
    """Evaluate the system and the flatness residual at an exact point."""
    values = [poly.eval(point) for poly in system.polynomials]
    omega = series.eval_phi(point)
    residual = mc_residual(series.tdgla, omega)
    dec = series.decomposition
    delta1_cols = sparse_columns(dec.delta[1], dec.dga.dim_at(1))
    gauge = series.tdgla.apply_matrix(delta1_cols, omega)
    return SpotCheckResult(values, residual, gauge)


# -- sub-DGLA inclusion --------------------------------------------------------------


def linear_embedding_check(
    sub: SubDga,
    target: LieAlgebra,
    samples: list[list[Scalar]],
) -> tuple[int, str] | None:
    """Compare flatness residuals computed in the selection and the ambient.

    Each sample lists coordinates over the selection's degree-one basis
    (monomial-major, target-minor).  Returns None when the inclusion
    commutes with the residual on every sample, else (sample index, detail).
    """
    sub_complex = sub.complex()
    ambient = sub.parent
    sub_dgla = TensorDgla(sub_complex, target)
    amb_dgla = TensorDgla(ambient, target)
    ta = target.dim

    def include(p: int, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for idx, c in v.items():
            mono_idx, a = divmod(idx, ta)
            mono = sub_complex.monomials[p][mono_idx]
            amb_idx = ambient.position[mono][1]
            out[amb_idx * ta + a] = c
        return out

    for k, coords in enumerate(samples):
        if len(coords) != sub_dgla.dim(1):
            raise ValueError(
                f"sample {k} has {len(coords)} coordinates, "
                f"expected {sub_dgla.dim(1)}"
            )
        omega_sub = {i: scalar(c) for i, c in enumerate(coords) if scalar(c)}
        res_sub = mc_residual(sub_dgla, omega_sub)
        omega_amb = include(1, omega_sub)
        res_amb = mc_residual(amb_dgla, omega_amb)
        if include(2, res_sub) != res_amb:
            return k, (
                "residuals disagree: selection gives "
                f"{sub_dgla.element_str(2, res_sub)}, ambient gives "
                f"{amb_dgla.element_str(2, res_amb)}"
            )
    return None


def random_rational_samples(
    count: int, dimension: int, seed: int = 0
) -> list[list[Scalar]]:
    """Deterministic pseudo-random rational sample points."""
    import random

    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        samples.append(
            [
                Scalar(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
                for _ in range(dimension)
            ]
        )
    return samples
