import pytest

from conftest import GRADED_NILPOTENT, UNIMODULAR, oracle_betti

import germkit.linalg as la
from germkit import fixtures
from germkit.cedga import ce_complex
from germkit.decomp import (
    betti_numbers,
    degree2_weight_table,
    hermitian,
    kernel_containment_check,
    monomial_weight,
    split_complex,
)
from germkit.errors import PreconditionError
from germkit.liealg import (
    Grading,
    Subspace,
    basis_aligned_weights,
    infer_grading_basis_aligned,
)
from germkit.scalars import ONE, ZERO, scalar


def _metric(algebra, grading=None):
    return split_complex(ce_complex(algebra), "metric", grading)


def test_h3_harmonic_spaces_and_delta():
    h3 = fixtures.heisenberg3()
    dec = _metric(h3, infer_grading_basis_aligned(h3))
    assert betti_numbers(dec) == [1, 2, 2, 1]
    assert dec.harmonic_basis(1) == [
        [ONE, ZERO, ZERO],
        [ZERO, ONE, ZERO],
    ]
    assert dec.harmonic_basis(2) == [
        [ZERO, ONE, ZERO],
        [ZERO, ZERO, ONE],
    ]
    # delta(x^y) = -z, and delta kills the harmonic two-forms
    assert dec.apply_delta(2, [ONE, ZERO, ZERO]) == [ZERO, ZERO, -ONE]
    assert dec.apply_delta(2, [ZERO, ONE, ZERO]) == [ZERO] * 3
    assert dec.apply_delta(2, [ZERO, ZERO, ONE]) == [ZERO] * 3


def test_abelian_split_is_trivial():
    dec = _metric(fixtures.abelian(3))
    assert betti_numbers(dec) == [1, 3, 3, 1]
    for matrix in dec.delta:
        assert la.is_zero_matrix(matrix)
    for p, split in enumerate(dec.splits):
        assert len(split.harmonic) == dec.dga.dim_at(p)


@pytest.mark.parametrize("name", sorted(UNIMODULAR))
@pytest.mark.parametrize("strategy", ["metric", "pivot"])
def test_betti_matches_independent_oracle(name, strategy):
    algebra = UNIMODULAR[name]
    dec = split_complex(ce_complex(algebra), strategy)
    assert betti_numbers(dec) == oracle_betti(algebra)


def test_kunneth_betti_of_q_plus_h3():
    assert betti_numbers(_metric(fixtures.q_plus_heisenberg3())) == [1, 3, 4, 3, 1]


@pytest.mark.parametrize("name", sorted(UNIMODULAR))
def test_poincare_duality_on_unimodular_fixtures(name):
    betti = betti_numbers(_metric(UNIMODULAR[name]))
    assert betti == betti[::-1]


@pytest.mark.parametrize("name", sorted(UNIMODULAR))
def test_adjointness_on_every_basis_pair(name):
    algebra = UNIMODULAR[name]
    dga = ce_complex(algebra)
    dec = split_complex(dga)
    n = algebra.dim
    for p in range(n):
        dim_p, dim_q = dga.dim_at(p), dga.dim_at(p + 1)
        for a in range(dim_p):
            alpha = [ONE if i == a else ZERO for i in range(dim_p)]
            d_alpha = dga.apply_d(p, alpha)
            for b in range(dim_q):
                beta = [ONE if i == b else ZERO for i in range(dim_q)]
                dstar_beta = la.mat_vec(dec.dstar[p + 1], beta)
                assert hermitian(d_alpha, beta) == hermitian(alpha, dstar_beta)


@pytest.mark.parametrize("name", sorted(UNIMODULAR))
@pytest.mark.parametrize("strategy", ["metric", "pivot"])
def test_three_way_dimensions(name, strategy):
    algebra = UNIMODULAR[name]
    dga = ce_complex(algebra)
    dec = split_complex(dga, strategy)
    for p, split in enumerate(dec.splits):
        assert (
            len(split.harmonic) + len(split.exact) + len(split.complement)
            == dga.dim_at(p)
        )


def test_metric_harmonics_are_two_sided_kernels():
    for name, algebra in UNIMODULAR.items():
        dga = ce_complex(algebra)
        dec = split_complex(dga)
        for p in range(len(dec.splits)):
            lap = dec.laplacian(p)
            for row in dec.harmonic_basis(p):
                assert not any(la.mat_vec(lap, list(row))), (name, p)
                assert not any(dga.apply_d(p, list(row)))
                assert not any(la.mat_vec(dec.dstar[p], list(row)))
            # ker(Laplacian) (+) im(Laplacian) is a direct sum filling the degree
            image = la.image_basis(lap, dga.dim_at(p))
            stacked = [list(r) for r in dec.harmonic_basis(p)] + [
                list(r) for r in image
            ]
            assert len(stacked) == dga.dim_at(p)
            assert la.rank(stacked, dga.dim_at(p)) == dga.dim_at(p)


def test_delta_respects_weights_in_degree_two():
    for name, algebra in GRADED_NILPOTENT.items():
        grading = infer_grading_basis_aligned(algebra)
        dga = ce_complex(algebra)
        dec = split_complex(dga, "metric", grading)
        weights = dec.weights
        assert weights is not None
        for k, monos in degree2_weight_table(dga, weights).items():
            for mono in monos:
                vec = [ZERO] * dga.dim_at(2)
                vec[dga.position[mono][1]] = ONE
                out = dec.apply_delta(2, vec)
                for i, c in enumerate(out):
                    if c:
                        assert weights[dga.monomials[1][i][0]] == k, name


def test_kernel_containment_on_graded_fixtures():
    for name, algebra in GRADED_NILPOTENT.items():
        grading = infer_grading_basis_aligned(algebra)
        dga = ce_complex(algebra)
        assert kernel_containment_check(dga, grading) is None, name


def test_h3_degree2_weights():
    h3 = fixtures.heisenberg3()
    grading = infer_grading_basis_aligned(h3)
    weights = basis_aligned_weights(grading)
    dga = ce_complex(h3)
    table = degree2_weight_table(dga, weights)
    assert {k: [dga.monomial_label(m) for m in v] for k, v in table.items()} == {
        2: ["X∧Y"],
        3: ["X∧Z", "Y∧Z"],
    }
    assert monomial_weight(weights, (0, 1)) == 2


def test_non_weight_homogeneous_grading_is_rejected():
    h3 = fixtures.heisenberg3()
    fake = Grading(
        (
            Subspace.from_vectors(3, [h3.basis_vector(0)]),
            Subspace.from_vectors(3, [h3.basis_vector(1), h3.basis_vector(2)]),
        )
    )
    with pytest.raises(PreconditionError, match="weight-homogeneous"):
        split_complex(ce_complex(h3), "metric", fake)


def test_non_aligned_grading_is_rejected():
    h3 = fixtures.heisenberg3()
    skew = [ZERO, ONE, ONE]
    grading = Grading(
        (
            Subspace.from_vectors(3, [h3.basis_vector(0), skew]),
            Subspace.from_vectors(3, [h3.basis_vector(2)]),
        )
    )
    with pytest.raises(PreconditionError, match="basis vectors"):
        split_complex(ce_complex(h3), "metric", grading)


def test_strategies_agree_on_betti_but_may_differ_elsewhere():
    for algebra in GRADED_NILPOTENT.values():
        dga = ce_complex(algebra)
        metric = split_complex(dga, "metric")
        pivot = split_complex(dga, "pivot")
        assert betti_numbers(metric) == betti_numbers(pivot)
