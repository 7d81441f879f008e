import pytest

from conftest import GRADED_NILPOTENT, non_unimodular2

from germkit import fixtures
from germkit.errors import PreconditionError
from germkit.liealg import (
    Grading,
    LieAlgebra,
    Subspace,
    basis_aligned_weights,
    derived_subalgebra,
    infer_grading_basis_aligned,
    is_solvable,
    jacobi_check,
    lower_central_series,
    span_of_brackets,
    verify_natural_grading,
)
from germkit.scalars import scalar


def test_jacobi_pass_on_heisenberg():
    assert jacobi_check(fixtures.heisenberg3()) is None


def test_jacobi_counterexample_is_reported():
    bad = LieAlgebra(
        ("e1", "e2", "e3"),
        {(0, 1): {2: scalar(1)}, (0, 2): {0: scalar(1)}},
        validate=False,
    )
    witness = jacobi_check(bad)
    assert witness is not None
    i, j, k, total = witness
    assert (i, j, k) == (0, 1, 2)
    # the cyclic sum collapses to e3
    assert [str(c) for c in total] == ["0", "0", "1"]
    with pytest.raises(PreconditionError):
        LieAlgebra(("e1", "e2", "e3"), {(0, 1): {2: scalar(1)}, (0, 2): {0: scalar(1)}})


def test_any_2dim_bracket_satisfies_jacobi():
    algebra = LieAlgebra(("T", "X"), {(0, 1): {0: scalar(5), 1: scalar(-3)}})
    assert jacobi_check(algebra) is None


def test_lower_central_series_examples():
    lcs = lower_central_series(fixtures.heisenberg3())
    assert lcs.dims() == [3, 1, 0] and lcs.nu == 2
    assert lower_central_series(fixtures.abelian(3)).nu == 1
    fil = lower_central_series(fixtures.filiform4())
    assert fil.nu == 3 and fil.dims() == [4, 2, 1, 0]
    assert lower_central_series(fixtures.sl2()).nu is None


def test_lcs_chain_bracket_compatibility():
    # [g^(i), g^(j)] must land in g^(i+j)
    for algebra in GRADED_NILPOTENT.values():
        lcs = lower_central_series(algebra)
        chain = list(lcs.chain)
        zero = Subspace.zero(algebra.dim)
        while len(chain) < 2 * len(lcs.chain):
            chain.append(zero)
        for i, si in enumerate(lcs.chain, start=1):
            for j, sj in enumerate(lcs.chain, start=1):
                generated = span_of_brackets(algebra, si, sj)
                assert chain[i + j - 1].contains_subspace(generated)


def test_unimodularity():
    assert fixtures.heisenberg3().is_unimodular()
    assert not non_unimodular2().is_unimodular()
    assert fixtures.solvable_heisenberg().is_unimodular()
    assert fixtures.sl2().is_unimodular()


def test_solvability():
    assert is_solvable(fixtures.solvable_heisenberg())
    assert is_solvable(fixtures.heisenberg5())
    assert not is_solvable(fixtures.sl2())


def test_derived_subalgebra():
    derived = derived_subalgebra(fixtures.solvable_heisenberg())
    assert derived.dim == 3
    for idx in (1, 2, 3):
        assert derived.contains(fixtures.solvable_heisenberg().basis_vector(idx))


def test_verify_natural_grading_standard_layers():
    h3 = fixtures.heisenberg3()
    grading = Grading(
        (
            Subspace.from_vectors(3, [h3.basis_vector(0), h3.basis_vector(1)]),
            Subspace.from_vectors(3, [h3.basis_vector(2)]),
        )
    )
    assert verify_natural_grading(h3, grading) is None


def test_verify_natural_grading_skew_layer():
    # first layer spanned by X and Y + Z still works: [X, Y+Z] = Z
    h3 = fixtures.heisenberg3()
    skew = [scalar(0), scalar(1), scalar(1)]
    grading = Grading(
        (
            Subspace.from_vectors(3, [h3.basis_vector(0), skew]),
            Subspace.from_vectors(3, [h3.basis_vector(2)]),
        )
    )
    assert verify_natural_grading(h3, grading) is None


def test_verify_natural_grading_violations():
    h3 = fixtures.heisenberg3()
    bad = Grading(
        (
            Subspace.from_vectors(3, [h3.basis_vector(0), h3.basis_vector(2)]),
            Subspace.from_vectors(3, [h3.basis_vector(1)]),
        )
    )
    assert verify_natural_grading(h3, bad) is not None
    with pytest.raises(PreconditionError):
        verify_natural_grading(
            h3, Grading((Subspace.full(3),))
        )  # wrong layer count


def test_filiform_grading():
    fil = fixtures.filiform4()
    grading = infer_grading_basis_aligned(fil)
    assert grading is not None
    assert [layer.dim for layer in grading.layers] == [2, 1, 1]
    assert verify_natural_grading(fil, grading) is None
    assert basis_aligned_weights(grading) == [1, 1, 2, 3]


def test_infer_grading_examples():
    h3 = fixtures.heisenberg3()
    grading = infer_grading_basis_aligned(h3)
    assert grading is not None
    assert [layer.dim for layer in grading.layers] == [2, 1]
    abelian = infer_grading_basis_aligned(fixtures.abelian(4))
    assert abelian is not None and abelian.depth == 1
    assert abelian.layers[0].dim == 4


def test_infer_then_verify_on_all_graded_fixtures():
    for name, algebra in GRADED_NILPOTENT.items():
        grading = infer_grading_basis_aligned(algebra)
        assert grading is not None, name
        assert verify_natural_grading(algebra, grading) is None, name


def _zero_positions(algebra):
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            comps = algebra.bracket_basis(i, j)
            for k in range(n):
                if k not in comps:
                    yield (i, j, k)


@pytest.mark.parametrize("name", ["h3", "filiform4", "h5"])
def test_corrupting_a_structure_constant_is_never_silently_wrong(name):
    """Adding 1 to a structure constant is either detected or harmless.

    Detected means the Jacobi check fails or the lower central series
    changes.  The undetectable perturbations are exactly the ones giving an
    equivalent presentation (a rescaling or a triangular shear of the
    basis); for those every computed invariant must agree with the
    original, so nothing downstream can silently go wrong.
    """
    from conftest import oracle_betti

    algebra = GRADED_NILPOTENT[name]
    baseline_chain = lower_central_series(algebra).chain
    baseline_dims = [s.dim for s in baseline_chain]
    baseline_betti = oracle_betti(algebra)
    detected = 0
    positions = list(_zero_positions(algebra))
    for (i, j, k) in positions:
        table = {
            (a, b): dict(algebra.bracket_basis(a, b))
            for a in range(algebra.dim)
            for b in range(a + 1, algebra.dim)
            if algebra.bracket_basis(a, b)
        }
        entry = dict(table.get((i, j), {}))
        entry[k] = entry.get(k, scalar(0)) + scalar(1)
        table[(i, j)] = entry
        mutated = LieAlgebra(algebra.labels, table, validate=False)
        if jacobi_check(mutated) is not None:
            detected += 1
            continue
        if lower_central_series(mutated).chain != baseline_chain:
            detected += 1
            continue
        # not detected: must be an equivalent presentation
        assert lower_central_series(mutated).dims() == baseline_dims, (name, i, j, k)
        assert oracle_betti(mutated) == baseline_betti, (name, i, j, k)
    assert detected > len(positions) // 2, name
