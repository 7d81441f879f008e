import random

import pytest

from conftest import UNIMODULAR, non_unimodular2, oracle_d_matrix

import germkit.linalg as la
from germkit import fixtures
from germkit.cedga import (
    CharacterData,
    Cochain,
    Dga,
    SubDga,
    TorsionComponent,
    bar_star,
    ce_complex,
    pd_type_check,
    subdga_from_characters,
    verify_subdga,
    wedge_monomials,
)
from germkit.decomp import hermitian
from germkit.errors import PreconditionError
from germkit.liealg import LieAlgebra
from germkit.scalars import ONE, ZERO, scalar


def test_h3_differential():
    dga = ce_complex(fixtures.heisenberg3())
    # dx = dy = 0, dz = -x^y
    assert [dga.d[1][r][0] for r in range(3)] == [ZERO, ZERO, ZERO]
    assert [dga.d[1][r][1] for r in range(3)] == [ZERO, ZERO, ZERO]
    assert [str(dga.d[1][r][2]) for r in range(3)] == ["-1", "0", "0"]
    assert dga.monomials[2][0] == (0, 1)


def test_filiform_differential():
    dga = ce_complex(fixtures.filiform4())
    # de3 = -e1^e2, de4 = -e1^e3
    col3 = [dga.d[1][r][2] for r in range(6)]
    col4 = [dga.d[1][r][3] for r in range(6)]
    m2 = dga.monomials[2]
    assert col3[m2.index((0, 1))] == -ONE and sum(1 for c in col3 if c) == 1
    assert col4[m2.index((0, 2))] == -ONE and sum(1 for c in col4 if c) == 1


def test_abelian_differential_is_zero():
    dga = ce_complex(fixtures.abelian(4))
    assert all(la.is_zero_matrix(m) for m in dga.d)


@pytest.mark.parametrize("name", sorted(UNIMODULAR))
def test_engine_matches_multilinear_oracle(name):
    algebra = UNIMODULAR[name]
    dga = ce_complex(algebra)
    for p in range(algebra.dim):
        assert la.mat_eq(dga.d[p], oracle_d_matrix(algebra, p)), (name, p)


def test_dims_are_binomials():
    dga = ce_complex(fixtures.heisenberg5())
    assert dga.dims() == [1, 5, 10, 10, 5, 1]


def test_wedge_examples():
    dga = ce_complex(fixtures.heisenberg3())
    x = Cochain.from_monomial(dga, (0,))
    y = Cochain.from_monomial(dga, (1,))
    z = Cochain.from_monomial(dga, (2,))
    xy = x.wedge(y)
    assert str(xy) == "X∧Y"
    assert y.wedge(x).coeffs == tuple(-c for c in xy.coeffs)
    assert x.wedge(x).is_zero()
    assert str(xy.wedge(z)) == "X∧Y∧Z"


def test_graded_commutativity_and_leibniz_on_all_monomial_pairs():
    for algebra in (fixtures.heisenberg3(), fixtures.filiform4()):
        dga = ce_complex(algebra)
        monos = [m for level in dga.monomials for m in level]
        for left in monos:
            for right in monos:
                p, q = len(left), len(right)
                if p + q > algebra.dim:
                    continue
                a = Cochain.from_monomial(dga, left)
                b = Cochain.from_monomial(dga, right)
                ab, ba = a.wedge(b), b.wedge(a)
                sign = scalar((-1) ** (p * q))
                assert ab.coeffs == tuple(sign * c for c in ba.coeffs)
                lhs = ab.d()
                rhs = a.d().wedge(b) + a.wedge(b.d()).scale(scalar((-1) ** p))
                assert lhs.coeffs == rhs.coeffs


def _random_bracket_table(rng, n):
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                comps = {
                    k: scalar(rng.randint(-2, 2))
                    for k in rng.sample(range(n), rng.randint(1, 2))
                }
                comps = {k: c for k, c in comps.items() if c}
                if comps:
                    table[(i, j)] = comps
    return table


def test_jacobi_iff_d_squared_zero():
    rng = random.Random(4242)
    seen_fail = seen_pass = 0
    for _ in range(60):
        n = rng.choice([3, 4])
        algebra = LieAlgebra(
            tuple(f"e{i}" for i in range(n)),
            _random_bracket_table(rng, n),
            validate=False,
        )
        if algebra.jacobi_counterexample() is None:
            ce_complex(algebra)  # must build: d o d == 0 is checked inside
            seen_pass += 1
        else:
            with pytest.raises(PreconditionError):
                ce_complex(algebra)
            seen_fail += 1
    assert seen_pass > 0 and seen_fail > 0


def test_pd_type_full_complexes():
    for name, algebra in UNIMODULAR.items():
        assert pd_type_check(ce_complex(algebra)) is None, name
    violation = pd_type_check(ce_complex(non_unimodular2()))
    assert violation is not None and "top - 1" in violation


def test_bar_star_defining_property():
    for algebra in (fixtures.heisenberg3(), fixtures.q_plus_heisenberg3()):
        dga = ce_complex(algebra)
        n = algebra.dim
        volume = [ONE]
        for p in range(n + 1):
            dim_p = dga.dim_at(p)
            for a in range(dim_p):
                alpha = [ONE if i == a else ZERO for i in range(dim_p)]
                for b in range(dim_p):
                    beta = [ONE if i == b else ZERO for i in range(dim_p)]
                    star_beta = bar_star(dga, p, beta)
                    product = dga.wedge_vectors(p, alpha, n - p, star_beta)
                    expected = [hermitian(alpha, beta) * volume[0]]
                    assert product == expected


def test_subdga_selection_from_characters():
    dga = ce_complex(fixtures.q_plus_heisenberg3())
    chars = fixtures.solvable_heisenberg_characters()
    sub = subdga_from_characters(dga, chars)
    got = [tuple(i + 1 for i in m) for level in sub.selected for m in level]
    assert got == [
        (),
        (1,),
        (4,),
        (1, 4),
        (2, 3),
        (1, 2, 3),
        (2, 3, 4),
        (1, 2, 3, 4),
    ]
    assert verify_subdga(sub) is None
    assert pd_type_check(sub.complex()) is None


def test_all_zero_exponents_select_everything():
    dga = ce_complex(fixtures.heisenberg3())
    chars = CharacterData(rank=1, exponents=((0,), (0,), (0,)))
    sub = subdga_from_characters(dga, chars)
    assert sub.degree_counts() == [1, 3, 3, 1]


def test_two_generator_zero_sum_selection():
    dga = ce_complex(fixtures.abelian(2))
    chars = CharacterData(rank=1, exponents=((1,), (-1,)))
    sub = subdga_from_characters(dga, chars)
    got = [tuple(i + 1 for i in m) for level in sub.selected for m in level]
    assert got == [(), (1, 2)]


def test_torsion_components():
    dga = ce_complex(fixtures.abelian(3))
    chars = CharacterData(
        rank=0,
        exponents=((), (), ()),
        torsion=(TorsionComponent(2, (1, 1, 0)),),
    )
    sub = subdga_from_characters(dga, chars)
    got = [tuple(i + 1 for i in m) for level in sub.selected for m in level]
    assert got == [(), (3,), (1, 2), (1, 2, 3)]


def test_incompatible_characters_are_rejected():
    # weight data that is not additive along the bracket: dz escapes
    dga = ce_complex(fixtures.heisenberg3())
    chars = CharacterData(rank=1, exponents=((1,), (2,), (0,)))
    with pytest.raises(PreconditionError):
        subdga_from_characters(dga, chars)


def test_unimodular_duality_of_selections():
    # when the exponents of all generators sum to zero, selections are
    # closed under complements
    dga = ce_complex(fixtures.q_plus_heisenberg3())
    chars = fixtures.solvable_heisenberg_characters()
    total = [sum(v[c] for v in chars.exponents) for c in range(chars.rank)]
    assert all(t == 0 for t in total)
    sub = subdga_from_characters(dga, chars)
    chosen = sub.selected_set()
    everything = tuple(range(4))
    for mono in chosen:
        complement = tuple(i for i in everything if i not in mono)
        assert complement in chosen


def test_verify_subdga_violations():
    dga = ce_complex(fixtures.heisenberg3())
    # closed: 1, x, y in degrees 0..1 and x^y in degree 2
    good = SubDga(dga, (((),), ((0,), (1,)), ((0, 1),), ()))
    assert verify_subdga(good) is None
    # selecting z without x^y breaks d-closure
    bad = SubDga(dga, (((),), ((2,),), (), ()))
    message = verify_subdga(bad)
    assert message is not None and "X∧Y" in message
    # missing unit
    assert verify_subdga(SubDga(dga, ((), ((0,),), (), ()))) is not None


def test_wedge_monomial_signs():
    assert wedge_monomials((0,), (1,)) == (1, (0, 1))
    assert wedge_monomials((1,), (0,)) == (-1, (0, 1))
    assert wedge_monomials((0,), (0,)) is None
    assert wedge_monomials((0, 2), (1,)) == (-1, (0, 1, 2))
