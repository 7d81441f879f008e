"""germkit: exact computations with Lie algebra cochain complexes.

Structure constants in, obstruction polynomials out: Jacobi and grading
checks, Jordan-Chevalley decompositions, nilshadows of solvable algebras,
exterior cochain complexes with duality checks, per-degree splittings, and
the deformation series whose harmonic projection presents the flat germ at
the origin.  Everything runs over the Gaussian rationals with no floating
point.
"""

from .cedga import (
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
from .decomp import (
    Decomposition,
    betti_numbers,
    hermitian,
    kernel_containment_check,
    split_complex,
)
from .errors import GermkitError, InternalCheckError, ParseError, PreconditionError
from .jordan import char_poly, jordan_chevalley, minimal_polynomial, squarefree_part
from .kuranishi import (
    KuranishiSeries,
    ObstructionSystem,
    PolyCochain,
    SpotCheckResult,
    TensorDgla,
    gauge_identity_check,
    kuranishi_series,
    linear_embedding_check,
    mc_residual,
    mc_spot_check,
    obstruction_system,
    verify_degree_bound,
)
from .liealg import (
    Grading,
    LieAlgebra,
    LowerCentralSeries,
    Subspace,
    basis_aligned_weights,
    derived_subalgebra,
    infer_grading_basis_aligned,
    is_solvable,
    jacobi_check,
    lower_central_series,
    verify_natural_grading,
)
from .multipoly import MultiPoly
from .nilshadow import AdSMap, SolvableInput, ad_s_map, nilshadow
from .scalars import Scalar, parse_scalar, scalar

__version__ = "0.1.0"
