"""hopf_forge: exact cocycle deformations of pointed Hopf algebras of quantum-linear-space type.

Everything is computed over a cyclotomic field with exact arithmetic.  The
main entry points are re-exported here::

    >>> from hopf_forge import taft, run_deformation
    >>> run_deformation(taft(3, 2, 1)).passed
    True
"""

from .abelian_group import (
    Character,
    FiniteAbelianGroup,
    PointedDatum,
    QuotientGroup,
    character_pairing,
    root_subgroup,
    validate_datum,
)
from .cocycles import (
    assemble_sigma,
    eta_functional,
    exp_functional,
    exp_q_functional,
    graded_parts,
    is_hochschild_cocycle,
    is_multiplicative_cocycle,
    linking_cocycle,
    singer_cocycle,
    skew_derivation,
    zeta_cocycle,
)
from .corpus import corpus, independent_pair, linked_pair, quantum_plane, taft
from .cyclotomic import CyclotomicScalar, parse_scalar, print_scalar, root_of_unity
from .datum_io import format_datum, parse_datum_file, parse_datum_text
from .deform import (
    deform_multiplication,
    deformed_antipode,
    dual_hopf,
    match_lifting,
    run_deformation,
    singer_deformation,
    taft_dual_report,
)
from .functionals import PairFunctional, convolution_inverse, convolve, counit_functional
from .hopf_core import PbwHopfAlgebra, gauss_binomial, q_factorial, verify_hopf_axioms
from .nichols import DiagonalBraiding, nichols_hilbert_series, quantum_symmetrizer

__version__ = "0.1.0"
