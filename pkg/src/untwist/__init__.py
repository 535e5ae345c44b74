"""Exact bounds on null-homologous untwisting numbers of knots.

Lower bound from the rank of the Alexander module over F[t, 1/t]; upper
bound of twice the Seifert genus, realized by an explicit sequence of Kirby
moves on framing/linking matrices.
"""

__version__ = "0.1.0"

from .alexander import (
    AlexanderModule,
    alexander_polynomial,
    module_rank,
    presentation_matrix,
    smith_normal_form,
)
from .bounds import (
    BoundsReport,
    bounds_report,
    lower_bound_twists,
    upper_bound_twists,
    witness_family,
)
from .errors import UntwistError
from .kirby import (
    MoveTrace,
    SurgeryPresentation,
    blow_down,
    blow_up,
    is_null_homologous,
    ohyama_trace,
    slide,
    unknotting_trace,
)
from .laurent import QQ, LaurentMatrix, LaurentPoly, PrimeField, Rationals
from .seifert import (
    BasisChange,
    SeifertMatrix,
    SymplecticSeifertMatrix,
    basis_change,
    connected_sum,
    parity_normalize,
    symplectic_reduce,
    validate_seifert,
)
