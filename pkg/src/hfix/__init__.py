"""Fixed points, multipliers and residue indices of rational maps, and
h-fixed points of harmonic maps ``h + conj(g)``."""

from ._kernels import BACKEND
from .config import DEFAULT, Tolerances
from .errors import (ContourError, DegenerateMobiusError, DegreeError, HfixError, IdentityMapError, ScaleError,
                     IndeterminateError, NotAFixedPointError, ParseError)
from .expr import format_function, parse_complex, parse_function
from .fixpoint import (FixedPoint, FixedPointReport, classify_multiplier, fixed_points, residue_index,
                       residue_index_contour, verify_index_sum, verify_polynomial_sums)
from .harmonic import (HarmonicMap, analyze_harmonic, conjecture_witness, quadratic_family_analyze,
                       remark_witnesses)
from .poly import INF, MobiusMap, Polynomial, RationalMap, mobius_conjugate
from .roots import find_roots

__version__ = "0.1.0"
