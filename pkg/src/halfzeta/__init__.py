"""Zeta functions of curves over F_{p^2f} at s = 1/2."""

from .curves import CurveModel, hyperelliptic, plane
from .exact_arith import Poly, RationalFunction
from .motives import WeilMotive, check_half_shift_identity, l_function, tensor
from .padic import is_ordinary, padic_value_check, slope_profile
from .special_values import c_of, rho_of, sha_prediction, special_value_report
from .tate_rank import find_type_c_curve, hom_rank, verify_lemma_ord
from .zeta import ZetaFunction, zeta_of_curve

__version__ = "0.1.0"
