"""Exact checks of the slope conjectures for a family of Montesinos knots."""

from .laurent import LaurentPoly, NonExactDivision, exact_div
from .params import (CaseTag, ContinuedFraction, FamilyError, MontesinosKnot,
                     eval_continued_fraction, knot, validate_family, writhe_and_framing)
from .colored_jones import BudgetExceeded, ColorAssignment, state_sum
from .jones_slope import (QuasiQuadratic, brute_force_max_phi, closed_form_degree,
                          reduced_max_R)
from .hatcher_oertel import (build_seifert_system, build_type1_system, build_type2_system,
                             closed_form_surface, euler_ratio, twist)
from .bracket import kauffman_oracle
from .verify import Budgets, GridSpec, VerificationReport, sweep, verify_instance

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "NonExactDivision", "exact_div",
    "CaseTag", "ContinuedFraction", "FamilyError", "MontesinosKnot",
    "eval_continued_fraction", "knot", "validate_family", "writhe_and_framing",
    "BudgetExceeded", "ColorAssignment", "state_sum",
    "QuasiQuadratic", "brute_force_max_phi", "closed_form_degree", "reduced_max_R",
    "build_seifert_system", "build_type1_system", "build_type2_system",
    "closed_form_surface", "euler_ratio", "twist",
    "kauffman_oracle",
    "Budgets", "GridSpec", "VerificationReport", "sweep", "verify_instance",
]
