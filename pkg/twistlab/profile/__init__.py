from .tables import FunctionTable, uniform_table
from .profile import (
    TWO_PI,
    ProfileConfig,
    ContactPair,
    rho_closed_form,
    build_rho,
    twisting_profile,
    unit_profile,
    verify_profile,
    mapping_torus_shift,
    exactness_check,
    binding_profile,
    interpolation_pair,
    check_contact_pair,
    binding_interpolation_check,
)

__all__ = [
    "FunctionTable",
    "uniform_table",
    "TWO_PI",
    "ProfileConfig",
    "ContactPair",
    "rho_closed_form",
    "build_rho",
    "twisting_profile",
    "unit_profile",
    "verify_profile",
    "mapping_torus_shift",
    "exactness_check",
    "binding_profile",
    "interpolation_pair",
    "check_contact_pair",
    "binding_interpolation_check",
]
