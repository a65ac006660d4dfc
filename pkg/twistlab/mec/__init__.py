from .graded import (
    PeriodicTail,
    GradedDims,
    chi,
    chi_m_periodic,
    chi_m_window,
    tensor_cp_infinity,
)
from .formulas import (
    chi_m_subcritical,
    gysin_chi_m,
    chi_m_bw,
    chi_m_contact,
    chi_m_cover,
    chi_m_brieskorn,
    chi_m_orbifold,
    is_bad_orbit,
    inertia_chi,
    c1_orb_pairing,
    principal_mean_index,
    first_negative_power,
)
from .spectral import (
    Stratum,
    E1Page,
    exceptional_index,
    build_e1_strata_bw,
    e1_page,
    chi_m_from_e1,
    e1_graded_dims,
    e1_csv,
    e1_table,
)

__all__ = [
    "PeriodicTail",
    "GradedDims",
    "chi",
    "chi_m_periodic",
    "chi_m_window",
    "tensor_cp_infinity",
    "chi_m_subcritical",
    "gysin_chi_m",
    "chi_m_bw",
    "chi_m_contact",
    "chi_m_cover",
    "chi_m_brieskorn",
    "chi_m_orbifold",
    "is_bad_orbit",
    "inertia_chi",
    "c1_orb_pairing",
    "principal_mean_index",
    "first_negative_power",
    "Stratum",
    "E1Page",
    "exceptional_index",
    "build_e1_strata_bw",
    "e1_page",
    "chi_m_from_e1",
    "e1_graded_dims",
    "e1_csv",
    "e1_table",
]
