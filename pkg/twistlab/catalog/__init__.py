from .examples import (
    ExampleRecord,
    CATALOG,
    projective_betti,
    lefschetz_betti,
    hypersurface_chi,
    cp_hypersurface,
    fermat_pair,
    sphere,
    list_catalog,
    build_example,
    f_poly,
    f_poly_deriv,
    fermat_nonvanishing_scan,
)

__all__ = [
    "ExampleRecord",
    "CATALOG",
    "projective_betti",
    "lefschetz_betti",
    "hypersurface_chi",
    "cp_hypersurface",
    "fermat_pair",
    "sphere",
    "list_catalog",
    "build_example",
    "f_poly",
    "f_poly_deriv",
    "fermat_nonvanishing_scan",
]
