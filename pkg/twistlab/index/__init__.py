from .paths import (
    SymplecticPath,
    is_symplectic,
    rotation_path,
    constant_path,
    identity_path,
    hyperbolic_path,
    conjugate_path,
    block_diag_path,
    bw_principal_model,
    bw_exceptional_model,
    catenate,
    iterate,
    suggest_perturbation,
)
from .crossings import (
    CrossingRecord,
    IndexResult,
    split_blocks,
    find_crossings,
    crossing_signature,
    index_report,
    rs_index,
    mean_index,
)

__all__ = [
    "SymplecticPath",
    "is_symplectic",
    "rotation_path",
    "constant_path",
    "identity_path",
    "hyperbolic_path",
    "conjugate_path",
    "block_diag_path",
    "bw_principal_model",
    "bw_exceptional_model",
    "catenate",
    "iterate",
    "suggest_perturbation",
    "CrossingRecord",
    "IndexResult",
    "split_blocks",
    "find_crossings",
    "crossing_signature",
    "index_report",
    "rs_index",
    "mean_index",
]
