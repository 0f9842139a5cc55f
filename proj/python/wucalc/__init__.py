"""Python bindings for the wucalc library."""

from ._core import (
    Complex,
    IntersectionRule,
    WucalcError,
    automorphisms,
    betti_vector,
    catalog_names,
    connection_f_vector,
    euler_polynomial,
    fermi_characteristic,
    fredholm_characteristic,
    grade_sizes,
    laplacian_blocks,
    laplacian_spectra,
    lefschetz_numbers,
    multivariate_euler_polynomial,
    product_betti_vector,
    product_f_vector,
    run_cli,
    wu_characteristic,
)

__all__ = [
    "Complex",
    "IntersectionRule",
    "WucalcError",
    "automorphisms",
    "betti_vector",
    "catalog_names",
    "connection_f_vector",
    "euler_polynomial",
    "fermi_characteristic",
    "fredholm_characteristic",
    "grade_sizes",
    "laplacian_blocks",
    "laplacian_spectra",
    "lefschetz_numbers",
    "multivariate_euler_polynomial",
    "product_betti_vector",
    "product_f_vector",
    "run_cli",
    "wu_characteristic",
]
