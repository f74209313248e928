"""Exact Bott-Chern, Aeppli, Dolbeault and de Rham cohomology of invariant-form
double complexes, non-Kaehlerness degrees, and blow-up arithmetic on Hodge tables."""

from .algebra import GaussianRational, Matrix, hstack, kernel_dim, rank, vstack
from .bicomplex import DoubleComplex, TotalComplex, totalize, validate_jacobi
from .blowup import (BlowupStep, blow_up_curve, blow_up_general, blow_up_point, check_delta_invariance,
                     curve_table, point_table, random_threefold_table)
from .cohomology import (HodgeTable, betti, h_aeppli, h_bott_chern, h_del, h_dolbeault, hodge_table,
                         natural_map_rank)
from .diagnostics import (DiagnosticsReport, at_inequality, ddbar_verdict, delta_k, diagnose, duality_check,
                          n_k)
from .lie import StructureSpec, build_bicomplex, builtin_complex, builtin_spec, parse_spec

__version__ = "0.1.0"
