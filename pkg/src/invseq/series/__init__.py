"""Exact truncated series and the generating-function identities checked with them."""

from .algebra import LaurentPoly, MultiPoly, TruncatedSeries, ValuationError, digest
from .identities import (
    IDENTITIES, CheckReport, F_tilde, baxter_F, baxter_fe_check, baxter_fe_report,
    bousquet_side_check, bousquet_side_report, dist_ogf_check, dist_ogf_report,
    dist_ogf_series, kernel, kernel_root, kernel_root_check, kernel_root_report,
    kernel_root_Y, main_identity_check, main_identity_report, main_rhs,
)

__all__ = [
    "LaurentPoly", "MultiPoly", "TruncatedSeries", "ValuationError", "digest",
    "IDENTITIES", "CheckReport", "F_tilde", "baxter_F", "baxter_fe_check",
    "baxter_fe_report", "bousquet_side_check", "bousquet_side_report",
    "dist_ogf_check", "dist_ogf_report", "dist_ogf_series", "kernel",
    "kernel_root", "kernel_root_check", "kernel_root_report", "kernel_root_Y",
    "main_identity_check", "main_identity_report", "main_rhs",
]
