"""Exact plane-graph enumeration and verification on small point sets."""

from ._core import (
    ValidationError,
    __version__,
    charge_audit,
    convex_hull,
    count_plane_graphs,
    expected_degrees,
    format_pts,
    generate,
    lp_charge_cap,
    max_family_charge,
    parse_pts,
    triangulations,
    validate,
    verify,
)

__all__ = [
    "ValidationError",
    "charge_audit",
    "convex_hull",
    "count_plane_graphs",
    "expected_degrees",
    "format_pts",
    "generate",
    "lp_charge_cap",
    "max_family_charge",
    "parse_pts",
    "triangulations",
    "validate",
    "verify",
]
