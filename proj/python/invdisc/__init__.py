"""Invariant difference schemes for SL(2)-invariant ODEs."""

from ._core import (
    InvdiscError,
    chi,
    cross_ratio,
    exact_eval,
    exact_jet,
    h5_differential,
    h5_discrete,
    h5_uniform,
    jy_invariants,
    kx_invariants,
    l3,
    l4,
    l5,
    m3,
    m4,
    m5,
    probe_limit,
    rk4,
    solve,
    w0_sol2,
    w_coefficient,
    wx_coefficient,
)

__all__ = [
    "InvdiscError",
    "chi",
    "cross_ratio",
    "exact_eval",
    "exact_jet",
    "h5_differential",
    "h5_discrete",
    "h5_uniform",
    "jy_invariants",
    "kx_invariants",
    "l3",
    "l4",
    "l5",
    "m3",
    "m4",
    "m5",
    "probe_limit",
    "rk4",
    "solve",
    "w0_sol2",
    "w_coefficient",
    "wx_coefficient",
]
