"""Quantile and order-statistic moment expansions for Pareto-type tails."""

from ._paretail import (
    CapabilityError,
    Expansion,
    InfiniteMomentError,
    TailModel,
    covariance_expansion,
    gamma_ratio_coeffs,
    invert_series,
    joint_beta_moment,
    mean_expansion,
    moment_expansion,
    pair_moment_expansion,
    quad_moment,
    quantile_coefficients,
    tail_of,
    third_cumulant_expansion,
    typo_ledger,
)

__all__ = [
    "CapabilityError",
    "Expansion",
    "InfiniteMomentError",
    "TailModel",
    "covariance_expansion",
    "gamma_ratio_coeffs",
    "invert_series",
    "joint_beta_moment",
    "mean_expansion",
    "moment_expansion",
    "pair_moment_expansion",
    "quad_moment",
    "quantile_coefficients",
    "tail_of",
    "third_cumulant_expansion",
    "typo_ledger",
]
