"""a-points of derivatives of the Riemann zeta function."""

from ._zap import (
    Rect,
    ZapError,
    alpha,
    alpha_oracle,
    alpha_zero,
    band_halfwidth,
    beta_sum_main,
    census,
    chi,
    count_main,
    expsum_main,
    find_e1,
    find_e2,
    find_trivial_nmin,
    left_asymptotic,
    locate,
    log_gamma,
    scan,
    selftest,
    trivial_apoint,
    window_count_main,
    winding,
    zeta,
    zeta_deriv,
    zeta_jet,
)

__all__ = [
    "Rect",
    "ZapError",
    "alpha",
    "alpha_oracle",
    "alpha_zero",
    "band_halfwidth",
    "beta_sum_main",
    "census",
    "chi",
    "count_main",
    "expsum_main",
    "find_e1",
    "find_e2",
    "find_trivial_nmin",
    "left_asymptotic",
    "locate",
    "log_gamma",
    "scan",
    "selftest",
    "trivial_apoint",
    "window_count_main",
    "winding",
    "zeta",
    "zeta_deriv",
    "zeta_jet",
]
