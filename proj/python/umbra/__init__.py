"""Exact formal power series, umbral calculus and Virasoro ladder computations."""

from ._core import (
    MathError,
    SeriesSyntaxError,
    b_star,
    bell,
    comp_inverse,
    compose,
    eval_series,
    eval_series_egf,
    exp_series,
    f_closed,
    f_rec,
    fmn_table_csv,
    log_series,
    mul,
    mul_inverse,
    pair,
    print_series,
    registry_tags,
    run_cli,
    sheffer_ts,
    shift,
    theta,
    umbral_sequences,
    verify,
)

__all__ = [
    "MathError",
    "SeriesSyntaxError",
    "b_star",
    "bell",
    "comp_inverse",
    "compose",
    "eval_series",
    "eval_series_egf",
    "exp_series",
    "f_closed",
    "f_rec",
    "fmn_table_csv",
    "log_series",
    "mul",
    "mul_inverse",
    "pair",
    "print_series",
    "registry_tags",
    "run_cli",
    "sheffer_ts",
    "shift",
    "theta",
    "umbral_sequences",
    "verify",
]
