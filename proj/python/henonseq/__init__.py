"""Hénon map pseudorandom bit generator and randomness analysis."""

from ._core import (
    EPSILON_FLOAT32,
    EPSILON_FLOAT64,
    BitSequence,
    DivergenceError,
    GeneratorConfig,
    MapParameters,
    WrongLength,
    autocorrelation,
    conjectured_pmf,
    correlation,
    correlation_pmf_exact,
    correlation_pmf_normal,
    fips140_1,
    generate,
    keyspace_bits,
    lc_profile,
    linear_complexity,
    menezes_battery,
    orbit,
    preset,
    preset_names,
    vernam,
)

__all__ = [
    "EPSILON_FLOAT32",
    "EPSILON_FLOAT64",
    "BitSequence",
    "DivergenceError",
    "GeneratorConfig",
    "MapParameters",
    "WrongLength",
    "autocorrelation",
    "conjectured_pmf",
    "correlation",
    "correlation_pmf_exact",
    "correlation_pmf_normal",
    "fips140_1",
    "generate",
    "keyspace_bits",
    "lc_profile",
    "linear_complexity",
    "menezes_battery",
    "orbit",
    "preset",
    "preset_names",
    "vernam",
]
