"""Chaos-based grayscale image encryption with a security-analysis battery."""

from qmedshield._core import (
    DimensionError,
    DivergenceError,
    KeyFileError,
    KeySet,
    __version__,
    analyze_json,
    chi_square,
    correlation,
    decrypt,
    encrypt,
    entropy,
    error_metrics,
    henon_sequence,
    hybrid_sequence,
    key_sensitivity,
    npcr,
    quantum_logistic_sequence,
    uaci,
)

__all__ = [
    "DimensionError",
    "DivergenceError",
    "KeyFileError",
    "KeySet",
    "__version__",
    "analyze_json",
    "chi_square",
    "correlation",
    "decrypt",
    "encrypt",
    "entropy",
    "error_metrics",
    "henon_sequence",
    "hybrid_sequence",
    "key_sensitivity",
    "npcr",
    "quantum_logistic_sequence",
    "uaci",
]
