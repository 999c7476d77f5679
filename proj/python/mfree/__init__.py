"""Free bases and m-exponents of central hyperplane arrangements."""

from ._mfree import (
    Arrangement,
    Error,
    FreeBasis,
    UserError,
    VerificationError,
    basis,
    exp_2arr,
    exponents,
    hilbert_check,
    oracle_dim,
    run,
)

__all__ = [
    "Arrangement",
    "Error",
    "FreeBasis",
    "UserError",
    "VerificationError",
    "basis",
    "exp_2arr",
    "exponents",
    "hilbert_check",
    "oracle_dim",
    "run",
]
