"""Hilbert series of diagonal invariants for G = H x| S_n.

Polynomials come back as ``{exponents: Fraction}`` dicts and binomial
denominators as ``(variable, m)`` pairs standing for ``1 - h_variable^m``.
"""

import json

from ._core import (
    CapacityError,
    ConsistencyError,
    GroupSpec,
    class_size,
    compute_P_alpha,
    compute_Q,
    compute_R_k,
    custom,
    demihyperoctahedral,
    dihedral,
    g2_example,
    g_de_e_n,
    hyperoctahedral,
    invariant_dimension,
    oracle_series,
    partitions_of,
    run,
    scaled_limit,
    symmetric,
    truncated_series,
)


def report(*args):
    """Runs the CLI with ``--format json`` and returns the parsed report."""
    status, out, err = run([*map(str, args), "--format", "json"])
    if status not in (0, 3):
        raise ValueError(err.strip())
    return json.loads(out)


__all__ = [
    "CapacityError",
    "ConsistencyError",
    "GroupSpec",
    "class_size",
    "compute_P_alpha",
    "compute_Q",
    "compute_R_k",
    "custom",
    "demihyperoctahedral",
    "dihedral",
    "g2_example",
    "g_de_e_n",
    "hyperoctahedral",
    "invariant_dimension",
    "oracle_series",
    "partitions_of",
    "report",
    "run",
    "scaled_limit",
    "symmetric",
    "truncated_series",
]
