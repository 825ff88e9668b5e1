"""Telecloning circuit simulator (compiled core plus thin helpers)."""

from ._core import (
    CircuitTextError,
    ConfigError,
    IoError,
    __version__,
    audit_cost,
    clone_densities,
    cnot_cost,
    dicke_cnot_formula,
    dicke_state,
    export_circuit,
    fidelity_pure,
    mitigate,
    mle_fit,
    optimal_fidelity,
    postselect,
    roundtrip_circuit_text,
    sweep,
)


def mean_fidelity(records):
    """Mean over every (grid point, clone) record."""
    values = [r["fidelity"] for r in records]
    if not values:
        raise ValueError("no records")
    return sum(values) / len(values)
