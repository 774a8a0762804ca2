"""Resonance fluorescence of a coherently driven four-level Y-type atom.

Thin Python layer over the C++ core. All rates and frequencies are
expressed in units of gamma3 (the half decay rate of the intermediate
state); see the project README for the model and conventions.
"""

from yfluor._core import (
    AtomParams,
    DressedState,
    YfluorError,
    analytic_rho11,
    dressed_populations,
    dressed_states,
    hamiltonian_matrix,
    propagate,
    run_figure,
    spectrum_a,
    spectrum_b,
    spectrum_oracle,
    steady_state,
    sweep,
    sym_antisym,
    transition_rates,
    validate,
)

__all__ = [
    "AtomParams",
    "DressedState",
    "YfluorError",
    "analytic_rho11",
    "dressed_populations",
    "dressed_states",
    "hamiltonian_matrix",
    "propagate",
    "run_figure",
    "spectrum_a",
    "spectrum_b",
    "spectrum_oracle",
    "steady_state",
    "sweep",
    "sym_antisym",
    "transition_rates",
    "validate",
]
