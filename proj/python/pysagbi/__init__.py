"""Subalgebra (SAGBI) bases over the rationals."""

from ._core import (
    Polynomial,
    Ring,
    SagbiBasis,
    SagbiError,
    Subring,
    groebner_membership_test,
    is_sagbi,
    load_state,
    normal_form,
    quotient_coefficients,
    resume,
    run_script,
    sagbi,
    save_state,
    subduct,
    subring_intersection,
)

__all__ = [
    "Polynomial",
    "Ring",
    "SagbiBasis",
    "SagbiError",
    "Subring",
    "groebner_membership_test",
    "is_sagbi",
    "load_state",
    "normal_form",
    "quotient_coefficients",
    "resume",
    "run_script",
    "sagbi",
    "save_state",
    "subduct",
    "subring_intersection",
]
