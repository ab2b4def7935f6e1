"""Higher-order maps: the quantum time flip and the quantum switch.

Both supermaps take ordinary channel Kraus sets and return Kraus sets
acting on the system together with a control qubit.  Factor ordering is
fixed everywhere as system, then ancilla (if present), then control; the
control is always the last factor.

Post-selection measures the control in the orthonormal basis containing
its initial state: outcome ``plus`` projects onto the initial control
state itself, ``minus`` onto its orthogonal complement.  With the default
maximally coherent control this is the usual {|+>, |->} coherent-basis
measurement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .channels import KrausSet, is_unital
from .errors import (
    BidirectionalityError,
    ConfigurationError,
    NumericContractError,
    PostSelectionError,
)

SUCCESS_PROB_FLOOR = 1e-12
COMPLETENESS_TOL = 1e-11

_P0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_P1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


@dataclass(frozen=True)
class ControlSpec:
    """Initial control state and the post-selected measurement outcome."""

    initial: np.ndarray = field(default_factory=lambda: matcore.KET_PLUS.copy())
    postselect_outcome: str = "plus"

    def __post_init__(self) -> None:
        ket = matcore.pure_state(self.initial)
        if ket.shape != (2,):
            raise ConfigurationError("control must be a single qubit")
        object.__setattr__(self, "initial", ket)
        if self.postselect_outcome not in ("plus", "minus"):
            raise ConfigurationError(
                f"postselect outcome must be 'plus' or 'minus', got {self.postselect_outcome!r}"
            )

    def outcome_vector(self) -> np.ndarray:
        if self.postselect_outcome == "plus":
            return self.initial.copy()
        return orthogonal_state(self.initial)


_NAMED_KETS = {
    "plus": matcore.KET_PLUS,
    "minus": matcore.KET_MINUS,
    "zero": matcore.KET_ZERO,
    "one": matcore.KET_ONE,
}


def control_from_names(initial: str = "plus", postselect: str = "plus") -> ControlSpec:
    """Build a ControlSpec from named control states."""
    if initial not in _NAMED_KETS:
        raise ConfigurationError(f"unknown control state {initial!r}")
    return ControlSpec(_NAMED_KETS[initial].copy(), postselect)


def orthogonal_state(ket: np.ndarray) -> np.ndarray:
    """The qubit state orthogonal to ``ket`` (up to phase)."""
    return np.array([-np.conj(ket[1]), np.conj(ket[0])], dtype=complex)


@dataclass(frozen=True)
class SuperKrausSet:
    """Kraus set of a supermap output, acting on system (x ancilla) x control."""

    operators: tuple[np.ndarray, ...]
    layout: tuple[int, ...]

    def __post_init__(self) -> None:
        layout = tuple(int(d) for d in self.layout)
        object.__setattr__(self, "layout", layout)
        dim = int(np.prod(layout))
        ops = tuple(np.asarray(op, dtype=complex) for op in self.operators)
        object.__setattr__(self, "operators", ops)
        if any(op.shape != (dim, dim) for op in ops):
            raise ConfigurationError(f"operators do not match layout {layout}")
        acc = sum(op.conj().T @ op for op in ops)
        if np.max(np.abs(acc - np.eye(dim))) > COMPLETENESS_TOL:
            raise NumericContractError("supermap Kraus set is not complete")


@dataclass(frozen=True)
class PostSelectedStep:
    """Conditional state after control measurement, with its outcome probability."""

    state: np.ndarray
    success_prob: float

    def __post_init__(self) -> None:
        if not SUCCESS_PROB_FLOOR < self.success_prob <= 1.0 + 1e-12:
            raise PostSelectionError(
                f"success probability {self.success_prob!r} outside (0, 1]"
            )
        matcore.check_density_matrix(self.state)


def time_flip_kraus(k: KrausSet) -> SuperKrausSet:
    """Coherent-control combination of a channel with its transpose.

    Control |0> runs the forward channel, control |1> the input-output
    inverted (transposed) one.  Only doubly stochastic channels admit the
    inversion, so non-unital input is rejected.
    """
    if not is_unital(k):
        raise BidirectionalityError(
            "time flip requires a doubly stochastic (unital) channel"
        )
    ops = tuple(
        matcore.tensor(op, _P0) + matcore.tensor(op.T, _P1) for op in k.operators
    )
    return SuperKrausSet(ops, (2, 2))


def switch_kraus(k1: KrausSet, k2: KrausSet) -> SuperKrausSet:
    """Coherent-control composition of two channels in both orders.

    Control |0> applies channel 1 then channel 2; control |1> the reverse.
    """
    ops = []
    for a in k2.operators:
        for b in k1.operators:
            ops.append(matcore.tensor(a @ b, _P0) + matcore.tensor(b @ a, _P1))
    return SuperKrausSet(tuple(ops), (2, 2))


def extend_with_ancilla(s: SuperKrausSet) -> SuperKrausSet:
    """Let the supermap act trivially on an ancilla qubit.

    The layout becomes (system, ancilla, control); the control stays last.
    """
    if tuple(s.layout) != (2, 2):
        raise ConfigurationError(f"can only extend a (2, 2) layout, got {s.layout}")
    ops = tuple(
        matcore.permute_factors(matcore.tensor(op, matcore.ID2), (2, 2, 2), (0, 2, 1))
        for op in s.operators
    )
    return SuperKrausSet(ops, (2, 2, 2))


def apply_postselect(
    s: SuperKrausSet, rho_in: np.ndarray, ctrl: ControlSpec | None = None
) -> PostSelectedStep:
    """Run the supermap on a state and condition on the control outcome.

    The input state lives on the non-control factors; the control is
    attached in ``ctrl.initial``, the operator sum applied, the chosen
    outcome projected, and the control traced out of the renormalized
    result.
    """
    if ctrl is None:
        ctrl = ControlSpec()
    layout = tuple(s.layout)
    rest = int(np.prod(layout[:-1]))
    rho_in = matcore.check_density_matrix(rho_in)
    if rho_in.shape != (rest, rest):
        raise ConfigurationError(
            f"input state dimension {rho_in.shape[0]} does not match layout {layout}"
        )
    total = matcore.tensor(rho_in, matcore.density(ctrl.initial))
    out = np.zeros_like(total)
    for op in s.operators:
        out += op @ total @ op.conj().T
    proj = matcore.tensor(np.eye(rest, dtype=complex), matcore.density(ctrl.outcome_vector()))
    picked = proj @ out @ proj
    prob = float(np.trace(picked).real)
    if prob <= SUCCESS_PROB_FLOOR:
        raise PostSelectionError(
            f"outcome '{ctrl.postselect_outcome}' has vanishing probability {prob:.3g}"
        )
    reduced = matcore.partial_trace(picked, layout, len(layout) - 1) / prob
    return PostSelectedStep(reduced, prob)
