"""Distinguishability and entanglement signals over time grids, and the
backflow measures built from them.

The two memory quantifiers accumulate every temporary increase of a scalar
signal along the evolution: trace distance of a state pair for the
distinguishability measure, entanglement of formation of an evolved
maximally entangled state for the entanglement measure.  Trajectories are
evaluated by rebuilding the (super)channel from the family's Kraus set at
every grid time and applying it to the initial state; nothing is
concatenated across grid points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matcore
from .channels import (
    ChannelFamily,
    DecoherenceRates,
    cptp_check,
    density_from_bloch,
    family_triples,
    kraus_stack,
    params_at,
)
from .errors import (
    BidirectionalityError,
    ConfigurationError,
    CptpViolationError,
    NumericContractError,
    PostSelectionError,
)
from .supermaps import ControlSpec

INCREMENT_DEAD_BAND = 1e-12
SUCCESS_PROB_FLOOR = 1e-12

SUPERMAP_MODES = ("none", "flip", "switch")

_Y2 = np.kron(matcore.PAULI_Y, matcore.PAULI_Y).real.astype(complex)


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_k = k * t_max / steps, k = 0..steps."""

    t_max: float
    steps: int

    def __post_init__(self) -> None:
        if not self.t_max > 0:
            raise ConfigurationError("t_max must be positive")
        if self.steps < 1:
            raise ConfigurationError("steps must be at least 1")

    @property
    def points(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.steps + 1)


@dataclass(frozen=True)
class Trajectory:
    """A scalar signal sampled on a time grid."""

    grid: TimeGrid
    values: np.ndarray
    success_probs: np.ndarray | None = None

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.steps + 1,):
            raise ConfigurationError("trajectory length must match the grid")
        if not np.all(np.isfinite(values)):
            raise NumericContractError("trajectory contains non-finite values")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class MemoryResult:
    """Accumulated backflow of a signal with the intervals where it revived."""

    measure_value: float
    revival_intervals: tuple[tuple[float, float], ...]
    signal: Trajectory


@dataclass(frozen=True)
class StatePair:
    rho1: np.ndarray
    rho2: np.ndarray

    def __post_init__(self) -> None:
        r1 = matcore.check_density_matrix(self.rho1)
        r2 = matcore.check_density_matrix(self.rho2)
        if r1.shape != r2.shape:
            raise ConfigurationError("pair members must have equal dimensions")


PAIR_NAMES = ("plus-minus", "zero-one")


def named_pair(name: str) -> StatePair:
    """The two reference orthogonal pairs used by the standard scenarios."""
    if name == "plus-minus":
        return StatePair(matcore.density(matcore.KET_PLUS), matcore.density(matcore.KET_MINUS))
    if name == "zero-one":
        return StatePair(matcore.density(matcore.KET_ZERO), matcore.density(matcore.KET_ONE))
    raise ConfigurationError(f"unknown named pair {name!r}")


def antipodal_pair(v: np.ndarray) -> StatePair:
    """Orthogonal pure-state pair along a unit Bloch direction."""
    v = np.asarray(v, dtype=float)
    return StatePair(density_from_bloch(v), density_from_bloch(-v))


def trace_distance(rho1: np.ndarray, rho2: np.ndarray) -> float:
    """Half the trace norm of the difference of two states."""
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho1.shape != rho2.shape:
        raise ConfigurationError("states must have equal dimensions")
    w, _ = matcore.hermitian_eigen(rho1 - rho2)
    return float(0.5 * np.abs(w).sum())


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence via the Hermitian square-root route.

    The Wootters coefficients are the eigenvalues of
    psd_sqrt(psd_sqrt(rho) rho~ psd_sqrt(rho)) with rho~ the spin-flipped
    state; they are computed here as the singular values of
    psd_sqrt(rho~) psd_sqrt(rho), which is the same spectrum without the
    square-then-root noise amplification.
    """
    rho = matcore.check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise ConfigurationError("concurrence expects a two-qubit state")
    root = matcore.psd_sqrt(rho)
    flipped_root = _Y2 @ root.conj() @ _Y2
    lam = np.linalg.svd(flipped_root @ root, compute_uv=False)
    c = float(lam[0] - lam[1] - lam[2] - lam[3])
    return min(max(c, 0.0), 1.0)


def entanglement_of_formation(c: float) -> float:
    """Entanglement of formation of a two-qubit state from its concurrence."""
    c = float(c)
    if c < -1e-9 or c > 1.0 + 1e-9:
        raise NumericContractError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    x = 0.5 + 0.5 * np.sqrt(max(1.0 - c * c, 0.0))
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def backflow_accumulate(signal: Trajectory) -> MemoryResult:
    """Sum of the positive increments of a sampled signal.

    Increments below the dead band count as zero; revival intervals are
    the maximal runs of positive increments.
    """
    ts = signal.grid.points
    increments = np.diff(signal.values)
    positive = increments > INCREMENT_DEAD_BAND
    total = float(increments[positive].sum())
    intervals = []
    start = None
    for k, flag in enumerate(positive):
        if flag and start is None:
            start = k
        elif not flag and start is not None:
            intervals.append((float(ts[start]), float(ts[k])))
            start = None
    if start is not None:
        intervals.append((float(ts[start]), float(ts[-1])))
    return MemoryResult(total, tuple(intervals), signal)


def td_witness(r: DecoherenceRates) -> bool:
    """True when the rate signs allow a trace-distance revival."""
    return (r.gamma_plus + r.gamma_minus + 4.0 * r.gamma_z < 0.0) or (
        r.gamma_plus + r.gamma_minus < 0.0
    )


# ---------------------------------------------------------------------------
# Grid evolution engine.  All grid times are processed at once with stacked
# arrays; the per-time operations in `channels` and `supermaps` define the
# same maps one time point at a time.
# ---------------------------------------------------------------------------


def _checked_triples(family: ChannelFamily, ts: np.ndarray):
    lam, lam_z, lam_star = family_triples(family, ts)
    ok1 = np.abs(lam_z) + np.abs(lam_star) <= 1.0 + 1e-12
    ok2 = 4.0 * lam**2 + lam_star**2 <= (1.0 + lam_z) ** 2 + 1e-12
    bad = ~(ok1 & ok2)
    if np.any(bad):
        t_bad = float(ts[np.argmax(bad)])
        reason = cptp_check(params_at(family, t_bad)).reason
        raise CptpViolationError(
            f"family {family.label} is not CPTP at t = {t_bad:.9g}: {reason}"
        )
    return lam, lam_z, lam_star


def _require_flippable(family: ChannelFamily, lam_star: np.ndarray) -> None:
    if family.kind in ("dcp", "eternal"):
        return
    if family.kind == "custom" and float(np.max(np.abs(lam_star))) <= 1e-12:
        return
    raise BidirectionalityError(
        "time flip requires a unital family (the axial shift must vanish)"
    )


def _control_weights(ctrl: ControlSpec) -> tuple[complex, complex]:
    outcome = ctrl.outcome_vector()
    chi = ctrl.initial
    return complex(np.conj(outcome[0]) * chi[0]), complex(np.conj(outcome[1]) * chi[1])


def conditional_kraus(
    family: ChannelFamily, supermap: str, ts: np.ndarray, ctrl: ControlSpec | None
):
    """Stacked conditional Kraus operators on the system, shape (T, n, 2, 2).

    For the plain channel these are the channel's own operators and the
    evolution is trace preserving (``postselected`` False).  For the two
    supermaps the control-diagonal block structure is contracted against
    the initial control state and the selected outcome, so that the
    conditional, unnormalized evolution is an operator sum on the system
    alone (``postselected`` True).
    """
    if supermap not in SUPERMAP_MODES:
        raise ConfigurationError(f"unknown supermap mode {supermap!r}")
    ts = np.asarray(ts, dtype=float)
    lam, lam_z, lam_star = _checked_triples(family, ts)
    mk = kraus_stack(lam, lam_z, lam_star)
    if supermap == "none":
        return mk, False
    if ctrl is None:
        ctrl = ControlSpec()
    w0, w1 = _control_weights(ctrl)
    if supermap == "flip":
        _require_flippable(family, lam_star)
        forward = mk
        backward = mk.transpose(0, 1, 3, 2)
        return w0 * forward + w1 * backward, True
    products = np.einsum("tiab,tjbc->tijac", mk, mk)
    t_len = mk.shape[0]
    one_two = products.reshape(t_len, 16, 2, 2)
    two_one = products.transpose(0, 2, 1, 3, 4).reshape(t_len, 16, 2, 2)
    return w0 * one_two + w1 * two_one, True


def _normalize_states(out: np.ndarray, ts: np.ndarray, postselected: bool):
    traces = np.einsum("tii->t", out).real
    if postselected:
        bad = traces <= SUCCESS_PROB_FLOOR
        if np.any(bad):
            t_bad = float(ts[np.argmax(bad)])
            raise PostSelectionError(
                f"post-selection probability vanishes at t = {t_bad:.9g}"
            )
        return out / traces[:, None, None], traces
    return out, None


def _evolve_qubit(stack: np.ndarray, rho: np.ndarray, ts, postselected: bool):
    out = np.einsum("tnij,jk,tnlk->til", stack, rho, stack.conj(), optimize=True)
    return _normalize_states(out, ts, postselected)


def _evolve_bell(stack: np.ndarray, ts, postselected: bool):
    bell = matcore.density(matcore.BELL_KET).reshape(2, 2, 2, 2)
    out = np.einsum(
        "tnij,jakb,tnlk->tialb", stack, bell, stack.conj(), optimize=True
    ).reshape(len(ts), 4, 4)
    return _normalize_states(out, ts, postselected)


def _distance_series(states_1: np.ndarray, states_2: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(states_1 - states_2)
    return 0.5 * np.abs(w).sum(axis=1)


def _concurrence_series(states: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(states)
    w = np.where(w < matcore.ZERO_EIG_FLOOR, 0.0, w)
    roots = (v * np.sqrt(w)[:, None, :]) @ np.conj(np.swapaxes(v, 1, 2))
    flipped_roots = _Y2 @ roots.conj() @ _Y2
    lam = np.linalg.svd(flipped_roots @ roots, compute_uv=False)
    c = lam[:, 0] - lam[:, 1] - lam[:, 2] - lam[:, 3]
    return np.clip(c, 0.0, 1.0)


def _eof_series(c: np.ndarray) -> np.ndarray:
    x = 0.5 + 0.5 * np.sqrt(np.clip(1.0 - c * c, 0.0, None))
    x = np.clip(x, 0.0, 1.0)
    inner = np.clip(1.0 - x, 1e-300, None)
    xs = np.clip(x, 1e-300, None)
    e = -xs * np.log2(xs) - inner * np.log2(inner)
    return np.where(c <= 0.0, 0.0, e)


@dataclass(frozen=True)
class PairEvolution:
    """Both members of a pair evolved over a grid, with branch probabilities."""

    grid: TimeGrid
    states_1: np.ndarray
    states_2: np.ndarray
    probs_1: np.ndarray | None
    probs_2: np.ndarray | None


def pair_evolution(
    family: ChannelFamily,
    supermap: str,
    pair: StatePair,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
) -> PairEvolution:
    """Evolve both pair members through the scenario at every grid time."""
    ts = grid.points
    stack, postselected = conditional_kraus(family, supermap, ts, ctrl)
    states_1, probs_1 = _evolve_qubit(stack, pair.rho1, ts, postselected)
    states_2, probs_2 = _evolve_qubit(stack, pair.rho2, ts, postselected)
    return PairEvolution(grid, states_1, states_2, probs_1, probs_2)


def distance_trajectory(
    family: ChannelFamily,
    supermap: str,
    pair: StatePair,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
) -> Trajectory:
    """Trace distance of the evolved pair along the grid."""
    ev = pair_evolution(family, supermap, pair, grid, ctrl)
    return Trajectory(grid, _distance_series(ev.states_1, ev.states_2), ev.probs_1)


def bell_evolution(
    family: ChannelFamily,
    supermap: str,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
):
    """Evolve the maximally entangled system-ancilla state; returns (states, probs)."""
    ts = grid.points
    stack, postselected = conditional_kraus(family, supermap, ts, ctrl)
    return _evolve_bell(stack, ts, postselected)


def entanglement_signals(
    family: ChannelFamily,
    supermap: str,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
):
    """Concurrence and entanglement-of-formation series with branch probabilities."""
    states, probs = bell_evolution(family, supermap, grid, ctrl)
    c = _concurrence_series(states)
    return c, _eof_series(c), probs


def entanglement_trajectory(
    family: ChannelFamily,
    supermap: str,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
) -> Trajectory:
    """Entanglement of formation of the evolved maximally entangled state."""
    _, eof, probs = entanglement_signals(family, supermap, grid, ctrl)
    return Trajectory(grid, eof, probs)


def nd_for_scenario(
    family: ChannelFamily,
    supermap: str,
    pair: StatePair,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
) -> MemoryResult:
    """Trace-distance backflow accumulated over the scenario."""
    return backflow_accumulate(distance_trajectory(family, supermap, pair, grid, ctrl))


def ne_for_scenario(
    family: ChannelFamily,
    supermap: str,
    grid: TimeGrid,
    ctrl: ControlSpec | None = None,
) -> MemoryResult:
    """Entanglement-of-formation backflow accumulated over the scenario."""
    return backflow_accumulate(entanglement_trajectory(family, supermap, grid, ctrl))


def pair_search(
    family: ChannelFamily,
    supermap: str,
    grid: TimeGrid,
    samples: int,
    seed: int,
    ctrl: ControlSpec | None = None,
) -> tuple[StatePair, MemoryResult]:
    """Empirical maximization of the distance backflow over orthogonal pairs.

    Samples antipodal pure-state pairs uniformly on the Bloch sphere
    (deterministically for a given seed) and returns the best one; the
    result is a lower bound on the maximum over all pairs.
    """
    if samples < 1:
        raise ConfigurationError("samples must be at least 1")
    ts = grid.points
    stack, postselected = conditional_kraus(family, supermap, ts, ctrl)
    rng = np.random.default_rng(seed)
    zs = rng.uniform(-1.0, 1.0, size=samples)
    phis = rng.uniform(0.0, 2.0 * np.pi, size=samples)
    best_pair = None
    best_result = None
    for z, phi in zip(zs, phis):
        r = np.sqrt(1.0 - z * z)
        pair = antipodal_pair(np.array([r * np.cos(phi), r * np.sin(phi), z]))
        states_1, _ = _evolve_qubit(stack, pair.rho1, ts, postselected)
        states_2, _ = _evolve_qubit(stack, pair.rho2, ts, postselected)
        result = backflow_accumulate(
            Trajectory(grid, _distance_series(states_1, states_2))
        )
        if best_result is None or result.measure_value > best_result.measure_value:
            best_pair, best_result = pair, result
    return best_pair, best_result
