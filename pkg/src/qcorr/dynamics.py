"""Trajectories of correlation measures under local Markovian noise.

A :class:`Scenario` names an initial-state family, a channel family and a
time grid.  :func:`evolve_trajectory` computes every state twice, by the
analytic Bloch-space decay law and by Kraus application, and refuses to
continue if the two routes disagree; the correlation measures at each sample
come from the measurement optimizer, never from the closed forms they are
later compared against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import apply_local, bloch_action, channel_family
from .correlations import (
    MeasurementDirection,
    complementary_correlation,
    discord,
    p_function,
)
from .errors import (
    ConsistencyError,
    FormulaDomainError,
    NotAStateError,
    ParameterError,
)
from .states import (
    BellDiagonalCoeffs,
    DensityMatrix,
    FanoForm,
    bell_diagonal,
    extract_fano,
    from_fano,
    schmidt_pure,
    werner,
)

FAMILIES = ("mazzola", "pure", "werner", "custom")
CHANNELS = ("phase_damping", "depolarizing", "amplitude_damping")

_ROUTE_ATOL = 1e-9  # closed-form state vs Kraus-evolved state
_KINK_SIGNIFICANCE = 10.0  # spike must exceed this multiple of the background
_CURVATURE_FLOOR = 1e-6  # second-difference scale of optimizer jitter

_X_AXIS = MeasurementDirection.x()
_Z_AXIS = MeasurementDirection.z()


@dataclass(frozen=True)
class Scenario:
    """Initial-state family, channel and time grid of one simulation run.

    Exactly the parameters of the chosen family may be set: ``c3`` and
    ``sign_variant`` for ``mazzola`` (tensor diagonal ``(+-1, -+c3, c3)``),
    ``theta`` for ``pure``, ``beta`` for ``werner``, ``fano`` for ``custom``.
    A ``t_max`` of ``None`` resolves to ``2 / gamma``.  The noise strength at
    time ``t`` is ``p(t) = 1 - exp(-gamma t)`` for every channel family.
    """

    family: str
    gamma: float = 1.0
    c3: float | None = None
    sign_variant: str | None = None
    theta: float | None = None
    beta: float | None = None
    fano: FanoForm | None = None
    channel: str = "phase_damping"
    t_max: float | None = None
    n_points: int = 801

    @classmethod
    def mazzola(cls, c3: float = 0.6, sign_variant: str = "+", **kwargs) -> "Scenario":
        return cls(family="mazzola", c3=c3, sign_variant=sign_variant, **kwargs)

    @classmethod
    def pure(cls, theta: float, **kwargs) -> "Scenario":
        return cls(family="pure", theta=theta, **kwargs)

    @classmethod
    def werner(cls, beta: float, **kwargs) -> "Scenario":
        return cls(family="werner", beta=beta, **kwargs)

    @classmethod
    def custom(cls, fano: FanoForm, **kwargs) -> "Scenario":
        return cls(family="custom", fano=fano, **kwargs)

    def resolved_t_max(self) -> float:
        if self.t_max is not None:
            return float(self.t_max)
        return 2.0 / self.gamma if self.gamma > 0 else 2.0

    def validate(self) -> "ValidationReport":
        """Dry-run every invariant and return human-readable diagnostics."""
        failures: list[str] = []
        notes: list[str] = []

        if self.family not in FAMILIES:
            failures.append(f"unknown family {self.family!r}; expected one of {FAMILIES}")
            return ValidationReport(failures=tuple(failures), notes=())

        if not (math.isfinite(self.gamma) and self.gamma >= 0):
            failures.append(f"gamma={self.gamma!r} must be finite and nonnegative")
        if self.channel not in CHANNELS:
            failures.append(f"unknown channel {self.channel!r}; expected one of {CHANNELS}")
        if self.n_points < 2:
            failures.append(f"n_points={self.n_points} must be at least 2")
        if not self.resolved_t_max() > 0:
            failures.append(f"t_max={self.t_max!r} must be positive")

        required = {
            "mazzola": ("c3", "sign_variant"),
            "pure": ("theta",),
            "werner": ("beta",),
            "custom": ("fano",),
        }[self.family]
        family_fields = ("c3", "sign_variant", "theta", "beta", "fano")
        for name in family_fields:
            value = getattr(self, name)
            if name in required and value is None:
                failures.append(f"{name} is required for family {self.family!r}")
            if name not in required and value is not None:
                failures.append(f"{name} does not apply to family {self.family!r}")

        if self.family == "mazzola" and self.c3 is not None:
            if abs(self.c3) > 1:
                failures.append(f"|c3| <= 1 violated (c3={self.c3!r})")
            elif not self.c3 > 0:
                failures.append(f"c3={self.c3!r} must be in (0, 1]")
            if self.sign_variant not in ("+", "-", None):
                failures.append(f"sign_variant must be '+' or '-', got {self.sign_variant!r}")
        if self.family == "pure" and self.theta is not None:
            if not 0 <= self.theta <= math.pi / 2:
                failures.append(f"theta={self.theta!r} outside [0, pi/2]")

        if not failures:
            try:
                self.initial_state()
                notes.append("initial state is a valid density matrix")
            except NotAStateError as exc:
                failures.append(f"state not PSD: {exc}")

        return ValidationReport(failures=tuple(failures), notes=tuple(notes))

    def initial_state(self) -> DensityMatrix:
        if self.family == "mazzola":
            sign = 1.0 if self.sign_variant != "-" else -1.0
            return bell_diagonal(
                BellDiagonalCoeffs(c1=sign, c2=-sign * self.c3, c3=self.c3)
            )
        if self.family == "pure":
            return schmidt_pure(self.theta)
        if self.family == "werner":
            return werner(self.beta)
        if self.family == "custom":
            return from_fano(self.fano)
        raise ParameterError(f"unknown family {self.family!r}")


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[str, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = ["pass" if self.ok else "FAIL"]
        lines += [f"  failure: {m}" for m in self.failures]
        lines += [f"  ok: {m}" for m in self.notes]
        return "\n".join(lines)


@dataclass(frozen=True)
class CorrelationSample:
    """All correlation measures at one instant of a trajectory (bits)."""

    t: float
    mutual_info: float
    classical: float
    discord: float
    complementary: float
    c1: float
    c2: float
    c3: float


@dataclass(frozen=True)
class Trajectory:
    scenario: Scenario
    samples: tuple[CorrelationSample, ...]

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    def __getitem__(self, idx):
        return self.samples[idx]

    def _column(self, name: str) -> np.ndarray:
        return np.array([getattr(s, name) for s in self.samples])

    @property
    def times(self) -> np.ndarray:
        return self._column("t")

    @property
    def mutual_info(self) -> np.ndarray:
        return self._column("mutual_info")

    @property
    def classical(self) -> np.ndarray:
        return self._column("classical")

    @property
    def discord(self) -> np.ndarray:
        return self._column("discord")

    @property
    def complementary(self) -> np.ndarray:
        return self._column("complementary")

    @property
    def grid_spacing(self) -> float:
        ts = self.times
        return float(ts[1] - ts[0]) if len(ts) > 1 else 0.0


@dataclass(frozen=True)
class TransitionResult:
    """Outcome of sudden-transition detection on one trajectory."""

    detected_t: float | None
    analytic_t: float | None
    method: str


def _affine_both_sides(f: FanoForm, m_mat: np.ndarray, m_vec: np.ndarray) -> FanoForm:
    """Bloch-space action of the same local channel applied to both qubits."""
    a = m_mat @ f.a + m_vec
    b = m_mat @ f.b + m_vec
    tensor = (
        m_mat @ f.tensor @ m_mat.T
        + np.outer(m_mat @ f.a, m_vec)
        + np.outer(m_vec, m_mat @ f.b)
        + np.outer(m_vec, m_vec)
    )
    return FanoForm(a=a, b=b, tensor=tensor)


def evolve_trajectory(scenario: Scenario) -> Trajectory:
    """Evolve the scenario's initial state and record all measures on a time grid.

    Every sample's state is computed both from the analytic Bloch decay law
    and by Kraus application; a componentwise disagreement beyond 1e-9
    raises :class:`ConsistencyError`, signalling a channel or
    parametrization bug rather than a physical result.
    """
    report = scenario.validate()
    if not report.ok:
        raise ParameterError("invalid scenario:\n" + report.render())

    rho0 = scenario.initial_state()
    f0 = extract_fano(rho0)
    factory = channel_family(scenario.channel)
    ts = np.linspace(0.0, scenario.resolved_t_max(), scenario.n_points)

    samples = []
    for t in ts:
        p = -float(np.expm1(-scenario.gamma * t))
        channel = factory(p)
        m_mat, m_vec = bloch_action(channel)
        closed_form = _affine_both_sides(f0, m_mat, m_vec).matrix()
        state = apply_local(rho0, channel, channel)
        gap = float(np.max(np.abs(closed_form - state.mat)))
        if gap > _ROUTE_ATOL:
            raise ConsistencyError(
                f"closed-form and Kraus evolution disagree by {gap:.3e} at t={t!r}"
            )
        measures = discord(state)
        icomp = complementary_correlation(state, _X_AXIS, _Z_AXIS)
        diag = np.diag(extract_fano(state).tensor)
        samples.append(
            CorrelationSample(
                t=float(t),
                mutual_info=measures.mutual_info,
                classical=measures.classical,
                discord=measures.discord,
                complementary=icomp,
                c1=float(diag[0]),
                c2=float(diag[1]),
                c3=float(diag[2]),
            )
        )
    return Trajectory(scenario=scenario, samples=tuple(samples))


def analytic_transition_time(
    c3: float, gamma: float, c1_initial: float = 1.0
) -> float | None:
    """Crossing time ``-ln|c3| / (2 gamma)`` of the decaying transverse coefficient.

    Returns ``None`` when ``c3`` is zero (nothing to cross) or when the
    transverse coefficient never dominates (``|c1_initial| < |c3|``).
    """
    if gamma <= 0:
        raise ParameterError(f"gamma={gamma!r} must be positive")
    if abs(c3) > 1 + 1e-12:
        raise ParameterError(f"|c3|={abs(c3)!r} exceeds 1")
    if c3 == 0.0:
        return None
    if abs(c1_initial) < abs(c3):
        return None
    return -math.log(abs(c3)) / (2 * gamma) + 0.0  # +0.0 normalizes -0.0 at |c3| = 1


def detect_transition(trajectory: Trajectory) -> TransitionResult:
    """Locate a kink in the classical correlation, if a significant one exists.

    The change-point score of each interior sample is its absolute second
    difference of C(t) divided by the median second difference in a local
    window (the smooth background); a kink is reported when the best score
    exceeds 10.  The background is floored at 1e-6 so that optimizer jitter
    on exactly-constant trajectories can never fake a transition.
    """
    if len(trajectory) < 8:
        raise ParameterError(f"need at least 8 samples, got {len(trajectory)}")

    classical = trajectory.classical
    d2 = np.abs(classical[2:] - 2 * classical[1:-1] + classical[:-2])
    scores = np.empty_like(d2)
    for i in range(len(d2)):
        lo, hi = max(0, i - 5), min(len(d2), i + 6)
        window = np.delete(d2[lo:hi], i - lo)
        background = max(float(np.median(window)), _CURVATURE_FLOOR)
        scores[i] = d2[i] / background

    best = int(np.argmax(scores))
    significant = scores[best] > _KINK_SIGNIFICANCE
    detected = float(trajectory.times[best + 1]) if significant else None
    method = (
        "second-difference spike of C(t) vs local median background "
        f"(best significance {scores[best]:.1f}x, threshold {_KINK_SIGNIFICANCE:.0f}x)"
    )

    analytic = None
    scenario = trajectory.scenario
    if (
        scenario.channel == "phase_damping"
        and scenario.gamma > 0
        and scenario.family != "werner"  # equal coefficients decay without a crossing
    ):
        first = trajectory.samples[0]
        analytic = analytic_transition_time(first.c3, scenario.gamma, c1_initial=first.c1)

    return TransitionResult(detected_t=detected, analytic_t=analytic, method=method)


def werner_closed_forms(k: float, gamma: float, t: float) -> tuple[float, float]:
    """Literal closed-form classical correlation and discord for dephased Werner states.

    Evaluated exactly as printed for side-by-side comparison, never as
    ground truth; arguments of the P-function that leave ``[-1, 1]`` raise
    :class:`FormulaDomainError`.
    """
    if not 0 <= k <= 1:
        raise ParameterError(f"k={k!r} outside [0, 1]")
    if gamma < 0 or t < 0:
        raise ParameterError("gamma and t must be nonnegative")
    classical = p_function(k) + p_function(-k)
    decay = math.exp(-2 * gamma * t)
    args = (k + 2 * k * decay, k - 2 * k * decay)
    clamped = []
    for arg in args:
        if abs(arg) > 1 + 1e-12:
            raise FormulaDomainError(
                f"P-function argument {arg!r} outside [-1, 1] (k={k!r}, t={t!r})"
            )
        clamped.append(max(-1.0, min(1.0, arg)))
    quantum = 0.5 * (p_function(clamped[0]) + p_function(clamped[1]) - 2 * p_function(k))
    return classical, quantum


def werner_discord_comparison(beta: float, gamma: float, times) -> tuple[dict, ...]:
    """Optimizer discord vs the printed Werner closed form along a dephasing run.

    Each record carries both values and their gap; where the printed formula
    leaves its domain the record flags ``domain_error`` instead of failing.
    """
    k = abs(beta)
    records = []
    for t in times:
        decay = math.exp(-2 * gamma * t)
        state = bell_diagonal(
            BellDiagonalCoeffs(c1=-beta * decay, c2=-beta * decay, c3=-beta)
        )
        engine = discord(state).discord
        record = {"t": float(t), "discord_engine": engine, "domain_error": False}
        try:
            _, formula = werner_closed_forms(k, gamma, t)
            record["discord_formula"] = formula
            record["difference"] = abs(engine - formula)
        except FormulaDomainError:
            record.update(discord_formula=None, difference=None, domain_error=True)
        records.append(record)
    return tuple(records)
