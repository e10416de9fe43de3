from typing import Tuple

# Standard error messages
POSITIVITY_VIOLATION = "a^2 + |b|^2 = {value:.3e} exceeds 1/4 beyond tolerance {tol:.1e}"
DEGENERATE_STATE = "Entanglement Hamiltonian is undefined for the maximally mixed state"
NON_ORTHOGONAL = "Projector vectors are not orthogonal: |<psi+|psi->| = {overlap:.3e}"
WINDOW_TOO_SMALL = "Initial support halfwidth {needed} exceeds window halfwidth {halfwidth}"
WINDOW_OVERFLOW = "Nonzero amplitude would leave the lattice window at step {t}"
INSUFFICIENT_ENSEMBLE = "Need at least 3 samples with |a| > {a_floor} over 2 distinct initial states, got {n_used}"


class QWalkError(Exception):
    """Base class for simulator and analysis errors."""

    def __reduce__(self):
        # structured __init__ signatures; rebuild for worker-process pickling
        return (_rebuild, (self.__class__, self.args, self.__dict__))


def _rebuild(cls, args, state):
    exc = cls.__new__(cls)
    Exception.__init__(exc, *args)
    exc.__dict__.update(state)
    return exc


class PositivityViolation(QWalkError, ValueError):
    def __init__(self, value: float, tol: float):
        self.value = value
        super().__init__(POSITIVITY_VIOLATION.format(value=value, tol=tol))


class DegenerateState(QWalkError, ValueError):
    def __init__(self):
        super().__init__(DEGENERATE_STATE)


class NonOrthogonal(QWalkError, ValueError):
    def __init__(self, overlap: float):
        self.overlap = overlap
        super().__init__(NON_ORTHOGONAL.format(overlap=overlap))


class WindowTooSmall(QWalkError, ValueError):
    def __init__(self, needed: int, halfwidth: int):
        super().__init__(WINDOW_TOO_SMALL.format(needed=needed, halfwidth=halfwidth))


class WindowOverflow(QWalkError):
    def __init__(self, t: int):
        self.t = t
        super().__init__(WINDOW_OVERFLOW.format(t=t))


class InsufficientEnsemble(QWalkError, ValueError):
    def __init__(self, n_used: int, a_floor: float):
        self.n_used = n_used
        super().__init__(INSUFFICIENT_ENSEMBLE.format(n_used=n_used, a_floor=a_floor))


class GridPointError(QWalkError):
    """Engine failure at a specific sweep grid point."""

    def __init__(self, point: Tuple[float, float, float], cause: Exception):
        self.point = point
        self.cause = cause
        theta, gamma, phi = point
        super().__init__(
            f"Simulation failed at theta={theta:.6g}, gamma={gamma:.6g}, phi={phi:.6g}: {cause}"
        )
