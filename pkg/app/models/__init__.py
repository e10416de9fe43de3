from app.models.qubit import QubitDensity, SpectralDecomp, BlochVector, EntHamiltonian
from app.models.walk import CoinSpec, InitialSpec, WalkState, EquilibriumSample, Trajectory
from app.models.thermo import EnsemblePoint, SampleDiagnostic, ThermalVerdict, IsothermPlane
