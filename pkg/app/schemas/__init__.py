from app.schemas.sweep import SweepRecord, ThetaSummary
from app.schemas.trajectory import TrajectoryRow
from app.schemas.isotherm import IsothermRow
from app.schemas.verify import CheckResult, VerifyReport
