from typing import List, Optional
from pydantic import BaseModel


class SweepRecord(BaseModel):
    theta: float
    gamma: float
    phi: float
    a_bar: float
    b_re: float
    b_im: float
    cos_alpha_pred: float
    lambda_plus: float
    S_vN: float
    T_ent: float
    converged: bool
    residual: float

    model_config = {
        "frozen": True
    }


class ThetaSummary(BaseModel):
    kappa_hat: Optional[List[float]] = None
    residual: Optional[float] = None
    is_thermal: bool
    n_used: int
