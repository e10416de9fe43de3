from pydantic import BaseModel


class TrajectoryRow(BaseModel):
    t: int
    a: float
    b_re: float
    b_im: float
    lambda_plus: float
    S_vN: float
    norm: float
