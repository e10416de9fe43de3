from pydantic import BaseModel


class IsothermRow(BaseModel):
    alpha: float
    rhs: float
    distance: float
    T_ent: float
