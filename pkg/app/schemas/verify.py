from typing import List
from pydantic import BaseModel


class CheckResult(BaseModel):
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    checks: List[CheckResult]
    unconverged: List[str] = []

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def render(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"[{status}] {check.name}: measured={check.measured:.3e} tolerance={check.tolerance:.1e}"
            if check.detail:
                line += f" ({check.detail})"
            lines.append(line)
        if self.unconverged:
            lines.append(f"Unconverged samples ({len(self.unconverged)}):")
            lines.extend(f"  {label}" for label in self.unconverged)
        lines.append("ALL CHECKS PASSED" if self.passed else "VERIFICATION FAILED")
        return "\n".join(lines)
