from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Any] = None

    def to_json(self) -> dict:
        data = {"name": self.name, "passed": self.passed}
        if self.detail:
            data["detail"] = self.detail
        if self.witness is not None:
            data["witness"] = self.witness
        return data

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" (witness: {self.witness})" if self.witness is not None else ""
        return f"[{status}] {self.name}{suffix}"


@dataclass
class Report:
    title: str
    checks: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, witness: Any = None, **detail) -> CheckResult:
        check = CheckResult(name, bool(passed), dict(detail), witness)
        self.checks.append(check)
        return check

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [check.to_json() for check in self.checks], **self.data}

    def __str__(self) -> str:
        lines = [f"{self.title}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed"]
        lines.extend(f"  {check}" for check in self.failures)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return (f"Report(title='{self.title}', "
                f"checks={len(self.checks)}, "
                f"failures={len(self.failures)})")
