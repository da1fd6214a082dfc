"""Outcome records for individual verifications and whole suite runs."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Discrepancy:
    """First exponent where two series disagree, with both coefficients."""

    exponent: int
    lhs: int
    rhs: int

    def as_json(self) -> dict:
        # Arbitrary-precision coefficients travel as decimal strings.
        return {"exponent": self.exponent, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class CheckResult:
    """Outcome of one verification: parameters, pass/fail, first discrepancy."""

    id: str
    params: dict
    status: str  # "pass" | "fail" | "error"
    first_discrepancy: Discrepancy | None = None
    detail: str = ""
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "status": self.status,
            "first_discrepancy": (
                self.first_discrepancy.as_json() if self.first_discrepancy else None
            ),
        }


def passed_check(id: str = "check", params: dict | None = None, detail: str = "") -> CheckResult:
    return CheckResult(id=id, params=dict(params or {}), status="pass", detail=detail)


def failed_check(
    id: str,
    params: dict | None,
    exponent: int,
    lhs: int,
    rhs: int,
    detail: str = "",
) -> CheckResult:
    return CheckResult(
        id=id,
        params=dict(params or {}),
        status="fail",
        first_discrepancy=Discrepancy(exponent, lhs, rhs),
        detail=detail,
    )


@dataclass
class Report:
    """All results of one suite run plus status counts and the exit code."""

    config: dict
    results: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def exit_code(self) -> int:
        s = self.summary
        return 0 if s["fail"] == 0 and s["error"] == 0 else 1

    def as_json(self) -> dict:
        return {
            "config": self.config,
            "results": [r.as_json() for r in self.results],
            "summary": self.summary,
        }
