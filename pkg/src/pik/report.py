"""Pass/fail bookkeeping shared by the check suites and the CLI."""

from dataclasses import dataclass, field

SCHEMA = "pik-report-1"


@dataclass
class Report:
    suite: str
    k: int
    trials: int = 0
    seed: int = 0
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, name, ok, detail=None):
        tally = self.checks.setdefault(name, {"passed": 0, "failed": 0})
        if ok:
            tally["passed"] += 1
        else:
            tally["failed"] += 1
            self.failures.append({"check": name, "detail": detail})
        return ok

    @property
    def ok(self):
        return not self.failures

    def passed(self, name):
        tally = self.checks.get(name)
        return tally is not None and tally["failed"] == 0 and tally["passed"] > 0

    def to_json(self):
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "k": self.k,
            "trials": self.trials,
            "seed": self.seed,
            "checks": self.checks,
            "failures": self.failures,
        }
