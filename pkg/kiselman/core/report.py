"""
Check results
검증 결과 보고 구조

Every verification suite produces a :class:`CheckReport` made of named
:class:`CheckResult` entries. The JSON shape is the one printed by
``kiselman check``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

# counterexamples kept per check in reports
MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    counterexamples: List[Any] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "counterexamples": self.counterexamples[:MAX_COUNTEREXAMPLES],
        }


@dataclass
class CheckReport:
    """Ordered collection of check results for one rank and suite."""

    n: int
    suite: str
    seed: Optional[int] = None
    results: List[CheckResult] = field(default_factory=list)

    def add(
        self,
        name: str,
        ok: bool,
        detail: str = "",
        counterexamples: Optional[List[Any]] = None
    ) -> CheckResult:
        result = CheckResult(name, PASS if ok else FAIL, detail, list(counterexamples or []))
        self.results.append(result)
        return result

    def skip(self, name: str, detail: str = "") -> CheckResult:
        result = CheckResult(name, SKIPPED, detail)
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.results.extend(other.results)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def get(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
        }
