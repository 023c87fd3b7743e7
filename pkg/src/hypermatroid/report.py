"""Checker reports: a verdict plus the first violations in a stable order."""
from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_LIMIT = 100


@dataclass(frozen=True, order=True)
class Violation:
    rule: str
    witness: tuple
    detail: str = ""

    def to_dict(self) -> dict:
        return {"rule": self.rule, "witness": [_plain(w) for w in self.witness], "detail": self.detail}


def _plain(w):
    if isinstance(w, (tuple, list)):
        return [_plain(x) for x in w]
    return str(w)


def _frozen(w):
    if isinstance(w, (tuple, list)):
        return tuple(_frozen(x) for x in w)
    return str(w)


@dataclass
class Report:
    """Result of an exhaustive check.

    ``violations`` keeps at most ``limit`` entries, the lexicographically
    smallest ones, so the output is deterministic regardless of the order in
    which instances were visited.  ``failures`` counts all of them.
    """

    check: str
    limit: int = DEFAULT_LIMIT
    checked: int = 0
    failures: int = 0
    violations: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def fail(self, rule: str, witness: tuple, detail: str = "") -> None:
        self.failures += 1
        self.violations.append(Violation(rule, _frozen(witness), detail))
        if len(self.violations) > 4 * self.limit:
            self._trim()

    def _trim(self) -> None:
        self.violations = sorted(set(self.violations))[: self.limit]

    def finish(self) -> "Report":
        self._trim()
        return self

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failures += other.failures
        self.violations.extend(other.violations)
        return self.finish()

    def to_dict(self) -> dict:
        self._trim()
        out = {
            "schema": "report/1",
            "check": self.check,
            "result": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": self.failures,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def text(self) -> str:
        self._trim()
        head = f"{self.check}: {'pass' if self.passed else 'fail'} ({self.checked} instances, {self.failures} failures)"
        lines = [head]
        for v in self.violations:
            w = " ".join(str(_plain(x)) for x in v.witness)
            lines.append(f"  {v.rule} [{w}] {v.detail}".rstrip())
        if self.witness is not None:
            pairs = " ".join(f"{a}->{b}" for a, b in self.witness["bijection"].items())
            lines.append(f"  witness {pairs} alpha={self.witness['alpha']}")
        return "\n".join(lines) + "\n"
