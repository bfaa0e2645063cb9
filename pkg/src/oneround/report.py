"""Pass/fail records shared by every verification routine."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class LemmaResult:
    lemma: str
    n: int
    passed: bool
    checked: int = 0
    counterexample: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "lemma": self.lemma,
            "n": self.n,
            "pass": self.passed,
            "counterexample": _jsonable(self.counterexample),
            "checked": self.checked,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "LemmaResult":
        return cls(obj["lemma"], obj["n"], obj["pass"], obj.get("checked", 0), obj.get("counterexample"))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.lemma} N={self.n} ({self.checked} checked)"
        if self.counterexample:
            text += f" counterexample={json.dumps(_jsonable(self.counterexample))}"
        return text


@dataclass
class VerificationReport:
    results: list[LemmaResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, result: LemmaResult) -> LemmaResult:
        self.results.append(result)
        return result

    def extend(self, other: "VerificationReport") -> None:
        self.results.extend(other.results)

    def get(self, lemma: str) -> LemmaResult:
        for r in self.results:
            if r.lemma == lemma:
                return r
        raise KeyError(lemma)

    def failures(self) -> list[LemmaResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> list[dict[str, Any]]:
        return [r.to_json() for r in self.results]


class Checker:
    """Counts checks for one lemma and keeps the first failure."""

    def __init__(self, lemma: str, n: int):
        self.result = LemmaResult(lemma, n, True)

    def check(self, ok: bool, **where: Any) -> bool:
        self.result.checked += 1
        if not ok and self.result.passed:
            self.result.passed = False
            self.result.counterexample = where
        return ok


def _jsonable(obj: Any) -> Any:
    # big ints go out as decimal strings so nothing is rounded by JSON readers
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < 2**53 else str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return f"{obj.numerator}/{obj.denominator}"
    return obj
