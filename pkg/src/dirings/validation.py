"""Structured pass/fail reports for axiom checking."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One violated axiom with its lexicographically first witness."""

    axiom: str
    witness: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        where = f" at ({', '.join(self.witness)})" if self.witness else ""
        return f"[{self.axiom}]{where}: {self.message}"


@dataclass
class ValidationReport:
    """Outcome of verifying a structure or a derived identity.

    `ok` holds exactly when `violations` is empty.
    """

    kind: str
    ok: bool = True
    violations: list[Violation] = field(default_factory=list)

    def __post_init__(self):
        assert self.ok == (not self.violations)

    def add(self, axiom: str, witness: tuple[str, ...], message: str) -> None:
        self.violations.append(Violation(axiom, witness, message))
        self.ok = False

    def merge(self, other: "ValidationReport") -> None:
        for v in other.violations:
            self.violations.append(v)
        self.ok = not self.violations

    def summary(self) -> str:
        if self.ok:
            return f"{self.kind}: ok"
        lines = [f"{self.kind}: {len(self.violations)} violation(s)"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""
