"""Exact verdicts for identity checks over a grid of (q, n, m) cells."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .formatting import format_rational

VERIFIED = "verified"
FALSIFIED = "falsified"
VARIANT_RESOLVED = "variant-resolved"

Cell = tuple[Fraction, Optional[int], Optional[int]]


def render(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render(v) for v in value) + "]"
    return str(value)


@dataclass(frozen=True)
class Counterexample:
    q: Fraction
    n: Optional[int]
    m: Optional[int]
    lhs: str
    rhs: str
    inputs: tuple[tuple[str, str], ...] = ()

    def to_json(self) -> dict:
        out = {
            "q": format_rational(self.q),
            "n": self.n,
            "m": self.m,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.inputs:
            out["inputs"] = dict(self.inputs)
        return out


@dataclass(frozen=True)
class VariantResult:
    """Outcome of one reading of an identity across the whole grid."""

    variant: Optional[str]
    status: str
    grid: tuple[Cell, ...]
    counterexample: Optional[Counterexample]
    per_q: tuple[tuple[Fraction, str], ...]
    failures: int = 0

    @property
    def cells(self) -> int:
        return len(self.grid)

    @property
    def stable(self) -> bool:
        """Same status at every q of the grid."""
        return len({s for _, s in self.per_q}) <= 1

    def status_at(self, q: Fraction) -> Optional[str]:
        return dict(self.per_q).get(Fraction(q))


@dataclass(frozen=True)
class AuditVerdict:
    identity: str
    variants: tuple[VariantResult, ...]
    description: str = ""

    @property
    def status(self) -> str:
        statuses = [v.status for v in self.variants]
        if all(s == VERIFIED for s in statuses):
            return VERIFIED
        if any(s == VERIFIED for s in statuses):
            return VARIANT_RESOLVED
        return FALSIFIED

    @property
    def resolved_variant(self) -> Optional[str]:
        if self.status != VARIANT_RESOLVED:
            return None
        return next(v.variant for v in self.variants if v.status == VERIFIED)

    @property
    def counterexample(self) -> Optional[Counterexample]:
        for v in self.variants:
            if v.counterexample is not None:
                return v.counterexample
        return None

    @property
    def grid(self) -> tuple[Cell, ...]:
        cells: set[Cell] = set()
        for v in self.variants:
            cells.update(v.grid)
        return tuple(sorted(cells, key=_cell_key))

    def variant(self, name: Optional[str]) -> VariantResult:
        for v in self.variants:
            if v.variant == name:
                return v
        raise KeyError(name)


def _cell_key(cell: Cell):
    q, n, m = cell
    return (q, -1 if n is None else n, -1 if m is None else m)


@dataclass
class _VariantLog:
    grid: set = field(default_factory=set)
    per_q: dict = field(default_factory=dict)
    first_failure: Optional[Counterexample] = None
    failures: int = 0


class Audit:
    """Accumulates exact comparisons and condenses them into an :class:`AuditVerdict`.

    Each call to :meth:`record` is one cell: a (q, n, m) point, a variant
    label and the two exact sides.  The first failing cell in recording
    order becomes the variant's counterexample, so verdicts are
    deterministic given a deterministic loop order.
    """

    def __init__(self, identity: str, variants=(None,), description: str = ""):
        self.identity = identity
        self.description = description
        self._logs: dict[Optional[str], _VariantLog] = {v: _VariantLog() for v in variants}

    def record(
        self,
        q,
        lhs,
        rhs,
        *,
        variant: Optional[str] = None,
        n: Optional[int] = None,
        m: Optional[int] = None,
        **inputs,
    ) -> bool:
        q = Fraction(getattr(q, "q", q))
        log = self._logs.get(variant)
        if log is None:
            log = self._logs[variant] = _VariantLog()
        ok = lhs == rhs
        log.grid.add((q, n, m))
        previous = log.per_q.get(q, VERIFIED)
        log.per_q[q] = previous if ok else FALSIFIED
        if not ok:
            log.failures += 1
            if log.first_failure is None:
                log.first_failure = Counterexample(
                    q=q,
                    n=n,
                    m=m,
                    lhs=render(lhs),
                    rhs=render(rhs),
                    inputs=tuple((k, render(v)) for k, v in inputs.items()),
                )
        return ok

    def verdict(self) -> AuditVerdict:
        results = []
        for name, log in self._logs.items():
            if not log.grid:
                continue
            status = FALSIFIED if log.failures else VERIFIED
            results.append(
                VariantResult(
                    variant=name,
                    status=status,
                    grid=tuple(sorted(log.grid, key=_cell_key)),
                    counterexample=log.first_failure,
                    per_q=tuple(sorted(log.per_q.items())),
                    failures=log.failures,
                )
            )
        return AuditVerdict(self.identity, tuple(results), self.description)


def merge(verdicts, identity: Optional[str] = None, description: str = "") -> AuditVerdict:
    """Combine verdicts for the same identity computed on disjoint cells."""
    verdicts = list(verdicts)
    if not verdicts:
        raise ValueError("nothing to merge")
    identity = identity or verdicts[0].identity
    description = description or verdicts[0].description
    order: list[Optional[str]] = []
    grouped: dict[Optional[str], list[VariantResult]] = {}
    for v in verdicts:
        for r in v.variants:
            if r.variant not in grouped:
                order.append(r.variant)
                grouped[r.variant] = []
            grouped[r.variant].append(r)
    merged = []
    for name in order:
        parts = grouped[name]
        per_q: dict[Fraction, str] = {}
        grid: set[Cell] = set()
        for r in parts:
            grid.update(r.grid)
            for q, s in r.per_q:
                per_q[q] = FALSIFIED if FALSIFIED in (s, per_q.get(q)) else VERIFIED
        failures = sum(r.failures for r in parts)
        merged.append(
            VariantResult(
                variant=name,
                status=FALSIFIED if failures else VERIFIED,
                grid=tuple(sorted(grid, key=_cell_key)),
                counterexample=next(
                    (r.counterexample for r in parts if r.counterexample is not None), None
                ),
                per_q=tuple(sorted(per_q.items())),
                failures=failures,
            )
        )
    return AuditVerdict(identity, tuple(merged), description)
