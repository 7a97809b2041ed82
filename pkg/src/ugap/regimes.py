"""Stable-curve subperiods and the per-quarter elasticity schedule.

Regime dates are configuration, not code: the bundled default table can
be replaced by a plain-text file when new data vintages move the breaks.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .errors import ConfigError, ParseError
from .fitting import ElasticityEstimate
from .quarters import Quarter


@dataclass(frozen=True)
class Regime:
    label: str
    start: Quarter
    end: Quarter

    def __post_init__(self):
        if self.end < self.start:
            raise ConfigError(f"regime {self.label!r} ends before it starts")

    def contains(self, q: Quarter) -> bool:
        return self.start <= q <= self.end


@dataclass(frozen=True)
class RegimeTable:
    regimes: tuple[Regime, ...]

    def __post_init__(self):
        ordered = sorted(self.regimes, key=lambda r: r.start)
        if list(ordered) != list(self.regimes):
            raise ConfigError("regimes must be listed in chronological order")
        for a, b in zip(ordered, ordered[1:]):
            if not (a.end < b.start):
                raise ConfigError(f"regimes {a.label!r} and {b.label!r} overlap")

    def __iter__(self):
        return iter(self.regimes)

    def __len__(self) -> int:
        return len(self.regimes)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> RegimeTable:
        """Parse `label,start,end` lines with quarters as YYYYQn."""
        regimes = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 3:
                raise ParseError(f"regime line {lineno}: expected 'label,start,end'")
            regimes.append(Regime(parts[0], Quarter.parse(parts[1]), Quarter.parse(parts[2])))
        if not regimes:
            raise ConfigError("regime table is empty")
        return cls(tuple(regimes))

    @classmethod
    def from_file(cls, path) -> RegimeTable:
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)


def default_regime_table() -> RegimeTable:
    """The bundled seven-subperiod table for the 1951-2019 US sample."""
    text = resources.files("ugap").joinpath("data/regimes_default.csv").read_text()
    return RegimeTable.from_lines(text.splitlines())


def assign_regime(q: Quarter, table: RegimeTable) -> Regime | None:
    """Regime containing q, or None for shift quarters outside every regime."""
    for regime in table:
        if regime.contains(q):
            return regime
    return None


@dataclass(frozen=True)
class ScheduleEntry:
    epsilon: float
    log_v0: float
    regime_label: str
    is_gap_quarter: bool


@dataclass(frozen=True)
class ElasticitySchedule:
    entries: Mapping[Quarter, ScheduleEntry]

    def __getitem__(self, q: Quarter) -> ScheduleEntry:
        try:
            return self.entries[q]
        except KeyError:
            raise ConfigError(f"schedule does not cover quarter {q}") from None

    def __contains__(self, q: Quarter) -> bool:
        return q in self.entries


def build_schedule(
    table: RegimeTable,
    estimates: Sequence[ElasticityEstimate],
    quarters: Sequence[Quarter],
) -> ElasticitySchedule:
    """Map every panel quarter to curve parameters.

    Quarters inside a regime use that regime's estimate. Shift quarters
    between regimes carry forward the most recent preceding regime's
    values and are flagged; quarters before the first regime borrow the
    first regime's values, also flagged. Carry-forward is causal on
    purpose: no lookahead, no interpolation, and flagged quarters can be
    excluded from any summary downstream.
    """
    by_label = {e.label: e for e in estimates}
    for regime in table:
        if regime.label not in by_label:
            raise ConfigError(f"no elasticity estimate for regime {regime.label!r}")

    entries: dict[Quarter, ScheduleEntry] = {}
    for q in quarters:
        regime = assign_regime(q, table)
        if regime is not None:
            est = by_label[regime.label]
            entries[q] = ScheduleEntry(est.epsilon, est.log_v0, regime.label, False)
            continue
        preceding = [r for r in table if r.end < q]
        source = preceding[-1] if preceding else table.regimes[0]
        est = by_label[source.label]
        entries[q] = ScheduleEntry(est.epsilon, est.log_v0, source.label, True)
    return ElasticitySchedule(entries)
