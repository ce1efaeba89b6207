"""Lightweight operation counters for the benchmark harness.

The counters never influence results; they exist so the benchmark can
report how much normal-form and desingularization work a query performed.
Not synchronised: benchmark runs are single-threaded.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OperationCounts:
    normal_form_calls: int = 0
    eta_expansions: int = 0

    def snapshot(self) -> dict[str, int]:
        return {
            "normal_form_calls": self.normal_form_calls,
            "eta_expansions": self.eta_expansions,
        }


COUNTS = OperationCounts()


def reset() -> None:
    COUNTS.normal_form_calls = 0
    COUNTS.eta_expansions = 0
