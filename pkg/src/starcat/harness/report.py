"""
Running the law suite and reporting its results.

Cases are independent: each one draws from its own samplers, so they can
run in worker processes. Outcomes are merged in case order, which keeps
the report identical no matter how the cases were scheduled.
"""

import logging
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from starcat.document import document_from
from starcat.errors import StarcatError
from starcat.harness.config import GenConfig
from starcat.harness.generators import Sampler
from starcat.harness.laws import Law, LawViolation, laws_for
from starcat.scalars import RingId
from starcat.settings import Settings, SettingsContext, get_settings

logger = logging.getLogger(__name__)


# ============================================================================
# Report models
# ============================================================================


class Counterexample(BaseModel):
    """A failing case; the document replays through the CLI."""

    model_config = ConfigDict(frozen=True)

    case: int
    message: str
    document: Optional[dict[str, Any]] = None


class LawResult(BaseModel):
    passed: int = 0
    failed: int = 0
    first_counterexample: Optional[Counterexample] = None


class LawReport(BaseModel):
    """
    Per-law outcome of a run.

    Example:
        ```python
        report = run_laws(GenConfig(ring="gaussian", cases=10))
        print(report.model_dump_json(indent=2))
        ```
    """

    ring: RingId
    seed: int
    cases: int
    max_dim: int
    laws: dict[str, LawResult] = Field(default_factory=dict)
    elapsed_seconds: float = 0.0
    total_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def failing_laws(self) -> list[str]:
        return [name for name, r in self.laws.items() if r.failed]


# ============================================================================
# Running
# ============================================================================


@dataclass(frozen=True)
class CaseOutcome:
    law: str
    case: int
    message: Optional[str] = None
    document: Optional[dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.message is None


def run_law(entry: Law, config: GenConfig, case: int) -> CaseOutcome:
    """Check one law on one case; failures become data."""
    sampler = Sampler(config, case, entry.name)
    try:
        entry.check(sampler)
    except LawViolation as violation:
        document = document_from(config.ring, violation.witnesses)
        return CaseOutcome(
            entry.name,
            case,
            str(violation),
            document.model_dump(mode="json"),
        )
    except StarcatError as exc:
        return CaseOutcome(entry.name, case, f"{type(exc).__name__}: {exc}")
    except Exception as exc:
        logger.exception(
            "law %s raised on seed %d case %d",
            entry.name,
            config.seed,
            case,
        )
        message = (
            f"{type(exc).__name__}: {exc} "
            f"(seed {config.seed}, case {case})"
        )
        return CaseOutcome(entry.name, case, message)
    return CaseOutcome(entry.name, case)


def run_case(
    config: GenConfig,
    case: int,
    names: Optional[tuple[str, ...]],
    settings: Optional[Settings] = None,
) -> list[CaseOutcome]:
    """All selected laws on one case, under the given settings."""
    overrides = {} if settings is None else settings.model_dump()
    with SettingsContext(**overrides):
        return [
            run_law(entry, config, case)
            for entry in laws_for(config.ring, names)
        ]


def run_laws(
    config: GenConfig,
    laws: Optional[Iterable[str]] = None,
    workers: Optional[int] = None,
) -> LawReport:
    """
    Run every applicable law on config.cases cases.

    Args:
        config: Ring, seed and bounds of the run
        laws: Restrict the run to these law names
        workers: Worker processes (default: settings.workers)

    Returns:
        The merged report; failures never abort the run

    Raises:
        KeyError: If a requested law name is not registered
    """
    names = None if laws is None else tuple(laws)
    selected = laws_for(config.ring, names)
    count = get_settings().workers if workers is None else workers
    logger.info(
        "running %d laws on %d %s cases with %d worker(s)",
        len(selected),
        config.cases,
        config.ring.value,
        count,
    )
    report = LawReport(
        ring=config.ring,
        seed=config.seed,
        cases=config.cases,
        max_dim=config.max_dim,
        laws={entry.name: LawResult() for entry in selected},
    )
    start = time.perf_counter()
    cases = range(config.cases)
    if count > 1 and config.cases > 1:
        with ProcessPoolExecutor(max_workers=count) as pool:
            batches = list(
                pool.map(
                    run_case,
                    repeat(config),
                    cases,
                    repeat(names),
                    repeat(get_settings()),
                )
            )
    else:
        batches = [run_case(config, case, names) for case in cases]
    for batch in batches:
        for outcome in batch:
            _record(report, outcome)
    report.elapsed_seconds = round(time.perf_counter() - start, 3)
    report.total_failures = sum(r.failed for r in report.laws.values())
    if report.total_failures:
        logger.warning(
            "%d failures in %s",
            report.total_failures,
            ", ".join(report.failing_laws()),
        )
    else:
        logger.info("all laws passed in %.1fs", report.elapsed_seconds)
    return report


def _record(report: LawReport, outcome: CaseOutcome) -> None:
    result = report.laws[outcome.law]
    if outcome.passed:
        result.passed += 1
        return
    result.failed += 1
    if result.first_counterexample is None:
        assert outcome.message is not None
        result.first_counterexample = Counterexample(
            case=outcome.case,
            message=outcome.message,
            document=outcome.document,
        )
