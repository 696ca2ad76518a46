# Turning identity computations into check records.
#
# A check computes a witness: the difference of the two sides of an identity,
# or None. A falsy witness (None, a zero element, an empty text) means the
# identity holds. A negative control computes the witness of a deliberately
# perturbed identity and passes only when that witness is nonzero.

import logging
import time
from typing import Any, Callable, Dict, List, Optional

from .check_result import FAIL, PASS, CheckResult

logger = logging.getLogger(__name__)

CONTROL_PREFIX = "control-"


def _elapsed_ms(started: float) -> float:
    return round((time.perf_counter() - started) * 1000.0, 3)


def expect(condition: bool, witness: Any) -> Optional[Any]:
    """None when condition holds, otherwise the witness to report."""
    return None if condition else witness


def _raised(check_id: str, e: Exception, started: float) -> CheckResult:
    logger.error(f"Check {check_id} raised {type(e).__name__}: {e}")
    return CheckResult(id=check_id, status=FAIL, witness=f"{type(e).__name__}: {e}", ms=_elapsed_ms(started))


def _record(check_id: str, witness: Any, ms: float) -> CheckResult:
    if witness:
        logger.warning(f"Check {check_id} failed with witness {witness}")
        return CheckResult(id=check_id, status=FAIL, witness=str(witness), ms=ms)
    logger.debug(f"Check {check_id} passed in {ms} ms")
    return CheckResult(id=check_id, status=PASS, ms=ms)


def run_check(check_id: str, compute: Callable[[], Any]) -> CheckResult:
    started = time.perf_counter()
    try:
        witness = compute()
    except Exception as e:
        return _raised(check_id, e, started)
    return _record(check_id, witness, _elapsed_ms(started))


def run_difference_checks(compute: Callable[[], Dict[str, Any]], suffix: str = "") -> List[CheckResult]:
    """
    One check per entry of the mapping returned by compute, with suffix appended to each key.
    When compute raises, a single failing check evaluate{suffix} records the exception.
    """
    started = time.perf_counter()
    try:
        differences = compute()
    except Exception as e:
        return [_raised(f"evaluate{suffix}", e, started)]
    ms = _elapsed_ms(started)
    return [_record(f"{key}{suffix}", witness, ms) for key, witness in differences.items()]


def run_control(check_id: str, compute: Callable[[], Any]) -> CheckResult:
    """A negative control: the perturbed identity must fail with a nonzero witness."""
    if not check_id.startswith(CONTROL_PREFIX):
        check_id = CONTROL_PREFIX + check_id
    started = time.perf_counter()
    try:
        witness = compute()
    except Exception as e:
        logger.error(f"Control {check_id} raised {type(e).__name__}: {e}")
        return CheckResult(id=check_id, status=FAIL, witness=f"{type(e).__name__}: {e}", ms=_elapsed_ms(started))
    ms = _elapsed_ms(started)
    if not witness:
        logger.warning(f"Control {check_id} was not rejected")
        return CheckResult(id=check_id, status=FAIL, witness="perturbed input was accepted", ms=ms)
    return CheckResult(id=check_id, status=PASS, witness=str(witness), ms=ms)
