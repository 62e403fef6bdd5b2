"""Exhaustive desk-scale checks of every counting identity, with a structured report.

Each check sweeps a configurable input range in increasing order and
records the first counterexample it meets, so a failure always surfaces
the smallest failing input.  All underlying operations are pure, which
keeps every check deterministic: two runs with the same configuration
differ only in the timing fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bijections import hb_to_short_bsd, short_bsd_to_hb
from .representations import (
    count_short_bsd_recurrence,
    enumerate_bsd_fixed,
    enumerate_hyperbinary,
    enumerate_short_bsd,
)
from .series import lhs_finite, rhs_finite
from .stern import stern

__all__ = [
    "Counterexample",
    "CheckResult",
    "VerificationReport",
    "VerifyConfig",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_monroe",
    "check_stolarsky_dilcher",
    "check_gf_identity",
    "check_reznick",
    "run_all",
    "CHECK_NAMES",
]


@dataclass(frozen=True)
class Counterexample:
    """The smallest failing input of a check, with both sides of the disagreement."""

    input: dict
    expected: object
    actual: object

    def to_dict(self) -> dict:
        return {"input": dict(self.input), "expected": self.expected, "actual": self.actual}

    def describe(self) -> str:
        at = ", ".join(f"{k}={v}" for k, v in self.input.items())
        return f"at {at}: expected {self.expected}, actual {self.actual}"


@dataclass(frozen=True)
class CheckResult:
    check: str
    range: dict
    passed: bool
    counterexample: Optional[Counterexample]
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "range": dict(self.range),
            "pass": self.passed,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.range.items())
        line = f"{status}  {self.check:<10} {params}  ({self.elapsed_ms:.1f} ms)"
        if self.counterexample is not None:
            line += f"\n      counterexample {self.counterexample.describe()}"
        return line


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [c.describe() for c in self.checks]
        verdict = "PASS" if self.passed else "FAIL"
        failed = sum(not c.passed for c in self.checks)
        summary = f"overall: {verdict} ({len(self.checks)} checks"
        summary += f", {failed} failed)" if failed else ")"
        lines.append(summary)
        return "\n".join(lines)


@dataclass
class VerifyConfig:
    """Input ranges for ``run_all``; defaults keep the full sweep at seconds scale."""

    theorem1_max_n: int = 4096
    theorem2_max_n: int = 4096
    theorem3_max_n: int = 1024
    monroe_max_i: int = 10
    stolarsky_max_i: int = 8
    stolarsky_max_j: int = 8
    gf_max_m: int = 8
    reznick_max_n: int = 4096
    fail_fast: bool = False  # stop after the first failing check instead of running the rest


def _timed(name: str, params: dict, body: Callable[[], Optional[Counterexample]]) -> CheckResult:
    start = time.perf_counter()
    counterexample = body()
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return CheckResult(name, params, counterexample is None, counterexample, elapsed_ms)


def check_theorem1(max_n: int) -> CheckResult:
    """Short-representation count equals the Stern value, by enumeration and by recurrence."""

    def body() -> Optional[Counterexample]:
        for n in range(max_n + 1):
            expected = stern(n)
            enumerated = len(enumerate_short_bsd(n))
            recurred = count_short_bsd_recurrence(n)
            if enumerated != expected or recurred != expected:
                return Counterexample(
                    {"n": n}, expected, {"enumeration": enumerated, "recurrence": recurred}
                )
        return None

    return _timed("theorem1", {"max_n": max_n}, body)


def check_theorem2(max_n: int) -> CheckResult:
    """Short strings of n correspond to hyperbinary strings of n-1, via the explicit bijection.

    Checks the counts, the image of the forward map as a set, and both
    round trips on every element.  The n = 0 case asserts that 0 has no
    short representation, matching the absence of hyperbinary strings
    for -1.
    """

    def body() -> Optional[Counterexample]:
        zero = enumerate_short_bsd(0)
        if zero:
            return Counterexample({"n": 0}, 0, len(zero))
        for n in range(1, max_n + 1):
            hyper = enumerate_hyperbinary(n - 1)
            short = enumerate_short_bsd(n)
            if len(hyper) != len(short):
                return Counterexample(
                    {"n": n}, f"{len(short)} representations", f"{len(hyper)} hyperbinary strings"
                )
            image = [hb_to_short_bsd(h) for h in hyper]
            if set(image) != set(short):
                return Counterexample(
                    {"n": n},
                    sorted(str(b) for b in short),
                    sorted(str(b) for b in image),
                )
            for h, b in zip(hyper, image):
                if short_bsd_to_hb(b) != h:
                    return Counterexample({"n": n}, str(h), str(short_bsd_to_hb(b)))
            for b in short:
                back = hb_to_short_bsd(short_bsd_to_hb(b))
                if back != b:
                    return Counterexample({"n": n}, str(b), str(back))
        return None

    return _timed("theorem2", {"max_n": max_n}, body)


def check_theorem3(max_n: int) -> CheckResult:
    """Width-(i+1) count minus width-i count equals the short count, i the binary width of n.

    Also asserts the width bound: every enumerated short representation
    of n uses i or i+1 digits.
    """

    def body() -> Optional[Counterexample]:
        for n in range(1, max_n + 1):
            i = n.bit_length()
            wide = len(enumerate_bsd_fixed(n, i + 1))
            narrow = len(enumerate_bsd_fixed(n, i))
            short = enumerate_short_bsd(n)
            if wide - narrow != len(short):
                return Counterexample(
                    {"n": n, "i": i}, len(short), f"{wide} - {narrow} = {wide - narrow}"
                )
            for r in short:
                if r.width not in (i, i + 1):
                    return Counterexample({"n": n, "i": i}, f"width {i} or {i+1}", f"{r} has width {r.width}")
        return None

    return _timed("theorem3", {"max_n": max_n}, body)


def check_monroe(max_i: int) -> CheckResult:
    """Fixed-width counts are mirrored Stern values: |fixed(n, i)| = s(2^i - n) for 0 < n < 2^i."""

    def body() -> Optional[Counterexample]:
        for i in range(1, max_i + 1):
            for n in range(1, 1 << i):
                expected = stern((1 << i) - n)
                actual = len(enumerate_bsd_fixed(n, i))
                if actual != expected:
                    return Counterexample({"i": i, "n": n}, expected, actual)
        return None

    return _timed("monroe", {"max_i": max_i}, body)


def check_stolarsky_dilcher(max_i: int, max_j: int) -> CheckResult:
    """s(2^(i+j) - n) = s(2^i - n) + s(n) * s(2^j - 1) for 0 <= n <= 2^i."""

    def body() -> Optional[Counterexample]:
        for i in range(1, max_i + 1):
            for j in range(1, max_j + 1):
                for n in range((1 << i) + 1):
                    lhs = stern((1 << (i + j)) - n)
                    rhs = stern((1 << i) - n) + stern(n) * stern((1 << j) - 1)
                    if lhs != rhs:
                        return Counterexample({"i": i, "j": j, "n": n}, lhs, rhs)
        return None

    return _timed("stolarsky", {"max_i": max_i, "max_j": max_j}, body)


def check_gf_identity(max_m: int) -> CheckResult:
    """Both truncated generating functions agree, and their coefficients count.

    For each M <= max_m: lhs_finite(M) = rhs_finite(M) exactly, and for
    1 <= n <= 2^M the q^n coefficients equal the hyperbinary count of
    n-1 on the left and the short count of n on the right.  Beyond 2^M
    the truncations are not trusted.
    """

    def body() -> Optional[Counterexample]:
        for m in range(max_m + 1):
            left = lhs_finite(m)
            right = rhs_finite(m)
            if left != right:
                return Counterexample({"M": m}, str(left), str(right))
            for n in range(1, (1 << m) + 1):
                hyper = len(enumerate_hyperbinary(n - 1))
                if left.coefficient(n) != hyper:
                    return Counterexample(
                        {"M": m, "n": n}, hyper, f"lhs coefficient {left.coefficient(n)}"
                    )
                short = len(enumerate_short_bsd(n))
                if right.coefficient(n) != short:
                    return Counterexample(
                        {"M": m, "n": n}, short, f"rhs coefficient {right.coefficient(n)}"
                    )
        return None

    return _timed("gf", {"max_M": max_m}, body)


def check_reznick(max_n: int) -> CheckResult:
    """Hyperbinary count of n equals s(n+1)."""

    def body() -> Optional[Counterexample]:
        for n in range(max_n + 1):
            expected = stern(n + 1)
            actual = len(enumerate_hyperbinary(n))
            if actual != expected:
                return Counterexample({"n": n}, expected, actual)
        return None

    return _timed("reznick", {"max_n": max_n}, body)


CHECK_NAMES = ("theorem1", "theorem2", "theorem3", "monroe", "stolarsky", "gf", "reznick")


def _check_runners(config: VerifyConfig) -> dict[str, Callable[[], CheckResult]]:
    return {
        "theorem1": lambda: check_theorem1(config.theorem1_max_n),
        "theorem2": lambda: check_theorem2(config.theorem2_max_n),
        "theorem3": lambda: check_theorem3(config.theorem3_max_n),
        "monroe": lambda: check_monroe(config.monroe_max_i),
        "stolarsky": lambda: check_stolarsky_dilcher(config.stolarsky_max_i, config.stolarsky_max_j),
        "gf": lambda: check_gf_identity(config.gf_max_m),
        "reznick": lambda: check_reznick(config.reznick_max_n),
    }


def run_all(config: VerifyConfig | None = None, only: str | None = None) -> VerificationReport:
    """Run every check (or a single named one) with the configured ranges."""
    cfg = config if config is not None else VerifyConfig()
    runners = _check_runners(cfg)
    if only is not None:
        if only not in runners:
            raise ValueError(f"unknown check {only!r}; expected one of {', '.join(CHECK_NAMES)}")
        names = (only,)
    else:
        names = CHECK_NAMES
    report = VerificationReport()
    for name in names:
        result = runners[name]()
        report.checks.append(result)
        if cfg.fail_fast and not result.passed:
            break
    return report
