"""Welch's t-test, Cohen's d, Cronbach's alpha, and usability-scale scoring.

The two-tailed p-value comes from the Student-t survival function expressed
through the regularized incomplete beta, evaluated with a continued
fraction, so fractional Welch-Satterthwaite degrees of freedom are exact to
well below 1e-9. Effect size d is the pooled-SD variant, reported as an
absolute magnitude.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence, Union

from .errors import DegenerateDataError, ValidationError

Document = Union[bytes, str, Path, IO[bytes], IO[str]]

_CF_MAX_ITERATIONS = 300
_CF_EPSILON = 3e-16
_CF_TINY = 1e-300

# Scale item polarity, in questionnaire order: most items print their "(5)"
# anchor first; items 3, 4 and 10 print "(1)" first.
_ASCENDING_ITEMS = frozenset({2, 3, 9})
SCALE_LENGTH = 10


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    sd: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValidationError("summary statistics need n >= 2")
        if self.sd < 0:
            raise ValidationError("standard deviation must be >= 0")


@dataclass(frozen=True)
class WelchResult:
    t: float
    df: float
    p_two_tailed: float
    d: float
    degenerate: bool = False


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITERATIONS + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPSILON:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValidationError("incomplete beta needs x in [0, 1]")
    if x == 0.0 or x == 1.0:
        return x
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def student_t_two_tailed(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with (possibly fractional) df > 0."""
    if df <= 0:
        raise ValidationError("degrees of freedom must be positive")
    if math.isinf(t):
        return 0.0
    return regularized_incomplete_beta(df / (df + t * t), df / 2.0, 0.5)


def welch_from_summary(a: SummaryStats, b: SummaryStats) -> WelchResult:
    """Welch's two-tailed t-test plus pooled-SD effect size, from summaries."""
    va = a.sd * a.sd / a.n
    vb = b.sd * b.sd / b.n
    # the sum-comparison also catches variances that underflowed to zero
    if va + vb == 0.0:
        if a.mean == b.mean:
            return WelchResult(
                t=0.0, df=float(a.n + b.n - 2), p_two_tailed=1.0, d=0.0,
                degenerate=True,
            )
        return WelchResult(
            t=math.copysign(math.inf, a.mean - b.mean),
            df=float(a.n + b.n - 2),
            p_two_tailed=0.0,
            d=math.inf,
            degenerate=True,
        )
    t = (a.mean - b.mean) / math.sqrt(va + vb)
    # Welch-Satterthwaite in weight form: immune to underflow of va**2,
    # and exact (df = n - 1) when the other group's variance is zero
    wa = va / (va + vb)
    wb = vb / (va + vb)
    df = 1.0 / (wa * wa / (a.n - 1) + wb * wb / (b.n - 1))
    pooled_sd = math.sqrt(
        ((a.n - 1) * a.sd * a.sd + (b.n - 1) * b.sd * b.sd) / (a.n + b.n - 2)
    )
    if pooled_sd == 0.0:
        d = math.inf if a.mean != b.mean else 0.0
    else:
        d = abs(a.mean - b.mean) / pooled_sd
    return WelchResult(
        t=t,
        df=df,
        p_two_tailed=student_t_two_tailed(t, df),
        d=d,
    )


def summarize(samples: Sequence[float]) -> SummaryStats:
    if len(samples) < 2:
        raise ValidationError("each group needs at least 2 observations")
    return SummaryStats(
        mean=statistics.fmean(samples),
        sd=statistics.stdev(samples),
        n=len(samples),
    )


def welch_from_samples(
    xs: Sequence[float], ys: Sequence[float]
) -> WelchResult:
    return welch_from_summary(summarize(xs), summarize(ys))


def cronbach_alpha(scores: Sequence[Sequence[float]]) -> float:
    """Internal consistency of a multi-item scale.

    ``scores`` is respondents x items; sample variances use the n-1
    denominator, and the total variance is over respondent row sums.
    """
    if len(scores) < 2:
        raise ValidationError("cronbach_alpha needs at least 2 respondents")
    k = len(scores[0])
    if k < 2:
        raise ValidationError("cronbach_alpha needs at least 2 items")
    if any(len(row) != k for row in scores):
        raise ValidationError("all respondents must answer every item")
    item_variances = [
        statistics.variance([row[j] for row in scores]) for j in range(k)
    ]
    total_variance = statistics.variance([sum(row) for row in scores])
    if total_variance == 0.0:
        raise DegenerateDataError(
            "total score variance is zero; alpha is undefined"
        )
    return k / (k - 1) * (1.0 - sum(item_variances) / total_variance)


def score_usability(responses: Sequence[int]) -> float:
    """Mean 1-5 score of the ten-item usability scale.

    Each response is the 1-based position of the chosen option. Most items
    print their highest-scoring anchor first, so position maps to 6 - r;
    items 3, 4 and 10 run the other way and score the position directly.
    """
    if len(responses) != SCALE_LENGTH:
        raise ValidationError(f"expected {SCALE_LENGTH} responses, got {len(responses)}")
    scores = []
    for index, response in enumerate(responses):
        if not isinstance(response, int) or isinstance(response, bool):
            raise ValidationError(f"response {index + 1} must be an integer")
        if not 1 <= response <= 5:
            raise ValidationError(
                f"response {index + 1} out of range: {response}"
            )
        scores.append(response if index in _ASCENDING_ITEMS else 6 - response)
    return sum(scores) / SCALE_LENGTH


def _read_text(document: Document) -> str:
    if isinstance(document, Path):
        return document.read_text(encoding="utf-8")
    if isinstance(document, bytes):
        return document.decode("utf-8")
    if isinstance(document, str):
        return document
    data = document.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _parse_float(cell: str, line: int) -> float:
    try:
        return float(cell)
    except ValueError as exc:
        raise ValidationError(f"line {line}: not a number: {cell!r}") from exc


def load_two_group_csv(document: Document) -> tuple[list[float], list[float]]:
    """Long-format intake for the two-sample test.

    Header ``group,value``; each following line is one respondent. Exactly
    two distinct group labels, returned in order of first appearance.
    """
    reader = csv.reader(io.StringIO(_read_text(document)))
    rows = list(reader)
    if not rows or len(rows[0]) != 2:
        raise ValidationError("expected a two-column CSV with a header row")
    groups: dict[str, list[float]] = {}
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ValidationError(f"line {line}: expected 2 cells, got {len(row)}")
        label, value = row[0].strip(), _parse_float(row[1].strip(), line)
        groups.setdefault(label, []).append(value)
    if len(groups) != 2:
        raise ValidationError(
            f"expected exactly 2 groups, found {len(groups)}: {sorted(groups)}"
        )
    first, second = groups.values()
    return first, second


def load_matrix_csv(document: Document) -> list[list[float]]:
    """Respondents-by-items intake: header of item names, numeric rows."""
    reader = csv.reader(io.StringIO(_read_text(document)))
    rows = list(reader)
    if len(rows) < 2:
        raise ValidationError("expected a header row plus at least one respondent")
    width = len(rows[0])
    matrix = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != width:
            raise ValidationError(
                f"line {line}: expected {width} cells, got {len(row)}"
            )
        matrix.append([_parse_float(cell.strip(), line) for cell in row])
    return matrix
