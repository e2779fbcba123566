"""Numeric growth extraction from P-recurrences.

Sequences are iterated in floating point with per-step window
normalization (log magnitudes are tracked separately, so 10^5 terms of a
13.5^n sequence never overflow). The exponential rate comes from the term
ratio, optionally Richardson-extrapolated in 1/n at three staggered
checkpoints; the polynomial order theta is selected from a half-integer
grid and the correction constants c0, c1, c2 of

    f(n) ~ c0 * lambda^n * n^theta * (1 + c1/n + c2/n^2 + ...)

are fitted by exact quadratic interpolation in 1/n at staggered points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ComputationRefused, InputError, LeadingCoefficientZero, NoConvergentExponent
from .recurrences import PRecurrence, extend

_RESCALE_AT = 1e120


@dataclass(frozen=True)
class LogSequence:
    """Magnitudes of a positive sequence: logs[i] = ln f(start + i)."""

    start: int
    logs: list[float]

    @property
    def n_max(self) -> int:
        return self.start + len(self.logs) - 1

    def log_at(self, n: int) -> float:
        if not self.start <= n <= self.n_max:
            raise InputError(f"index {n} outside {self.start}..{self.n_max}")
        return self.logs[n - self.start]


@dataclass(frozen=True)
class GrowthModel:
    """Fitted growth parameters; corrections is [c0, c1, c2]."""

    lambda_: float
    theta: float
    corrections: list[float]
    n_max: int
    residuals: list[float] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "lambda": self.lambda_,
            "theta": self.theta,
            "corrections": list(self.corrections),
            "n_max": self.n_max,
            "residuals": list(self.residuals),
        }


def _int_polys(rec: PRecurrence) -> list[list[int]]:
    return rec.integer_polys()


def _ipoly_eval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def log_sequence(rec: PRecurrence, initial, n_max: int) -> LogSequence:
    """Iterate the recurrence to n_max, recording log magnitudes.

    The first few terms are computed exactly, iteration then switches to
    floats with window rescaling. Leading-polynomial zeros are detected by
    exact integer evaluation and refused. Zero or sign-flipping tails are
    refused: growth extraction here targets eventually-positive sequences.
    """
    L = rec.order
    if n_max < rec.offset + L + 2:
        raise InputError("n_max too small to iterate")
    ipolys = _int_polys(rec)
    warm = extend(rec, initial, min(n_max, rec.offset + L + 8))
    start = next((i for i, v in enumerate(warm) if v != 0), None)
    if start is None:
        raise ComputationRefused("sequence is identically zero on the warmup window")
    if any(v <= 0 for v in warm[start:]):
        raise ComputationRefused("growth extraction needs a positive sequence tail")

    logs = [math.log(float(v)) for v in warm[start:]]
    window = [float(v) for v in warm[-L:]]
    scale = 0.0  # ln of the factor divided out of the window
    n = len(warm) - L
    while len(logs) + start <= n_max:
        top = n + L
        lead = _ipoly_eval(ipolys[L], top)
        if lead == 0:
            raise LeadingCoefficientZero(top)
        acc = 0.0
        for i in range(L):
            acc += float(_ipoly_eval(ipolys[i], n + i)) * window[i]
        new = -acc / float(lead)
        if new <= 0.0:
            raise ComputationRefused(f"sequence stopped being positive at index {top}")
        window = window[1:] + [new] if L > 1 else [new]
        if new > _RESCALE_AT:
            window = [w / new for w in window]
            scale += math.log(new)
            logs.append(scale)
        else:
            logs.append(math.log(new) + scale)
        n += 1
    return LogSequence(start, logs)


def _checkpoints(lo: int, hi: int) -> tuple[int, int, int]:
    n3 = hi
    n2 = max(lo + 2, hi // 2)
    n1 = max(lo + 1, hi // 4)
    if not lo <= n1 < n2 < n3:
        raise InputError("window too small for staggered checkpoints")
    return n1, n2, n3


def estimate_lambda(rec: PRecurrence, initial, n_max: int, accelerate: bool = True) -> float:
    """Exponential growth rate from term ratios at n_max.

    With accelerate=True the ratios at n_max/4, n_max/2 and n_max are
    extrapolated to 1/n = 0 by quadratic Lagrange interpolation, removing
    the 1/n and 1/n^2 components of the ratio expansion.
    """
    data = log_sequence(rec, initial, n_max)
    lo = data.start + 1

    def ratio(n: int) -> float:
        return math.exp(data.log_at(n) - data.log_at(n - 1))

    if not accelerate or n_max < lo + 16:
        return ratio(data.n_max)
    n1, n2, n3 = _checkpoints(lo, data.n_max)
    xs = [1.0 / n1, 1.0 / n2, 1.0 / n3]
    ys = [ratio(n1), ratio(n2), ratio(n3)]
    est = 0.0
    for i in range(3):
        w = 1.0
        for j in range(3):
            if j != i:
                w *= xs[j] / (xs[j] - xs[i])
        est += w * ys[i]
    return est


DEFAULT_THETAS = tuple(k / 2 for k in range(-8, 3))


def fit_model(data: LogSequence, lambda_: float, theta_candidates=None) -> GrowthModel:
    """Select theta from the candidate grid and fit c0, c1, c2.

    For each candidate, v(n) = ln f(n) - n ln lambda - theta ln n must
    converge; the candidate with the smallest drift across the staggered
    checkpoints wins (the drift pair is reported as residuals). Then
    y = exp(v) is interpolated quadratically in 1/n to read off c0 and the
    1/n, 1/n^2 corrections.
    """
    if lambda_ <= 0:
        raise InputError("lambda must be positive")
    thetas = DEFAULT_THETAS if theta_candidates is None else tuple(theta_candidates)
    if not thetas:
        raise InputError("need at least one theta candidate")
    log_lambda = math.log(lambda_)
    n1, n2, n3 = _checkpoints(max(data.start, 1) + 1, data.n_max)

    def v(n: int, theta: float) -> float:
        return data.log_at(n) - n * log_lambda - theta * math.log(n)

    best = None
    for theta in thetas:
        drift = (abs(v(n3, theta) - v(n2, theta)), abs(v(n2, theta) - v(n1, theta)))
        if best is None or drift[0] + drift[1] < best[1][0] + best[1][1]:
            best = (theta, drift)
    theta, drift = best
    if drift[0] > 0.02:
        raise NoConvergentExponent(
            f"no candidate exponent converges (best theta={theta}, drift={drift[0]:.3g})"
        )
    xs = [1.0 / n1, 1.0 / n2, 1.0 / n3]
    ys = [math.exp(v(n, theta)) for n in (n1, n2, n3)]
    # Newton form of the quadratic through (xs, ys), expanded at x = 0
    d01 = (ys[1] - ys[0]) / (xs[1] - xs[0])
    d12 = (ys[2] - ys[1]) / (xs[2] - xs[1])
    d012 = (d12 - d01) / (xs[2] - xs[0])
    c0 = ys[0] - xs[0] * d01 + xs[0] * xs[1] * d012
    b1 = d01 - (xs[0] + xs[1]) * d012
    if c0 == 0.0 or not math.isfinite(c0):
        raise NoConvergentExponent("fitted constant is zero or non-finite")
    c1 = b1 / c0
    c2 = d012 / c0
    return GrowthModel(lambda_, theta, [c0, c1, c2], data.n_max, list(drift))
