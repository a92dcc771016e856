"""A registry of nine conjectured properties of the negation map and a
seeded engine that confirms each one over randomized simplex trials or
refutes it with a concrete counterexample.

Claim kinds
-----------
inequality (C1-C3)
    A measure is claimed never to decrease under negation. Each trial
    samples a distribution and compares the measure before and after one
    negation. Fixed counterexample fixtures are always evaluated first,
    ahead of the random trials.
limit (C4-C6)
    A claimed trend of a measure at the uniform distribution as n grows,
    evaluated over a log-spaced grid of n inside the configured range.
maximizer (C7-C9)
    A negated measure is claimed to peak exactly at the uniform input.
    Deterministic probes (uniform itself plus pair perturbations
    uniform +/- eps*(e_i - e_j) at eps in {1e-3, 1e-2}, clipped to the
    simplex) run before the random trials; each random trial also
    contributes a mild perturbation of uniform blended toward the sample,
    because boundary structure is easy to miss by sampling alone.

Verdicts report what the formulas actually do. With default settings C1,
C4, C5 and C7 come out CONFIRMED while C2, C3, C6, C8 and C9 come out
REFUTED: the fixed four-outcome fixture [0.4, 0.3, 0.2, 0.1] moves both
second-moment measures the other way, |varextropy(uniform(n))| grows with
n instead of shrinking, and uniform is the minimizer (not the maximizer)
of the negated second-moment measures. VACUOUS is reserved for a claim
whose quantified scope is empty under the requested n range; no default
configuration produces it.

Reproducibility: a report is a pure function of (seed, trials, n_range,
tolerance). Trials are independent, may be split across workers, and are
aggregated order-independently; the counterexample reported is always the
violation with the smallest evaluation index (fixtures, then probes, then
trials by trial index).
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .measures import entropy, varentropy, varextropy
from .negation import negate
from .simplex import (
    Distribution,
    SimplexSamplerConfig,
    majorizes,
    make_distribution,
    sample_uniform_simplex,
    uniform,
)

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
VACUOUS = "VACUOUS"

MAX_OUTCOMES = 10_000

# Decides C2 and C3 on its own whenever n = 4 is in scope.
REFUTATION_FIXTURE = (0.4, 0.3, 0.2, 0.1)

# Blend weight pulling a random sample toward uniform for the extra
# near-uniform point each maximizer trial contributes.
_NEAR_UNIFORM_WEIGHT = 0.01

# All-pairs probing is quadratic in n; above this size a ring of adjacent
# pairs keeps the probe deterministic without exploding.
_ALL_PAIRS_LIMIT = 64


class UnknownClaim(ValueError):
    """No registered claim has the requested id."""


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    kind: str  # "inequality" | "limit" | "maximizer"
    scope: str


CLAIMS: tuple[Claim, ...] = (
    Claim(
        "C1",
        "entropy(negate(p)) >= entropy(p) for every distribution p",
        "inequality",
        "all p on the simplex, n in the configured range",
    ),
    Claim(
        "C2",
        "varentropy(negate(p)) >= varentropy(p) for every distribution p",
        "inequality",
        "all p on the simplex, n in the configured range",
    ),
    Claim(
        "C3",
        "varextropy(negate(p)) >= varextropy(p) for every distribution p",
        "inequality",
        "all p on the simplex, n in the configured range",
    ),
    Claim(
        "C4",
        "entropy(uniform(n)) = ln(n), strictly increasing and unbounded in n",
        "limit",
        "uniform distributions over a log-spaced grid of n in the configured range",
    ),
    Claim(
        "C5",
        "varentropy(uniform(n)) = 0 for every n",
        "limit",
        "uniform distributions over a log-spaced grid of n in the configured range",
    ),
    Claim(
        "C6",
        "|varextropy(uniform(n))| decreases toward 0 as n grows",
        "limit",
        "uniform distributions over a log-spaced grid of n in the configured range",
    ),
    Claim(
        "C7",
        "entropy(negate(p)) is maximized exactly at p = uniform",
        "maximizer",
        "all p on the simplex plus uniform-perturbation probes, n in the configured range",
    ),
    Claim(
        "C8",
        "varentropy(negate(p)) is maximized exactly at p = uniform",
        "maximizer",
        "all p on the simplex plus uniform-perturbation probes, n in the configured range",
    ),
    Claim(
        "C9",
        "varextropy(negate(p)) is maximized exactly at p = uniform",
        "maximizer",
        "all p on the simplex plus uniform-perturbation probes, n in the configured range",
    ),
)

_CLAIMS_BY_ID = {c.id: c for c in CLAIMS}

_INEQUALITY_MEASURE: dict[str, Callable[[Distribution], float]] = {
    "C1": entropy,
    "C2": varentropy,
    "C3": varextropy,
}

_INEQUALITY_FIXTURES: dict[str, tuple[tuple[float, ...], ...]] = {
    "C2": (REFUTATION_FIXTURE,),
    "C3": (REFUTATION_FIXTURE,),
}

_MAXIMIZER_MEASURE: dict[str, Callable[[Distribution], float]] = {
    "C7": entropy,
    "C8": varentropy,
    "C9": varextropy,
}


@dataclass(frozen=True)
class Counterexample:
    """A concrete input on which the claim's comparison fails.

    For inequality claims lhs/rhs are the negated and original measure;
    for maximizer claims they are the point's negated measure and the
    claimed bound; for limit claims they are the offending grid value and
    the value it was required to stay below (or match). margin is the
    amount by which the required relation failed, always positive.
    """

    p: tuple[float, ...]
    lhs: float
    rhs: float
    margin: float

    def as_json_obj(self) -> dict:
        return {
            "p": list(self.p),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    verdict: str
    trials_run: int
    seed: int
    tolerance: float
    counterexample: Counterexample | None
    observed: dict | None

    def to_json_obj(self) -> dict:
        obj: dict = {
            "claim": self.claim_id,
            "verdict": self.verdict,
            "trials": self.trials_run,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "counterexample": (
                self.counterexample.as_json_obj() if self.counterexample else None
            ),
        }
        if self.observed is not None:
            obj["observed"] = self.observed
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def reports_to_json(reports) -> str:
    """One JSON object per line, in the order given."""
    return "\n".join(r.to_json() for r in reports)


def claim_by_id(claim_id: str) -> Claim:
    try:
        return _CLAIMS_BY_ID[claim_id]
    except KeyError:
        raise UnknownClaim(
            f"unknown claim {claim_id!r}; registered: {', '.join(_CLAIMS_BY_ID)}"
        ) from None


def check_claim(
    claim_id: str,
    *,
    seed: int = 0,
    trials: int = 1000,
    n_range: tuple[int, int] = (2, 8),
    tolerance: float = 1e-9,
    workers: int = 1,
) -> ClaimReport:
    """Render a verdict for one claim.

    The result depends only on (seed, trials, n_range, tolerance); the
    worker count changes the execution plan, never the report.
    """
    claim = claim_by_id(claim_id)
    n_min, n_max = int(n_range[0]), int(n_range[1])
    if not (2 <= n_min <= n_max <= MAX_OUTCOMES):
        raise ValueError(
            f"n_range = {n_range!r} must satisfy 2 <= n_min <= n_max <= {MAX_OUTCOMES}"
        )
    if trials < 1:
        raise ValueError(f"trials = {trials!r} must be positive")
    if not tolerance > 0.0:
        raise ValueError(f"tolerance = {tolerance!r} must be > 0")
    if workers < 1:
        raise ValueError(f"workers = {workers!r} must be positive")
    if claim.kind == "inequality":
        return _check_inequality(claim, seed, trials, n_min, n_max, tolerance, workers)
    if claim.kind == "maximizer":
        return _check_maximizer(claim, seed, trials, n_min, n_max, tolerance, workers)
    return _check_limit(claim, seed, n_min, n_max, tolerance)


def check_all(
    *,
    seed: int = 0,
    trials: int = 1000,
    n_range: tuple[int, int] = (2, 8),
    tolerance: float = 1e-9,
    workers: int = 1,
    claim_ids=None,
) -> list[ClaimReport]:
    """Reports for every registered claim (or the requested subset), always
    in registry order."""
    if claim_ids is None:
        selected = CLAIMS
    else:
        wanted = {claim_by_id(cid).id for cid in claim_ids}
        selected = tuple(c for c in CLAIMS if c.id in wanted)
    return [
        check_claim(
            c.id,
            seed=seed,
            trials=trials,
            n_range=n_range,
            tolerance=tolerance,
            workers=workers,
        )
        for c in selected
    ]


# ---------------------------------------------------------------------------
# engine internals


def _trial_outcome_count(t: int, n_min: int, n_max: int) -> int:
    return n_min + t % (n_max - n_min + 1)


def _chunk_bounds(total: int, workers: int) -> list[tuple[int, int]]:
    return [
        (i * total // workers, (i + 1) * total // workers) for i in range(workers)
    ]


def _run_chunks(fn, total: int, workers: int) -> list:
    bounds = _chunk_bounds(total, workers)
    if workers == 1:
        return [fn(lo, hi) for lo, hi in bounds]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda b: fn(*b), bounds))


def _check_inequality(claim, seed, trials, n_min, n_max, tolerance, workers):
    measure = _INEQUALITY_MEASURE[claim.id]
    is_c1 = claim.id == "C1"

    best: tuple | None = None  # (order_key, Counterexample), smallest key wins

    def consider(candidate):
        nonlocal best
        if candidate is not None and (best is None or candidate[0] < best[0]):
            best = candidate

    for f_idx, probs in enumerate(_INEQUALITY_FIXTURES.get(claim.id, ())):
        if n_min <= len(probs) <= n_max:
            p = make_distribution(probs)
            lhs = measure(negate(p))
            rhs = measure(p)
            if lhs < rhs - tolerance:
                consider(((0, f_idx), Counterexample(p.probs, lhs, rhs, rhs - lhs)))

    def eval_range(lo, hi):
        chunk_best = None
        min_margin = math.inf
        maj_failures = 0
        reversed_count = 0
        reversed_denom = 0
        for t in range(lo, hi):
            n = _trial_outcome_count(t, n_min, n_max)
            p = sample_uniform_simplex(SimplexSamplerConfig(seed, n, trials), t)
            negated = negate(p)
            lhs = measure(negated)
            rhs = measure(p)
            min_margin = min(min_margin, lhs - rhs)
            violated = lhs < rhs - tolerance
            if is_c1 and not majorizes(p, negated):
                maj_failures += 1
                violated = True
            if n >= 3:
                reversed_denom += 1
                if lhs <= rhs:
                    reversed_count += 1
            if violated and chunk_best is None:
                chunk_best = ((2, t), Counterexample(p.probs, lhs, rhs, rhs - lhs))
        return chunk_best, min_margin, maj_failures, reversed_count, reversed_denom

    results = _run_chunks(eval_range, trials, workers)
    min_margin = math.inf
    maj_failures = 0
    reversed_count = 0
    reversed_denom = 0
    for chunk_best, m, mf, rc, rd in results:
        consider(chunk_best)
        min_margin = min(min_margin, m)
        maj_failures += mf
        reversed_count += rc
        reversed_denom += rd

    observed: dict = {"min_margin": min_margin}
    if is_c1:
        observed["majorization_failures"] = maj_failures
    elif reversed_denom > 0:
        observed["reversal_fraction"] = reversed_count / reversed_denom

    return ClaimReport(
        claim_id=claim.id,
        verdict=REFUTED if best is not None else CONFIRMED,
        trials_run=trials,
        seed=seed,
        tolerance=tolerance,
        counterexample=best[1] if best is not None else None,
        observed=observed,
    )


def _probe_points(n: int) -> list[Distribution]:
    """Uniform plus its pairwise perturbations, in a fixed order."""
    u = uniform(n)
    points = [u]
    base = u.probs[0]
    eps_values = [e for e in (1e-3, 1e-2) if e <= base] or [base / 2.0]
    if n <= _ALL_PAIRS_LIMIT:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        ring = [(i, (i + 1) % n) for i in range(n)]
        pairs = ring + [(j, i) for i, j in ring]
    for eps in eps_values:
        for i, j in pairs:
            vals = list(u.probs)
            vals[i] += eps
            vals[j] -= eps
            points.append(make_distribution(vals, renormalize=True))
    return points


def _near_uniform(x: Distribution) -> Distribution:
    """Uniform nudged toward x; the per-trial perturbation of uniform."""
    w = _NEAR_UNIFORM_WEIGHT
    u = 1.0 / x.n
    return make_distribution(
        [(1.0 - w) * u + w * xi for xi in x.probs], renormalize=True
    )


def _maximizer_bound(claim_id: str, n: int) -> float:
    if claim_id == "C7":
        return math.log(n)
    measure = _MAXIMIZER_MEASURE[claim_id]
    return measure(negate(uniform(n)))


def _check_maximizer(claim, seed, trials, n_min, n_max, tolerance, workers):
    measure = _MAXIMIZER_MEASURE[claim.id]
    bounds = {n: _maximizer_bound(claim.id, n) for n in range(n_min, n_max + 1)}

    best: tuple | None = None
    peak: tuple | None = None  # (excess, order_key, value, probs); max excess wins

    def consider_violation(candidate):
        nonlocal best
        if candidate is not None and (best is None or candidate[0] < best[0]):
            best = candidate

    def consider_peak(candidate):
        nonlocal peak
        if candidate is None:
            return
        if (
            peak is None
            or candidate[0] > peak[0]
            or (candidate[0] == peak[0] and candidate[1] < peak[1])
        ):
            peak = candidate

    for n in range(n_min, n_max + 1):
        bound = bounds[n]
        for probe_idx, q in enumerate(_probe_points(n)):
            value = measure(negate(q))
            excess = value - bound
            key = (1, n, probe_idx)
            consider_peak((excess, key, value, q.probs))
            if excess > tolerance:
                consider_violation((key, Counterexample(q.probs, value, bound, excess)))

    def eval_range(lo, hi):
        chunk_best = None
        chunk_peak = None
        for t in range(lo, hi):
            n = _trial_outcome_count(t, n_min, n_max)
            bound = bounds[n]
            x = sample_uniform_simplex(SimplexSamplerConfig(seed, n, trials), t)
            for sub, q in ((0, x), (1, _near_uniform(x))):
                value = measure(negate(q))
                excess = value - bound
                key = (2, t, sub)
                if (
                    chunk_peak is None
                    or excess > chunk_peak[0]
                    or (excess == chunk_peak[0] and key < chunk_peak[1])
                ):
                    chunk_peak = (excess, key, value, q.probs)
                if excess > tolerance and chunk_best is None:
                    chunk_best = (key, Counterexample(q.probs, value, bound, excess))
        return chunk_best, chunk_peak

    for chunk_best, chunk_peak in _run_chunks(eval_range, trials, workers):
        consider_violation(chunk_best)
        consider_peak(chunk_peak)

    observed = {
        "max_excess": peak[0],
        "argmax_value": peak[2],
        "argmax_p": list(peak[3]),
    }
    return ClaimReport(
        claim_id=claim.id,
        verdict=REFUTED if best is not None else CONFIRMED,
        trials_run=trials,
        seed=seed,
        tolerance=tolerance,
        counterexample=best[1] if best is not None else None,
        observed=observed,
    )


def _limit_grid(n_min: int, n_max: int) -> list[int]:
    span = n_max - n_min + 1
    if span <= 16:
        return list(range(n_min, n_max + 1))
    grid = {n_min, n_max}
    ratio = (n_max / n_min) ** (1.0 / 15.0)
    x = float(n_min)
    for _ in range(14):
        x *= ratio
        grid.add(round(x))
    return sorted(n for n in grid if n_min <= n <= n_max)


def _check_limit(claim, seed, n_min, n_max, tolerance):
    grid = _limit_grid(n_min, n_max)
    value_fn = {"C4": entropy, "C5": varentropy, "C6": varextropy}[claim.id]
    values = [value_fn(uniform(n)) for n in grid]

    counterexample = None
    for j, (n, v) in enumerate(zip(grid, values)):
        if claim.id == "C4":
            target = math.log(n)
            if abs(v - target) > tolerance:
                counterexample = Counterexample(
                    uniform(n).probs, v, target, abs(v - target)
                )
                break
            if j > 0 and v <= values[j - 1]:
                counterexample = Counterexample(
                    uniform(n).probs, v, values[j - 1], values[j - 1] - v
                )
                break
        elif claim.id == "C5":
            if abs(v) > tolerance:
                counterexample = Counterexample(uniform(n).probs, v, 0.0, abs(v))
                break
        else:  # C6: magnitudes must not grow along the grid
            if j > 0 and abs(v) - abs(values[j - 1]) > tolerance:
                counterexample = Counterexample(
                    uniform(n).probs, abs(v), abs(values[j - 1]),
                    abs(v) - abs(values[j - 1]),
                )
                break

    return ClaimReport(
        claim_id=claim.id,
        verdict=REFUTED if counterexample is not None else CONFIRMED,
        trials_run=len(grid),
        seed=seed,
        tolerance=tolerance,
        counterexample=counterexample,
        observed={"n_grid": grid, "values": values},
    )
