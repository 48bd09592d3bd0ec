"""Random float pairs compared against the wrong closed form, plus line fits.

Sampling uses numpy's PCG64 bit generator.  A run of ``n`` pairs is split
into fixed-size chunks; chunk ``i`` draws from the ``i``-th child of
``SeedSequence(seed)``, so the records depend only on ``(n, seed)`` and not
on how many worker processes produced them.
"""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .identity import comm_invariants, lhs_det
from .matrix import Matrix

DEFAULT_SEED = 20230501
DEFAULT_PAIRS = 5000
DEFAULT_WINDOW = 0.2
CHUNK_SIZE = 250
SEED_ENV = "WORDSPAN_SEED"

CSV_HEADER = ("x", "y", "det_comm", "h_comm")

Sampler = Callable[[np.random.Generator], Tuple[Matrix, Matrix]]


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_pair(rng: np.random.Generator) -> Tuple[Matrix, Matrix]:
    """Two 3x3 float matrices with i.i.d. uniform entries on [-1, 1]."""
    v = rng.uniform(-1.0, 1.0, size=18).tolist()
    a = Matrix([v[0:3], v[3:6], v[6:9]])
    b = Matrix([v[9:12], v[12:15], v[15:18]])
    return a, b


@dataclass(frozen=True)
class ScatterRecord:
    x: float  # wrong closed form 9 det[A,B] H([A,B])
    y: float  # nine-word determinant
    det_comm: float
    h_comm: float

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in (self.x, self.y, self.det_comm, self.h_comm))


def evaluate_pair(a: Matrix, b: Matrix) -> ScatterRecord:
    d, h = comm_invariants(a, b)
    return ScatterRecord(x=9.0 * d * h, y=lhs_det(a, b), det_comm=d, h_comm=h)


@dataclass
class ScatterRun:
    records: List[ScatterRecord]
    rejected: int


def _run_chunk(args) -> Tuple[List[ScatterRecord], int]:
    seed_seq, count, sampler = args
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    sampler = sampler or sample_pair
    out, rejected = [], 0
    while len(out) < count:
        rec = evaluate_pair(*sampler(rng))
        if rec.is_finite():
            out.append(rec)
        else:
            rejected += 1
    return out, rejected


def run_scatter(
    n: int = DEFAULT_PAIRS,
    seed: Optional[int] = None,
    workers: int = 1,
    sampler: Optional[Sampler] = None,
) -> ScatterRun:
    """Draw ``n`` pairs and evaluate both sides of the wrong identity in binary64.

    Non-finite records are discarded and redrawn; ``rejected`` counts them.
    ``sampler`` replaces :func:`sample_pair` (it must be picklable when
    ``workers > 1``).
    """
    if n < 1:
        raise ValueError("need at least one pair")
    if seed is None:
        seed = default_seed()
    counts = [CHUNK_SIZE] * (n // CHUNK_SIZE)
    if n % CHUNK_SIZE:
        counts.append(n % CHUNK_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(counts))
    jobs = [(child, c, sampler) for child, c in zip(children, counts)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, jobs))
    else:
        results = [_run_chunk(j) for j in jobs]
    records = [r for chunk, _ in results for r in chunk]
    return ScatterRun(records=records, rejected=sum(rej for _, rej in results))


class FitWindowError(ValueError):
    """Too few points in the selected window to fit a line."""


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    window_size: int
    r_squared: float

    def to_json(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "windowSize": self.window_size,
            "rSquared": self.r_squared,
        }


def fit_line(xs: Sequence[float], ys: Sequence[float]) -> FitResult:
    """Ordinary least squares y = slope * x + intercept."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.size < 2:
        raise FitWindowError(f"need at least 2 points to fit a line, got {x.size}")
    xm, ym = x.mean(), y.mean()
    sxx = float(((x - xm) ** 2).sum())
    if sxx == 0.0:
        raise FitWindowError("all x values coincide; slope undefined")
    slope = float(((x - xm) * (y - ym)).sum()) / sxx
    intercept = float(ym - slope * xm)
    ss_res = float(((y - (slope * x + intercept)) ** 2).sum())
    ss_tot = float(((y - ym) ** 2).sum())
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0.0 else 1.0
    return FitResult(slope=slope, intercept=intercept, window_size=int(x.size), r_squared=r2)


def fit_global(records: Sequence[ScatterRecord]) -> FitResult:
    return fit_line([r.x for r in records], [r.y for r in records])


def fit_near_origin(records: Sequence[ScatterRecord], window_quantile: float = DEFAULT_WINDOW) -> FitResult:
    """Fit on same-sign points (x*y > 0) whose |x| is within the given quantile of |x|."""
    if not records:
        raise FitWindowError("no records to fit")
    if not 0.0 < window_quantile <= 1.0:
        raise ValueError("window quantile must lie in (0, 1]")
    ax = np.abs(np.array([r.x for r in records]))
    cutoff = float(np.quantile(ax, window_quantile))
    chosen = [r for r in records if r.x * r.y > 0.0 and abs(r.x) <= cutoff]
    return fit_line([r.x for r in chosen], [r.y for r in chosen])


def _fmt(v: float) -> str:
    return format(v, ".17g")


def emit_csv(records: Sequence[ScatterRecord], path) -> Path:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for r in records:
                w.writerow([_fmt(r.x), _fmt(r.y), _fmt(r.det_comm), _fmt(r.h_comm)])
    except OSError as exc:
        raise OSError(f"cannot write scatter CSV to {path}: {exc.strerror or exc}") from exc
    return path


def read_csv(path) -> List[ScatterRecord]:
    with Path(path).open(newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"{path}: missing or unexpected CSV header")
    return [ScatterRecord(*map(float, row)) for row in rows[1:]]


def relation_error(r: ScatterRecord) -> float:
    """|y + det[A,B] * x| / (1 + |y|): the float echo of lhs = -det[A,B] * wrong."""
    return abs(r.y + r.det_comm * r.x) / (1.0 + abs(r.y))
