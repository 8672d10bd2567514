"""Exhaustive and random discovery of NHT coefficient vectors.

Exhaustive mode walks ``[0, m)^h`` in lexicographic order.  The last few
coordinates are checked as one numpy batch per prefix; the first
coordinate is the unit of work handed to worker processes, and results are
concatenated in prefix order so output never depends on the worker count.
"""

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from nhtkit.conditions import as_coeffs, check_solution, reverse, rotate, scale
from nhtkit.errors import CostGuardError, InvalidCoefficientsError, NhtError
from nhtkit.residue import check_modulus

log = logging.getLogger(__name__)

DEFAULT_COST_GUARD = 10**9
# Candidate rows checked per numpy batch.
BATCH_ROWS = 1 << 17
# Above this the square roots of unity come from sympy instead of a scan.
UNIT_SCAN_LIMIT = 1 << 22
_INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class SearchSpec:
    h: int
    m: int
    mode: str = "exhaustive"
    trial_budget: int = 0
    seed: int = 0
    limit: int | None = None
    cost_guard: int = DEFAULT_COST_GUARD
    workers: int = 1

    def __post_init__(self):
        check_modulus(self.m)
        if self.h < 2:
            raise InvalidCoefficientsError(f"h must be >= 2, got {self.h}")
        if self.mode not in ("exhaustive", "random"):
            raise NhtError(f"unknown search mode {self.mode!r}")
        if self.limit is not None and self.limit < 0:
            raise NhtError("limit must be non-negative")

    @property
    def n(self):
        return 2 * self.h

    @property
    def space_size(self):
        return self.m ** self.h


@dataclass(frozen=True)
class SolutionRecord:
    n: int
    m: int
    coeffs: tuple
    canonical: bool = field(default=False, compare=False)

    def line(self):
        return " ".join(str(x) for x in (self.n, self.m, *self.coeffs))


def _vector_safe(h, m):
    return h * (m - 1) ** 2 <= _INT64_MAX


def batch_passes(cands, m):
    """Boolean mask of rows of ``cands`` (shape ``(B, h)``) that pass every condition."""
    cands = np.asarray(cands)
    h = cands.shape[1]
    if not _vector_safe(h, m):
        return np.array([check_solution(tuple(int(x) for x in row), m).passed
                         for row in cands], dtype=bool)
    cands = cands.astype(np.int64, copy=False)
    ok = (cands * cands).sum(axis=1) % m == 1
    # Only rows surviving the diagonal test (about 1/m of them) reach the lag tests.
    idx = np.flatnonzero(ok)
    for lag in range(1, h // 2 + 1):
        if not idx.size:
            break
        sub = cands[idx]
        idx = idx[(sub * np.roll(sub, -lag, axis=1)).sum(axis=1) % m == 0]
    ok[:] = False
    ok[idx] = True
    return ok


def _tail_width(h, m):
    k = 1
    while k < h and m ** (k + 1) <= BATCH_ROWS:
        k += 1
    return k


def _tail_grid(k, m):
    axes = np.meshgrid(*([np.arange(m, dtype=np.int64)] * k), indexing="ij")
    return np.stack([a.ravel() for a in axes], axis=1)


def _scan_prefix_block(args):
    """Solutions whose leading coordinates start with ``head`` (a 1-tuple or empty)."""
    head, h, m = args
    if not _vector_safe(h, m):
        return [u for u in (head + t for t in itertools.product(range(m), repeat=h - len(head)))
                if check_solution(u, m).passed]
    k = min(_tail_width(h, m), h - len(head))
    tail = _tail_grid(k, m)
    cands = np.empty((tail.shape[0], h), dtype=np.int64)
    cands[:, h - k:] = tail
    found = []
    for mid in itertools.product(range(m), repeat=h - len(head) - k):
        prefix = head + mid
        cands[:, :h - k] = prefix
        for idx in np.flatnonzero(batch_passes(cands, m)):
            found.append(prefix + tuple(int(x) for x in tail[idx]))
    return found


def _check_guard(spec):
    if spec.space_size > spec.cost_guard:
        raise CostGuardError(
            f"exhaustive search over {spec.m}^{spec.h} = {spec.space_size} candidates "
            f"exceeds cost guard {spec.cost_guard}; use random mode (--random) instead")


def _exhaustive(spec):
    h, m = spec.h, spec.m
    if _tail_width(h, m) >= h:
        tasks = [((), h, m)]
    else:
        tasks = [((a,), h, m) for a in range(m)]
    emitted = 0
    if spec.workers > 1 and len(tasks) > 1:
        pool = ProcessPoolExecutor(max_workers=spec.workers)
        results = pool.map(_scan_prefix_block, tasks)
    else:
        pool = None
        results = map(_scan_prefix_block, tasks)
    try:
        for block in results:
            for u in block:
                if spec.limit is not None and emitted >= spec.limit:
                    return
                emitted += 1
                yield SolutionRecord(spec.n, m, u)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def random_search(spec):
    """Distinct passing tuples among ``trial_budget`` seeded uniform draws, sorted."""
    if spec.mode != "random":
        raise NhtError("random_search needs a random-mode SearchSpec")
    rng = np.random.default_rng(spec.seed)
    found = set()
    remaining = spec.trial_budget
    while remaining > 0:
        size = min(remaining, BATCH_ROWS)
        remaining -= size
        cands = rng.integers(0, spec.m, size=(size, spec.h), dtype=np.int64)
        for row in cands[batch_passes(cands, spec.m)]:
            found.add(tuple(int(x) for x in row))
    ordered = sorted(found)
    if spec.limit is not None:
        ordered = ordered[:spec.limit]
    for u in ordered:
        yield SolutionRecord(spec.n, spec.m, u)


def enumerate_solutions(spec):
    """Stream every solution ``spec`` selects; exhaustive mode is lexicographic."""
    if spec.mode == "random":
        if spec.trial_budget <= 0:
            raise NhtError("random mode requires a positive trial budget")
        return random_search(spec)
    _check_guard(spec)
    return _exhaustive(spec)


def units_of_order_two(m):
    """All ``t`` in ``[1, m)`` with ``t*t == 1 (mod m)``, ascending."""
    m = check_modulus(m)
    if m <= UNIT_SCAN_LIMIT:
        return [t for t in range(1, m) if t * t % m == 1]
    from sympy.ntheory import sqrt_mod

    return sorted(sqrt_mod(1, m, all_roots=True))


def orbit(u, m, units=None):
    """Every vector reachable from ``u`` by rotation, reversal and unit scaling."""
    u = as_coeffs(u, m)
    if units is None:
        units = units_of_order_two(m)
    out = set()
    for base in (u, reverse(u)):
        for r in range(len(u)):
            rotated = rotate(base, r)
            for t in units:
                out.add(scale(rotated, t, m))
    return out


def canonicalize(u, m, units=None):
    """Lexicographically smallest member of ``u``'s orbit."""
    return min(orbit(u, m, units))


@dataclass(frozen=True)
class Census:
    h: int
    m: int
    total_solutions: int
    equivalence_classes: int
    orbit_sizes: dict = field(default_factory=dict, compare=False)


def census(h, m, cost_guard=DEFAULT_COST_GUARD, workers=1):
    """Count solutions and their orbits; ``orbit_sizes`` maps size -> orbit count."""
    spec = SearchSpec(h, m, cost_guard=cost_guard, workers=workers)
    units = units_of_order_two(m)
    per_rep = Counter(canonicalize(rec.coeffs, m, units)
                      for rec in enumerate_solutions(spec))
    total = sum(per_rep.values())
    log.debug("census h=%d m=%d: %d solutions, %d orbits", h, m, total, len(per_rep))
    return Census(h, m, total, len(per_rep), dict(Counter(per_rep.values())))


def canonical_solutions(spec):
    """One canonical representative per orbit, sorted."""
    units = units_of_order_two(spec.m)
    reps = sorted({canonicalize(rec.coeffs, spec.m, units)
                   for rec in enumerate_solutions(
                       SearchSpec(spec.h, spec.m, spec.mode, spec.trial_budget, spec.seed,
                                  None, spec.cost_guard, spec.workers))})
    if spec.limit is not None:
        reps = reps[:spec.limit]
    return [SolutionRecord(spec.n, spec.m, u, canonical=True) for u in reps]
