"""Burst-window scanning: guaranteed burst length, failing windows, zero-run bound.

Windows never wrap: a burst of length L can start at positions
0 .. n-L, so a scan at length L performs n-L+1 decodes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .peeling import PeelingDecoder
from .tanner import InternalInvariantError, TannerGraph


@dataclass(frozen=True)
class BurstScanResult:
    """Failures of one scan; ``residuals`` align with ``uncorrectable_starts``."""

    length: int
    uncorrectable_starts: tuple[int, ...]
    residuals: tuple[frozenset[int], ...]
    decode_calls: int
    complete: bool

    @property
    def n_b(self) -> int:
        return len(self.uncorrectable_starts)


def scan_length(g: TannerGraph, length: int, *, early_exit: bool = False,
                collect_residuals: bool = True, threads: int = 1,
                decoder: PeelingDecoder | None = None) -> BurstScanResult:
    """Peel every length-``length`` window; report the failing start positions.

    With ``early_exit`` the scan stops at the first failure (useful for
    yes/no probes).  ``threads`` > 1 splits the start range across workers,
    one decoder each, and merges results in index order; early-exit scans
    stay sequential.
    """
    if not 1 <= length <= g.n:
        raise ValueError(f"burst length {length} out of range 1..{g.n}")
    total = g.n - length + 1

    if threads > 1 and not early_exit:
        return _scan_threaded(g, length, total, collect_residuals, threads)

    dec = decoder or PeelingDecoder(g)
    starts: list[int] = []
    residuals: list[frozenset[int]] = []
    calls = 0
    complete = True
    for j in range(total):
        calls += 1
        residual = dec.burst_residual(j, length)
        if residual is not None:
            starts.append(j)
            if collect_residuals:
                residuals.append(frozenset(residual))
            if early_exit:
                complete = j == total - 1
                break
    return BurstScanResult(length, tuple(starts), tuple(residuals), calls, complete)


def _scan_threaded(g: TannerGraph, length: int, total: int,
                   collect_residuals: bool, threads: int) -> BurstScanResult:
    chunk = (total + threads - 1) // threads
    spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]

    def work(span: tuple[int, int]) -> list[tuple[int, tuple[int, ...]]]:
        dec = PeelingDecoder(g)
        found = []
        for j in range(*span):
            residual = dec.burst_residual(j, length)
            if residual is not None:
                found.append((j, residual))
        return found

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(work, spans))
    starts: list[int] = []
    residuals: list[frozenset[int]] = []
    for part in results:
        for j, residual in part:
            starts.append(j)
            if collect_residuals:
                residuals.append(frozenset(residual))
    return BurstScanResult(length, tuple(starts), tuple(residuals), total, True)


def compute_lmax(g: TannerGraph, *, threads: int = 1) -> int:
    """Largest L for which every window of length L peels, at every start.

    All-positions resolvability is monotone non-increasing in L (peeling
    a subset of a decodable pattern succeeds), so a binary search over L
    is valid; probes may exit early, and the boundary is confirmed with
    full scans.  Returns n when even full erasure decodes.
    """
    decoder = PeelingDecoder(g)

    def resolvable(length: int) -> bool:
        return scan_length(g, length, early_exit=True, collect_residuals=False,
                           decoder=decoder).n_b == 0

    if resolvable(g.n):
        if scan_length(g, g.n, collect_residuals=False, threads=threads).n_b:
            raise InternalInvariantError("full-erasure probe and scan disagree")
        return g.n
    lo, hi = 0, g.n  # resolvable at lo (vacuous for 0), failing at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if resolvable(mid):
            lo = mid
        else:
            hi = mid
    if lo and scan_length(g, lo, collect_residuals=False, threads=threads).n_b:
        raise InternalInvariantError(f"confirming scan failed at length {lo}")
    if not scan_length(g, lo + 1, collect_residuals=False, threads=threads).n_b:
        raise InternalInvariantError(f"confirming scan clean at length {lo + 1}")
    return lo


def min_zero_span(g: TannerGraph, variant: str = "per-row-max") -> int:
    """Zero-run statistic over matrix rows (diagnostic lower-bound input).

    Each row's maximal runs of consecutive zeros are collected (a row with
    no zeros contributes a run of 0).  Variant "per-row-max" takes the
    minimum over rows of the longest run in the row; "global-min" takes
    the minimum over every run of every row.
    """
    if variant not in ("per-row-max", "global-min"):
        raise ValueError(f"unknown variant {variant!r}")
    per_row = []
    for row in g.check_adj:
        runs = []
        prev = -1
        for v in row:  # sorted
            gap = v - prev - 1
            if gap > 0:
                runs.append(gap)
            prev = v
        tail = g.n - 1 - prev
        if tail > 0:
            runs.append(tail)
        if not runs:
            runs = [0]
        per_row.append(max(runs) if variant == "per-row-max" else min(runs))
    return min(per_row)
