"""Schedulers: greedy, exact dynamic program for proper instances, brute force.

All three return a Schedule whose launches are as early as possible for
the order they commit to.  Ties are broken deterministically, so repeated
runs on the same instance produce identical schedules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import return_position, return_positions, start_window, window_arrays
from .model import Delivery, Instance, Schedule, earliest_start_pack
from .proper import NotProperError, check_proper

GREEDY_TIE_TOL = 1e-9


class BudgetError(ValueError):
    """Brute force refused: instance exceeds the point budget."""


def solve_greedy(inst: Instance) -> Schedule:
    """Repeatedly fly to the point that lands the drone earliest.

    The truck position advances to each landing; points whose windows have
    closed are dropped.  When nothing is startable yet, the truck drives
    to the next window opening.  Among equal earliest landings (within a
    relative tolerance) the leftmost point wins, then the lowest index.
    """
    n = len(inst.points)
    if n == 0:
        return Schedule(())
    xs = np.array([p.x for p in inst.points])
    ys = np.array([p.y for p in inst.points])
    es, ls, er, lr, in_band = window_arrays(xs, ys, inst.v, inst.R)
    windows = (es, ls, er, lr, in_band)

    s = inst.truck_start
    active = in_band.copy()
    entries: list[Delivery] = []
    while True:
        active &= ls >= s
        if not active.any():
            break
        next_open = es[active].min()
        if s < next_open:
            s = float(next_open)
        cand = np.flatnonzero(active & (es <= s))
        rets = return_positions(s, xs[cand], ys[cand], inst.v, inst.R,
                                windows=tuple(w[cand] for w in windows))
        rmin = rets.min()
        tied = np.flatnonzero(rets <= rmin + GREEDY_TIE_TOL * max(1.0, abs(rmin)))
        pick = tied[np.lexsort((cand[tied], xs[cand[tied]]))[0]]
        chosen = int(cand[pick])
        entries.append(Delivery(chosen, s, float(rets[pick])))
        s = float(rets[pick])
        active[chosen] = False
        active &= lr >= s
    return Schedule(tuple(entries))


@dataclass(frozen=True)
class DpTable:
    """Raw dynamic-program state, mainly for inspection in tests.

    Row r of `completions` holds the earliest landing of any schedule with
    exactly r+1 deliveries whose last delivery is the rank-j point (+inf
    when impossible); `parents` holds the rank of the previous delivery.
    `ranks` maps rank -> original point index, sorted by (x, y, index).
    """

    completions: np.ndarray
    parents: np.ndarray
    ranks: tuple[int, ...]


def dp_table(inst: Instance) -> DpTable:
    """Fill the table over points ranked left to right."""
    n = len(inst.points)
    ranks = tuple(sorted(range(n), key=lambda i: (inst.points[i].x, inst.points[i].y, i)))
    xs = np.array([inst.points[i].x for i in ranks])
    ys = np.array([inst.points[i].y for i in ranks])
    windows = window_arrays(xs, ys, inst.v, inst.R)

    rows: list[np.ndarray] = []
    parents: list[np.ndarray] = []
    if n == 0:
        return DpTable(np.empty((0, 0)), np.empty((0, 0), dtype=int), ranks)

    row = return_positions(inst.truck_start, xs, ys, inst.v, inst.R, windows=windows)
    parent = np.full(n, -1, dtype=int)
    # predecessor must be strictly left in rank order
    earlier = np.triu(np.ones((n, n), dtype=bool), k=1)
    while np.isfinite(row).any():
        rows.append(row)
        parents.append(parent)
        if len(rows) == n:
            break
        # land[j_prev, j] = landing when the rank-j point follows a chain
        # that ended at rank j_prev
        land = return_positions(row[:, None], xs, ys, inst.v, inst.R, windows=windows)
        land = np.where(earlier, land, np.inf)
        row = land.min(axis=0)
        parent = land.argmin(axis=0)
    return DpTable(np.array(rows), np.array(parents), ranks)


def solve_dp_proper(inst: Instance, require_proper: bool = True) -> Schedule:
    """Maximum-delivery schedule via the x-monotone dynamic program.

    Exact on proper instances.  With require_proper the instance is
    checked first and NotProperError raised on failure; without it the
    result is still a feasible schedule, just not necessarily optimal.
    Ties resolve toward the earliest completion, then the leftmost rank.
    """
    if require_proper:
        report = check_proper(inst)
        if not report.is_proper:
            raise NotProperError(report)
    table = dp_table(inst)
    if len(table.completions) == 0:
        return Schedule(())
    depth = len(table.completions) - 1
    j = int(np.argmin(table.completions[depth]))
    chain = [j]
    for r in range(depth, 0, -1):
        j = int(table.parents[r][chain[-1]])
        chain.append(j)
    order = [table.ranks[j] for j in reversed(chain)]
    sched = earliest_start_pack(inst, order)
    if sched is None:  # cannot happen: the table only chains feasible landings
        raise RuntimeError("dynamic program produced an unpackable order")
    return sched


def solve_exact(inst: Instance, max_points: int = 10) -> Schedule:
    """Brute-force optimum by depth-first search over delivery orders.

    A prefix is abandoned as soon as packing fails, and a branch is cut
    when even serving every remaining startable point cannot beat the
    best length found.  Among maximum-length schedules the earliest
    completion wins, then the lexicographically smallest order.  Refuses
    instances larger than max_points.
    """
    n = len(inst.points)
    if n > max_points:
        raise BudgetError(f"instance has {n} points, budget is {max_points}")
    windows = [start_window(p, inst.v, inst.R) for p in inst.points]

    best_order: tuple[int, ...] = ()
    best_len = 0
    best_completion = inst.truck_start

    used = [False] * n
    prefix: list[int] = []

    def dfs(cur: float) -> None:
        nonlocal best_order, best_len, best_completion
        if len(prefix) > best_len or (len(prefix) == best_len and cur < best_completion):
            best_len = len(prefix)
            best_completion = cur
            best_order = tuple(prefix)
        startable = sum(
            1 for i in range(n)
            if not used[i] and windows[i] is not None and cur <= windows[i].ls
        )
        if len(prefix) + startable < best_len:
            return
        for i in range(n):
            if used[i] or windows[i] is None:
                continue
            start = max(cur, windows[i].es)
            if start > windows[i].ls:
                continue
            used[i] = True
            prefix.append(i)
            dfs(return_position(start, inst.points[i], inst.v, inst.R))
            prefix.pop()
            used[i] = False

    dfs(inst.truck_start)
    sched = earliest_start_pack(inst, best_order)
    assert sched is not None
    return sched
