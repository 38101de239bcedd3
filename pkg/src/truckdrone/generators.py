"""Instance generators: hardness reduction, random families, greedy traps."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .geometry import reach_envelope
from .model import Instance, earliest_start_pack, verify_schedule
from .proper import check_proper
from .solvers import solve_exact, solve_greedy


class GenerationError(RuntimeError):
    """Generator could not produce (or certify) an instance."""


# --- numeric-partition reduction -------------------------------------------


@dataclass(frozen=True)
class ThreePartitionSpec:
    """Multiset of 3k positive integers to be split into k triples of equal
    sum.  The drone speed of the emitted instance equals that triple sum,
    so it must be at least 2.
    """

    values: tuple[int, ...]
    c: int = 4

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values or len(self.values) % 3 != 0:
            raise ValueError("need a positive multiple of 3 values")
        for y in self.values:
            if isinstance(y, bool) or not isinstance(y, int) or y <= 0:
                raise ValueError(f"values must be positive integers, got {y!r}")
        if sum(self.values) % self.k != 0:
            raise ValueError(
                f"sum {sum(self.values)} is not divisible by k={self.k}"
            )
        if self.target < 2:
            raise ValueError("triple sum must be at least 2 to give a drone speed above 1")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def k(self) -> int:
        return len(self.values) // 3

    @property
    def target(self) -> int:
        return sum(self.values) // self.k

    @property
    def eps(self) -> float:
        # shrinks fast enough that the spacing blocks cross-group servicing
        return float(self.n) ** (-(self.c + 2))


def gen_three_partition(spec: ThreePartitionSpec) -> tuple[Instance, int]:
    """Instance whose maximum delivery count hits `expected` exactly when
    the multiset splits into k triples of equal sum.

    Value points sit on the y-axis at their integer heights; separator and
    tail points sit on the band edge, reachable only from a single launch
    abscissa each.  Returns (instance, expected count on yes-instances).
    """
    T = spec.target
    v = float(T)
    R = 4.0 * T
    m = reach_envelope(v, R).minor_radius
    eps = spec.eps
    pts: list[tuple[float, float]] = []
    for y in spec.values:
        pts.append((0.0, float(y)))
    for i in range(1, spec.k):
        pts.append((i * (6.0 + eps), m))
    for t in range(T + 1):
        pts.append((spec.k * (6.0 + eps) + 4.0 * t, m))
    expected = spec.n + (spec.k - 1) + (T + 1)
    return Instance(v, R, tuple(pts), truck_start=2.0), expected


# --- random families --------------------------------------------------------


def gen_random_band(n: int, v: float, R: float, x_span: float, seed: int) -> Instance:
    """n points uniform over [0, x_span] x the reachable band.

    Heights are resampled while negligibly close to the axis, so every
    point is a genuine detour.  Same seed, same instance.
    """
    if n < 0 or x_span < 0:
        raise ValueError("need n >= 0 and x_span >= 0")
    m = reach_envelope(v, R).minor_radius
    rng = random.Random(seed)
    pts = []
    for _ in range(n):
        x = rng.uniform(0.0, x_span)
        y = rng.uniform(-m, m)
        while abs(y) < 1e-6 * m:
            y = rng.uniform(-m, m)
        pts.append((x, y))
    return Instance(v, R, tuple(pts), truck_start=0.0)


def _outside_triangle(px, py, base_left, ax, ay, base_right, margin) -> bool:
    """Point strictly outside the closed triangle (base_left,0)-(ax,ay)-(base_right,0)."""
    c1 = (ax - base_left) * py - ay * (px - base_left)
    c2 = (base_right - ax) * (py - ay) + ay * (px - ax)
    c3 = (base_left - base_right) * py
    orient = -1.0 if ay > 0.0 else 1.0
    return min(orient * c1, orient * c2, orient * c3) <= -margin


def gen_random_proper(n: int, v: float, R: float, seed: int,
                      max_rejections: int = 10_000) -> Instance:
    """Random proper instance, points placed left to right.

    Each candidate must stagger its window strictly after every earlier
    window and stay clear of every earlier point's triangle (and keep its
    own triangle clear of them), with margins well above the checker's
    tolerance.  Candidates violating that are rejected and redrawn; after
    max_rejections the generator gives up.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    env = reach_envelope(v, R)
    M, m, F = env.major_radius, env.minor_radius, env.focal_gap
    rng = random.Random(seed)
    accepted: list[tuple[float, float, float, float, float]] = []  # x, y, es, ls, lr
    rejections = 0
    while len(accepted) < n:
        mag = rng.uniform(0.08 * m, 0.95 * m)
        y = mag if rng.random() < 0.5 else -mag
        half = M * math.sqrt(max(0.0, 1.0 - (y * y) / (m * m)))
        if not accepted:
            x = rng.uniform(0.0, M)
        else:
            px, _, _, pls, _ = accepted[-1]
            prev_half = pls - (px - F / 2.0)
            slack = abs(prev_half - half)
            x = px + slack + rng.uniform(0.05, 1.2) * (F / 2.0 + max(prev_half, half))
        es = x - F / 2.0 - half
        ls = x - F / 2.0 + half
        lr = ls + F
        margin = 1e-6 * max(1.0, R, abs(x) + R)
        ok = True
        for ox, oy, oes, ols, olr in accepted:
            if not (oes + margin < es and ols + margin < ls):
                ok = False
                break
            if not _outside_triangle(x, y, oes, ox, oy, olr, margin * margin):
                ok = False
                break
            if not _outside_triangle(ox, oy, es, x, y, lr, margin * margin):
                ok = False
                break
        if ok:
            accepted.append((x, y, es, ls, lr))
        else:
            rejections += 1
            if rejections > max_rejections:
                raise GenerationError(
                    f"gave up after {max_rejections} rejected candidates"
                )
    inst = Instance(v, R, tuple((x, y) for x, y, *_ in accepted), truck_start=0.0)
    report = check_proper(inst)
    if not report.is_proper:
        raise GenerationError("sampled instance failed the properness check")
    return inst


# --- greedy worst case ------------------------------------------------------


@dataclass(frozen=True)
class TightnessCertificate:
    """Solver-backed evidence that greedy serves exactly half the optimum."""

    pairs: int
    exact_count: int
    greedy_count: int
    optimal_order: tuple[int, ...]
    method: str  # "exact-solver" for small instances, else "witness-pack"


def gen_greedy_tightness(k: int, v: float, R: float) -> tuple[Instance, TightnessCertificate]:
    """k point pairs where greedy serves one per pair and the optimum both.

    Odd-position points sit on the band edge, servable from a single
    launch abscissa only.  Each is paired with a decoy whose window opens
    earlier; greedy takes the decoy and overshoots the edge point's unique
    launch.  Serving edge point then decoy, pair by pair, covers all 2k.
    The instance is certified by the solvers before being returned.
    """
    if k < 1:
        raise ValueError("need at least one pair")
    env = reach_envelope(v, R)
    M, m, F = env.major_radius, env.minor_radius, env.focal_gap
    D = F / 2.0
    w_hi = min(F, M)
    period = 2.0 * F + M
    for w_frac in (0.5, 0.3, 0.7, 0.15, 0.85):
        for g_frac in (0.25, 0.5, 0.08):
            w = D + w_frac * (w_hi - D)
            g = g_frac * (2.0 * w - F)
            y_decoy = m * math.sqrt(max(0.0, 1.0 - (w / M) ** 2))
            if y_decoy == 0.0:
                continue
            x_decoy = D + w  # decoy window opens exactly at the truck start
            x_edge = x_decoy + w - F - g
            pts: list[tuple[float, float]] = []
            for p in range(k):
                pts.append((x_edge + p * period, m))
                pts.append((x_decoy + p * period, y_decoy))
            inst = Instance(v, R, tuple(pts), truck_start=0.0)
            cert = _certify_tightness(inst, k)
            if cert is not None:
                return inst, cert
    raise GenerationError(f"no certifiable construction for k={k}, v={v}, R={R}")


def _certify_tightness(inst: Instance, k: int) -> TightnessCertificate | None:
    n = 2 * k
    if solve_greedy(inst).count != k:
        return None
    witness_order = tuple(range(n))
    witness = earliest_start_pack(inst, witness_order)
    if witness is None or not verify_schedule(inst, witness).feasible:
        return None
    if n <= 10:
        if solve_exact(inst).count != n:
            return None
        method = "exact-solver"
    else:
        # the witness serves every point, so no schedule can be longer
        method = "witness-pack"
    return TightnessCertificate(
        pairs=k,
        exact_count=n,
        greedy_count=k,
        optimal_order=witness_order,
        method=method,
    )
