"""Ground-truth oracles over dense membership grids.

Everything here recomputes membership from raw generators with numpy over
the counting coordinates (group coordinates never constrain membership and
are projected away), so closures, inverses, modularizations, and radicals
can be cross-checked without touching the kernel's generator arithmetic.

Box margins follow one rule, used by every caller: an H-closed set has all
its minimal points within c + maxatom + maxgen + window per coordinate, and
any failure of "inverse contained in H" has a witness clipped into the same
box.  The margin arguments are spelled out in docs/exactness.md.
"""

from __future__ import annotations

import functools

import numpy as np


@functools.lru_cache(maxsize=None)
def coord_members(coord, hi: int) -> np.ndarray:
    """Membership of [0, hi] in one counting coordinate, from its generators.

    Cached per (coordinate, hi); callers must not write into the result.
    """
    ok = np.zeros(hi + 1, dtype=bool)
    ok[0] = True
    if coord.kind == "free":
        ok[:] = True
        return ok
    for x in range(1, hi + 1):
        ok[x] = any(x >= g and ok[x - g] for g in coord.gens)
    return ok


@functools.lru_cache(maxsize=None)
def coord_atoms(coord) -> tuple:
    if coord.kind == "free":
        return (1,)
    top = max(coord.gens)
    ok = coord_members(coord, top)
    return tuple(g for g in sorted(set(coord.gens))
                 if not any(ok[y] and ok[g - y] for y in range(1, g)))


@functools.lru_cache(maxsize=None)
def coord_conductor(coord) -> int:
    if coord.kind == "free":
        return 0
    top = max(coord.gens) ** 2 + 1
    ok = coord_members(coord, top)
    gaps = [x for x in range(top + 1) if not ok[x]]
    return gaps[-1] + 1 if gaps else 0


def shift(arr: np.ndarray, off) -> np.ndarray:
    """result[z] = arr[z - off], False past the edges."""
    if arr.ndim == 0:
        return arr.copy()
    out = np.zeros_like(arr)
    src, dst = [], []
    for ax, o in enumerate(off):
        n = arr.shape[ax]
        if abs(o) >= n:
            return out
        if o >= 0:
            dst.append(slice(o, n))
            src.append(slice(0, n - o))
        else:
            dst.append(slice(0, n + o))
            src.append(slice(-o, n))
    out[tuple(dst)] = arr[tuple(src)]
    return out


class Grid:
    """Dense membership of one model over [lo, hi]^k, counting coords only."""

    def __init__(self, H, lo: int, hi: int):
        self.H = H
        self.idx = tuple(H.counting)
        self.k = len(self.idx)
        self.lo, self.hi = lo, hi
        coords = [H.coords[i] for i in self.idx]
        n = hi - lo + 1
        member = np.ones((), dtype=bool)
        for c in coords:
            line = np.zeros(n, dtype=bool)
            full = coord_members(c, hi)
            line[max(0, -lo):] = full[max(0, lo):]
            member = np.logical_and.outer(member, line)
        self.member = member
        self.atom_vecs = []
        for pos, c in enumerate(coords):
            for a in coord_atoms(c):
                v = [0] * self.k
                v[pos] = a
                self.atom_vecs.append(tuple(v))

    def proj(self, v) -> tuple:
        return tuple(v[i] for i in self.idx)

    def has(self, arr: np.ndarray, point) -> bool:
        if self.k == 0:
            return bool(arr)
        iz = tuple(p - self.lo for p in point)
        if any(i < 0 or i >= arr.shape[ax] for ax, i in enumerate(iz)):
            return False
        return bool(arr[iz])

    def ideal(self, gens) -> np.ndarray:
        """X = union of g + H over the projected generators."""
        out = np.zeros_like(self.member)
        for g in gens:
            out |= shift(self.member, self.proj(g))
        return out

    def inverse(self, gens) -> np.ndarray:
        """z with z + g in H for every generator; exact per grid point."""
        out = np.ones_like(self.member)
        for g in gens:
            out &= shift(self.member, tuple(-x for x in self.proj(g)))
        return out

    def minima(self, closed: np.ndarray) -> list:
        """Antichain of minimal points of an H-closed set within the box."""
        if self.k == 0:
            return [()] if closed else []
        mask = closed.copy()
        for a in self.atom_vecs:
            mask &= ~shift(closed, a)
        return [tuple(int(x) + self.lo for x in iz) for iz in np.argwhere(mask)]

    def window_points(self, arr: np.ndarray, lo: int, hi: int) -> set:
        """Projected points of arr with every coordinate in [lo, hi]."""
        if self.k == 0:
            return {()} if arr else set()
        pts = set()
        it = np.argwhere(arr)
        for iz in it:
            p = tuple(int(x) + self.lo for x in iz)
            if all(lo <= c <= hi for c in p):
                pts.add(p)
        return pts


def _margins(H, gens, window: int) -> tuple:
    coords = [H.coords[i] for i in H.counting]
    maxg = max((abs(x) for g in gens for i, x in enumerate(g)
                if i in H.counting), default=0)
    maxatom = max((a for c in coords for a in coord_atoms(c)), default=1)
    cond = max((coord_conductor(c) for c in coords), default=0)
    lo = -(maxg + maxatom + 1)
    hi = window + cond + maxg + maxatom + 1
    return lo, hi


def inverse_points(H, gens, window: int) -> set:
    """(gens + H)^{-1} restricted to [-window, window]^k, definitionally."""
    lo, hi = _margins(H, gens, window)
    grid = Grid(H, min(lo, -window), max(hi, window))
    return grid.window_points(grid.inverse(gens), -window, window)


def v_members(H, gens, window: int) -> set:
    """((gens + H)^{-1})^{-1} on [0, window]^k via the double inverse."""
    lo, hi = _margins(H, gens, window)
    grid = Grid(H, lo, hi)
    mins = grid.minima(grid.inverse(gens))
    out = np.ones_like(grid.member)
    for m in mins:
        out &= shift(grid.member, tuple(-x for x in m))
    return grid.window_points(out, 0, window)


def mod_st_members(H, gens, window: int) -> set:
    """Definitional membership of X_{mod(s,t)} on [0, window]^k.

    x qualifies iff F = {u in H : x + u in X_s} has F_t = H; the maximal F
    decides (the condition is monotone in F), its t-triviality via the
    inverse criterion: F_t = H iff F^{-1} has no point outside H.
    """
    lo, hi = _margins(H, gens, window)
    grid = Grid(H, lo, hi)
    Xs = grid.ideal(gens)
    accepted = set()
    for x in _box_points(grid, window):
        fstar = grid.member & shift(Xs, tuple(-c for c in x))
        viol = np.ones_like(grid.member)
        for m in grid.minima(fstar):
            viol &= shift(grid.member, tuple(-c for c in m))
        if not bool(np.any(viol & ~grid.member)):
            accepted.add(x)
    return accepted


def _box_points(grid: Grid, window: int):
    if grid.k == 0:
        yield ()
        return
    def rec(prefix):
        if len(prefix) == grid.k:
            yield tuple(prefix)
            return
        for c in range(window + 1):
            yield from rec(prefix + [c])
    yield from rec([])


def radical_members(H, gens, window: int) -> set:
    """sqrt(gens + H) on [0, window]^k: one large multiple decides.

    X is an ideal, so k*x in X is monotone in k; K = cond + maxgen + 2 is
    past every conductor on the support of x, making the single test exact.
    """
    coords = [H.coords[i] for i in H.counting]
    cond = max((coord_conductor(c) for c in coords), default=0)
    maxg = max((abs(x) for g in gens for i, x in enumerate(g)
                if i in H.counting), default=0)
    K = cond + maxg + 2
    tables = [coord_members(c, cond + 1) for c in coords]

    def in_H(p) -> bool:
        for c, table, x in zip(coords, tables, p):
            if x < 0:
                return False
            if x <= cond and not table[min(x, len(table) - 1)]:
                return False
        return True

    gens_p = [tuple(g[i] for i in H.counting) for g in gens]
    lo, hi = _margins(H, gens, window)
    grid = Grid(H, lo, hi)
    out = set()
    for x in _box_points(grid, window):
        if not grid.has(grid.member, x):
            continue
        big = tuple(K * c for c in x)
        if any(in_H(tuple(b - gc for b, gc in zip(big, gp)))
               for gp in gens_p):
            out.add(x)
    return out


def primary_violation_point(H, gens, radius: int):
    """Lex-first (x, y) in the box with x+y in X, y outside sqrt X, x outside X."""
    lo, hi = _margins(H, gens, 2 * radius + 1)
    grid = Grid(H, lo, hi)
    X = grid.ideal(gens)
    rad = radical_members(H, gens, 2 * radius + 1)
    box = sorted(grid.window_points(grid.member, 0, radius))
    for x in box:
        if grid.has(X, x):
            continue
        for y in box:
            if y in rad:
                continue
            z = tuple(a + b for a, b in zip(x, y))
            if grid.has(X, z):
                return x, y
    return None


def is_prime_box(H, gens, radius: int) -> bool:
    """Proper, and no box pair x+y lands in X with both factors outside."""
    lo, hi = _margins(H, gens, 2 * radius + 1)
    grid = Grid(H, lo, hi)
    X = grid.ideal(gens)
    zero = (0,) * grid.k
    if grid.has(X, zero):
        return False
    box = sorted(grid.window_points(grid.member, 0, radius))
    outside = [x for x in box if not grid.has(X, x)]
    for x in outside:
        for y in outside:
            z = tuple(a + b for a, b in zip(x, y))
            if grid.has(X, z):
                return False
    return True


def member_points(H, gens, window: int) -> set:
    """(gens + H) intersected with [0, window]^k."""
    lo, hi = _margins(H, gens, window)
    grid = Grid(H, lo, hi)
    return grid.window_points(grid.ideal(gens), 0, window)
