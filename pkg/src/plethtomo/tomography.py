"""Point sets in N^3, cones, marginals, pyramids, and exact counters.

The cone of weakly decreasing triples is "closed", that of strictly
decreasing triples "open".  The sum-marginal of a point set pools the three
coordinate histograms; counters answer how many point sets (or pyramids)
realize a prescribed sum-marginal, and how many realize prescribed per-axis
marginals on a triangular grid layer or in all of N^3.

Two complementary counting engines are implemented, both exact:

* a level engine that walks coordinate-sum layers in increasing order with
  lower/upper bounds on the achievable total coordinate sum; instances
  whose coordinate sum is close to the minimum for their size collapse to a
  few forced layers, which is what makes pipeline-scale promise instances
  countable;
* an index engine that repeatedly resolves the highest marginal index with
  positive residual; better suited to small instances far above the
  minimum coordinate sum.

Dispatch is on that distance ("excess").  Results of the two agree
everywhere; the tests exercise them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .partitions import Composition, canonical, pad

Point = tuple[int, int, int]
ConeKind = Literal["open", "closed"]

_LEVEL_ENGINE_EXCESS_CAP = 3


def in_cone(p: Point, kind: ConeKind) -> bool:
    x, y, z = p
    if min(p) < 0:
        return False
    if kind == "closed":
        return x >= y >= z
    if kind == "open":
        return x > y > z
    raise ValueError(f"unknown cone kind {kind!r}")


def sum_marginal(points: Sequence[Point] | frozenset[Point] | set[Point]) -> Composition:
    """S_i = number of coordinate slots equal to i, pooled over all axes."""
    top = -1
    for p in points:
        top = max(top, p[0], p[1], p[2])
    s = [0] * (top + 1)
    for x, y, z in points:
        s[x] += 1
        s[y] += 1
        s[z] += 1
    return canonical(s)


def axis_marginals(points: Sequence[Point] | frozenset[Point] | set[Point]) -> tuple[Composition, Composition, Composition]:
    top = -1
    for p in points:
        top = max(top, p[0], p[1], p[2])
    xs = [0] * (top + 1)
    ys = [0] * (top + 1)
    zs = [0] * (top + 1)
    for x, y, z in points:
        xs[x] += 1
        ys[y] += 1
        zs[z] += 1
    return canonical(xs), canonical(ys), canonical(zs)


def coordinate_sum(c: Composition) -> int:
    """B(lambda) = sum_i i*lambda_i; equals the total coordinate sum of any
    realizing point set."""
    return sum(i * v for i, v in enumerate(c))


def _dominated(p: Point, kind: ConeKind) -> Iterator[Point]:
    """Cone points strictly below p in the componentwise order."""
    x, y, z = p
    for qx in range(x + 1):
        for qy in range(min(qx, y) + 1) if kind == "closed" else range(min(qx - 1, y) + 1):
            for qz in range(min(qy, z) + 1) if kind == "closed" else range(min(qy - 1, z) + 1):
                q = (qx, qy, qz)
                if q != p and in_cone(q, kind):
                    yield q


def is_pyramid(points: frozenset[Point] | set[Point] | Sequence[Point], kind: ConeKind) -> bool:
    """True iff the set is downward closed inside the cone.  Raises if some
    point lies outside the cone."""
    pset = set(points)
    for p in pset:
        if not in_cone(p, kind):
            raise ValueError(f"point {p} is outside the {kind} cone")
    for p in pset:
        for q in _dominated(p, kind):
            if q not in pset:
                return False
    return True


def complete_pyramid(r: int, kind: ConeKind) -> frozenset[Point]:
    """All cone points with coordinate sum <= r."""
    pts = set()
    for x in range(r + 1):
        for y in range(min(x, r - x) + 1):
            for z in range(min(y, r - x - y) + 1):
                p = (x, y, z)
                if in_cone(p, kind):
                    pts.add(p)
    return frozenset(pts)


def full_simplex(r: int) -> frozenset[Point]:
    """All of N^3 with coordinate sum <= r."""
    return frozenset(
        (x, y, z)
        for x in range(r + 1)
        for y in range(r + 1 - x)
        for z in range(r + 1 - x - y)
    )


def xi(i: int, kind: ConeKind) -> int:
    """Number of single cone points with coordinate sum exactly i, by the
    closed forms round((i+3)^2/12) and round(i^2/12).  The fractional part
    is never 1/2, so integer rounding is unambiguous."""
    if i < 0:
        return 0
    if kind == "closed":
        return ((i + 3) ** 2 + 6) // 12
    if kind == "open":
        return (i * i + 6) // 12
    raise ValueError(f"unknown cone kind {kind!r}")


def xi_by_enumeration(i: int, kind: ConeKind) -> int:
    """Same count by direct layer enumeration; the closed form is tested
    against this."""
    count = 0
    for x in range(i + 1):
        for y in range(min(x, i - x) + 1):
            z = i - x - y
            if z <= y and in_cone((x, y, z), kind):
                count += 1
    return count


def iota(n: int, kind: ConeKind) -> int:
    """Smallest level whose cumulative layer capacity reaches n."""
    if n < 1:
        raise ValueError("iota is defined for n >= 1")
    total = 0
    level = 0
    while True:
        total += xi(level, kind)
        if total >= n:
            return level
        level += 1


def beta(n: int, kind: ConeKind) -> int:
    """Minimum coordinate sum of any n-point set in the cone: fill layers
    greedily from the origin outward."""
    if n < 0:
        raise ValueError("beta is defined for n >= 0")
    total = 0
    placed = 0
    level = 0
    while placed < n:
        take = min(xi(level, kind), n - placed)
        total += take * level
        placed += take
        level += 1
    return total


def is_promise_instance(lam: Composition, kind: ConeKind) -> bool:
    """True iff the instance size is a multiple of 3 and its coordinate sum
    attains the minimum for that size."""
    lam = canonical(lam)
    total = sum(lam)
    if total % 3 != 0:
        return False
    return coordinate_sum(lam) == beta(total // 3, kind)


# ---------------------------------------------------------------------------
# counting engines


def _marginal_of(p: Point, length: int) -> tuple[int, ...]:
    m = [0] * length
    m[p[0]] += 1
    m[p[1]] += 1
    m[p[2]] += 1
    return tuple(m)


def _candidates(lam: tuple[int, ...], kind: ConeKind) -> list[Point]:
    """Cone points whose own marginal fits under lam (coordinates confined
    to the marginal support)."""
    length = len(lam)
    out = []
    for x in range(length):
        for y in range(min(x, length - 1) + 1) if kind == "closed" else range(min(x - 1, length - 1) + 1):
            for z in range(y + 1) if kind == "closed" else range(y):
                p = (x, y, z)
                m = [0] * length
                m[x] += 1
                m[y] += 1
                m[z] += 1
                if all(m[i] <= lam[i] for i in range(length)):
                    out.append(p)
    return out


def _closure_filter(cands: list[Point], kind: ConeKind) -> tuple[list[Point], dict[Point, tuple[Point, ...]]]:
    """Restrict to points whose full dominated set stays inside the
    candidate pool (a pyramid can never contain the others), and record the
    dominated sets."""
    pool = set(cands)
    dom: dict[Point, tuple[Point, ...]] = {}
    changed = True
    while changed:
        changed = False
        for p in sorted(pool, key=lambda q: (q[0] + q[1] + q[2], q)):
            below = tuple(_dominated(p, kind))
            if any(q not in pool for q in below):
                pool.discard(p)
                changed = True
            else:
                dom[p] = below
    kept = [p for p in cands if p in pool]
    return kept, {p: dom[p] for p in kept}


def _count_levelwise(lam: tuple[int, ...], kind: ConeKind, pyramids_only: bool) -> int:
    """Count point sets (or pyramids) with sum-marginal lam by choosing the
    subset of each coordinate-sum layer in increasing order.

    Feasibility pruning: with m points still to place and B_res coordinate
    sum still to spend, filling the m cheapest available slots from the
    current layer up must not exceed B_res, and the m most expensive must
    reach it.  Pyramid closure is checked incrementally: all points a
    candidate dominates live in lower layers, already decided.
    """
    n = sum(lam) // 3
    target_b = coordinate_sum(lam)
    cands = _candidates(lam, kind)
    dom: dict[Point, tuple[Point, ...]] = {}
    if pyramids_only:
        cands, dom = _closure_filter(cands, kind)
    by_level: dict[int, list[Point]] = {}
    for p in cands:
        by_level.setdefault(p[0] + p[1] + p[2], []).append(p)
    levels = sorted(by_level)
    avail = [len(by_level[j]) for j in levels]

    nlev = len(levels)
    suffix_cap = [0] * (nlev + 1)
    for i in range(nlev - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + avail[i]

    def min_spend(i: int, m: int) -> int:
        total = 0
        j = i
        while m > 0 and j < nlev:
            take = min(avail[j], m)
            total += take * levels[j]
            m -= take
            j += 1
        return total

    def max_spend(i: int, m: int) -> int:
        total = 0
        j = nlev - 1
        while m > 0 and j >= i:
            take = min(avail[j], m)
            total += take * levels[j]
            m -= take
            j -= 1
        return total

    length = len(lam)
    chosen: set[Point] = set()

    def feasible(level_idx: int, here_avail: int, m: int, b_res: int) -> bool:
        """Can m more points spending exactly b_res still be placed, with
        here_avail slots left on the current layer and full layers above?"""
        if suffix_cap[level_idx + 1] + here_avail < m:
            return False
        # cheapest completion: grab current-layer slots first
        take = min(here_avail, m)
        lo = take * levels[level_idx] + min_spend(level_idx + 1, m - take)
        if lo > b_res:
            return False
        # dearest completion: grab the deepest layers first
        hi = max_spend(level_idx + 1, m)
        rest = m - min(m, suffix_cap[level_idx + 1])
        hi += min(here_avail, rest) * levels[level_idx]
        return hi >= b_res

    def subsets(level_idx: int, pool: list[Point], pos: int, residual: list[int], m: int, b_res: int) -> int:
        """Take/skip over this layer's pool, then descend to the next layer."""
        if pos == len(pool):
            return level(level_idx + 1, residual, m, b_res)
        if not feasible(level_idx, len(pool) - pos, m, b_res):
            return 0
        total = 0
        if feasible(level_idx, len(pool) - pos - 1, m, b_res):
            total += subsets(level_idx, pool, pos + 1, residual, m, b_res)
        if m == 0:
            return total
        p = pool[pos]
        mvec = _marginal_of(p, length)
        if any(residual[i] < mvec[i] for i in range(length)):
            return total
        if pyramids_only and any(q not in chosen for q in dom[p]):
            return total
        for i in range(length):
            residual[i] -= mvec[i]
        chosen.add(p)
        total += subsets(level_idx, pool, pos + 1, residual, m - 1, b_res - levels[level_idx])
        chosen.discard(p)
        for i in range(length):
            residual[i] += mvec[i]
        return total

    def level(level_idx: int, residual: list[int], m: int, b_res: int) -> int:
        if m == 0:
            return 1 if all(v == 0 for v in residual) else 0
        if level_idx == nlev or suffix_cap[level_idx] < m:
            return 0
        if min_spend(level_idx, m) > b_res or max_spend(level_idx, m) < b_res:
            return 0
        return subsets(level_idx, by_level[levels[level_idx]], 0, residual, m, b_res)

    return level(0, list(lam), n, target_b)


def _count_by_index(lam: tuple[int, ...], kind: ConeKind, pyramids_only: bool) -> int:
    """Count by resolving the highest index with positive residual: pick the
    sub-multiset of candidates touching that index whose contribution there
    is exact, then recurse on the rest (which may no longer touch it)."""
    cands = _candidates(lam, kind)
    length = len(lam)
    chosen: list[Point] = []

    def rec(pool: list[Point], residual: list[int]) -> int:
        j = -1
        for i in range(length - 1, -1, -1):
            if residual[i] > 0:
                j = i
                break
        if j < 0:
            if pyramids_only and not is_pyramid(chosen, kind):
                return 0
            return 1
        touching = [p for p in pool if p[0] == j or p[1] == j or p[2] == j]
        rest = [p for p in pool if not (p[0] == j or p[1] == j or p[2] == j)]

        def pick(pos: int, residual: list[int], need_j: int) -> int:
            if need_j == 0:
                return rec(rest, residual)
            if pos == len(touching):
                return 0
            total = 0
            # not enough j-contribution left in the pool
            contrib_left = 0
            for q in touching[pos:]:
                contrib_left += (q[0] == j) + (q[1] == j) + (q[2] == j)
                if contrib_left >= need_j:
                    break
            if contrib_left < need_j:
                return 0
            p = touching[pos]
            mvec = _marginal_of(p, length)
            if all(residual[i] >= mvec[i] for i in range(length)):
                for i in range(length):
                    residual[i] -= mvec[i]
                chosen.append(p)
                total += pick(pos + 1, residual, need_j - mvec[j])
                chosen.pop()
                for i in range(length):
                    residual[i] += mvec[i]
            total += pick(pos + 1, residual, need_j)
            return total

        return pick(0, list(residual), residual[j])

    return rec(cands, list(lam))


def _count_reference(lam: tuple[int, ...], kind: ConeKind, pyramids_only: bool) -> int:
    """Plain take/skip enumeration over all candidates; exponential and only
    suitable for tiny instances.  Kept as an independent cross-check."""
    cands = _candidates(lam, kind)
    length = len(lam)
    n = sum(lam) // 3

    def rec(idx: int, residual: list[int], m: int, chosen: list[Point]) -> int:
        if m == 0:
            if any(residual):
                return 0
            if pyramids_only and not is_pyramid(chosen, kind):
                return 0
            return 1
        if idx == len(cands) or len(cands) - idx < m:
            return 0
        total = rec(idx + 1, residual, m, chosen)
        p = cands[idx]
        mvec = _marginal_of(p, length)
        if all(residual[i] >= mvec[i] for i in range(length)):
            for i in range(length):
                residual[i] -= mvec[i]
            chosen.append(p)
            total += rec(idx + 1, residual, m - 1, chosen)
            chosen.pop()
            for i in range(length):
                residual[i] += mvec[i]
        return total

    return rec(0, list(lam), n, [])


def _count(lam: Composition, kind: ConeKind, pyramids_only: bool) -> int:
    lam = canonical(lam)
    if not lam:
        return 1
    total = sum(lam)
    if total % 3 != 0:
        return 0
    n = total // 3
    excess = coordinate_sum(lam) - beta(n, kind)
    if excess < 0:
        return 0
    if excess <= _LEVEL_ENGINE_EXCESS_CAP:
        return _count_levelwise(lam, kind, pyramids_only)
    return _count_by_index(lam, kind, pyramids_only)


def count_point_sets(lam: Composition, kind: ConeKind) -> int:
    """Exact number of point sets in the cone with the given sum-marginal."""
    return _count(lam, kind, pyramids_only=False)


def count_pyramids(lam: Composition, kind: ConeKind) -> int:
    """Exact number of pyramids in the cone with the given sum-marginal."""
    return _count(lam, kind, pyramids_only=True)


# ---------------------------------------------------------------------------
# grid-layer and axis-marginal instances


@dataclass(frozen=True)
class XRayInstance2D:
    """Triangular-grid instance: marginals over the index range [0, r]."""

    r: int
    mu: Composition
    nu: Composition
    rho: Composition

    def __post_init__(self):
        object.__setattr__(self, "mu", canonical(self.mu))
        object.__setattr__(self, "nu", canonical(self.nu))
        object.__setattr__(self, "rho", canonical(self.rho))
        for name in ("mu", "nu", "rho"):
            if len(getattr(self, name)) > self.r + 1:
                raise ValueError(f"{name} marginal longer than grid range [0,{self.r}]")


@dataclass(frozen=True)
class SymInstance:
    """Sum-marginal instance; grid_r present for single-layer (2D) variants."""

    marginal: Composition
    cone: ConeKind
    grid_r: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "marginal", canonical(self.marginal))


def count_2dxray(inst: XRayInstance2D) -> int:
    """Point sets inside the layer x+y+z = r with the given axis marginals."""
    r = inst.r
    mu = list(pad(inst.mu, r + 1))
    nu = list(pad(inst.nu, r + 1))
    rho = list(pad(inst.rho, r + 1))
    n = sum(mu)
    if sum(nu) != n or sum(rho) != n:
        return 0
    if sum(i * (mu[i] + nu[i] + rho[i]) for i in range(r + 1)) != r * n:
        return 0

    def level(x: int, nu_res: list[int], rho_res: list[int]) -> int:
        if x < 0:
            return 1
        cells = [(y, r - x - y) for y in range(r - x + 1)]

        def pick(pos: int, need: int) -> int:
            if need == 0:
                return level(x - 1, nu_res, rho_res)
            if pos == len(cells) or len(cells) - pos < need:
                return 0
            total = pick(pos + 1, need)
            y, z = cells[pos]
            if nu_res[y] > 0 and rho_res[z] > 0:
                nu_res[y] -= 1
                rho_res[z] -= 1
                total += pick(pos + 1, need - 1)
                nu_res[y] += 1
                rho_res[z] += 1
            return total

        return pick(0, mu[x])

    return level(r, nu, rho)


def count_sym_2dxray(lam: Composition, r: int, kind: ConeKind) -> int:
    """Point sets inside the cone slice of the layer x+y+z = r with the
    given sum-marginal."""
    lam = canonical(lam)
    if not lam:
        return 1
    total = sum(lam)
    if total % 3 != 0:
        return 0
    n = total // 3
    if coordinate_sum(lam) != r * n:
        return 0
    length = len(lam)
    cands = [p for p in _candidates(lam, kind) if sum(p) == r]

    def rec(idx: int, residual: list[int], m: int) -> int:
        if m == 0:
            return 1 if not any(residual) else 0
        if idx == len(cands) or len(cands) - idx < m:
            return 0
        total = rec(idx + 1, residual, m)
        p = cands[idx]
        mvec = _marginal_of(p, length)
        if all(residual[i] >= mvec[i] for i in range(length)):
            for i in range(length):
                residual[i] -= mvec[i]
            total += rec(idx + 1, residual, m - 1)
            for i in range(length):
                residual[i] += mvec[i]
        return total

    return rec(0, list(lam), n)


def count_3dxray(mu: Composition, nu: Composition, rho: Composition) -> int:
    """Point sets in N^3 with the given X-, Y- and Z-marginals."""
    mu, nu, rho = canonical(mu), canonical(nu), canonical(rho)
    n = sum(mu)
    if sum(nu) != n or sum(rho) != n:
        return 0
    if n == 0:
        return 1
    ys = [y for y, v in enumerate(nu) if v > 0]
    zs = [z for z, v in enumerate(rho) if v > 0]

    def level(x: int, nu_res: list[int], rho_res: list[int]) -> int:
        if x < 0:
            return 1
        need = mu[x] if x < len(mu) else 0
        cells = [(y, z) for y in ys for z in zs]

        def pick(pos: int, need: int) -> int:
            if need == 0:
                return level(x - 1, nu_res, rho_res)
            if pos == len(cells) or len(cells) - pos < need:
                return 0
            total = pick(pos + 1, need)
            y, z = cells[pos]
            if nu_res[y] > 0 and rho_res[z] > 0:
                nu_res[y] -= 1
                rho_res[z] -= 1
                total += pick(pos + 1, need - 1)
                nu_res[y] += 1
                rho_res[z] += 1
            return total

        return pick(0, need)

    return level(len(mu) - 1, list(nu), list(rho))


# ---------------------------------------------------------------------------
# JSON instance schema (shared with the CLI)


def instance_from_dict(data: dict) -> XRayInstance2D | SymInstance | tuple[Composition, Composition, Composition]:
    """Decode the JSON instance schema:
    {"kind": "2dxray"|"sym2d"|"3dxray"|"sym3d", "r": int?, "cone": str?, "marginals": {...}}
    """
    kind = data.get("kind")
    marg = data.get("marginals", {})
    if kind == "2dxray":
        return XRayInstance2D(int(data["r"]), tuple(marg["x"]), tuple(marg["y"]), tuple(marg["z"]))
    if kind == "sym2d":
        return SymInstance(tuple(marg["sum"]), data["cone"], int(data["r"]))
    if kind == "sym3d":
        return SymInstance(tuple(marg["sum"]), data["cone"], None)
    if kind == "3dxray":
        return (canonical(marg["x"]), canonical(marg["y"]), canonical(marg["z"]))
    raise ValueError(f"unknown instance kind {kind!r}")


def count_instance(data: dict) -> int:
    inst = instance_from_dict(data)
    if isinstance(inst, XRayInstance2D):
        return count_2dxray(inst)
    if isinstance(inst, SymInstance):
        if inst.grid_r is not None:
            return count_sym_2dxray(inst.marginal, inst.grid_r, inst.cone)
        return count_point_sets(inst.marginal, inst.cone)
    mu, nu, rho = inst
    return count_3dxray(mu, nu, rho)
