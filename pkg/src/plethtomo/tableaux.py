"""Semistandard Young tableaux: enumeration, Kostka numbers, weighted counts.

Tableaux here are fillings of a partition shape with letters 0..k-1, weakly
increasing along rows and strictly increasing down columns.  The weighted
counting routine is the workhorse for extracting weight-space dimensions of
plethysms: it counts SSYT over an arbitrary ordered alphabet whose letters
carry vector weights, with a prescribed total weight.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Composition, Partition, canonical, pad, partitions_of

Tableau = tuple[tuple[int, ...], ...]


def enumerate_ssyt(shape: Partition, alphabet_size: int) -> list[Tableau]:
    """All SSYT of the given shape with entries in 0..alphabet_size-1."""
    shape = canonical(shape)
    if not shape:
        return [()]
    if len(shape) > alphabet_size:
        return []
    rows = len(shape)
    out: list[Tableau] = []
    grid = [[0] * shape[r] for r in range(rows)]

    cells = [(r, c) for r in range(rows) for c in range(shape[r])]

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[idx]
        lo = grid[r][c - 1] if c > 0 else 0
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, alphabet_size):
            grid[r][c] = v
            fill(idx + 1)

    fill(0)
    return out


def tableau_weight(t: Tableau, alphabet_size: int) -> tuple[int, ...]:
    """Entry-count vector: weight[i] = number of boxes holding letter i."""
    w = [0] * alphabet_size
    for row in t:
        for v in row:
            w[v] += 1
    return tuple(w)


def _horizontal_strips(alpha: tuple[int, ...], mu: tuple[int, ...], strip_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Shapes beta with alpha <= beta <= mu and beta/alpha a horizontal strip.

    Horizontal strip: beta_i >= alpha_i and beta_{i+1} <= alpha_i (no two new
    boxes share a column).  Shapes are padded to len(mu).
    """
    n = len(mu)
    a = pad(alpha, n)

    def rec(i: int, prefix: tuple[int, ...], used: int) -> Iterator[tuple[int, ...]]:
        if strip_size is not None and used > strip_size:
            return
        if i == n:
            if strip_size is None or used == strip_size:
                yield prefix
            return
        hi = mu[i]
        if i > 0:
            hi = min(hi, prefix[i - 1])
        lo = a[i]
        cap = a[i - 1] if i > 0 else hi
        hi = min(hi, cap)
        for b in range(lo, hi + 1):
            yield from rec(i + 1, prefix + (b,), used + b - a[i])

    yield from rec(0, (), 0)


@lru_cache(maxsize=None)
def kostka(mu: Partition, weight: Composition) -> int:
    """Number of SSYT of shape mu and weight ``weight`` (Kostka number).

    Computed by a horizontal-strip DP over the letters of the weight, one
    letter at a time; no tableaux are materialized.
    """
    mu = canonical(mu)
    w = canonical(weight)
    if sum(mu) != sum(w):
        raise ValueError(f"|mu|={sum(mu)} != |weight|={sum(w)}")
    if not mu:
        return 1
    states: dict[tuple[int, ...], int] = {(0,) * len(mu): 1}
    for letter_count in w:
        new: dict[tuple[int, ...], int] = {}
        for alpha, cnt in states.items():
            for beta in _horizontal_strips(alpha, mu, letter_count):
                new[beta] = new.get(beta, 0) + cnt
        states = new
        if not states:
            return 0
    return states.get(mu, 0)


def ssyt_weights(shape: Partition, k: int, bound: Composition | None = None) -> list[tuple[int, ...]]:
    """Weight vectors (length k) of all SSYT of ``shape`` over 0..k-1.

    One entry per tableau, so weights repeat with their multiplicity.  With
    ``bound`` given, only tableaux whose weight is entrywise <= bound are
    produced; the search prunes on the bound as it fills boxes.
    """
    shape = canonical(shape)
    if not shape:
        return [(0,) * k]
    if len(shape) > k:
        return []
    cap = list(pad(bound, k)) if bound is not None else [sum(shape)] * k
    rows = len(shape)
    cells = [(r, c) for r in range(rows) for c in range(shape[r])]
    grid = [[0] * shape[r] for r in range(rows)]
    weight = [0] * k
    out: list[tuple[int, ...]] = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(tuple(weight))
            return
        r, c = cells[idx]
        lo = grid[r][c - 1] if c > 0 else 0
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, k):
            if weight[v] + 1 > cap[v]:
                continue
            grid[r][c] = v
            weight[v] += 1
            fill(idx + 1)
            weight[v] -= 1

    fill(0)
    return out


def count_weighted_ssyt(mu: Partition, letter_weights: Sequence[tuple[int, ...]], target: tuple[int, ...]) -> int:
    """Count SSYT of shape mu over the ordered alphabet 0..len(letters)-1
    where each box holding letter i contributes letter_weights[i], and the
    total contribution must equal ``target`` exactly.

    States are (subshape, partial weight); each letter extends the subshape
    by a horizontal strip of any size s, adding s copies of its weight.
    Partial weights exceeding ``target`` in any coordinate are pruned.
    """
    mu = canonical(mu)
    if not mu:
        return 1 if all(v == 0 for v in target) else 0
    nboxes = sum(mu)
    dim = len(target)
    zero_shape = (0,) * len(mu)
    full = pad(mu, len(mu))
    states: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {(zero_shape, (0,) * dim): 1}

    strip_cache: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}

    def strips(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
        got = strip_cache.get(alpha)
        if got is None:
            base = sum(alpha)
            got = [(b, sum(b) - base) for b in _horizontal_strips(alpha, mu)]
            strip_cache[alpha] = got
        return got

    remaining = len(letter_weights)
    for w in letter_weights:
        new: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        remaining -= 1
        for (alpha, acc), cnt in states.items():
            boxes_left = nboxes - sum(alpha)
            for beta, s in strips(alpha):
                if s == 0:
                    key = (alpha, acc)
                    new[key] = new.get(key, 0) + cnt
                    continue
                # last letters cannot fill the rest of the shape: prune
                if boxes_left - s > 0 and remaining == 0:
                    continue
                vec = list(acc)
                ok = True
                for i in range(dim):
                    vec[i] += s * w[i]
                    if vec[i] > target[i]:
                        ok = False
                        break
                if ok:
                    key = (beta, tuple(vec))
                    new[key] = new.get(key, 0) + cnt
        states = new
        if not states:
            return 0
    return states.get((full, tuple(target)), 0)


def dim_weyl(lam: Partition, k: int) -> int:
    """Dimension of the irreducible GL_k module of highest weight lam
    (number of SSYT of shape lam over a k-letter alphabet), by the
    hook-content formula.
    """
    lam = canonical(lam)
    if not lam:
        return 1
    if len(lam) > k:
        return 0
    conj = tuple(sum(1 for v in lam if v > i) for i in range(lam[0]))
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= k + j - i
            den *= row - j + conj[j] - i - 1
    return num // den


def kostka_row(nu: Partition, k: int) -> dict[Partition, int]:
    """All nonzero Kostka numbers K_{nu,pi} over partitions pi of |nu| with
    at most k parts, i.e. the monomial expansion of the Schur polynomial."""
    nu = canonical(nu)
    out: dict[Partition, int] = {}
    for pi in partitions_of(sum(nu), max_parts=k):
        val = kostka(nu, pi)
        if val:
            out[pi] = val
    return out
