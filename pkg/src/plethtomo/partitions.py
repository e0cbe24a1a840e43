"""Compositions and partitions as canonical integer tuples.

A composition is a finite tuple of nonnegative integers with no trailing
zeros; a partition additionally has nonincreasing entries.  Everything is
indexed from 0.  All values are plain Python ints, so entries and sizes are
arbitrary precision.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def canonical(parts: Iterable[int]) -> Composition:
    """Drop trailing zeros and validate nonnegativity."""
    out = list(parts)
    for v in out:
        if v < 0:
            raise ValueError(f"negative entry {v} in composition {out}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_partition(c: Iterable[int]) -> bool:
    """True iff the canonical form of ``c`` is nonincreasing."""
    p = canonical(c)
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def size(c: Iterable[int]) -> int:
    return sum(c)


def height(p: Composition) -> int:
    """Number of nonzero parts (for canonical partitions: the length)."""
    return sum(1 for v in p if v > 0)


def width(p: Composition) -> int:
    return p[0] if p else 0


def transpose(p: Iterable[int]) -> Partition:
    """Conjugate partition: exchange rows and columns of the Young diagram."""
    lam = canonical(p)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v > i) for i in range(lam[0]))


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in reverse lexicographic order."""
    if n < 0:
        return
    bound = n if max_part is None else min(max_part, n)
    parts = n if max_parts is None else max_parts

    def rec(remaining: int, largest: int, slots: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for v in range(min(largest, remaining), 0, -1):
            if remaining - v > v * (slots - 1):
                continue
            yield from rec(remaining - v, v, slots - 1, prefix + (v,))

    yield from rec(n, bound, parts, ())


def compositions_of(n: int, length: int) -> Iterator[Composition]:
    """All length-``length`` vectors of nonnegative ints summing to n (not canonicalized)."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions_of(n - first, length - 1):
            yield (first,) + rest


def pad(c: Composition, length: int) -> tuple[int, ...]:
    """Right-pad with zeros to the given length."""
    if len(c) > length:
        raise ValueError(f"composition {c} longer than {length}")
    return c + (0,) * (length - len(c))


def add(a: Composition, b: Composition) -> Composition:
    n = max(len(a), len(b))
    return canonical(x + y for x, y in zip(pad(a, n), pad(b, n)))


def subtract(a: Composition, b: Composition) -> Composition | None:
    """a - b entrywise, or None if any entry would go negative."""
    n = max(len(a), len(b))
    out = [x - y for x, y in zip(pad(a, n), pad(b, n))]
    if any(v < 0 for v in out):
        return None
    return canonical(out)


def parse_partition(text: str) -> Composition:
    """Parse the bracket form used by the CLI and JSON files, e.g. "[3,1]"."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected bracketed list like [3,1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return canonical(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition literal {text!r}: {exc}") from exc


def format_partition(c: Composition) -> str:
    return "[" + ",".join(str(v) for v in c) + "]"
