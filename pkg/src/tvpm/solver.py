"""Partition enumeration and exact Tverberg search.

Partitions are enumerated in a fixed canonical order: each block lists its
vertices ascending, blocks are sorted by least vertex, and the sequence of
partitions is lexicographic on that nested-tuple form.  The search returns
the first enumerated partition whose blocks' convex hulls share a point, so
results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import InternalError
from .linalg import ONE, ZERO, Point
from .lp import FEASIBLE, LinearProgram, constraint, lp_solve
from .model import TverbergPartition, is_prime

Blocks = tuple[tuple[int, ...], ...]


def enumerate_partitions(
    n_points: int,
    r: int,
    coloring: Optional[Sequence[Sequence[int]]] = None,
) -> Iterator[Blocks]:
    """All partitions of 0..n_points-1 into exactly r nonempty blocks.

    With a coloring, only partitions whose blocks repeat no color survive
    (at most one vertex of each class per block).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if n_points < r:
        raise ValueError(f"cannot split {n_points} points into {r} nonempty blocks")
    color_of = None
    if coloring is not None:
        color_of = {}
        for ci, cls in enumerate(coloring):
            for v in cls:
                color_of[v] = ci

    def rec(pool: tuple[int, ...], k: int) -> Iterator[Blocks]:
        if k == 1:
            if color_of is None or _rainbow_block(pool, color_of):
                yield (pool,)
            return
        for block in _subsets_with_least(pool, color_of):
            if len(pool) - len(block) < k - 1:
                continue
            taken = set(block)
            rest = tuple(e for e in pool if e not in taken)
            for tail in rec(rest, k - 1):
                yield (block,) + tail

    yield from rec(tuple(range(n_points)), r)


def _rainbow_block(block: Sequence[int], color_of: dict[int, int]) -> bool:
    colors = [color_of[v] for v in block]
    return len(set(colors)) == len(colors)


def _subsets_with_least(
    pool: tuple[int, ...], color_of: Optional[dict[int, int]]
) -> Iterator[tuple[int, ...]]:
    """Subsets of ``pool`` containing pool[0], ascending tuples in
    lexicographic order, pruned of same-color repeats when colored."""
    rest = pool[1:]
    prefix = [pool[0]]
    used = {color_of[pool[0]]} if color_of is not None else None

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        for t in range(start, len(rest)):
            e = rest[t]
            if color_of is not None:
                c = color_of[e]
                if c in used:
                    continue
                used.add(c)
            prefix.append(e)
            yield from rec(t + 1)
            prefix.pop()
            if color_of is not None:
                used.remove(color_of[e])

    yield from rec(0)


def hulls_intersect(
    point_blocks: Sequence[Sequence[Point]],
) -> Optional[tuple[tuple[Fraction, ...], list[list[Fraction]]]]:
    """A common point of the blocks' convex hulls, or None.

    Returns (witness, per-block convex coefficients).  Deterministic: the
    underlying program is built in block order and solved with Bland's rule.
    """
    blocks = [list(b) for b in point_blocks]
    if not blocks or any(not b for b in blocks):
        raise ValueError("every block needs at least one point")
    dim = len(blocks[0][0])

    # Boxes first: hulls cannot meet if the bounding boxes do not.
    for m in range(dim):
        lo = max(min(p[m] for p in blk) for blk in blocks)
        hi = min(max(p[m] for p in blk) for blk in blocks)
        if lo > hi:
            return None

    sizes = [len(b) for b in blocks]
    offsets = [sum(sizes[:j]) for j in range(len(blocks))]
    nvar = sum(sizes)
    cons = []
    for j, blk in enumerate(blocks):
        coeffs = [ZERO] * nvar
        for t in range(len(blk)):
            coeffs[offsets[j] + t] = ONE
        cons.append(constraint(coeffs, "=", 1))
    for j in range(1, len(blocks)):
        for m in range(dim):
            coeffs = [ZERO] * nvar
            for t, p in enumerate(blocks[0]):
                coeffs[offsets[0] + t] = p[m]
            for t, p in enumerate(blocks[j]):
                coeffs[offsets[j] + t] = -p[m]
            cons.append(constraint(coeffs, "=", 0))
    lp = LinearProgram(
        nvar, tuple(cons), bounds=((ZERO, None),) * nvar
    )
    result = lp_solve(lp)
    if result.status != FEASIBLE:
        return None
    per_block = [
        list(result.point[offsets[j] : offsets[j] + sizes[j]])
        for j in range(len(blocks))
    ]
    witness = tuple(
        sum((c * p[m] for c, p in zip(per_block[0], blocks[0]) if c), ZERO)
        for m in range(dim)
    )
    return witness, per_block


def tverberg_partition(points: Sequence[Point], r: int) -> TverbergPartition:
    """First partition in canonical order whose r blocks' hulls intersect.

    The point count must fit r blocks: (r-1)*(dim+1)+1 points spanning the
    ambient space, or (r-1)*dim+1 points lying on a hyperplane of it (the
    shape produced by the projective lift).
    """
    pts = tuple(tuple(p) for p in points)
    _check_count(len(pts), r, len(pts[0]) if pts else 0)
    return _search(pts, r, None)


def colored_tverberg_partition(
    points: Sequence[Point], r: int, coloring: Sequence[Sequence[int]]
) -> TverbergPartition:
    """Like tverberg_partition, restricted to rainbow partitions.

    Requires prime r and color classes of at most r - 1 vertices each.
    """
    pts = tuple(tuple(p) for p in points)
    if not is_prime(r):
        raise ValueError(f"rainbow search requires prime r, got {r}")
    for ci, cls in enumerate(coloring):
        if len(cls) > r - 1:
            raise ValueError(f"color class {ci} exceeds r-1 = {r - 1} vertices")
    _check_count(len(pts), r, len(pts[0]) if pts else 0)
    return _search(pts, r, coloring)


def _check_count(count: int, r: int, dim: int) -> None:
    full = (r - 1) * (dim + 1) + 1
    flat = (r - 1) * dim + 1
    if count not in (full, flat):
        raise ValueError(
            f"need {full} points (or {flat} on a hyperplane) for r={r} "
            f"in dimension {dim}, got {count}"
        )


def _search(pts, r, coloring) -> TverbergPartition:
    for blocks in enumerate_partitions(len(pts), r, coloring):
        hit = hulls_intersect([[pts[i] for i in block] for block in blocks])
        if hit is None:
            continue
        witness, per_block = hit
        coefficients = {
            i: c
            for block, cs in zip(blocks, per_block)
            for i, c in zip(block, cs)
        }
        partition = TverbergPartition(blocks, coefficients, witness)
        validate_partition(pts, partition)
        return partition
    raise InternalError(
        "partition search exhausted although a partition must exist"
    )


def validate_partition(points: Sequence[Point], partition: TverbergPartition) -> None:
    """Exact re-check of the partition invariants; raises InternalError."""
    seen: set[int] = set()
    for block in partition.blocks:
        if not block:
            raise InternalError("empty block")
        for i in block:
            if not 0 <= i < len(points):
                raise InternalError("block index out of range")
            if i in seen:
                raise InternalError("blocks overlap")
            seen.add(i)
    if set(partition.coefficients) != seen:
        raise InternalError("coefficient keys do not match the block union")
    dim = len(points[0])
    for block in partition.blocks:
        total = ZERO
        combo = [ZERO] * dim
        for i in block:
            c = partition.coefficients[i]
            if c < 0:
                raise InternalError("negative convex coefficient")
            total += c
            if c:
                for m in range(dim):
                    combo[m] += c * points[i][m]
        if total != 1:
            raise InternalError("block coefficients do not sum to 1")
        if tuple(combo) != partition.witness:
            raise InternalError("block does not combine to the witness")
