"""The four category operations on two-row partitions, plus brute-force enumeration.

Conventions:

* ``compose(p, q)`` stacks p on top of q: p's lower row is glued to q's upper
  row, the middle points disappear, and middle components that touch no
  surviving point are counted as removed loops.
* ``rotate`` moves a single endpoint between rows without changing any
  connection.  DOWN_* moves an upper point to the lower row, UP_* the
  converse; LEFT/RIGHT say which end of the rows is involved.  DOWN_LEFT
  followed by UP_LEFT is the identity.  CYCLE_LEFT / CYCLE_RIGHT act on
  one-row partitions only and move the end point around to the other side.

``enumerate_all`` is the exhaustive oracle the rest of the package is tested
against; counts match Bell numbers, and Catalan numbers when restricted to
noncrossing partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import (
    ArityMismatchError,
    CapExceededError,
    CycleOnTwoRowsError,
    EmptyRowError,
)
from .partition import (
    LOWER,
    UPPER,
    Partition,
    Point,
    make_partition,
    partition_from_word,
    word_noncrossing,
)

EMPTY = make_partition(0, 0, ())


def tensor(p: Partition, q: Partition) -> Partition:
    """Horizontal concatenation: q's points are shifted past p's."""
    shifted = [
        [
            Point(pt.row, pt.index + (p.upper_count if pt.row == UPPER else p.lower_count))
            for pt in block
        ]
        for block in q.blocks
    ]
    return make_partition(
        p.upper_count + q.upper_count,
        p.lower_count + q.lower_count,
        list(p.blocks) + shifted,
    )


@dataclass(frozen=True)
class ComposeResult:
    """Vertical concatenation result plus the number of removed middle loops."""

    result: Partition
    removed_loops: int


def compose(p: Partition, q: Partition) -> ComposeResult:
    """Stack p over q; requires p's lower row and q's upper row to match.

    Surviving points are connected iff joined by a chain through p- and
    q-blocks across the glued middle row.  Middle components connected to no
    surviving point are removed and counted.
    """
    if p.lower_count != q.upper_count:
        raise ArityMismatchError(
            f"cannot compose P({p.upper_count},{p.lower_count}) with "
            f"P({q.upper_count},{q.lower_count})"
        )
    mid = p.lower_count
    # node ids: p-upper 0..k-1, middle k..k+mid-1, q-lower k+mid..k+mid+m-1
    k, m = p.upper_count, q.lower_count
    parent = list(range(k + mid + m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    def p_node(pt: Point) -> int:
        return pt.index - 1 if pt.row == UPPER else k + pt.index - 1

    def q_node(pt: Point) -> int:
        return k + pt.index - 1 if pt.row == UPPER else k + mid + pt.index - 1

    for block in p.blocks:
        for pt in block[1:]:
            union(p_node(block[0]), p_node(pt))
    for block in q.blocks:
        for pt in block[1:]:
            union(q_node(block[0]), q_node(pt))

    survivors: dict[int, list[Point]] = {}
    for i in range(k):
        survivors.setdefault(find(i), []).append(Point(UPPER, i + 1))
    for j in range(m):
        survivors.setdefault(find(k + mid + j), []).append(Point(LOWER, j + 1))
    loop_roots = {find(k + i) for i in range(mid)} - set(survivors)
    return ComposeResult(
        result=make_partition(k, m, survivors.values()),
        removed_loops=len(loop_roots),
    )


def involute(p: Partition) -> Partition:
    """Turn the diagram upside down: rows swap, left-right order is kept."""
    flipped = [
        [Point(LOWER if pt.row == UPPER else UPPER, pt.index) for pt in block]
        for block in p.blocks
    ]
    return make_partition(p.lower_count, p.upper_count, flipped)


class Rotation(Enum):
    DOWN_LEFT = "down-left"
    UP_LEFT = "up-left"
    DOWN_RIGHT = "down-right"
    UP_RIGHT = "up-right"
    CYCLE_LEFT = "cycle-left"
    CYCLE_RIGHT = "cycle-right"


def rotate(p: Partition, where: Rotation) -> Partition:
    """Move one endpoint between rows (or around the circle for one-row p).

    Connections between points never change; only names shift.  DOWN_* needs
    a nonempty upper row, UP_* a nonempty lower row, CYCLE_* needs
    upper_count == 0 and a nonempty lower row.
    """
    k, l = p.upper_count, p.lower_count

    if where in (Rotation.CYCLE_LEFT, Rotation.CYCLE_RIGHT):
        if k != 0:
            raise CycleOnTwoRowsError("cyclic rotation needs a one-row partition")
        if l == 0:
            raise EmptyRowError("nothing to rotate in P(0,0)")
        if where is Rotation.CYCLE_LEFT:
            move = {Point(LOWER, 1): Point(LOWER, l)}
            move.update({Point(LOWER, j): Point(LOWER, j - 1) for j in range(2, l + 1)})
        else:
            move = {Point(LOWER, l): Point(LOWER, 1)}
            move.update({Point(LOWER, j): Point(LOWER, j + 1) for j in range(1, l)})
        new_k, new_l = 0, l
    elif where is Rotation.DOWN_LEFT:
        if k == 0:
            raise EmptyRowError("no upper point to move down")
        move = {Point(UPPER, 1): Point(LOWER, 1)}
        move.update({Point(UPPER, i): Point(UPPER, i - 1) for i in range(2, k + 1)})
        move.update({Point(LOWER, j): Point(LOWER, j + 1) for j in range(1, l + 1)})
        new_k, new_l = k - 1, l + 1
    elif where is Rotation.UP_LEFT:
        if l == 0:
            raise EmptyRowError("no lower point to move up")
        move = {Point(LOWER, 1): Point(UPPER, 1)}
        move.update({Point(UPPER, i): Point(UPPER, i + 1) for i in range(1, k + 1)})
        move.update({Point(LOWER, j): Point(LOWER, j - 1) for j in range(2, l + 1)})
        new_k, new_l = k + 1, l - 1
    elif where is Rotation.DOWN_RIGHT:
        if k == 0:
            raise EmptyRowError("no upper point to move down")
        move = {Point(UPPER, k): Point(LOWER, l + 1)}
        new_k, new_l = k - 1, l + 1
    elif where is Rotation.UP_RIGHT:
        if l == 0:
            raise EmptyRowError("no lower point to move up")
        move = {Point(LOWER, l): Point(UPPER, k + 1)}
        new_k, new_l = k + 1, l - 1
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(where)

    moved = [[move.get(pt, pt) for pt in block] for block in p.blocks]
    return make_partition(new_k, new_l, moved)


ROTATION_INVERSES = {
    Rotation.DOWN_LEFT: Rotation.UP_LEFT,
    Rotation.UP_LEFT: Rotation.DOWN_LEFT,
    Rotation.DOWN_RIGHT: Rotation.UP_RIGHT,
    Rotation.UP_RIGHT: Rotation.DOWN_RIGHT,
    Rotation.CYCLE_LEFT: Rotation.CYCLE_RIGHT,
    Rotation.CYCLE_RIGHT: Rotation.CYCLE_LEFT,
}

ENUMERATION_CAP = 12


def iter_words(n_points: int, noncrossing_only: bool = False) -> Iterator[tuple[int, ...]]:
    """All partition words of n_points points (restricted growth strings)."""
    if n_points == 0:
        yield ()
        return
    labels = [0] * n_points

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n_points:
            yield tuple(labels)
            return
        for v in range(used + 1):
            labels[i] = v
            yield from rec(i + 1, used if v < used else used + 1)

    for word in rec(0, 0):
        if not noncrossing_only or word_noncrossing(word):
            yield word


def enumerate_all(
    upper_count: int,
    lower_count: int,
    noncrossing_only: bool = False,
    cap: int = ENUMERATION_CAP,
) -> list[Partition]:
    """Every partition of P(upper_count, lower_count), duplicate-free, sorted.

    The point total must stay within ``cap`` (default 12).
    """
    n = upper_count + lower_count
    if n > cap:
        raise CapExceededError(f"{n} points exceeds the enumeration cap {cap}")
    parts = [
        partition_from_word(w, upper_count, lower_count)
        for w in iter_words(n, noncrossing_only)
    ]
    parts.sort(key=str)
    return parts
