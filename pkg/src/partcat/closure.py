"""Bounded categorial hulls and classification against the catalog.

The engine works on boundary words (see ``Partition.word``): every partition
rotates to a one-row normal form, rotations become cyclic shifts of the word,
involution becomes reversal, tensor products become concatenation (of shifted
copies), and composition becomes concatenation followed by gluing matched
points at the seam.  The stored element set is closed under shifts and
reversal, so membership of an arbitrary two-row partition is a single word
lookup.

A bounded closure is a *lower bound* of the true category restricted to the
point budget: every stored word is honestly derivable from the generators,
but absence only means "not found within budget".  ``saturated`` reports
whether the engine reached a fixed point of its move set before any early
stop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .catalog import (
    CLASSICAL_INCLUSIONS,
    CLASSICAL_NAMES,
    FREE_INCLUSIONS,
    FREE_NAMES,
    category_predicate,
    crossing,
    double_singleton,
    four_block,
    h_series,
    half_lib,
    included,
)
from .errors import BudgetError, NotNoncrossingError
from .partition import (
    Partition,
    canonical_text,
    is_noncrossing,
    normalize_word,
    partition_from_word,
)

Word = tuple[int, ...]

DEFAULT_POINT_BUDGET = 8
DEFAULT_INTERMEDIATE_BUDGET = 16


def _shift(w: Word) -> Word:
    return normalize_word(w[1:] + w[:1])


def _orbit(w: Word) -> set[Word]:
    """All cyclic shifts of w and of its reversal."""
    out: set[Word] = set()
    for seed in (w, normalize_word(w[::-1])):
        cur = normalize_word(seed)
        for _ in range(max(1, len(cur))):
            out.add(cur)
            cur = _shift(cur)
    return out


def _contract(w: Word, i: int) -> Word:
    """Glue points i and i+1 (a cap): drop both, merge their blocks."""
    a, b = w[i], w[i + 1]
    rest = w[:i] + w[i + 2 :]
    if a != b:
        rest = tuple(a if x == b else x for x in rest)
    return normalize_word(rest)


def _concat(a: Word, b: Word) -> Word:
    if not a:
        return b
    off = max(a) + 1
    return a + tuple(x + off for x in b)


def _glue_range(a: Word, b: Word, c_min: int, c_max: int) -> Iterator[Word]:
    """Glue the last c points of a to the first c points of b, c_min..c_max.

    Point a[-1] meets b[0], a[-2] meets b[1], and so on: exactly the gluing
    performed by vertical composition once both factors are rotated down.
    """
    m, n = len(a), len(b)
    na = (max(a) + 1) if a else 0
    nb = (max(b) + 1) if b else 0
    parent = list(range(na + nb))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(1, c_max + 1):
        ra, rb = find(a[m - c]), find(na + b[c - 1])
        if ra != rb:
            parent[rb] = ra
        if c >= c_min:
            survivors = [find(x) for x in a[: m - c]]
            survivors.extend(find(na + b[j]) for j in range(c, n))
            yield normalize_word(survivors)


class Containment(Enum):
    CONFIRMED = "Confirmed"
    NOT_FOUND_WITHIN_BUDGET = "NotFoundWithinBudget"


@dataclass(frozen=True)
class ClosureSet:
    """Bounded hull of a generator set, stored as boundary words."""

    generators: tuple[Partition, ...]
    point_budget: int
    intermediate_budget: int
    words: frozenset[Word]
    oversized_words: frozenset[Word]
    saturated: bool
    fusion_ops: int

    def contains_word(self, w: Word) -> bool:
        return w in self.words or w in self.oversized_words

    def contains(self, p: Partition) -> Containment:
        if p.n_points > self.intermediate_budget:
            raise BudgetError(
                f"{p.n_points} points exceeds the intermediate budget "
                f"{self.intermediate_budget}"
            )
        return (
            Containment.CONFIRMED
            if self.contains_word(p.word)
            else Containment.NOT_FOUND_WITHIN_BUDGET
        )

    def members(self, upper_count: int, lower_count: int) -> list[Partition]:
        """All stored elements of shape P(upper_count, lower_count)."""
        n = upper_count + lower_count
        found = [
            partition_from_word(w, upper_count, lower_count)
            for w in self.words
            if len(w) == n
        ]
        found.sort(key=str)
        return found

    def element_partitions(self) -> list[Partition]:
        """The one-row forms of all stored elements, sorted by text."""
        out = [partition_from_word(w) for w in self.words]
        out.sort(key=str)
        return out

    @property
    def elements(self) -> list[Partition]:
        return self.element_partitions()

    def dump_lines(self) -> list[str]:
        return [canonical_text(p) for p in self.element_partitions()]


def generate_closure(
    generators: Sequence[Partition],
    point_budget: int = DEFAULT_POINT_BUDGET,
    intermediate_budget: int = DEFAULT_INTERMEDIATE_BUDGET,
    *,
    fusion_min: int | None = None,
    stop_when: Iterable[Partition] | None = None,
    max_fusion_ops: int | None = None,
) -> ClosureSet:
    """Worklist fixed point of the category moves, bounded by the budgets.

    Seeds are the generators plus the pair partition (the unit partition has
    the same boundary word).  Moves: cyclic shift, reversal, adjacent-cap
    contraction, concatenation (stored when within the point budget), and
    seam gluing of two elements, which realizes arbitrary composition through
    transients up to the intermediate budget.

    ``fusion_min``: when set, seam gluing of two stored elements is only
    attempted if the smaller operand has at most this many points (generators
    above the point budget always participate).  This is a performance
    throttle; callers that rely on it must validate completeness separately,
    as the acceptance suite does by comparing against predicate enumerations.

    ``stop_when``: stop as soon as all the given partitions are present.
    ``max_fusion_ops``: stop after this many glue operations.  Either early
    stop leaves ``saturated`` False.
    """
    pb, ib = point_budget, intermediate_budget
    if pb < 2:
        raise BudgetError("point budget must be at least 2 (the pair partition)")
    if ib < pb:
        raise BudgetError("intermediate budget must be at least the point budget")
    gens = tuple(generators)
    for g in gens:
        if g.n_points > ib:
            raise BudgetError(
                f"generator with {g.n_points} points exceeds the intermediate budget {ib}"
            )

    stored: set[Word] = set()
    big: set[Word] = set()
    queue: list[Word] = []

    targets: set[Word] | None = None
    if stop_when is not None:
        targets = set()
        for p in stop_when:
            if p.n_points > ib:
                raise BudgetError("stop_when partition exceeds the intermediate budget")
            targets.add(p.word)
    found: set[Word] = set()

    def add(w: Word) -> None:
        pool = stored if len(w) <= pb else big
        if w in pool:
            return
        orb = _orbit(w)
        pool.update(orb)
        queue.extend(sorted(orb))
        if targets is not None:
            found.update(orb & targets)

    for g in gens:
        add(g.word)
    add((0, 0))  # pair partition; rotations give the unit partition

    fusion_ops = 0
    stopped_early = False

    def pair(a: Word, b: Word) -> None:
        nonlocal fusion_ops
        total = len(a) + len(b)
        if 0 < total <= pb:
            add(_concat(a, b))
        c_max = min(len(a), len(b))
        c_min = max(1, (total - pb + 1) // 2)
        if c_min > c_max:
            return
        if (
            fusion_min is not None
            and min(len(a), len(b)) > fusion_min
            and len(a) <= pb
            and len(b) <= pb
        ):
            return
        for w in _glue_range(a, b, c_min, c_max):
            fusion_ops += 1
            add(w)

    qi = 0
    while qi < len(queue):
        if targets is not None and targets and targets <= found:
            stopped_early = True
            break
        if max_fusion_ops is not None and fusion_ops >= max_fusion_ops:
            stopped_early = True
            break
        w = queue[qi]
        qi += 1
        if len(w) >= 2:
            for i in range(len(w) - 1):
                add(_contract(w, i))
        for j in range(qi):
            v = queue[j]
            pair(w, v)
            if v is not w:
                pair(v, w)

    return ClosureSet(
        generators=gens,
        point_budget=pb,
        intermediate_budget=ib,
        words=frozenset(stored),
        oversized_words=frozenset(big),
        saturated=not stopped_early,
        fusion_ops=fusion_ops,
    )


def closure_contains(closure: ClosureSet, p: Partition) -> Containment:
    """Semi-decision: CONFIRMED membership, or not found within budget."""
    return closure.contains(p)


# ---------------------------------------------------------------------------
# classification


WORLD_FREE = "Free7"
WORLD_CLASSICAL = "Classical6"
WORLD_HALF_LIBERATED = "HalfLib"
WORLD_SERIES = "Series"
WORLD_UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Classification:
    world: str
    category_name: str | None
    series_parameter: int | None = None
    evidence: tuple[tuple[str, str], ...] = ()
    budgets: tuple[int, int] | None = None

    def lines(self) -> list[str]:
        out = [f"world: {self.world}", f"name: {self.category_name or '-'}"]
        if self.series_parameter is not None:
            out.append(f"series-parameter: {self.series_parameter}")
        if self.budgets is not None:
            out.append(f"budgets: {self.budgets[0]}/{self.budgets[1]}")
        for witness, reason in self.evidence:
            out.append(f"evidence: {witness} :: {reason}")
        return out


def _least_satisfied(
    generators: Sequence[Partition],
    names: Sequence[str],
    order: set[tuple[str, str]],
) -> tuple[str, list[str]]:
    satisfied = [
        name
        for name in names
        if all(category_predicate(name)(g) for g in generators)
    ]
    least = [a for a in satisfied if all(included(a, b, order) for b in satisfied)]
    if len(least) != 1:  # pragma: no cover - the lattice is intersection-closed
        raise AssertionError(f"no unique least category among {satisfied}")
    return least[0], satisfied


def classify_noncrossing(generators: Sequence[Partition]) -> Classification:
    """Exact classification among the seven noncrossing categories.

    The generated category is the intersection of the seven categories whose
    predicate every generator satisfies; no closure bound is involved.
    """
    gens = tuple(generators)
    for g in gens:
        if not is_noncrossing(g):
            raise NotNoncrossingError(f"generator {g} has a crossing")
    name, satisfied = _least_satisfied(gens, FREE_NAMES, FREE_INCLUSIONS)
    evidence = tuple(
        (canonical_text(g), "satisfies " + ", ".join(n for n in satisfied))
        for g in gens
    )
    return Classification(WORLD_FREE, name, evidence=evidence)


def classify_classical(generators: Sequence[Partition]) -> Classification:
    """Least of the six classical categories containing generators + crossing."""
    gens = tuple(generators) + (crossing(),)
    name, satisfied = _least_satisfied(gens, CLASSICAL_NAMES, CLASSICAL_INCLUSIONS)
    evidence = tuple(
        (canonical_text(g), "satisfies " + ", ".join(n for n in satisfied))
        for g in gens
    )
    return Classification(WORLD_CLASSICAL, name, evidence=evidence)


def classify_easy(
    generators: Sequence[Partition],
    point_budget: int = DEFAULT_POINT_BUDGET,
    intermediate_budget: int = DEFAULT_INTERMEDIATE_BUDGET,
    *,
    max_fusion_ops: int = 2_000_000,
) -> Classification:
    """Decision cascade over all named worlds.

    Noncrossing generator sets are classified exactly.  Otherwise a bounded
    closure decides: crossing present -> classical; half-liberating diagram
    present -> one of the half-liberated names or the h-series (parameter =
    gcd of the visible series lengths).  Conclusions that rest on bounded
    search are budget-qualified in the evidence; Undetermined is a value,
    not an error.
    """
    gens = tuple(generators)
    if all(is_noncrossing(g) for g in gens):
        base = classify_noncrossing(gens)
        return base

    budgets = (point_budget, intermediate_budget)
    closure = generate_closure(
        gens,
        point_budget,
        intermediate_budget,
        stop_when=[crossing()],
        max_fusion_ops=max_fusion_ops,
    )

    def status(p: Partition) -> tuple[bool, str]:
        ok = closure.contains_word(p.word)
        if ok:
            return True, "Confirmed"
        return False, (
            "NotFoundWithinBudget"
            + ("" if closure.saturated else " (search stopped before saturation)")
        )

    evidence: list[tuple[str, str]] = []
    cross_in, cross_note = status(crossing())
    evidence.append((canonical_text(crossing()), cross_note))
    if cross_in:
        base = classify_classical(gens)
        return Classification(
            WORLD_CLASSICAL,
            base.category_name,
            evidence=tuple(evidence) + base.evidence,
            budgets=budgets,
        )

    hl_in, hl_note = status(half_lib())
    evidence.append((canonical_text(half_lib()), hl_note))
    if hl_in:
        fb_in, fb_note = status(four_block())
        evidence.append((canonical_text(four_block()), fb_note))
        if not fb_in:
            ss_in, ss_note = status(double_singleton())
            evidence.append((canonical_text(double_singleton()), ss_note))
            name = "B#*" if ss_in else "O*"
            return Classification(
                WORLD_HALF_LIBERATED, name, evidence=tuple(evidence), budgets=budgets
            )
        found_ts = []
        for t in range(3, point_budget // 2 + 1):
            t_in, t_note = status(h_series(t))
            evidence.append((canonical_text(h_series(t)), t_note))
            if t_in:
                found_ts.append(t)
        if found_ts:
            g = math.gcd(*found_ts)
            return Classification(
                WORLD_SERIES,
                f"H^({g})",
                series_parameter=g,
                evidence=tuple(evidence),
                budgets=budgets,
            )
        return Classification(
            WORLD_HALF_LIBERATED, "H*", evidence=tuple(evidence), budgets=budgets
        )

    return Classification(
        WORLD_UNDETERMINED, None, evidence=tuple(evidence), budgets=budgets
    )
