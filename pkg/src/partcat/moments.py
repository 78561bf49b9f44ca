"""Character-law moments: category counts, closed forms, cumulant sums.

The k-th asymptotic moment of a category's character is the number of its
members on k points in a row; ``count_moments`` computes these by exhaustive
enumeration.  ``moments_from_cumulants`` evaluates moment sums over all
partitions (classical) or noncrossing partitions (free), with a block-value
rule supplied by a :class:`CumulantSpec`.  Everything here is exact integer /
rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .catalog import enumerate_category
from .errors import BadParamError, UndefinedBlockValueError
from .ops import iter_words

FREE = "free"
CLASSICAL = "classical"


@dataclass(frozen=True)
class MomentSequence:
    """Exact moments m_1..m_K, 1-indexed by moment order."""

    values: tuple[int, ...]

    def moment(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise BadParamError(f"moment order {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def count_moments(category_name: str, k_max: int, cap: int | None = None) -> MomentSequence:
    """m_k = number of category members on k points, k = 1..k_max."""
    values = tuple(
        len(enumerate_category(category_name, k, cap=cap)) for k in range(1, k_max + 1)
    )
    return MomentSequence(values)


# ---------------------------------------------------------------------------
# closed-form sequences

CATALAN = "catalan"
BELL = "bell"
MOTZKIN = "motzkin"
INVOLUTIONS = "involutions"
DOUBLE_FACTORIAL = "double-factorial"
FUSS_CATALAN_2 = "fuss-catalan-2"
B_FORMULA = "b-formula"
FACTORIAL = "factorial"


def closed_form(name: str, k: int) -> int:
    """Evaluate one of the named integer sequences at k >= 0."""
    if k < 0:
        raise BadParamError("sequence index must be >= 0")
    if name == CATALAN:
        return comb(2 * k, k) // (k + 1)
    if name == BELL:
        # Bell triangle
        row = [1]
        for _ in range(k):
            nxt = [row[-1]]
            for x in row:
                nxt.append(nxt[-1] + x)
            row = nxt
        return row[0]
    if name == MOTZKIN:
        return sum(comb(k, 2 * j) * comb(2 * j, j) // (j + 1) for j in range(k // 2 + 1))
    if name == INVOLUTIONS:
        return sum(
            factorial(k) // (factorial(k - 2 * j) * factorial(j) * 2**j)
            for j in range(k // 2 + 1)
        )
    if name == DOUBLE_FACTORIAL:
        out = 1
        for x in range(2 * k - 1, 0, -2):
            out *= x
        return out
    if name == FUSS_CATALAN_2:
        return comb(3 * k, k) // (2 * k + 1)
    if name == B_FORMULA:
        return comb(3 * k + 1, k) // (k + 1)
    if name == FACTORIAL:
        return factorial(k)
    raise BadParamError(f"unknown sequence {name!r}")


def fuss_catalan_series(degree: int) -> tuple[int, ...]:
    """Coefficients of sum_k C_k^(2) x^k up to the given degree."""
    return tuple(closed_form(FUSS_CATALAN_2, k) for k in range(degree + 1))


def poly_square(coeffs: Iterable[int]) -> tuple[int, ...]:
    """Coefficients of the square of a polynomial, exact."""
    c = tuple(coeffs)
    out = [0] * (2 * len(c) - 1) if c else []
    for i, a in enumerate(c):
        for j, b in enumerate(c):
            out[i + j] += a * b
    return tuple(out)


# ---------------------------------------------------------------------------
# moment-cumulant summation


@dataclass(frozen=True)
class CumulantSpec:
    """Block-value rule for a moment-cumulant sum.

    ``values`` maps (size, marks) to an exact rational, where ``marks`` is
    the sorted tuple of the point marks the block touches (empty tuple for
    mark-free rules).  Undeclared shapes of size above the largest declared
    size evaluate to 0 when ``higher_vanish`` is set; anything else
    undeclared raises UndefinedBlockValueError.  Marked entries are only
    accepted for blocks of size one or two.
    """

    kind: str  # "free" | "classical"
    values: Mapping[tuple[int, tuple[str, ...]], Fraction]
    higher_vanish: bool = True

    def __post_init__(self) -> None:
        if self.kind not in (FREE, CLASSICAL):
            raise BadParamError(f"unknown cumulant kind {self.kind!r}")
        for (size, marks), _ in self.values.items():
            if marks and size > 2:
                raise UndefinedBlockValueError(
                    "marked cumulants are only supported for blocks of size <= 2"
                )

    @property
    def _max_size(self) -> int:
        return max((size for size, _ in self.values), default=0)

    def block_value(self, size: int, marks: tuple[str, ...]) -> Fraction:
        key = (size, tuple(sorted(marks)))
        if key in self.values:
            return self.values[key]
        bare = (size, ())
        if bare in self.values:
            return self.values[bare]
        if self.higher_vanish and size > self._max_size:
            return Fraction(0)
        raise UndefinedBlockValueError(f"no value for block shape {key}")


def _spec(kind: str, entries: dict[tuple[int, tuple[str, ...]], int | Fraction]) -> CumulantSpec:
    return CumulantSpec(kind, {k: Fraction(v) for k, v in entries.items()})


def semicircular_spec() -> CumulantSpec:
    """Second cumulant 1, everything else 0 (free)."""
    return _spec(FREE, {(1, ()): 0, (2, ()): 1})


def shifted_semicircular_spec() -> CumulantSpec:
    """First and second cumulants 1 (free): the law of 1 + s."""
    return _spec(FREE, {(1, ()): 1, (2, ()): 1})


def shifted_circular_spec() -> CumulantSpec:
    """Mixed cumulants of d = 1 + c: singletons 1, opposite-mark pairs 1."""
    return _spec(
        FREE,
        {
            (1, ("d",)): 1,
            (1, ("d*",)): 1,
            (2, ("d", "d*")): 1,
            (2, ("d", "d")): 0,
            (2, ("d*", "d*")): 0,
        },
    )


def gaussian_spec() -> CumulantSpec:
    """Second classical cumulant 1: the standard real Gaussian."""
    return _spec(CLASSICAL, {(1, ()): 0, (2, ()): 1})


def shifted_gaussian_spec() -> CumulantSpec:
    return _spec(CLASSICAL, {(1, ()): 1, (2, ()): 1})


def shifted_complex_gaussian_spec() -> CumulantSpec:
    """Classical analogue of the shifted-circular rule."""
    return _spec(
        CLASSICAL,
        {
            (1, ("d",)): 1,
            (1, ("d*",)): 1,
            (2, ("d", "d*")): 1,
            (2, ("d", "d")): 0,
            (2, ("d*", "d*")): 0,
        },
    )


def moments_from_cumulants(
    spec: CumulantSpec, word_unit: tuple[str, ...], k_max: int
) -> MomentSequence:
    """m_k = sum over partitions of the repeated mark word's points.

    ``word_unit`` is repeated k times to mark the points of the k-th moment:
    ("a",) gives the plain single-variable moments, ("d", "d*") the
    alternating starred moments.  Free specs sum over noncrossing partitions,
    classical specs over all partitions.
    """
    if not word_unit:
        raise BadParamError("the mark word must not be empty")
    noncrossing = spec.kind == FREE
    values = []
    for k in range(1, k_max + 1):
        marks = word_unit * k
        total = Fraction(0)
        for w in iter_words(len(marks), noncrossing_only=noncrossing):
            term = Fraction(1)
            for lab in range(max(w) + 1):
                positions = [i for i, x in enumerate(w) if x == lab]
                term *= spec.block_value(
                    len(positions), tuple(marks[i] for i in positions)
                )
                if not term:
                    break
            total += term
        if total.denominator != 1 or total < 0:
            raise UndefinedBlockValueError(
                f"moment m_{k} is not a nonnegative integer: {total}"
            )
        values.append(int(total))
    return MomentSequence(tuple(values))


# ---------------------------------------------------------------------------
# squeezing and symmetrizing

SQUEEZE = "squeeze"
SYMMETRIZE = "symmetrize"


def squeeze(seq: MomentSequence) -> MomentSequence:
    """Interleave zeros: entry k of the input becomes entry 2k."""
    out: list[int] = []
    for v in seq.values:
        out.extend((0, v))
    return MomentSequence(tuple(out))


def symmetrize(seq: MomentSequence) -> MomentSequence:
    """Zero all odd-order entries in place."""
    return MomentSequence(
        tuple(0 if k % 2 == 1 else v for k, v in enumerate(seq.values, start=1))
    )


def transform(seq: MomentSequence, which: str) -> MomentSequence:
    if which == SQUEEZE:
        return squeeze(seq)
    if which == SYMMETRIZE:
        return symmetrize(seq)
    raise BadParamError(f"unknown transform {which!r}")
