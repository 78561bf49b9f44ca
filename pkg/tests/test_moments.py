from fractions import Fraction

import pytest

import partcat.moments as mo
from partcat.catalog import enumerate_category
from partcat.errors import (
    BadParamError,
    CapExceededError,
    NoPredicateError,
    UndefinedBlockValueError,
)
from partcat.ops import enumerate_all
from partcat.partition import lower


# ---------------------------------------------------------------------------
# count_moments


def test_count_moments_examples():
    assert list(mo.count_moments("S+", 4)) == [1, 2, 5, 14]
    assert list(mo.count_moments("B", 4)) == [1, 2, 4, 10]
    b_sharp = mo.count_moments("B#+", 8)
    assert [b_sharp.moment(2 * k) for k in range(1, 5)] == [2, 7, 30, 143]
    assert [b_sharp.moment(2 * k - 1) for k in range(1, 5)] == [0, 0, 0, 0]


def test_count_moments_errors():
    with pytest.raises(NoPredicateError):
        mo.count_moments("H^(3)", 4)
    with pytest.raises(CapExceededError):
        mo.count_moments("S", 5, cap=4)


def test_moment_sequence_accessors():
    seq = mo.MomentSequence((1, 2, 3))
    assert seq.moment(1) == 1 and seq.moment(3) == 3
    assert len(seq) == 3
    with pytest.raises(BadParamError):
        seq.moment(0)
    with pytest.raises(BadParamError):
        seq.moment(4)


def test_odd_moments_vanish_without_singleton():
    for name in ("O+", "B#+", "O", "O*", "H+", "H*", "H", "S'+", "B'+"):
        seq = mo.count_moments(name, 7)
        assert all(seq.moment(k) == 0 for k in (1, 3, 5, 7)), name


# ---------------------------------------------------------------------------
# closed forms, cross-checked against enumeration oracles


def test_closed_form_examples():
    assert mo.closed_form(mo.B_FORMULA, 2) == 7
    assert mo.closed_form(mo.FUSS_CATALAN_2, 3) == 12
    assert mo.closed_form(mo.MOTZKIN, 4) == 9
    assert mo.closed_form(mo.CATALAN, 4) == 14
    assert mo.closed_form(mo.FACTORIAL, 4) == 24
    assert mo.closed_form(mo.DOUBLE_FACTORIAL, 4) == 105
    with pytest.raises(BadParamError):
        mo.closed_form("nope", 1)
    with pytest.raises(BadParamError):
        mo.closed_form(mo.CATALAN, -1)


def test_closed_forms_against_enumeration():
    for k in range(1, 8):
        parts = enumerate_all(0, k)
        nc = enumerate_all(0, k, noncrossing_only=True)
        assert mo.closed_form(mo.BELL, k) == len(parts)
        assert mo.closed_form(mo.CATALAN, k) == len(nc)
        assert mo.closed_form(mo.MOTZKIN, k) == sum(
            1 for p in nc if all(len(b) <= 2 for b in p.blocks)
        )
        assert mo.closed_form(mo.INVOLUTIONS, k) == sum(
            1 for p in parts if all(len(b) <= 2 for b in p.blocks)
        )
    for k in range(1, 5):
        pairings = [
            p for p in enumerate_all(0, 2 * k) if all(len(b) == 2 for b in p.blocks)
        ]
        assert mo.closed_form(mo.DOUBLE_FACTORIAL, k) == len(pairings)
        assert mo.closed_form(mo.FACTORIAL, k) == len(
            enumerate_category("O*", 2 * k)
        )
        assert mo.closed_form(mo.B_FORMULA, k) == len(enumerate_category("B#+", 2 * k))


def test_balanced_pair_count_bijection():
    # members on 2k points correspond to even-block noncrossing partitions of
    # 2k+2 points whose first and last point share a block
    for k in range(1, 5):
        lhs = len(enumerate_category("B#+", 2 * k))
        rhs = 0
        for p in enumerate_all(0, 2 * k + 2, noncrossing_only=True):
            if any(len(b) % 2 for b in p.blocks):
                continue
            if p.block_index[lower(1)] == p.block_index[lower(2 * k + 2)]:
                rhs += 1
        assert lhs == rhs, k


# ---------------------------------------------------------------------------
# moment-cumulant sums


def test_semicircular_moments_are_catalan_at_even_orders():
    seq = mo.moments_from_cumulants(mo.semicircular_spec(), ("a",), 8)
    assert list(seq) == [0, 1, 0, 2, 0, 5, 0, 14]


def test_shifted_semicircular_moments_are_motzkin():
    seq = mo.moments_from_cumulants(mo.shifted_semicircular_spec(), ("a",), 8)
    assert list(seq) == [1, 2, 4, 9, 21, 51, 127, 323]


def test_shifted_circular_starred_moments():
    seq = mo.moments_from_cumulants(mo.shifted_circular_spec(), ("d", "d*"), 4)
    assert list(seq) == [2, 7, 30, 143]


def test_classical_gaussian_moments():
    seq = mo.moments_from_cumulants(mo.gaussian_spec(), ("a",), 6)
    assert list(seq) == [0, 1, 0, 3, 0, 15]
    seq = mo.moments_from_cumulants(mo.shifted_gaussian_spec(), ("a",), 6)
    assert list(seq) == [1, 2, 4, 10, 26, 76]


def test_shifted_complex_gaussian_matches_classical_balanced_counts():
    seq = mo.moments_from_cumulants(mo.shifted_complex_gaussian_spec(), ("d", "d*"), 3)
    want = [len(enumerate_category("B#*", 2 * k)) for k in (1, 2, 3)]
    assert list(seq) == want


def test_cumulant_spec_validation():
    with pytest.raises(UndefinedBlockValueError):
        mo.CumulantSpec("free", {(3, ("d", "d", "d*")): Fraction(1)})
    with pytest.raises(BadParamError):
        mo.CumulantSpec("tropical", {})
    spec = mo.CumulantSpec("free", {(2, ()): Fraction(1)}, higher_vanish=False)
    with pytest.raises(UndefinedBlockValueError):
        mo.moments_from_cumulants(spec, ("a",), 1)
    with pytest.raises(BadParamError):
        mo.moments_from_cumulants(mo.semicircular_spec(), (), 2)


# ---------------------------------------------------------------------------
# transforms and the generating-function identity


def test_squeeze_and_symmetrize_examples():
    assert list(mo.squeeze(mo.MomentSequence((2, 7, 30)))) == [0, 2, 0, 7, 0, 30]
    assert list(mo.symmetrize(mo.MomentSequence((1, 2, 4, 9)))) == [0, 2, 0, 9]
    even = mo.MomentSequence((0, 5, 0, 7))
    assert mo.symmetrize(even) == even
    assert mo.transform(even, mo.SQUEEZE) == mo.squeeze(even)
    with pytest.raises(BadParamError):
        mo.transform(even, "reverse")


def test_fuss_catalan_square_identity():
    coeffs = mo.fuss_catalan_series(6)
    assert coeffs == (1, 1, 3, 12, 55, 273, 1428)
    squared = mo.poly_square(coeffs)[:7]
    assert squared == tuple(mo.closed_form(mo.B_FORMULA, k) for k in range(7))
