import pytest

from partcat.catalog import (
    FREE_NAMES,
    block,
    catalog_entry,
    category_predicate,
    crossing,
    double_singleton,
    enumerate_category,
    fat_crossing,
    four_block,
    h_series,
    half_lib,
    pair_partition,
    positioner,
    singleton,
    unit_partition,
)
from partcat.closure import (
    Containment,
    classify_classical,
    classify_easy,
    classify_noncrossing,
    closure_contains,
    generate_closure,
)
from partcat.errors import BudgetError, NotNoncrossingError
from partcat.ops import enumerate_all, tensor
from partcat.partition import is_noncrossing, parse_partition, partition_from_word

CONFIRMED = Containment.CONFIRMED
NOT_FOUND = Containment.NOT_FOUND_WITHIN_BUDGET


# ---------------------------------------------------------------------------
# generate_closure basics


def test_empty_generators_give_planar_pairings():
    c = generate_closure([], 6, 12)
    assert c.saturated
    assert [len(c.members(0, k)) for k in (2, 4, 6)] == [1, 2, 5]
    for k in (2, 4, 6):
        assert c.members(0, k) == enumerate_category("O+", k)
    assert c.contains(unit_partition()) is CONFIRMED
    assert c.contains(pair_partition()) is CONFIRMED


def test_closure_members_cover_two_row_shapes():
    c = generate_closure([], 6, 12)
    # nested pairings of P(2,2): the identity strands and the cup-cap
    texts = {str(p) for p in c.members(2, 2)}
    assert texts == {"P(2,2): u1,l1; u2,l2", "P(2,2): u1,u2; l1,l2"}


def test_positioner_inside_singleton_closure():
    c = generate_closure([singleton()], 4, 8)
    assert closure_contains(c, positioner()) is CONFIRMED


def test_double_singleton_from_positioner_with_tiny_budget():
    c = generate_closure([positioner()], 2, 4)
    assert c.contains(double_singleton()) is CONFIRMED


def test_no_singleton_in_even_world():
    c = generate_closure([double_singleton(), four_block()], 6, 12)
    assert c.saturated
    assert c.contains(singleton()) is NOT_FOUND


def test_even_blocks_from_four_block():
    c = generate_closure([four_block()], 6, 12)
    assert c.contains(block(6)) is CONFIRMED


def test_three_block_generates_singleton_and_four_block():
    c = generate_closure([block(3)], 8, 16, fusion_min=4)
    assert c.contains(singleton()) is CONFIRMED
    assert c.contains(four_block()) is CONFIRMED


def test_budget_validation():
    with pytest.raises(BudgetError):
        generate_closure([], 1, 4)
    with pytest.raises(BudgetError):
        generate_closure([], 8, 6)
    with pytest.raises(BudgetError):
        generate_closure([h_series(5)], 4, 8)  # 10-point generator, budget 8
    c = generate_closure([], 4, 8)
    with pytest.raises(BudgetError):
        c.contains(h_series(5))


def test_oversized_generators_participate():
    # a 10-point generator above the 6-point storage budget still contributes
    c = generate_closure([h_series(5)], 6, 12)
    assert c.contains(h_series(5)) is CONFIRMED
    # contracting the interleaved blocks yields a single 8-point block, then 6
    assert c.contains(block(6)) is CONFIRMED


def test_early_stop_flags_unsaturated():
    c = generate_closure([four_block()], 8, 16, stop_when=[four_block()])
    assert not c.saturated
    full = generate_closure([four_block()], 8, 16)
    assert full.saturated
    assert c.words <= full.words


def test_determinism():
    a = generate_closure([singleton()], 6, 12)
    b = generate_closure([singleton()], 6, 12)
    assert a.words == b.words
    assert a.saturated == b.saturated == True
    assert a.fusion_ops == b.fusion_ops


def test_fusion_guard_stops_early_and_deterministically():
    a = generate_closure([singleton()], 8, 16, max_fusion_ops=200)
    b = generate_closure([singleton()], 8, 16, max_fusion_ops=200)
    assert not a.saturated
    assert a.words == b.words
    full = generate_closure([singleton()], 8, 16, fusion_min=4)
    assert a.words <= full.words


def test_dump_lines_sorted():
    c = generate_closure([], 4, 8)
    lines = c.dump_lines()
    assert lines == sorted(lines)
    assert "P(0,2): l1,l2" in lines


# ---------------------------------------------------------------------------
# reconstructions of the generating-set containments


def test_positioner_from_double_singleton_and_four_block():
    c = generate_closure(
        [double_singleton(), four_block()], 10, 20, stop_when=[positioner()]
    )
    assert c.contains(positioner()) is CONFIRMED


@pytest.mark.parametrize(
    "crossing_partition",
    [h_series(3), parse_partition("P(0,6): l1,l4; l2,l6; l3,l5")],
)
def test_positioner_plus_any_crossing_gives_crossing(crossing_partition):
    assert not is_noncrossing(crossing_partition)
    c = generate_closure(
        [positioner(), crossing_partition], 10, 20, stop_when=[crossing()]
    )
    assert c.contains(crossing()) is CONFIRMED


def test_singleton_shift_property():
    c = generate_closure([positioner()], 6, 12)
    assert c.saturated
    for w in sorted(c.words):
        if len(w) > 6:
            continue
        labels = [x for x in w]
        for i, lab in enumerate(labels):
            if labels.count(lab) == 1:  # a singleton at position i
                rest = labels[:i] + labels[i + 1 :]
                for j in range(len(labels)):
                    shifted = rest[:j] + [lab] + rest[j:]
                    variant = partition_from_word(tuple(shifted), 0, len(shifted))
                    assert c.contains(variant) is CONFIRMED, (w, i, j)


def test_h_series_gcd_arithmetic():
    c = generate_closure(
        [half_lib(), four_block(), h_series(6), h_series(9)],
        12,
        24,
        stop_when=[h_series(3)],
    )
    assert c.contains(h_series(3)) is CONFIRMED


def test_glue_is_iterated_seam_contraction():
    # gluing c pairs at the seam must equal contracting the concatenation
    # one adjacent pair at a time
    from partcat.closure import _concat, _contract, _glue_range
    from partcat.ops import iter_words

    small = [w for n in range(5) for w in iter_words(n)]
    for a in small:
        for b in small:
            if not a or not b:
                continue
            c_max = min(len(a), len(b))
            expected = _concat(a, b)
            results = list(_glue_range(a, b, 1, c_max))
            for c in range(1, c_max + 1):
                expected = _contract(expected, len(a) - c)
                assert results[c - 1] == expected, (a, b, c)


def test_closure_elements_respect_every_covering_predicate():
    # soundness: whatever category predicate accepts all generators must
    # accept every element the engine derives from them
    from partcat.catalog import (
        CLASSICAL_NAMES,
        FREE_NAMES,
        HALF_LIBERATED_NAMES,
        k_series,
    )

    generator_sets = [
        [block(3)],
        [h_series(3)],
        [positioner(), block(3)],
        [crossing(), double_singleton()],
        [fat_crossing()],
        [k_series(1)],
        [half_lib(), h_series(4)],
    ]
    names = FREE_NAMES + CLASSICAL_NAMES + HALF_LIBERATED_NAMES
    for gens in generator_sets:
        c = generate_closure(gens, 6, 12)
        elements = c.element_partitions()
        for name in names:
            pred = category_predicate(name)
            if all(pred(g) for g in gens):
                bad = [p for p in elements if not pred(p)]
                assert not bad, (name, [str(g) for g in gens], bad[:3])


def test_two_row_members_match_predicate_on_every_shape():
    # the closure stores one-row words; reinterpreting them across shapes
    # must agree with the predicate filter over full two-row enumeration
    for name in ("H+", "B#+"):
        entry = catalog_entry(name)
        pred = category_predicate(name)
        c = generate_closure(entry.generators, 6, 12)
        for n in range(7):
            for k in range(n + 1):
                want = {p for p in enumerate_all(k, n - k) if pred(p)}
                assert set(c.members(k, n - k)) == want, (name, k, n - k)


def test_membership_is_rotation_and_involution_invariant():
    c = generate_closure([four_block()], 6, 12)
    from partcat.ops import ROTATION_INVERSES, Rotation, involute, rotate

    for p in c.members(2, 2) + c.members(1, 3) + c.members(0, 6):
        assert c.contains(involute(p)) is CONFIRMED
        for where in (Rotation.DOWN_LEFT, Rotation.DOWN_RIGHT):
            if p.upper_count:
                assert c.contains(rotate(p, where)) is CONFIRMED
        for where in (Rotation.UP_LEFT, Rotation.UP_RIGHT):
            if p.lower_count:
                assert c.contains(rotate(p, where)) is CONFIRMED


def test_fusion_throttle_consistent_with_unrestricted():
    for gens in ([double_singleton()], [four_block()], [positioner()]):
        throttled = generate_closure(gens, 6, 12, fusion_min=4)
        free_run = generate_closure(gens, 6, 12)
        assert throttled.words == free_run.words


def test_closure_equality_at_deeper_budget():
    # spot check beyond the default budget: planar pairings up to 10 points
    c = generate_closure([], 10, 20)
    assert c.saturated
    assert [len(c.members(0, 2 * k)) for k in range(1, 6)] == [1, 2, 5, 14, 42]
    c = generate_closure([four_block()], 10, 20, fusion_min=4)
    assert c.saturated
    for k in (8, 10):
        want = {p.word for p in enumerate_category("H+", k, cap=10)}
        assert {w for w in c.words if len(w) == k} == want, k


def test_half_liberated_closures_match_predicates_at_budget_8():
    # the half-liberating diagram has 6 points, so gluing 6-point elements
    # must stay enabled to reach everything at 8 points
    for name in ("O*", "H*", "B#*"):
        entry = catalog_entry(name)
        c = generate_closure(entry.generators, 8, 16, fusion_min=6)
        assert c.saturated
        for k in range(1, 9):
            want = {p.word for p in enumerate_category(name, k)}
            got = {w for w in c.words if len(w) == k}
            assert want == got, (name, k)


def test_block_extraction_lemma():
    # blocks of members stay members, up to a singleton patch for odd blocks
    for name in FREE_NAMES:
        entry = catalog_entry(name)
        pred = category_predicate(name)
        c = generate_closure(entry.generators, 6, 12, fusion_min=4)
        has_singleton = c.contains(singleton()) is CONFIRMED
        has_double = c.contains(double_singleton()) is CONFIRMED
        for p in c.element_partitions():
            for blk in p.blocks:
                standalone = block(len(blk))
                if has_singleton:
                    assert pred(standalone), (name, str(p))
                elif len(blk) % 2 == 0:
                    assert pred(standalone), (name, str(p))
                else:
                    assert has_double, (name, str(p))
                    assert pred(tensor(singleton(), standalone)), (name, str(p))


# ---------------------------------------------------------------------------
# classification


def test_classify_noncrossing_examples():
    assert classify_noncrossing([]).category_name == "O+"
    assert classify_noncrossing([four_block()]).category_name == "H+"
    assert classify_noncrossing([block(3)]).category_name == "S+"


def test_classify_noncrossing_rejects_crossing_generators():
    with pytest.raises(NotNoncrossingError):
        classify_noncrossing([crossing()])


def test_classify_classical_examples():
    assert classify_classical([]).category_name == "O"
    assert classify_classical([double_singleton()]).category_name == "B'"
    assert classify_classical([four_block(), singleton()]).category_name == "S"


def test_classify_easy_examples():
    res = classify_easy([half_lib()])
    assert (res.world, res.category_name) == ("HalfLib", "O*")
    res = classify_easy([half_lib(), double_singleton()])
    assert (res.world, res.category_name) == ("HalfLib", "B#*")
    res = classify_easy([half_lib(), four_block(), h_series(3)])
    assert (res.world, res.category_name, res.series_parameter) == ("Series", "H^(3)", 3)


def test_classify_easy_crossing_goes_classical():
    res = classify_easy([crossing()])
    assert (res.world, res.category_name) == ("Classical6", "O")
    assert ("P(2,2): u1,l2; u2,l1", "Confirmed") in res.evidence


def test_classify_easy_undetermined_for_fat_crossing():
    res = classify_easy([fat_crossing(), four_block()], max_fusion_ops=100_000)
    assert res.world == "Undetermined"
    assert res.category_name is None


def test_classify_easy_noncrossing_generators_stay_exact():
    res = classify_easy([four_block()])
    assert (res.world, res.category_name) == ("Free7", "H+")
    assert res.budgets is None


def test_classification_report_lines():
    res = classify_easy([half_lib()])
    lines = res.lines()
    assert lines[0] == "world: HalfLib"
    assert lines[1] == "name: O*"
    assert any(line.startswith("budgets: 8/16") for line in lines)
    assert any("Confirmed" in line for line in lines)
