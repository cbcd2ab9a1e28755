import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SLICES_ALL_SEEING
from gradedposets import oracle
from gradedposets.poset import (
    ChainSumPattern,
    CycleDetected,
    GradingKind,
    Poset,
    automorphisms,
    avoids_22_local,
    avoids_31_local,
    avoids_both_local,
    build,
    canonical_form,
    contains,
    format_poset,
    grade_contains,
    grading,
    is_isomorphic,
    locality_offsets,
    parse_poset,
    ranked,
    seeing,
)


def test_parse_roundtrip(example_posets):
    for p in example_posets.values():
        assert parse_poset(format_poset(p)) == p


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        build(3, [(0, 1), (1, 2), (2, 0)])


def test_example_gradings(example_posets):
    assert grading(example_posets["not_graded"]).kind is GradingKind.NOT_GRADED
    assert grading(example_posets["weak"]).kind is GradingKind.WEAK
    assert grading(example_posets["right"]).kind is GradingKind.STRONG
    # every maximal chain of the tree has three elements
    assert grading(example_posets["tree"]).kind is GradingKind.STRONG


def test_example_avoidance(example_posets):
    f = example_posets
    assert not contains(f["not_graded"], (2, 2)) and not contains(f["not_graded"], (3, 1))
    assert contains(f["tree"], (2, 2)) and not contains(f["tree"], (3, 1))
    assert not contains(f["right"], (2, 2)) and contains(f["right"], (3, 1))
    m = oracle.classify(f["right"])
    assert m.graded and m.interval_order and not m.semiorder


def test_two_plus_two_ranks():
    p = Poset.chain_sum((2, 2))
    assert ranked(p).rank == (0, 1, 0, 1)
    assert not oracle.classify(p).interval_order


def test_slices_all_seeing(example_posets):
    rp = ranked(example_posets["slices"])
    assert rp.height == 3
    assert {v for v in range(9) if seeing(rp, v).all_seeing} == SLICES_ALL_SEEING
    assert avoids_both_local(rp)
    assert not contains(rp.poset, (2, 2)) and not contains(rp.poset, (3, 1))


def test_locality_offsets():
    assert [p.offsets for p in locality_offsets(2, 2)] == [(0, 0), (0, 1), (1, 0)]
    assert [p.offsets for p in locality_offsets(3, 1)] == [(0, 0), (0, 1), (0, 2)]


def test_grade_contains_respects_offsets():
    rp = ranked(Poset.chain_sum((2, 2)))
    assert grade_contains(rp, ChainSumPattern((2, 2), (0, 0)))
    assert not grade_contains(rp, ChainSumPattern((2, 2), (0, 1)))


def test_pattern_validation():
    with pytest.raises(ValueError):
        ChainSumPattern((2, 0))
    with pytest.raises(ValueError):
        ChainSumPattern((2, 2), (1, 1))


def test_locality_requires_strong(example_posets):
    g = grading(example_posets["weak"])
    with pytest.raises(ValueError):
        avoids_22_local(g.ranked)


def test_automorphism_counts():
    assert automorphisms(Poset.chain_sum((2, 2))) == 2
    assert automorphisms(Poset.antichain(4)) == 24
    assert automorphisms(Poset.chain(5)) == 1


def test_unlabeled_counts():
    assert [len(oracle.unlabeled_classes(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


@pytest.mark.parametrize("n", range(7))
def test_exhaustive_locality(n):
    for p in oracle.unlabeled_classes(n):
        g = grading(p)
        if g.kind is not GradingKind.STRONG:
            continue
        rp = g.ranked
        c22, c31 = contains(p, (2, 2)), contains(p, (3, 1))
        assert avoids_22_local(rp) is not c22
        assert avoids_31_local(rp) is not c31
        assert avoids_both_local(rp) is not (c22 or c31)
        assert any(grade_contains(rp, q) for q in locality_offsets(2, 2)) is c22
        assert any(grade_contains(rp, q) for q in locality_offsets(3, 1)) is c31


reps = st.integers(0, 5).flatmap(lambda n: st.sampled_from(oracle.unlabeled_classes(n)))


@settings(max_examples=150, deadline=None)
@given(reps, st.randoms(use_true_random=False))
def test_relabel_invariance(p, rnd: random.Random):
    perm = list(range(p.n))
    rnd.shuffle(perm)
    q = p.relabel(perm)
    assert canonical_form(q) == canonical_form(p)
    assert is_isomorphic(p, q)
    assert grading(q).kind is grading(p).kind
    assert contains(q, (2, 2)) == contains(p, (2, 2))
    assert automorphisms(q) == automorphisms(p)


def test_canonical_form_separates_classes():
    for n in range(6):
        forms = {canonical_form(p) for p in oracle.unlabeled_classes(n)}
        assert len(forms) == len(oracle.unlabeled_classes(n))
