import random
from fractions import Fraction

import pytest

from realcomp import (
    FAIL,
    Add,
    Answer,
    Const,
    IndexSet,
    NATURALS,
    NoConvergence,
    Query,
    RealEnumRel,
    Var,
    WitnessEntry,
    apply,
    chi_pos,
    cluster_values,
    enumerate_witnesses,
    from_function,
    from_rational,
    make_finite_rel,
    make_tail_rel,
    member_semi,
    project,
    shift_machine,
    witness,
)

from helpers import rand_query, soundness_violations

F = Fraction


def two_branch_rel():
    """The relation pairing x with x and with x + 1."""
    return make_tail_rel([Var(0)], Add(Var(0), Const(1)))


def all_fail_rel():
    return RealEnumRel(NATURALS, lambda i: None, name="void")


def brute_force_clusters(values, radius):
    """Independent clustering oracle: transitive closure of proximity."""
    values = list(values)
    parents = list(range(len(values)))

    def find(i):
        while parents[i] != i:
            i = parents[i]
        return i

    for i in range(len(values)):
        for j in range(i):
            if abs(values[i] - values[j]) <= radius:
                parents[find(i)] = find(j)
    return len({find(i) for i in range(len(values))})


def test_family_answers_match_the_branch_machines():
    rel = two_branch_rel()
    query = Query.of((F(0), F(1, 8)))
    assert rel.family(query, 0) == Answer(F(0), F(1, 8))
    assert rel.family(query, 5) == Answer(F(1), F(1, 8))


def test_identity_relation_every_index_echoes():
    rel = make_tail_rel([], Var(0))
    query = Query.of((F(2, 7), F(1, 16)))
    for i in (0, 1, 17):
        assert rel.family(query, i) == Answer(F(2, 7), F(1, 16))


def test_index_sets():
    assert NATURALS.contains(10**9)
    finite = IndexSet.finite(3)
    assert finite.contains(2) and not finite.contains(3)
    assert finite.clip(10) == 2
    with pytest.raises(ValueError):
        IndexSet.finite(0)


def test_witness_refines_single_branches():
    rel = two_branch_rel()
    zero = from_rational(0)
    w0 = witness(rel, zero, 0, F(1, 8), 500)
    assert isinstance(w0, WitnessEntry) and abs(w0.value) <= F(1, 8)
    w3 = witness(rel, zero, 3, F(1, 8), 500)
    assert isinstance(w3, WitnessEntry) and abs(w3.value - 1) <= F(1, 8)
    ident = make_tail_rel([], Var(0))
    for i in (0, 4):
        w = witness(ident, from_rational(F(1, 2)), i, F(1, 64), 500)
        assert abs(w.value - F(1, 2)) <= F(1, 64)


def test_witness_fail_and_no_convergence():
    finite = make_finite_rel([Var(0)])
    assert witness(finite, from_rational(0), 5, F(1, 8), 100) is FAIL
    rel = RealEnumRel(NATURALS, lambda i: chi_pos(), name="positivity")
    result = witness(rel, from_rational(-1), 0, F(1, 8), 50)
    assert isinstance(result, NoConvergence)


def test_enumerate_witnesses_collects_and_clusters():
    rel = two_branch_rel()
    accuracy = F(1, 1024)
    listing = enumerate_witnesses(rel, from_rational(F(1, 2)), accuracy, 3, 500)
    assert listing.skipped == ()
    values = [entry.value for entry in listing.entries]
    assert len(values) == 4
    assert abs(values[0] - F(1, 2)) <= accuracy
    for v in values[1:]:
        assert abs(v - F(3, 2)) <= accuracy
    clusters = cluster_values(values, 2 * accuracy)
    assert len(clusters) == 2
    assert brute_force_clusters(values, 2 * accuracy) == 2


def test_enumerate_witnesses_skips_everything_on_a_void_relation():
    listing = enumerate_witnesses(all_fail_rel(), from_rational(0), F(1, 8), 4, 100)
    assert listing.entries == ()
    assert listing.skipped == (0, 1, 2, 3, 4)


def test_enumeration_window_monotone():
    rel = two_branch_rel()
    small = enumerate_witnesses(rel, from_rational(F(1, 3)), F(1, 256), 2, 500)
    large = enumerate_witnesses(rel, from_rational(F(1, 3)), F(1, 256), 6, 500)
    assert large.entries[: len(small.entries)] == small.entries


def test_member_semi_finds_the_shifted_witness():
    rel = two_branch_rel()
    assert member_semi(rel, from_rational(0), from_rational(1), F(1, 1024), 10, 500) == 1
    ident = make_tail_rel([], Var(0))
    x = from_rational(F(3, 7))
    assert member_semi(ident, x, from_rational(F(3, 7)), F(1, 1024), 10, 500) == 0


def test_member_semi_exhausts_without_refuting():
    rel = two_branch_rel()
    result = member_semi(
        rel, from_rational(0), from_rational(F(1, 2)), F(1, 1024), 10, 500
    )
    assert result is None  # silence, not a refutation


def test_member_semi_certificates_survive_re_refinement():
    rel = two_branch_rel()
    accuracy = F(1, 1024)
    x = from_rational(F(2, 5))
    y = from_rational(F(7, 5))  # = 2/5 + 1
    index = member_semi(rel, x, y, accuracy, 10, 500)
    assert index is not None
    fine = accuracy / 16
    re_witness = witness(rel, x, index, fine, 2000)
    y_fine = y(fine)
    assert abs(re_witness.value - y_fine) <= accuracy


def test_from_function_project_round_trip():
    machine = shift_machine(1)
    rel = from_function(machine)
    rng = random.Random(41)
    for i in (0, 3, 7, 19):
        projected = project(rel, i)
        for _ in range(50):
            query = rand_query(rng, 1)
            assert apply(projected, query) == apply(machine, query)


def test_project_the_two_branch_relation():
    rel = two_branch_rel()
    rng = random.Random(43)
    head = project(rel, 0)
    tail = project(rel, 3)
    for _ in range(200):
        query = rand_query(rng, 1)
        q, tol = query.components[0]
        assert apply(head, query) == Answer(q, tol)
        assert apply(tail, query) == Answer(q + 1, tol)


def test_project_rejects_unused_indices():
    finite = make_finite_rel([Var(0), Add(Var(0), Const(1))])
    project(finite, 1)
    with pytest.raises(ValueError, match="not in use"):
        project(finite, 2)
    with pytest.raises(ValueError, match="not in use"):
        project(all_fail_rel(), 0)


def test_every_slice_of_catalog_relations_is_sound():
    rng = random.Random(47)
    rel = two_branch_rel()
    references = {0: Var(0), 1: Add(Var(0), Const(1)), 4: Add(Var(0), Const(1))}
    for i, expr in references.items():
        assert soundness_violations(project(rel, i), expr, rng, 200) == 0


def test_cluster_values_radius_semantics():
    values = [F(0), F(1, 100), F(1), F(101, 100), F(5)]
    clusters = cluster_values(values, F(1, 50))
    assert [len(c) for c in clusters] == [2, 2, 1]
    assert brute_force_clusters(values, F(1, 50)) == 3
