import pytest
from hypothesis import given, settings

from atomforge.classify import (
    DEFAULT_GROUP,
    ProfileMismatch,
    UnsupportedClassification,
    canonical_form,
    chord_parity_ok,
    classify,
    forbidden_pair_present,
    free_points_odd_ok,
    is_optimal_diagram,
    minimal_critical_count,
    standard_substitution,
)
from atomforge.diagram import NEGATIVE, POSITIVE, ChordDiagram, parse_diagram
from atomforge.surface import build_atom
from conftest import diagrams


def test_chord_parity_examples():
    assert chord_parity_ok(ChordDiagram(5, [(1, 4)]))
    assert not chord_parity_ok(ChordDiagram(5, [(1, 3)]))
    assert chord_parity_ok(ChordDiagram(5))


def test_forbidden_pair_examples():
    assert forbidden_pair_present(ChordDiagram(5, [(2, 5), (3, 4)]))
    assert not forbidden_pair_present(ChordDiagram(5, [(1, 4), (2, 5)]))
    assert not forbidden_pair_present(ChordDiagram(5))


def test_forbidden_pair_detected_regardless_of_chord_order():
    assert forbidden_pair_present(ChordDiagram(5, [(2, 4), (1, 5)]))
    assert forbidden_pair_present(ChordDiagram(5, [(1, 5), (2, 4)]))


def test_free_points_odd_examples():
    assert free_points_odd_ok(ChordDiagram(5, [(1, 4), (2, 5)]))
    assert not free_points_odd_ok(ChordDiagram(4))


def test_free_points_odd_implied_by_parity_for_two_free_points():
    from atomforge.enumeration import enumerate_diagrams

    for k in range(1, 10):
        for d in enumerate_diagrams(k):
            if len(d.free_points()) != 2:
                continue
            if not free_points_odd_ok(d):
                assert not chord_parity_ok(d)


def test_is_optimal_examples():
    assert is_optimal_diagram(ChordDiagram(5, [(1, 4), (2, 5)]), 1, True)
    assert not is_optimal_diagram(ChordDiagram(5, [(2, 5), (3, 4)]), 1, True)
    assert is_optimal_diagram(
        ChordDiagram(9, [(1, 8), (2, 9), (3, 6), (4, 7)]), 2, True
    )


def test_is_optimal_rejects_syntactic_pass_with_wrong_topology():
    # passes every cheap screen but its +eps level is disconnected
    d = ChordDiagram(5, [(1, 2), (4, 5)])
    assert not is_optimal_diagram(d, 1, True)


def test_profile_mismatch():
    with pytest.raises(ProfileMismatch):
        is_optimal_diagram(ChordDiagram(5, [(1, 4)]), 1, True)
    with pytest.raises(ProfileMismatch):
        is_optimal_diagram(ChordDiagram(5, [(1, 4), (2, 5)]), 2, True)


def test_canonical_form_reflection_worked_example():
    d = ChordDiagram(5, [(1, 4), (2, 5)])
    reflected = ChordDiagram(5, [(2, 5), (1, 4)], NEGATIVE)
    assert canonical_form(d, "fatom") == canonical_form(reflected, "fatom")


@settings(max_examples=100)
@given(diagrams(max_k=13))
def test_canonicalization_idempotent(d):
    for mode in ("atom", "fatom"):
        canon = canonical_form(d, mode)
        again = canonical_form(parse_diagram(canon.decode("ascii")), mode)
        assert canon == again


@settings(max_examples=100)
@given(diagrams(max_k=13))
def test_canonical_form_constant_on_reflection_orbit(d):
    from atomforge.classify import _reflect

    for mode in ("atom", "fatom"):
        assert canonical_form(d, mode) == canonical_form(_reflect(d), mode)


@given(diagrams(max_k=13))
def test_atom_mode_quotients_colors(d):
    assert canonical_form(d.with_base_color(POSITIVE), "atom") == canonical_form(
        d.with_base_color(NEGATIVE), "atom"
    )


def test_canonical_form_rejects_bad_mode():
    with pytest.raises(ValueError):
        canonical_form(ChordDiagram(3), "molecule")


@pytest.mark.parametrize(
    "genus,mode,expected",
    [(1, "atom", 1), (1, "fatom", 1), (2, "atom", 5), (2, "fatom", 8)],
)
def test_classify_small_genus_counts(genus, mode, expected):
    catalog = classify(genus, True, mode)
    assert catalog.count == expected
    assert catalog.group_used == DEFAULT_GROUP


def test_classify_representatives_are_optimal():
    for genus in (1, 2):
        for mode in ("atom", "fatom"):
            catalog = classify(genus, True, mode)
            for rep in catalog.classes:
                assert is_optimal_diagram(rep, genus, True)


def test_fatom_count_bounded_by_twice_atom_count():
    for genus in (1, 2):
        atoms = classify(genus, True, "atom").count
        fatoms = classify(genus, True, "fatom").count
        assert atoms <= fatoms <= 2 * atoms


def test_classify_parallel_matches_serial():
    serial = classify(2, True, "fatom", workers=1)
    parallel = classify(2, True, "fatom", workers=4)
    assert serial.classes == parallel.classes


def test_classify_rejects_nonorientable():
    with pytest.raises(UnsupportedClassification):
        classify(1, False, "atom")


def test_classify_rejects_bad_mode():
    with pytest.raises(ValueError):
        classify(1, True, "molecule")


def test_standard_substitution_oriented():
    assert standard_substitution(1, True).pairs == ((1, 4), (2, 5))
    assert standard_substitution(2, True).pairs == ((1, 8), (2, 9), (3, 6), (4, 7))


def test_standard_substitution_nonoriented_generator():
    sub = standard_substitution(0, False)
    assert sub.k == 3
    assert sub.pairs == ((1, 3),)
    inv = build_atom(sub.to_diagram()).invariants()
    assert not inv.orientable


def test_standard_substitutions_are_optimal():
    for g in range(1, 6):
        d = standard_substitution(g, True).to_diagram()
        assert is_optimal_diagram(d, g, True)


def test_nonoriented_substitutions_have_odd_crosscap():
    for g in range(0, 3):
        d = standard_substitution(g, False).to_diagram()
        inv = build_atom(d).close_up().invariants()
        assert not inv.orientable
        assert inv.boundary_components == 1
        assert inv.crosscap_number == 2 * g + 1


def test_minimal_critical_count():
    assert minimal_critical_count(is_disk=True) == 2
    assert minimal_critical_count() == 3
    with pytest.raises(UnsupportedClassification):
        minimal_critical_count(boundary_components=2)
    with pytest.raises(UnsupportedClassification):
        minimal_critical_count(connected=False)
