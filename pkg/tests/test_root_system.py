from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from toric_mazur.lattice.models import Character, Cocharacter
from toric_mazur.root_system import (
    build_root_datum,
    check_batches,
    is_dominant,
    levi_directions,
    levi_roots,
    pairing,
    parse_datum,
    pr_levi,
    project_along,
    project_along_root,
    reflect,
    root_lattice_contains,
    weyl_orbit,
)
from toric_mazur.utils.exceptions import RootDatumError

DATA = ["GL:3", "GL:4", "SL:3", "SL:4", "G2"]


@st.composite
def sum_zero_characters(draw, n=3, bound=6):
    head = draw(st.lists(st.integers(-bound, bound), min_size=n - 1, max_size=n - 1))
    return Character(tuple(head) + (-sum(head),))


@pytest.mark.parametrize("name, roots, positive", [
    ("GL:3", 6, 3),
    ("GL:4", 12, 6),
    ("SL:3", 6, 3),
    ("SL:4", 12, 6),
    ("G2", 12, 6),
])
def test_root_counts(name, roots, positive):
    datum = parse_datum(name)
    assert len(datum.roots) == roots
    assert len(datum.positive_roots) == positive
    assert datum.name == name


def test_parse_datum_is_case_insensitive_and_cached():
    assert parse_datum("sl:3") is build_root_datum("SL", 3)
    assert build_root_datum("SLn", 3).name == "SL:3"


@pytest.mark.parametrize("text", ["SL:1", "XY:3", "G2:3", "SL", "GL:x"])
def test_parse_datum_rejects(text):
    with pytest.raises(RootDatumError):
        parse_datum(text)


@pytest.mark.parametrize("name", DATA)
def test_coroot_pairs_to_two_and_reflection_negates(name):
    datum = parse_datum(name)
    for alpha in datum.roots:
        assert pairing(datum.coroot(alpha), alpha) == 2
        assert reflect(datum, alpha, alpha) == -alpha


def test_g2_coroots(g2):
    assert g2.coroot(Character.of(2, -1, -1)).canonical == (1, 0, 0)
    assert g2.coroot(Character.of(1, -1, 0)).canonical == (1, -1, 0)
    assert g2.coroot(Character.of(-1, 2, -1)) == Cocharacter((0, 1, 0))


def test_unknown_root(sl3):
    with pytest.raises(RootDatumError):
        sl3.require_root(Character.of(2, -1, -1))


def test_character_validation(sl3, gl3):
    with pytest.raises(RootDatumError):
        sl3.character((1, 1, 1))
    with pytest.raises(RootDatumError):
        sl3.character((Fraction(1, 2), Fraction(-1, 2), 0))
    with pytest.raises(RootDatumError):
        sl3.character((1, -1))
    assert gl3.character((1, 1, 1)) == Character.of(1, 1, 1)


@pytest.mark.parametrize("name, mu, size", [
    ("SL:3", (1, 0, -1), 6),
    ("SL:3", (2, -1, -1), 3),
    ("GL:3", (1, 0, 0), 3),
    ("G2", (1, 0, -1), 6),
    ("G2", (2, -1, -1), 6),
    ("G2", (2, 1, -3), 12),
])
def test_weyl_orbit_sizes(name, mu, size):
    assert len(weyl_orbit(parse_datum(name), Character(mu))) == size


@given(u=sum_zero_characters())
def test_weyl_orbit_is_closed(u):
    g2 = build_root_datum("G2")
    orbit = weyl_orbit(g2, u)
    assert all(weyl_orbit(g2, v) == orbit for v in orbit)
    assert {v.dot(v) for v in orbit} == {u.dot(u)}


@given(u=sum_zero_characters())
def test_projection_lands_in_coroot_hyperplane(u):
    g2 = build_root_datum("G2")
    for alpha in g2.roots:
        projected = project_along_root(g2, u, alpha)
        assert pairing(g2.coroot(alpha), projected) == 0
        assert project_along_root(g2, projected, alpha) == projected


def test_is_dominant(sl3, g2):
    assert is_dominant(sl3, Character.of(1, 0, -1))
    assert not is_dominant(sl3, Character.of(0, 1, -1))
    assert is_dominant(g2, Character.of(1, 1, -2))
    assert not is_dominant(g2, Character.of(2, -1, -1))


def test_root_lattice_contains(gl3, g2):
    assert root_lattice_contains(gl3, Character.of(1, -1, 0))
    assert not root_lattice_contains(gl3, Character.of(1, 0, 0))
    assert not root_lattice_contains(gl3, Character.of(Fraction(1, 2), Fraction(-1, 2), 0))
    assert root_lattice_contains(g2, Character.of(1, 0, -1))


def test_levi_roots_and_projection(gl3, gl4):
    assert levi_roots(gl4, (2, 2)) == [Character.of(1, -1, 0, 0), Character.of(0, 0, 1, -1)]
    assert pr_levi(gl3, Character.of(3, 0, 0), (2, 1)) == Character.of(Fraction(3, 2), Fraction(3, 2), 0)


def test_levi_directions_compose_to_pr_levi(gl3):
    directions = levi_directions(gl3, (3,))
    assert directions == [Character.of(1, -1, 0), Character.of(Fraction(1, 2), Fraction(1, 2), -1)]
    u = Character.of(3, 0, 0)
    for d in directions:
        u = project_along(u, d)
    assert u == pr_levi(gl3, Character.of(3, 0, 0), (3,)) == Character.of(1, 1, 1)


def test_check_batches(gl4, sl3):
    assert check_batches(gl4, [2, 1, 1]) == (2, 1, 1)
    for batches in [(), (2, 2, True), (2, 1), (5, -1)]:
        with pytest.raises(RootDatumError):
            check_batches(gl4, batches)
    with pytest.raises(RootDatumError):
        check_batches(sl3, (3,))


def test_only_sl_and_g2_coroots_are_taken_modulo_the_diagonal(gl3, sl3, g2):
    assert not any(gl3.coroot(alpha).quotient for alpha in gl3.roots)
    assert all(sl3.coroot(alpha).quotient for alpha in sl3.roots)
    assert all(g2.coroot(alpha).quotient for alpha in g2.roots)
    assert not hasattr(gl3, "quotient")


@pytest.mark.parametrize("batches", [(2, 2), (1, 1), (0, 3)])
def test_levi_batches_rejected(gl3, batches):
    with pytest.raises(RootDatumError):
        levi_roots(gl3, batches)


def test_levi_batches_need_gl(sl3):
    with pytest.raises(RootDatumError):
        pr_levi(sl3, Character.of(1, 0, -1), (3,))
