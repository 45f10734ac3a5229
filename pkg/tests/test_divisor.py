from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from toric_mazur.divisor import (
    OrthogonalSet,
    character_on_cone,
    constant_set,
    d_alpha_ray_divisor,
    d_alpha_set,
    evaluate_psi,
    from_ray_coefficients,
    from_weyl_orbit,
    is_convex,
    max_increment,
    ray_coefficients,
    ray_divisor,
    require_valid,
    restrict_to_divisor,
    shift,
    subtract_d_alpha,
    validate,
    wall_multiple,
)
from toric_mazur.fan import build_weyl_fan
from toric_mazur.lattice.models import Character, Cocharacter
from toric_mazur.mazur import random_orthogonal_set
from toric_mazur.root_system import pairing, parse_datum
from toric_mazur.utils.exceptions import (
    DivisorFormatError,
    InconsistentCoefficientsError,
    OrthogonalSetError,
    RootDatumError,
)

seeds = st.integers(0, 10_000)


def test_weyl_orbit_set(hexagon):
    assert hexagon["1-2"] == Character.of(1, 0, -1)
    assert hexagon["3-1"] == Character.of(0, -1, 1)
    result = validate(hexagon)
    assert result.valid and result.positive and result.strictly_positive
    assert is_convex(hexagon)
    assert max_increment(hexagon) == 1
    assert hexagon.degree == 0


@pytest.mark.parametrize("name, mu", [("G2", (2, -1, -1)), ("G2", (1, 0, -1)), ("GL:4", (3, 1, 1, 0))])
def test_weyl_orbit_sets_are_positive(name, mu):
    os = from_weyl_orbit(parse_datum(name), Character(mu))
    assert validate(os).positive
    assert is_convex(os)


def test_ray_coefficients_of_hexagon(hexagon):
    assert set(ray_coefficients(hexagon).values()) == {1}
    assert len(ray_divisor(hexagon)) == 6


def test_negative_set_is_valid_but_not_convex(hexagon):
    negative = -hexagon
    result = validate(negative)
    assert result.valid and not result.positive
    assert result.failing_pair is not None
    assert not is_convex(negative)
    with pytest.raises(OrthogonalSetError):
        require_valid(negative, positive=True)


def test_invalid_wall_reports_pair(hexagon):
    chars = dict(hexagon.chars, **{"1-2": Character.of(0, 0, 0)})
    os = OrthogonalSet(hexagon.fan, chars)
    assert not validate(os).valid
    with pytest.raises(OrthogonalSetError) as info:
        require_valid(os)
    assert info.value.pair == ("1-2", "1-3")


def test_off_lattice_character_reports_cone(hexagon):
    chars = dict(hexagon.chars, **{"2-3": Character.of(Fraction(1, 2), 0, Fraction(-1, 2))})
    result = validate(OrthogonalSet(hexagon.fan, chars))
    assert not result.valid
    assert result.failing_cone == "2-3"


def test_missing_cone(sl3_fan):
    with pytest.raises(OrthogonalSetError) as info:
        OrthogonalSet(sl3_fan, {"1-2": Character.of(1, 0, -1)})
    assert info.value.cone_id == "1-3"


def test_constant_set(sl3_fan):
    result = validate(constant_set(sl3_fan, Character.of(1, 0, -1)))
    assert result.positive and not result.strictly_positive


def test_divisor_json_round_trip(hexagon):
    assert OrthogonalSet.from_dict(hexagon.to_dict()) == hexagon


@pytest.mark.parametrize("chars, cone_id", [
    ({"9-9": [1, 0, -1]}, "9-9"),
    ({"1-2": [0.5, 0, -0.5]}, "1-2"),
    ({"1-2": [1, 0]}, "1-2"),
])
def test_malformed_divisor_names_the_cone(hexagon, chars, cone_id):
    data = hexagon.to_dict()
    data["chars"] = dict(data["chars"], **chars)
    with pytest.raises(DivisorFormatError) as info:
        OrthogonalSet.from_dict(data)
    assert info.value.cone_id == cone_id


def test_malformed_divisor_documents(hexagon):
    with pytest.raises(DivisorFormatError):
        OrthogonalSet.from_dict({"datum": "SL:3"})
    with pytest.raises(DivisorFormatError):
        OrthogonalSet.from_dict({"datum": "SL:9x", "chars": {}})
    data = hexagon.to_dict()
    del data["chars"]["3-2"]
    with pytest.raises(DivisorFormatError) as info:
        OrthogonalSet.from_dict(data)
    assert info.value.cone_id == "3-2"


@pytest.mark.parametrize("name", ["SL:3", "SL:4", "G2"])
def test_d_alpha_set_matches_ray_divisor(name):
    fan = build_weyl_fan(parse_datum(name))
    for alpha in fan.datum.roots:
        os = d_alpha_set(fan, alpha)
        assert validate(os).positive
        assert ray_divisor(os) == d_alpha_ray_divisor(fan, alpha)


def test_d_alpha_ray_divisor(sl3_fan):
    assert d_alpha_ray_divisor(sl3_fan, Character.of(1, -1, 0)) == {
        Cocharacter((1, 0, 0)): 1,
        Cocharacter((1, 0, 1)): 1,
    }


def test_subtract_d_alpha(hexagon):
    difference = subtract_d_alpha(hexagon, Character.of(1, -1, 0))
    assert difference["1-2"] == Character.of(0, 1, -1)
    assert difference["2-1"] == hexagon["2-1"]
    with pytest.raises(RootDatumError):
        subtract_d_alpha(hexagon, Character.of(2, -1, -1))


def test_evaluate_psi(hexagon):
    assert evaluate_psi(hexagon, (2, 1, 0)) == 2
    assert evaluate_psi(hexagon, Cocharacter((3, 2, 1))) == 2


def test_shift(hexagon):
    u = Character.of(1, -1, 0)
    assert shift(shift(hexagon, u), -u) == hexagon
    with pytest.raises(RootDatumError):
        shift(hexagon, Character.of(1, -1))


def test_restrict_to_divisor(hexagon):
    restricted = restrict_to_divisor(hexagon, Character.of(1, -1, 0))
    half = Fraction(1, 2)
    assert restricted["1-2|2-1"] == Character.of(half, half, -1)
    assert restricted["3-1|3-2"] == Character.of(-half, -half, 1)
    assert validate(restricted).positive


def test_ray_coefficient_inversion_errors(sl3_fan):
    coefficients = {ray: 1 for ray in sl3_fan.rays}
    with pytest.raises(InconsistentCoefficientsError):
        from_ray_coefficients(sl3_fan, coefficients, degree=1)
    with pytest.raises(InconsistentCoefficientsError):
        from_ray_coefficients(sl3_fan, {**coefficients, sl3_fan.rays[0]: Fraction(1, 2)})
    del coefficients[sl3_fan.rays[0]]
    with pytest.raises(InconsistentCoefficientsError):
        from_ray_coefficients(sl3_fan, coefficients)


@given(seed=seeds, name=st.sampled_from(["SL:3", "GL:3", "G2"]))
def test_ray_coefficients_determine_the_set(seed, name):
    os = random_orthogonal_set(parse_datum(name), 4, seed)
    assert validate(os).valid
    assert from_ray_coefficients(os.fan, ray_coefficients(os), os.degree) == os


@given(seed=seeds, name=st.sampled_from(["SL:3", "G2"]))
def test_convex_iff_positive(seed, name):
    os = random_orthogonal_set(parse_datum(name), 3, seed)
    assert is_convex(os) == validate(os).positive


def test_sets_on_different_fans_do_not_combine(hexagon, g2_fan):
    with pytest.raises(OrthogonalSetError):
        hexagon + constant_set(g2_fan, Character.of(0, 0, 0))


def test_wall_multiple():
    root = Character.of(1, -1, 0)
    assert wall_multiple(Character.of(2, -2, 0), root) == 2
    assert wall_multiple(Character.of(-1, 1, 0), root) == -1
    assert wall_multiple(Character.of(1, 0, -1), root) is None


def test_character_on_cone(hexagon):
    coefficients = ray_coefficients(hexagon)
    for cone_id in hexagon.fan.cones:
        assert character_on_cone(hexagon.fan, cone_id, coefficients, 0) == hexagon[cone_id]
    ray = hexagon.fan.cones["1-2"].rays[0]
    with pytest.raises(InconsistentCoefficientsError):
        character_on_cone(hexagon.fan, "1-2", {r: a for r, a in coefficients.items() if r != ray}, 0)


def test_nested_restriction(gl4):
    os = from_weyl_orbit(gl4, Character.of(2, 1, 0, 0))
    first = Character.of(1, -1, 0, 0)
    second = Character.of(Fraction(1, 2), Fraction(1, 2), -1, 0)
    restricted = restrict_to_divisor(restrict_to_divisor(os, first), second)
    assert restricted.fan.hyperplanes == (first, second)
    assert len(restricted.chars) == 2
    assert all(u.dot(first) == 0 and u.dot(second) == 0 for u in restricted.chars.values())
    assert validate(restricted).positive


@given(seed=seeds, a=st.integers(-3, 3), b=st.integers(-3, 3), index=st.integers(0, 5))
def test_shift_commutes_with_subtracting_d_alpha(seed, a, b, index):
    datum = parse_datum("SL:3")
    os = random_orthogonal_set(datum, 3, seed)
    u = Character.of(a, b, -a - b)
    alpha = datum.roots[index]
    assert shift(subtract_d_alpha(os, alpha), u) == subtract_d_alpha(shift(os, u), alpha)
    shifted = ray_coefficients(shift(os, u))
    assert all(shifted[ray] == c - pairing(ray, u) for ray, c in ray_coefficients(os).items())
