from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from toric_mazur import fan as fan_module, root_system
from toric_mazur.fan import adjacent_cones, build_weyl_fan, cone_sign, divisor_subfan, locate_cone
from toric_mazur.lattice.models import Character
from toric_mazur.root_system import build_root_datum, levi_directions, pairing, parse_datum
from toric_mazur.utils.exceptions import FanError, RootDatumError


@pytest.mark.parametrize("name, rays, cones, walls", [
    ("SL:3", 6, 6, 6),
    ("GL:3", 6, 6, 6),
    ("SL:4", 14, 24, 36),
    ("GL:4", 14, 24, 36),
    ("G2", 12, 12, 12),
])
def test_fan_sizes(name, rays, cones, walls):
    fan = build_weyl_fan(parse_datum(name))
    assert len(fan.rays) == rays
    assert len(fan.cones) == cones
    assert len(fan.walls) == walls


@pytest.mark.parametrize("name", ["SL:3", "SL:4", "G2"])
def test_cones_are_unimodular(name):
    fan = build_weyl_fan(parse_datum(name))
    assert all(abs(fan.determinant(cone_id)) == 1 for cone_id in fan.cones)


@pytest.mark.parametrize("name", ["SL:3", "GL:4", "G2"])
def test_adjacency_graph(name):
    fan = build_weyl_fan(parse_datum(name))
    assert nx.is_connected(fan.graph)
    assert all(degree == fan.rank for _, degree in fan.graph.degree())


@pytest.mark.parametrize("name", ["SL:3", "SL:4", "G2"])
def test_wall_roots_separate_neighbors(name):
    fan = build_weyl_fan(parse_datum(name))
    for cone_id, entries in fan.adjacency.items():
        for entry in entries:
            own = next(r for r in fan.cones[cone_id].rays if r not in entry.shared)
            other = next(r for r in fan.cones[entry.neighbor].rays if r not in entry.shared)
            assert pairing(own, entry.root) > 0
            assert pairing(other, entry.root) < 0
            assert all(pairing(r, entry.root) == 0 for r in entry.shared)
            assert pairing(entry.coroot, entry.root) == 2


def test_type_a_cone_ids_and_neighbors(sl3_fan):
    assert list(sl3_fan.cones) == ["1-2", "1-3", "2-1", "2-3", "3-1", "3-2"]
    assert [neighbor for neighbor, _, _ in adjacent_cones(sl3_fan, "1-2")] == ["1-3", "2-1"]


def test_g2_cone_ids(g2_fan):
    assert list(g2_fan.cones) == [str(i) for i in range(1, 13)]


def test_locate_cone(sl3_fan, g2, g2_fan):
    assert locate_cone(sl3_fan, (2, 1, 0)) == "1-2"
    assert locate_cone(sl3_fan, (7, 8, 6)) == "2-1"
    assert locate_cone(g2_fan, g2.regular_cocharacter) in g2_fan.cones


def test_unknown_cone(sl3_fan):
    with pytest.raises(FanError):
        sl3_fan.cone("1-1")
    with pytest.raises(FanError):
        adjacent_cones(sl3_fan, "4-1")


def test_cone_sign(sl3_fan):
    alpha = Character.of(1, -1, 0)
    assert cone_sign(sl3_fan, "1-2", alpha) == 1
    assert cone_sign(sl3_fan, "2-1", alpha) == -1
    with pytest.raises(FanError):
        cone_sign(sl3_fan, "1-2", Character.of(1, -2, 1))


def test_every_chamber_lies_on_one_side(g2, g2_fan):
    for alpha in g2.roots:
        signs = [cone_sign(g2_fan, cone_id, alpha) for cone_id in g2_fan.cones]
        assert signs.count(1) == signs.count(-1) == 6


def test_divisor_subfan(sl3_fan):
    subfan = divisor_subfan(sl3_fan, Character.of(1, -1, 0))
    assert list(subfan.cones) == ["1-2|2-1", "3-1|3-2"]
    assert subfan.name == "SL:3[(1,-1,0)=0]"
    assert subfan.to_dict()["hyperplane"] == [1, -1, 0]
    with pytest.raises(FanError):
        divisor_subfan(subfan, Character.of(1, -1, 0))


def test_g2_divisor_subfans(g2, g2_fan):
    for alpha in g2.roots:
        subfan = divisor_subfan(g2_fan, alpha)
        assert len(subfan.cones) == 2
        assert all(pairing(ray, alpha) == 0 for ray in subfan.rays)


def test_divisor_subfan_needs_a_root(sl3_fan):
    with pytest.raises(RootDatumError):
        divisor_subfan(sl3_fan, Character.of(2, -1, -1))


def test_faces(sl3_fan, g2_fan):
    assert len(sl3_fan.faces) == 12
    assert len(g2_fan.faces) == 24
    assert all(len(ids) == 2 for face, ids in sl3_fan.faces.items() if len(face) == 1)


def test_fan_dump(sl3_fan):
    data = sl3_fan.to_dict()
    assert data["datum"] == "SL:3"
    assert len(data["cones"]) == 6
    assert len(data["adjacency"]) == 12
    assert all("coroot" in entry for entry in data["adjacency"])


def test_fans_are_cached(sl3):
    assert build_weyl_fan(sl3) is build_weyl_fan(parse_datum("SL:3"))


def test_nested_divisor_subfans(gl4):
    fan = build_weyl_fan(gl4)
    subfan = divisor_subfan(fan, Character.of(1, -1, 0, 0))
    assert len(subfan.cones) == 6
    assert all(subfan.parents[cone_id] == tuple(cone_id.split("|")) for cone_id in subfan.cones)

    direction = Character.of(Fraction(1, 2), Fraction(1, 2), -1, 0)
    assert direction in subfan.wall_roots
    inner = divisor_subfan(subfan, direction)
    assert len(inner.cones) == 2
    assert inner.name == "GL:4[(1,-1,0,0)=0][(1/2,1/2,-1,0)=0]"
    assert inner.hyperplanes == (Character.of(1, -1, 0, 0), direction)
    assert all(pairing(ray, alpha) == 0 for ray in inner.rays for alpha in inner.hyperplanes)
    for cone_id, (first, second) in inner.parents.items():
        assert cone_id == f"({first})|({second})"
        assert first in subfan.cones and second in subfan.cones

    other = divisor_subfan(subfan, Character.of(0, 0, 1, -1))
    assert len(other.cones) == 2
    with pytest.raises(FanError):
        divisor_subfan(subfan, Character.of(1, 0, -1, 0))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(data=st.data(), name=st.sampled_from(["SL:3", "SL:4", "GL:4", "G2"]))
def test_fans_are_complete(data, name):
    fan = build_weyl_fan(parse_datum(name))
    v = data.draw(st.lists(rationals, min_size=fan.datum.n, max_size=fan.datum.n))
    cone_id = locate_cone(fan, v)
    assert fan.cones[cone_id].contains(v)


def test_caches_are_safe_across_threads():
    fan_module.CACHE.clear()
    root_system.CACHE.clear()

    def build(_):
        datum = build_root_datum("SL", 4)
        return datum, build_weyl_fan(datum)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(build, range(16)))
    data, fans = zip(*results)
    assert all(datum is data[0] for datum in data)
    assert all(fan is fans[0] for fan in fans)
    assert len(fans[0].cones) == 24


@pytest.mark.parametrize("batches", [(4,), (3, 1), (2, 2), (1, 3)])
def test_levi_directions_are_nested_wall_roots(gl4, batches):
    fan = build_weyl_fan(gl4)
    *inner, last = levi_directions(gl4, batches)
    for direction in inner:
        assert direction in fan.wall_roots
        fan = divisor_subfan(fan, direction)
    assert last in fan.wall_roots
    assert fan.rank == len(batches)
