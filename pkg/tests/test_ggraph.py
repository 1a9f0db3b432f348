import pytest

from conftest import SUITE_3D, get_fixed_points, get_group
from ghilb.ggraph import (
    GGraph,
    InfiniteComplementError,
    MonomialIdeal,
    OracleCapError,
    brute_force_fixed_points,
    complement,
    count_identity_value,
    enumerate_fixed_points,
    fixed_points_2d,
    is_ggraph,
    mono_divides,
    verify_count_identity,
)


def ideal(*gens):
    return MonomialIdeal.from_generators(gens)


def test_minimal_generators():
    i = ideal((2, 0, 0), (4, 0, 0), (0, 1, 0), (2, 1, 0))
    assert i.gens == ((0, 1, 0), (2, 0, 0))
    assert i.contains((3, 5, 0))
    assert not i.contains((1, 0, 7))


def test_complement_simple_staircases():
    assert complement(ideal((2, 0, 0), (0, 1, 0), (0, 0, 1))) == [(0, 0, 0), (1, 0, 0)]
    assert complement(ideal((1, 0, 0), (0, 1, 0), (0, 0, 1))) == [(0, 0, 0)]


def test_complement_seven_cell_staircase():
    gens = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    got = complement(MonomialIdeal.from_generators(gens))
    assert got == sorted(
        [(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 2, 0), (0, 0, 1), (0, 0, 2)]
    )


def test_infinite_complement_detected():
    with pytest.raises(InfiniteComplementError):
        complement(ideal((1, 0, 0), (0, 1, 0)))


def test_is_ggraph_order_two_cases():
    G = get_group("2:1,1,0")
    gg = is_ggraph(G, ideal((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert gg is not None
    assert gg.gamma == ((0, 0, 0), (1, 0, 0))
    assert gg.char_index == (0, 1)
    assert gg.kind == "A"
    assert gg.params == (1, 1, 1, 2, 1, 1)

    gg_y = is_ggraph(G, ideal((1, 0, 0), (0, 2, 0), (0, 0, 1)))
    assert gg_y is not None
    assert gg_y.gamma == ((0, 0, 0), (0, 1, 0))

    # gamma = {1, z} carries the trivial character twice
    assert is_ggraph(G, ideal((1, 0, 0), (0, 1, 0), (0, 0, 2))) is None


def test_seven_all_ones_candidate_rejected():
    # the 7-cell staircase {1,x,x^2,y,y^2,z,z^2} repeats characters for 1/7(1,2,4)
    G = get_group("7:1,2,4")
    gens = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert is_ggraph(G, MonomialIdeal.from_generators(gens)) is None


def test_klein_has_the_all_ones_kind_b_point():
    G = get_group("2:1,1,0;2:1,0,1")
    gens = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    gg = is_ggraph(G, MonomialIdeal.from_generators(gens))
    assert gg is not None
    assert gg.kind == "B"
    assert gg.params == (1, 1, 1, 1, 1, 1)
    assert verify_count_identity(gg)


def test_classify_axis_staircase_order_three():
    G = get_group("3:1,1,1")
    gg = is_ggraph(G, ideal((3, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert gg is not None
    assert gg.kind == "A"
    assert gg.params == (2, 1, 1, 2, 1, 1)
    assert gg.alpha_beta_gamma == (3, 1, 1)


def test_count_identity_formulas():
    assert count_identity_value("A", (1, 1, 1, 1, 1, 1)) == 1
    assert count_identity_value("B", (1, 1, 1, 1, 1, 1)) == 4
    assert count_identity_value("A", (1, 1, 1, 2, 1, 1)) == 2
    assert count_identity_value("A", (2, 1, 1, 2, 1, 1)) == 3


@pytest.mark.parametrize("spec,order", SUITE_3D)
def test_enumeration_count_and_identities(spec, order):
    fps = get_fixed_points(spec)
    assert len(fps) == order
    for gg in fps:
        assert gg.kind in ("A", "B")
        assert verify_count_identity(gg)


@pytest.mark.parametrize("spec,order", SUITE_3D)
def test_enumeration_matches_oracle(spec, order):
    G = get_group(spec)
    fps = get_fixed_points(spec)
    oracle = brute_force_fixed_points(G)
    assert [gg.to_json() for gg in fps] == [gg.to_json() for gg in oracle]


def test_oracle_cap_enforced():
    with pytest.raises(OracleCapError):
        brute_force_fixed_points(get_group("7:1,2,4"), cap=5)


@pytest.mark.parametrize("spec,order", SUITE_3D)
def test_staircase_invariants(spec, order):
    G = get_group(spec)
    for gg in get_fixed_points(spec):
        assert (0, 0, 0) in gg.gamma
        assert (1, 1, 1) not in gg.gamma
        assert len(set(gg.char_index)) == order
        gamma_set = set(gg.gamma)
        for m in gg.gamma:
            assert min(m) == 0
            for axis in range(3):
                if m[axis]:
                    lower = list(m)
                    lower[axis] -= 1
                    assert tuple(lower) in gamma_set
        # the stored ideal is exactly the complement of gamma
        for m in gg.gamma:
            assert not gg.ideal.contains(m)


@pytest.mark.parametrize("spec,order", SUITE_3D)
def test_canonical_order_is_stable(spec, order):
    fps = get_fixed_points(spec)
    gammas = [gg.gamma for gg in fps]
    assert gammas == sorted(gammas)
    # a second independent run returns the identical list
    again = enumerate_fixed_points(get_group(spec))
    assert [gg.to_json() for gg in again] == [gg.to_json() for gg in fps]


def test_to_json_shape():
    gg = get_fixed_points("2:1,1,0")[0]
    payload = gg.to_json()
    assert set(payload) == {"kind", "params", "generators", "gamma", "characters"}
    assert payload["kind"] in ("A", "B")
    assert len(payload["params"]) == 6
    assert len(payload["gamma"]) == 2
    assert isinstance(gg, GGraph)


@pytest.mark.parametrize("r", range(2, 11))
def test_two_dimensional_fixed_point_count(r):
    points = fixed_points_2d(r)
    assert len(points) == r
    for cells in points:
        assert len(cells) == r
        assert (0, 0) in cells


def test_two_dimensional_staircases_order_three():
    got = fixed_points_2d(3)
    hooks = {
        tuple(sorted([(0, 0), (1, 0), (2, 0)])),
        tuple(sorted([(0, 0), (1, 0), (0, 1)])),
        tuple(sorted([(0, 0), (0, 1), (0, 2)])),
    }
    assert set(got) == hooks


def test_divisibility_helper():
    assert mono_divides((1, 0, 2), (1, 1, 2))
    assert not mono_divides((1, 0, 2), (0, 1, 2))
