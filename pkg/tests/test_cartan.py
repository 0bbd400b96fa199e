import json

import pytest

import polycrystal as pc
from polycrystal.cartan import InvalidCartanError, custom_from_json


def test_rank2_matrix():
    c = pc.rank2(2, 2)
    assert c.matrix == ((2, -2), (-2, 2))


def test_type_a_rank_one():
    assert pc.type_a(1).matrix == ((2,),)


def test_affine_a3_all_offdiagonal_minus_one():
    c = pc.affine_a(3)
    assert c.matrix == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_affine_a4_cycle_pattern():
    c = pc.affine_a(4)
    assert c.pairing(1, 3) == 0
    assert c.pairing(1, 4) == -1
    assert c.pairing(2, 3) == -1


def test_pairing_examples():
    assert pc.type_a(3).pairing(1, 2) == -1
    assert pc.rank2(1, 3).pairing(2, 1) == -3
    for c in (pc.rank2(1, 2), pc.type_a(4), pc.affine_a(3)):
        for i in c.indices:
            assert c.pairing(i, i) == 2


def test_pairing_out_of_range():
    with pytest.raises(IndexError):
        pc.type_a(2).pairing(0, 1)
    with pytest.raises(IndexError):
        pc.type_a(2).pairing(1, 3)


@pytest.mark.parametrize("c1,c2", [(0, 1), (1, 0), (-1, 2), (2, -1)])
def test_rank2_parameter_constraint(c1, c2):
    with pytest.raises(InvalidCartanError):
        pc.rank2(c1, c2)


def test_custom_rejects_bad_matrices():
    with pytest.raises(InvalidCartanError):
        pc.custom([[2, 1], [-1, 2]], [1, 1])  # positive off-diagonal
    with pytest.raises(InvalidCartanError):
        pc.custom([[2, 0], [-1, 2]], [1, 1])  # broken zero pattern
    with pytest.raises(InvalidCartanError):
        pc.custom([[1, -1], [-1, 2]], [1, 1])  # diagonal not 2
    with pytest.raises(InvalidCartanError):
        pc.custom([[2, -1], [-2, 2]], [1, 1])  # symmetrizer wrong


def test_custom_checks_but_does_not_search_symmetrizer():
    c = pc.custom([[2, -1], [-2, 2]], [2, 1])
    assert c.symmetrizer == (2, 1)


@pytest.mark.parametrize(
    "c",
    [pc.rank2(0, 0), pc.rank2(1, 1), pc.rank2(2, 1), pc.rank2(1, 3), pc.rank2(2, 2),
     pc.type_a(1), pc.type_a(4), pc.affine_a(3), pc.affine_a(5)],
)
def test_symmetrizer_identity_over_families(c):
    d = c.symmetrizer
    for i in c.indices:
        for j in c.indices:
            assert d[i - 1] * c.pairing(i, j) == d[j - 1] * c.pairing(j, i)


def test_build_cartan_strings():
    assert pc.build_cartan("rank2:1,2").family == ("rank2", (1, 2))
    assert pc.build_cartan("an:3").rank == 3
    assert pc.build_cartan("affine-a:4").family == ("affine-a", (4,))
    with pytest.raises(InvalidCartanError):
        pc.build_cartan("nonsense:1")


def test_custom_json_roundtrip(tmp_path):
    payload = {"rank": 2, "matrix": [[2, -1], [-3, 2]], "symmetrizer": [3, 1]}
    c = custom_from_json(json.dumps(payload))
    assert c.matrix == ((2, -1), (-3, 2))
    with pytest.raises(InvalidCartanError):
        custom_from_json(json.dumps({**payload, "rank": 3}))
    path = tmp_path / "c.json"
    path.write_text(json.dumps(payload))
    assert pc.build_cartan(f"custom:{path}") == c


def test_weight_basics():
    c = pc.rank2(1, 1)
    lam = pc.weight(c, "1,0")
    assert lam.pairing(1) == 1 and lam.pairing(2) == 0
    assert lam.dominant
    assert not pc.weight(c, "-1,2").dominant
    assert (lam + pc.weight(c, "0,2")).coeffs == (1, 2)
    assert (lam - pc.weight(c, "0,2")).coeffs == (1, -2)
    with pytest.raises(ValueError):
        pc.Weight(c, (1,))
