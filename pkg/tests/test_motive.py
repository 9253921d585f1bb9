import random
from fractions import Fraction as F

import pytest

from albx.curve import Divisor
from albx.errors import UnsupportedCaseError
from albx.funcfield import INF, LaurentSeries, Place
from albx.infdiv import FormalGroupData, InfinitesimalDivisor, divisor_group
from albx.motive import (
    AlbaneseStructure,
    LinearGroupDescriptor,
    OneMotive,
    albanese,
    base_points_for,
    cartier_dual,
    double_dual_check,
    dualize,
    formal_group_from_support,
    one_motive,
)


def synthetic_formal(t, v, rng=None):
    places = [Place("C0", k) for k in range(t + 1)]
    etale = tuple(Divisor({places[i + 1]: 1, places[0]: -1}) for i in range(t))
    lie = []
    for i in range(v):
        q = Place("C0", 100 + i)
        c = F(rng.randint(1, 5)) if rng else F(1)
        lie.append(InfinitesimalDivisor({q: LaurentSeries(q, -1, {-1: c})}))
    return FormalGroupData(etale, tuple(lie))


# --- Cartier duality -----------------------------------------------------------


def test_cartier_dual_examples():
    assert cartier_dual(synthetic_formal(1, 0)) == LinearGroupDescriptor(1, 0)
    assert cartier_dual(synthetic_formal(0, 1)) == LinearGroupDescriptor(0, 1)
    assert cartier_dual(FormalGroupData()) == LinearGroupDescriptor(0, 0)
    assert repr(LinearGroupDescriptor(1, 0)) == "Gm"
    assert repr(LinearGroupDescriptor(0, 1)) == "Ga"
    assert repr(LinearGroupDescriptor(0, 0)) == "1"
    assert repr(LinearGroupDescriptor(2, 3)) == "Gm^2 x Ga^3"


def test_cartier_dual_additive():
    a, b = synthetic_formal(2, 1), synthetic_formal(1, 3)
    d = cartier_dual(a.direct_sum(b))
    assert d.torus_rank == 3 and d.vectorial_dim == 4


# --- dualization ------------------------------------------------------------------


def test_dualize_lattice_motive():
    m = OneMotive(synthetic_formal(1, 0))
    d = dualize(m)
    assert d.formal.rank == 0 and d.formal.dim == 0
    assert d.target == LinearGroupDescriptor(1, 0)
    # pairing bases retained on the dual side
    assert d.target_pairing == m.formal


def test_dualize_trivial_motive():
    m = OneMotive(FormalGroupData())
    d = dualize(m)
    assert d.formal.rank == 0 and d.target.is_trivial()


def test_dualize_mixed_motive():
    m = OneMotive(synthetic_formal(1, 1))
    assert dualize(m).target == LinearGroupDescriptor(1, 1)


def test_dualize_rejects_abelian_part():
    m = OneMotive(synthetic_formal(1, 0), abelian_dim=1)
    with pytest.raises(UnsupportedCaseError):
        dualize(m)


def test_double_dual_zoo(whole_zoo):
    for name, cfg in whole_zoo.items():
        assert double_dual_check(one_motive(cfg)), name


def test_double_dual_random_shapes():
    rng = random.Random(3)
    for _ in range(50):
        m = OneMotive(synthetic_formal(rng.randint(0, 5), rng.randint(0, 5), rng))
        assert double_dual_check(m)
        assert dualize(dualize(m)) == m


# --- albanese ------------------------------------------------------------------------


def test_albanese_zoo_groups(whole_zoo):
    expected = {
        "node": (1, 0),
        "cusp": (0, 1),
        "tacnode": (1, 1),
        "triple": (2, 0),
        "fourfold": (3, 0),
    }
    for name, cfg in whole_zoo.items():
        alb = albanese(cfg)
        assert (alb.torus_rank, alb.vectorial_dim) == expected[name], name


def test_albanese_base_point_rule(node, tacnode):
    # smallest nonnegative integer coordinate avoiding the branch places
    assert base_points_for(node)["C0"] == Place("C0", 1)  # 0 is a branch
    assert base_points_for(tacnode)["C0"] == Place("C0", 2)  # 0 and 1 taken


def test_albanese_group_independent_of_base_points(node):
    alb = albanese(node)
    moved = AlbaneseStructure(
        alb.group, alb.etale_basis, alb.lie_basis, {"C0": Place("C0", 7)}
    )
    assert moved.group == alb.group
    assert moved.etale_basis == alb.etale_basis


def test_albanese_json(node):
    data = albanese(node).to_json()
    assert data["torus_rank"] == 1 and data["vectorial_dim"] == 0
    assert data["base_points"] == [{"component": "C0", "point": "1"}]
    assert data["etale_basis"] == [
        [
            {"component": "C0", "point": "0", "coeff": 1},
            {"component": "C0", "point": "inf", "coeff": -1},
        ]
    ]


def test_albanese_matches_divisor_group(whole_zoo):
    for cfg in whole_zoo.values():
        alb = albanese(cfg)
        g = divisor_group(cfg)
        assert alb.etale_basis == g.etale_basis
        assert alb.lie_basis == g.lie_basis


# --- semi-abelian support groups --------------------------------------------------------


def test_formal_group_from_support(node):
    places = [Place("C0", 0), Place("C0", 1), Place("C0", INF)]
    g = formal_group_from_support(node, places)
    assert (g.rank, g.dim) == (2, 0)
    for d in g.etale_basis:
        assert sum(m for _, m in d.items()) == 0
    assert formal_group_from_support(node, [Place("C0", 0)]).rank == 0
    assert formal_group_from_support(node, []).rank == 0
