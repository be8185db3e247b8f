import random

import pytest

from evansk import (
    TRIVIAL_GROUP,
    AbelianGroup,
    ChainComplex,
    IntMatrix,
    build_complex,
    homology,
    monoid_spec,
    permute_coordinates,
    spec_from_matrices,
)

from oracles import random_unimodular


def test_monoid_rank2_example():
    groups = homology(build_complex(monoid_spec([3, 5])))
    assert groups == [AbelianGroup.cyclic(2), AbelianGroup.cyclic(2), TRIVIAL_GROUP]


def test_trivial_monoid_rank3():
    groups = homology(build_complex(monoid_spec([1, 1, 1])))
    assert [g.free_rank for g in groups] == [1, 3, 3, 1]
    assert all(g.is_torsion_free for g in groups)


def test_unimodular_coadjacency_kills_homology():
    groups = homology(build_complex(spec_from_matrices([[[1, 1], [1, 0]]])))
    assert groups == [TRIVIAL_GROUP, TRIVIAL_GROUP]


def test_rank1_swap_graph():
    groups = homology(build_complex(spec_from_matrices([[[0, 1], [1, 0]]])))
    assert groups == [AbelianGroup.free(1), AbelianGroup.free(1)]


def test_top_group_is_torsion_free():
    for ms in [(2,), (3, 5), (3, 5, 7), (2, 4, 6, 8)]:
        groups = homology(build_complex(monoid_spec(ms)))
        assert groups[-1].is_torsion_free


def test_euler_characteristic():
    for ms in [(3, 5), (2, 3, 4), (3, 5, 7, 9)]:
        cc = build_complex(monoid_spec(ms))
        groups = homology(cc, check=False)
        chi_ranks = sum((-1) ** p * r for p, r in enumerate(cc.ranks))
        chi_homology = sum((-1) ** p * g.free_rank for p, g in enumerate(groups))
        assert chi_ranks == chi_homology


def test_basis_change_invariance():
    rng = random.Random(99)
    cc = build_complex(monoid_spec([3, 5, 7]))
    base = homology(cc, check=False)
    for _ in range(5):
        transforms = [random_unimodular(r, rng) for r in cc.ranks]
        conjugated = ChainComplex(
            cc.length,
            cc.ranks,
            tuple(
                transforms[p - 1][0] @ cc.boundary(p) @ transforms[p][1]
                for p in range(1, cc.length + 1)
            ),
        )
        assert homology(conjugated) == base


def test_permuted_coordinates_same_homology():
    spec = monoid_spec([3, 5, 7])
    base = homology(build_complex(spec), check=False)
    for sigma in [(2, 1, 3), (3, 1, 2), (3, 2, 1)]:
        assert homology(build_complex(permute_coordinates(spec, sigma)), check=False) == base


def test_group_formatting():
    assert str(TRIVIAL_GROUP) == "0"
    assert str(AbelianGroup.free(1)) == "Z"
    assert str(AbelianGroup.free(4)) == "Z^4"
    assert str(AbelianGroup(0, (2, 2))) == "Z2^2"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 x Z2 x Z4"
    assert str(AbelianGroup(0, (2, 2, 6))) == "Z2^2 x Z6"


def test_group_invariants_enforced():
    with pytest.raises(ValueError):
        AbelianGroup(-1)
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))  # not a chain


def test_group_direct_sum():
    assert AbelianGroup.free(1).direct_sum(AbelianGroup.cyclic(2)) == AbelianGroup(1, (2,))
    # Z6 + Z4 = Z2 + Z12 in invariant-factor form
    assert AbelianGroup.cyclic(6).direct_sum(AbelianGroup.cyclic(4)) == AbelianGroup(0, (2, 12))
    assert AbelianGroup.cyclic(2).direct_sum(AbelianGroup.cyclic(2)) == AbelianGroup(0, (2, 2))
    assert TRIVIAL_GROUP.direct_sum(TRIVIAL_GROUP) == TRIVIAL_GROUP


def test_cyclic_constructor():
    assert AbelianGroup.cyclic(0, 3) == AbelianGroup.free(3)
    assert AbelianGroup.cyclic(1, 5) == TRIVIAL_GROUP
    assert AbelianGroup.cyclic(-4) == AbelianGroup(0, (4,))


def test_group_to_dict():
    assert AbelianGroup(1, (2,)).to_dict() == {
        "free_rank": 1,
        "torsion": [2],
        "pretty": "Z x Z2",
    }


def test_zero_length_complex():
    cc = ChainComplex(0, (3,), ())
    assert homology(cc) == [AbelianGroup.free(3)]


def test_homology_degrees_count():
    groups = homology(build_complex(monoid_spec([2, 3, 4, 5])))
    assert len(groups) == 5


def test_check_flag_catches_bad_products():
    bad = ChainComplex(
        2, (1, 1, 1), (IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]]))
    )
    with pytest.raises(ValueError):
        homology(bad, check=True)
