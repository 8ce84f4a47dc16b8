from fractions import Fraction

import pytest

from flagmaps.covers import AlreadyOrientableClosedError, quotient_by
from flagmaps.families import (
    glide_automorphism,
    hosohedron,
    nn2_map,
    nn2_quotient_automorphism,
    reflection_automorphism,
    semi_star,
    torus_44,
)
from flagmaps.perms import compose, identity
from flagmaps.symmetry import (
    _automorphisms_numpy,
    _automorphisms_python,
    automorphism_group,
    stability_report,
    symmetry_class,
)


def test_aut_orders_on_families():
    assert automorphism_group(hosohedron(5)).order == 20
    assert automorphism_group(hosohedron(6)).order == 24
    assert automorphism_group(semi_star(5)).order == 10
    assert automorphism_group(torus_44("diag", 1)).order == 64


def test_klein_quotient_aut_order():
    k = torus_44("diag", 1)
    m = quotient_by(k, [identity(k.flags), glide_automorphism(k)])
    assert automorphism_group(m).order == 8


def test_elements_commute_and_act_semiregularly():
    for fs in (hosohedron(4), semi_star(3)):
        aut = automorphism_group(fs)
        ident = identity(fs.flags)
        assert ident in aut.elements
        assert fs.flags % aut.order == 0
        for h in aut.elements:
            for g in fs.gens:
                assert compose(h, g) == compose(g, h)
            if h != ident:
                assert all(h[f] != f for f in range(fs.flags))


def test_python_and_numpy_paths_agree():
    for fs in (hosohedron(5), torus_44("diag", 1)):
        assert sorted(_automorphisms_python(fs)) == sorted(_automorphisms_numpy(fs))


def test_symmetry_class_examples():
    k = torus_44("diag", 1)
    sym = symmetry_class(k)
    assert sym.regular and sym.edge_transitive
    m = quotient_by(k, [identity(k.flags), glide_automorphism(k)])
    sym = symmetry_class(m)
    assert not sym.regular
    assert sym.edge_transitive and sym.edge_regular
    kr = torus_44("rect", 2)
    mr = quotient_by(kr, [identity(kr.flags), glide_automorphism(kr)])
    assert not symmetry_class(mr).edge_transitive


def test_semi_star_is_regular():
    sym = symmetry_class(semi_star(5))
    assert sym.regular


def test_stability_k6(k6):
    rep = stability_report(k6)
    assert (rep.base_aut_order, rep.cover_aut_order) == (60, 120)
    assert rep.instability_index == 1
    assert rep.stable
    assert rep.lifted_subgroup_verified


def test_stability_klein_quotient():
    k = torus_44("diag", 1)
    m = quotient_by(k, [identity(k.flags), glide_automorphism(k)])
    rep = stability_report(m)
    assert (rep.base_aut_order, rep.cover_aut_order) == (8, 64)
    assert rep.instability_index == Fraction(4)
    assert not rep.stable
    assert rep.lifted_subgroup_verified


def test_stability_nn2_quotient():
    gm = nn2_map(2)
    q = quotient_by(gm.fs, [identity(16), nn2_quotient_automorphism(gm)])
    rep = stability_report(q)
    assert (rep.base_aut_order, rep.cover_aut_order) == (4, 16)
    assert rep.instability_index == 2
    assert not rep.stable


def test_stability_disc_quotient():
    h = hosohedron(5)
    q = quotient_by(h, [identity(h.flags), reflection_automorphism(h)])
    rep = stability_report(q)
    assert (rep.base_aut_order, rep.cover_aut_order) == (2, 20)
    assert rep.instability_index == 5
    assert not rep.stable


def test_stability_requires_cover():
    with pytest.raises(AlreadyOrientableClosedError):
        stability_report(hosohedron(3))


def test_cover_order_divisible_by_twice_base():
    for fs in (semi_star(3), semi_star(4)):
        q = quotient_by(fs, [identity(fs.flags), reflection_automorphism(fs)])
        rep = stability_report(q)
        assert rep.cover_aut_order % (2 * rep.base_aut_order) == 0
        assert rep.instability_index.denominator == 1
