import pytest

from flagmaps.core import is_isomorphic, surface_invariants
from flagmaps.covers import (
    AlreadyOrientableClosedError,
    NotAnAutomorphismError,
    NotClosedError,
    NotOrientableClosedError,
    cover_round_trip_ok,
    lift_automorphisms,
    orientable_double_cover,
    orientation_action,
    quotient_by,
)
from flagmaps.families import (
    glide_automorphism,
    hosohedron,
    reflection_automorphism,
    semi_star,
    torus_44,
)
from flagmaps.perms import compose, identity, is_involution
from flagmaps.symmetry import automorphism_group


def klein_bottle_map():
    k = torus_44("diag", 1)
    return k, quotient_by(k, [identity(k.flags), glide_automorphism(k)])


def test_cover_of_k6_is_icosahedral(icosa, k6):
    dc = orientable_double_cover(k6)
    assert dc.cover.flags == 120
    assert is_isomorphic(dc.cover, icosa)
    inv = surface_invariants(dc.cover)
    assert inv.chi == 2 * surface_invariants(k6).chi
    assert not inv.has_boundary and inv.orientable


def test_cover_properties():
    k, m = klein_bottle_map()
    dc = orientable_double_cover(m)
    assert is_isomorphic(dc.cover, k)
    assert is_involution(dc.deck)
    assert all(dc.deck[f] != f for f in range(dc.cover.flags))
    for g in dc.cover.gens:
        assert compose(dc.deck, g) == compose(g, dc.deck)
    assert orientation_action(dc.cover, dc.deck) == "reversing"
    # generators flip the sheet and project to the base generators
    n = m.flags
    for gc, gb in zip(dc.cover.gens, m.gens):
        for f in range(n):
            assert gc[f] == gb[f] + n
            assert dc.projection[gc[f]] == gb[f]


def test_cover_of_disc_quotient_is_parent():
    h = hosohedron(5)
    q = quotient_by(h, [identity(h.flags), reflection_automorphism(h)])
    assert is_isomorphic(orientable_double_cover(q).cover, h)


def test_cover_rejects_orientable_closed():
    with pytest.raises(AlreadyOrientableClosedError):
        orientable_double_cover(hosohedron(4))


def test_quotient_trivial_subgroup():
    h = hosohedron(3)
    assert quotient_by(h, [identity(h.flags)]) == h


def test_quotient_rejects_non_automorphism():
    h = hosohedron(3)
    bad = tuple([1, 0] + list(range(2, h.flags)))
    with pytest.raises(NotAnAutomorphismError):
        quotient_by(h, [identity(h.flags), bad])


def test_quotient_rejects_non_closed_set():
    k = torus_44("diag", 1)
    aut = automorphism_group(k)
    ident = identity(k.flags)
    rot = next(
        h for h in aut.elements
        if h != ident and compose(h, h) != ident
    )
    with pytest.raises(NotClosedError):
        quotient_by(k, [ident, rot])


def test_quotient_boundary_iff_generator_hits_orbit():
    # the quotient has boundary exactly when some generator maps a flag
    # onto its image under a non-identity subgroup element
    h = hosohedron(4)
    k, klein = klein_bottle_map()
    for fs, a in (
        (h, reflection_automorphism(h)),
        (semi_star(5), reflection_automorphism(semi_star(5))),
        (k, glide_automorphism(k)),
    ):
        q = quotient_by(fs, [identity(fs.flags), a])
        predicted = any(
            g[f] == a[f] for g in fs.gens for f in range(fs.flags)
        )
        assert surface_invariants(q).has_boundary == predicted
    assert not surface_invariants(klein).has_boundary


def test_orientation_action_basics():
    k = torus_44("diag", 1)
    assert orientation_action(k, identity(k.flags)) == "preserving"
    assert orientation_action(k, glide_automorphism(k)) == "reversing"
    _, m = klein_bottle_map()
    with pytest.raises(NotOrientableClosedError):
        orientation_action(m, identity(m.flags))


def test_lift_identity_gives_deck_pair():
    _, m = klein_bottle_map()
    dc = orientable_double_cover(m)
    lifts = lift_automorphisms(dc, identity(m.flags))
    assert set(lifts) == {identity(dc.cover.flags), dc.deck}


def test_lifted_subgroup_inside_cover_group():
    _, m = klein_bottle_map()
    dc = orientable_double_cover(m)
    base_aut = automorphism_group(m)
    cover_aut = automorphism_group(dc.cover)
    lifted = set()
    for h in base_aut.elements:
        pair = lift_automorphisms(dc, h)
        assert compose(pair[0], dc.deck) == pair[1]
        for lift in pair:
            assert dc.projection[lift[0]] == h[0]
        lifted.update(pair)
    assert len(lifted) == 2 * base_aut.order == 16
    assert lifted <= cover_aut.elements
    assert cover_aut.order == 64


def test_round_trip_on_families(k6):
    h = hosohedron(5)
    s = semi_star(4)
    cases = [
        quotient_by(h, [identity(h.flags), reflection_automorphism(h)]),
        quotient_by(s, [identity(s.flags), reflection_automorphism(s)]),
        klein_bottle_map()[1],
        k6,
    ]
    for fs in cases:
        assert cover_round_trip_ok(fs)
