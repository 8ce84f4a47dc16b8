"""Built-in verification suite: reproduces the worked examples and laws.

Each check returns a CheckResult; ``run_all`` executes all ten and the
CLI prints one pass/fail line per check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .census import CensusRecord, stability_census
from .core import (
    HYPERMAP,
    MAP,
    FlagSystem,
    canonical_form,
    euler_characteristic,
    is_isomorphic,
    relabel,
    surface_invariants,
)
from .covers import orientable_double_cover, orientation_action, quotient_by
from .families import (
    glide_automorphism,
    hosohedron,
    nn2_map,
    nn2_quotient_automorphism,
    reflection_automorphism,
    semi_star,
    support_involution,
    symmetric_map,
    torus_44,
)
from .grouplevel import family_report, quotient_analysis, regular_cells, symmetric_model
from .mapjson import parse, serialize
from .operations import medial, petrie
from .perms import compose, identity
from .symmetry import automorphism_group, stability_report, symmetry_class


@dataclass
class CheckResult:
    name: str
    ok: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = "" if self.ok else " :: " + "; ".join(self.details)
        return f"[{status}] {self.name}{suffix}"


class _Expect:
    def __init__(self) -> None:
        self.failures: list[str] = []

    def eq(self, label: str, got, want) -> None:
        if got != want:
            self.failures.append(f"{label}: got {got!r}, want {want!r}")

    def true(self, label: str, cond: bool) -> None:
        if not cond:
            self.failures.append(label)

    def result(self, name: str) -> CheckResult:
        return CheckResult(name, not self.failures, self.failures)


def check_spherical_quotients() -> CheckResult:
    """Hosohedra and semi-stars with their disc quotients."""
    e = _Expect()
    for n, disc_aut, star_aut in ((5, 2, 1), (6, 4, 2)):
        k = hosohedron(n)
        e.eq(f"|Aut {{2,{n}}}|", automorphism_group(k).order, 4 * n)
        q = quotient_by(k, [identity(k.flags), reflection_automorphism(k)])
        rep = stability_report(q)
        e.eq(f"disc quotient aut (n={n})", rep.base_aut_order, disc_aut)
        e.true(f"disc quotient unstable (n={n})", not rep.stable)
        e.true(
            f"disc quotient cover is the hosohedron (n={n})",
            is_isomorphic(orientable_double_cover(q).cover, k),
        )
        s = semi_star(n)
        e.eq(f"|Aut semi-star({n})|", automorphism_group(s).order, 2 * n)
        qs = quotient_by(s, [identity(s.flags), reflection_automorphism(s)])
        reps = stability_report(qs)
        e.eq(f"semi-star quotient aut (n={n})", reps.base_aut_order, star_aut)
        e.true(f"semi-star quotient unstable (n={n})", not reps.stable)
        e.true(
            f"semi-star quotient cover is the semi-star (n={n})",
            is_isomorphic(orientable_double_cover(qs).cover, s),
        )
    return e.result("spherical-quotients")


def check_klein_bottle_quotient() -> CheckResult:
    """The diagonal torus map and its Klein-bottle glide quotient."""
    e = _Expect()
    k = torus_44("diag", 1)
    e.eq("{4,4}_{2,2} flags", k.flags, 64)
    e.eq("|Aut {4,4}_{2,2}|", automorphism_group(k).order, 64)
    q = quotient_by(k, [identity(k.flags), glide_automorphism(k)])
    inv = surface_invariants(q)
    e.eq("quotient flags", q.flags, 32)
    e.eq("quotient chi", inv.chi, 0)
    e.true("quotient non-orientable", not inv.orientable)
    e.true("quotient closed", not inv.has_boundary)
    rep = stability_report(q)
    sym = symmetry_class(q)
    e.eq("quotient aut order", rep.base_aut_order, 8)
    e.true("quotient edge-transitive", sym.edge_transitive)
    e.true("quotient not regular", not sym.regular)
    e.eq("cover aut = 8 * base aut", rep.cover_aut_order, 8 * rep.base_aut_order)
    e.eq("instability index", rep.instability_index, Fraction(4))
    return e.result("klein-bottle-quotient")


def check_torus_glide_series() -> CheckResult:
    """The m=2 members of the two glide-quotient series."""
    e = _Expect()
    kd = torus_44("diag", 2)
    qd = quotient_by(kd, [identity(kd.flags), glide_automorphism(kd)])
    e.true("diag(2) quotient unstable", not stability_report(qd).stable)
    e.true("diag(2) quotient edge-transitive", symmetry_class(qd).edge_transitive)
    kr = torus_44("rect", 2)
    qr = quotient_by(kr, [identity(kr.flags), glide_automorphism(kr)])
    e.true("rect(2) quotient unstable", not stability_report(qr).stable)
    e.true(
        "rect(2) quotient not edge-transitive",
        not symmetry_class(qr).edge_transitive,
    )
    return e.result("torus-glide-series")


def check_zigzag_family() -> CheckResult:
    """{n,n}_2 via zig-zag duality vs the group construction, and its
    closed non-orientable quotient."""
    e = _Expect()
    for m in (2, 3, 4):
        n = 2 * m
        gm = nn2_map(m)
        e.true(
            f"petrie({{2,{n}}}) iso to group-built {{{n},{n}}}_2",
            is_isomorphic(petrie(hosohedron(n)), gm.fs),
        )
        e.eq(f"chi({{{n},{n}}}_2)", surface_invariants(gm.fs).chi, 4 - n)
        a = nn2_quotient_automorphism(gm)
        e.eq(
            f"orientation of the quotient involution (m={m})",
            orientation_action(gm.fs, a),
            "reversing",
        )
        q = quotient_by(gm.fs, [identity(gm.fs.flags), a])
        rep = stability_report(q)
        e.eq(f"quotient aut order (m={m})", rep.base_aut_order, 4)
        e.eq(f"cover aut order (m={m})", rep.cover_aut_order, 8 * m)
        e.eq(f"instability index (m={m})", rep.instability_index, Fraction(m))
        e.true(f"quotient unstable (m={m})", not rep.stable)
    return e.result("zigzag-self-dual-family")


def check_symmetric_group_level() -> CheckResult:
    """Symmetric-group family, analysed entirely at the group level."""
    e = _Expect()
    gm = symmetric_model(11)
    n_cycle = tuple((i + 1) % 11 for i in range(11))
    e.eq("r1*r2 is the 11-cycle", compose(gm.r1, gm.r2), n_cycle)
    rc = regular_cells(gm)
    e.eq("type", rc.type_signature, (6, 11))
    e.eq("chi", rc.chi, -4838400)
    reports = family_report(11)
    e.eq("number of quotients (n=11)", len(reports), 1)
    r = reports[0]
    e.eq("aut order (n=11, m=6)", r.aut_order, 2880)
    e.true("unstable", not r.stable)
    e.true("boundary-free", not r.boundary)
    e.true("non-orientable quotient", r.orientation_reversing)
    reports15 = family_report(15)
    e.eq("number of quotients (n=15)", len(reports15), 2)
    e.eq(
        "aut orders (n=15)",
        [x.aut_order for x in reports15],
        [2**3 * 6 * 362880 // 2, 2**5 * 120 * 120 // 2],
    )
    e.true(
        "n=15 quotients non-isomorphic (distinct involution cycle types)",
        len({x.a_cycle_type for x in reports15}) == 2,
    )
    return e.result("symmetric-family-group-level")


def check_flag_group_agreement(quick: bool = False) -> CheckResult:
    """n=7: the 5040-flag system and the group model agree exactly."""
    e = _Expect()
    gm5 = symmetric_map(5)
    e.eq("spot check |Aut| at 120 flags", automorphism_group(gm5.fs).order, 120)
    inv5 = surface_invariants(gm5.fs)
    rc5 = regular_cells(symmetric_model(5))
    e.eq(
        "spot check cells at 120 flags",
        (inv5.vertices, inv5.edges, inv5.faces, inv5.chi),
        (rc5.vertices, rc5.edges, rc5.faces, rc5.chi),
    )
    gm7 = symmetric_map(7)
    inv = surface_invariants(gm7.fs)
    rc = regular_cells(symmetric_model(7))
    e.eq(
        "cells both ways (n=7)",
        (inv.vertices, inv.edges, inv.faces, inv.chi),
        (rc.vertices, rc.edges, rc.faces, rc.chi),
    )
    a = support_involution(6, 7)
    q = quotient_by(gm7.fs, [identity(5040), gm7.automorphism(a)])
    qa = quotient_analysis(symmetric_model(7), a)
    e.eq("quotient aut order both ways (n=7)", automorphism_group(q).order, qa.aut_order)
    e.eq(
        "quotient boundary both ways (n=7)",
        surface_invariants(q).has_boundary,
        qa.boundary,
    )
    if not quick:
        e.eq("|Aut| of the 5040-flag system", automorphism_group(gm7.fs).order, 5040)
    return e.result("flag-group-agreement")


def check_symmetric_hypermaps() -> CheckResult:
    """Hypermap variant of the symmetric-group family (n=11)."""
    e = _Expect()
    gm = symmetric_model(11, hypermap=True)
    rc = regular_cells(gm)
    e.eq("hypermap type", rc.type_signature, (11, 4, 4))
    reports = family_report(11, hypermap=True)
    e.eq("number of hypermap quotients", len(reports), 1)
    e.true("hypermap quotient unstable", not reports[0].stable)
    return e.result("symmetric-hypermap-family")


def check_medial(map_census: list[CensusRecord]) -> CheckResult:
    """Medial automorphism doubling and the medial count identities."""
    e = _Expect()
    base = nn2_map(2).fs
    med = medial(base)
    e.eq("|Aut medial({4,4}_2)|", automorphism_group(med).order, 32)
    e.eq(
        "medial doubles the automorphism group",
        automorphism_group(med).order,
        2 * automorphism_group(base).order,
    )
    bad = 0
    for rec in map_census:
        inv = rec.invariants
        if inv.has_boundary:
            continue
        m_inv = surface_invariants(medial(rec.fs))
        if (
            (m_inv.vertices, m_inv.edges, m_inv.faces)
            != (inv.edges, 2 * inv.edges, inv.vertices + inv.faces)
            or m_inv.chi != inv.chi
        ):
            bad += 1
    e.eq("medial count identities on closed census maps", bad, 0)
    return e.result("medial-maps")


def _involutions(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(img: list[int], free: list[int]) -> None:
        if not free:
            out.append(tuple(img))
            return
        p = free[0]
        img[p] = p
        rec(img, free[1:])
        for qi in range(1, len(free)):
            q = free[qi]
            img[p], img[q] = q, p
            rec(img, free[1:qi] + free[qi + 1 :])
        img[p] = p

    rec(list(range(n)), list(range(n)))
    return out


def _is_transitive(tables: tuple[tuple[int, ...], ...], n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        f = stack.pop()
        for t in tables:
            x = t[f]
            if not seen[x]:
                seen[x] = True
                count += 1
                stack.append(x)
    return count == n


def naive_class_counts(max_flags: int, kind: str) -> dict[int, int]:
    """Brute-force oracle: enumerate every involution triple on exactly
    n points, filter transitivity (and the map relation), and count
    isomorphism classes via canonical forms."""
    counts = {}
    for n in range(1, max_flags + 1):
        invs = _involutions(n)
        if kind == MAP:
            pairs = [
                (a, b)
                for a in invs
                for b in invs
                if all(a[b[x]] == b[a[x]] for x in range(n))
            ]
        else:
            pairs = [(a, b) for a in invs for b in invs]
        codes = set()
        for g0, g2 in pairs:
            for g1 in invs:
                tables = (g0, g1, g2)
                if not _is_transitive(tables, n):
                    continue
                codes.add(canonical_form(FlagSystem(kind, n, g0, g1, g2)))
        counts[n] = len(codes)
    return counts


def check_census_laws(
    map_census: list[CensusRecord],
    hypermap_census: list[CensusRecord],
    oracle_max: int = 6,
) -> CheckResult:
    """Structural laws over the two censuses, plus the oracle count check."""
    e = _Expect()
    for kind, records in ((MAP, map_census), (HYPERMAP, hypermap_census)):
        regular_unstable = 0
        bad_ratio = 0
        bad_chi = 0
        for rec in records:
            if rec.stable is None:
                continue
            if rec.regular and not rec.stable:
                regular_unstable += 1
            if kind == MAP and rec.edge_transitive:
                # the {2,4,8} bound comes from the order-4 edge stabilizer
                # of maps; hypermap edge stabilizers are unbounded and the
                # ratio law fails there (one-edge hypermaps already break it)
                ratio = Fraction(rec.cover_aut_order, rec.aut_order)
                if ratio not in (2, 4, 8):
                    bad_ratio += 1
            cover = orientable_double_cover(rec.fs).cover
            if euler_characteristic(cover) != 2 * rec.invariants.chi:
                bad_chi += 1
        e.eq(f"regular-but-unstable count ({kind})", regular_unstable, 0)
        if kind == MAP:
            e.eq("edge-transitive ratio violations (map)", bad_ratio, 0)
        e.eq(f"cover chi != 2 * base chi count ({kind})", bad_chi, 0)

        census_counts: dict[int, int] = {}
        for rec in records:
            if rec.fs.flags <= oracle_max:
                census_counts[rec.fs.flags] = census_counts.get(rec.fs.flags, 0) + 1
        e.eq(
            f"class counts vs brute-force oracle ({kind})",
            census_counts,
            naive_class_counts(oracle_max, kind),
        )
    return e.result("census-laws")


def check_round_trips(map_census: list[CensusRecord]) -> CheckResult:
    """Cover/quotient round trip, file round trip, canonical invariance."""
    e = _Expect()
    bad_round = 0
    for rec in map_census:
        if rec.stable is None:
            continue
        dc = orientable_double_cover(rec.fs)
        back = quotient_by(dc.cover, [identity(dc.cover.flags), dc.deck])
        if canonical_form(back) != canonical_form(rec.fs):
            bad_round += 1
    e.eq("cover/quotient round-trip failures", bad_round, 0)

    sample = [rec.fs for rec in map_census if rec.fs.flags >= 4][:20]
    e.true("at least 20 sample maps", len(sample) >= 20)
    for fs in sample:
        if parse(serialize(fs)) != fs:
            e.true(f"serialize/parse identity on {fs.flags}-flag map", False)
            break

    rng = random.Random(20260810)
    bad_canon = 0
    for fs in sample:
        code = canonical_form(fs)
        for _ in range(100):
            perm = list(range(fs.flags))
            rng.shuffle(perm)
            if canonical_form(relabel(fs, tuple(perm))) != code:
                bad_canon += 1
                break
    e.eq("canonical form relabeling failures", bad_canon, 0)
    return e.result("round-trips")


MAP_CENSUS_FLAGS = 12
HYPERMAP_CENSUS_FLAGS = 10


def run_all(quick: bool = False) -> list[CheckResult]:
    map_flags = 8 if quick else MAP_CENSUS_FLAGS
    hyper_flags = 7 if quick else HYPERMAP_CENSUS_FLAGS
    map_census = stability_census(map_flags, MAP)
    hypermap_census = stability_census(hyper_flags, HYPERMAP)
    return [
        check_spherical_quotients(),
        check_klein_bottle_quotient(),
        check_torus_glide_series(),
        check_zigzag_family(),
        check_symmetric_group_level(),
        check_flag_group_agreement(quick),
        check_symmetric_hypermaps(),
        check_medial(map_census),
        check_census_laws(map_census, hypermap_census, oracle_max=6 if not quick else 4),
        check_round_trips(map_census),
    ]
