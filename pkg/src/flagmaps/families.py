"""Constructors for the concrete map families and their quotient automorphisms.

Encodings:

* hosohedron(n): flags (pole v, edge k, side s) with two poles joined by
  n edges; face k lies between edges k and k+1.
* semi_star(n): one vertex with n free edges; the two flags of a free
  edge are swapped by both g0 and g2 (interior semi-edge, no boundary).
* torus_44: square-lattice torus quotients; flags (vertex, dart, side)
  with darts +x,+y,-x,-y indexed 0..3 and side 0=L (counterclockwise).
* GroupMap: flags are the elements of a permutation group, generators
  act by right multiplication, automorphisms by left multiplication.
"""

from __future__ import annotations

import math
from typing import Sequence

from .core import MAP, HYPERMAP, FlagSystem
from .errors import FlagmapsError
from .perms import (
    CLOSURE_CAP,
    Perm,
    compose,
    generate_closure,
    identity,
    is_involution,
)


class BadFamilyParameterError(FlagmapsError):
    pass


class UnsupportedFamilyError(FlagmapsError):
    pass


class NotInvolutionError(FlagmapsError):
    pass


class NotGeneratingError(FlagmapsError):
    pass


class NotInGroupError(FlagmapsError):
    pass


# ---------------------------------------------------------------------------
# Spherical families


def hosohedron(n: int) -> FlagSystem:
    """The spherical map with two vertices joined by n edges (type {2,n})."""
    if n < 1:
        raise BadFamilyParameterError("hosohedron needs n >= 1")

    def idx(v: int, k: int, s: int) -> int:
        return (v * n + k % n) * 2 + s

    size = 4 * n
    g0, g1, g2 = [0] * size, [0] * size, [0] * size
    for v in range(2):
        for k in range(n):
            for s in range(2):
                f = idx(v, k, s)
                g0[f] = idx(1 - v, k, s)
                g2[f] = idx(v, k, 1 - s)
                g1[f] = idx(v, k + 1, 0) if s == 1 else idx(v, k - 1, 1)
    return FlagSystem(MAP, size, tuple(g0), tuple(g1), tuple(g2))


def semi_star(n: int) -> FlagSystem:
    """One vertex, one face and n free edges on the sphere.

    Free edges are interior semi-edges: g0 acts like g2 on their flag
    pairs, so the map has no boundary and Euler characteristic 2.
    """
    if n < 1:
        raise BadFamilyParameterError("semi_star needs n >= 1")
    size = 2 * n
    swap = tuple(f ^ 1 for f in range(size))
    g1 = tuple((f + 1) % size if f % 2 else (f - 1) % size for f in range(size))
    return FlagSystem(MAP, size, swap, g1, swap)


def reflection_automorphism(fs: FlagSystem) -> Perm:
    """The edge reflection of a hosohedron or semi-star.

    Quotienting by it folds the sphere onto a closed disc; the fixed
    axis passes through one edge (and the opposite edge when n is even).
    """
    if fs.flags % 4 == 0:
        n = fs.flags // 4
        if fs == hosohedron(n):
            refl = [0] * fs.flags

            def idx(v: int, k: int, s: int) -> int:
                return (v * n + k % n) * 2 + s

            for v in range(2):
                for k in range(n):
                    for s in range(2):
                        refl[idx(v, k, s)] = idx(v, -k, 1 - s)
            return tuple(refl)
    if fs.flags % 2 == 0 and fs == semi_star(fs.flags // 2):
        size = fs.flags
        return tuple((1 - f) % size for f in range(size))
    raise UnsupportedFamilyError(
        "reflection_automorphism only applies to hosohedron/semi_star output"
    )


# ---------------------------------------------------------------------------
# Torus maps {4,4} and their glide reflections

_DART_VEC = ((1, 0), (0, 1), (-1, 0), (0, -1))

DIAG = "diag"
RECT = "rect"


def _torus_vertices(lattice: str, m: int) -> tuple[list[tuple[int, int]], dict]:
    """Representative coordinates and key->id map for the lattice quotient."""
    reps: list[tuple[int, int]] = []
    ids: dict[tuple[int, int], int] = {}
    if lattice == DIAG:
        # lattice generated by (2m,2m) and (-2m,2m); the pair
        # (x+y mod 4m, x-y mod 4m) with even sum classifies vertices
        for u in range(4 * m):
            for w in range(4 * m):
                if (u + w) % 2 == 0:
                    ids[(u, w)] = len(reps)
                    reps.append(((u + w) // 2, (u - w) // 2))
    else:
        for x in range(2 * m):
            for y in range(2 * m):
                ids[(x, y)] = len(reps)
                reps.append((x, y))
    return reps, ids


def _torus_key(lattice: str, m: int, x: int, y: int) -> tuple[int, int]:
    if lattice == DIAG:
        return ((x + y) % (4 * m), (x - y) % (4 * m))
    return (x % (2 * m), y % (2 * m))


def torus_44(lattice: str, m: int) -> FlagSystem:
    """Regular torus quotient of the square tessellation.

    ``diag`` quotients by the lattice <(2m,2m),(-2m,2m)> (8m^2 vertices,
    64m^2 flags); ``rect`` by <(2m,0),(0,2m)> (4m^2 vertices, 32m^2
    flags).  Both are orientable, boundary-free and regular of type {4,4}.
    """
    if lattice not in (DIAG, RECT):
        raise BadFamilyParameterError(f"unknown lattice kind {lattice!r}")
    if m < 1:
        raise BadFamilyParameterError("torus_44 needs m >= 1")
    reps, ids = _torus_vertices(lattice, m)
    nv = len(reps)
    size = nv * 8

    def idx(vid: int, d: int, s: int) -> int:
        return (vid * 4 + d % 4) * 2 + s

    g0, g1, g2 = [0] * size, [0] * size, [0] * size
    for vid, (x, y) in enumerate(reps):
        for d in range(4):
            dx, dy = _DART_VEC[d]
            other = ids[_torus_key(lattice, m, x + dx, y + dy)]
            for s in range(2):
                f = idx(vid, d, s)
                g2[f] = idx(vid, d, 1 - s)
                g1[f] = idx(vid, d + 1, 1) if s == 0 else idx(vid, d - 1, 0)
                g0[f] = idx(other, d + 2, 1 - s)
    return FlagSystem(MAP, size, tuple(g0), tuple(g1), tuple(g2))


def glide_automorphism(fs: FlagSystem) -> Perm:
    """The fixed-point-free orientation-reversing glide of a torus_44 map.

    diag lattice: (x,y) -> (y+m, x+m), swapping the +x/+y and -x/-y
    darts; rect lattice: (x,y) -> (x+m, -y), swapping +y and -y.  Both
    flip the side bit.
    """
    for lattice, flags_per in ((DIAG, 64), (RECT, 32)):
        if fs.flags % flags_per:
            continue
        m = math.isqrt(fs.flags // flags_per)
        if m < 1 or flags_per * m * m != fs.flags:
            continue
        if fs != torus_44(lattice, m):
            continue
        reps, ids = _torus_vertices(lattice, m)
        size = fs.flags

        def idx(vid: int, d: int, s: int) -> int:
            return (vid * 4 + d % 4) * 2 + s

        glide = [0] * size
        for vid, (x, y) in enumerate(reps):
            if lattice == DIAG:
                tvid = ids[_torus_key(lattice, m, y + m, x + m)]
                dart_map = (1, 0, 3, 2)
            else:
                tvid = ids[_torus_key(lattice, m, x + m, -y)]
                dart_map = (0, 3, 2, 1)
            for d in range(4):
                for s in range(2):
                    glide[idx(vid, d, s)] = idx(tvid, dart_map[d], 1 - s)
        return tuple(glide)
    raise UnsupportedFamilyError("glide_automorphism only applies to torus_44 output")


# ---------------------------------------------------------------------------
# Regular systems built on groups


class GroupMap:
    """Regular map/hypermap whose flags are the elements of a group.

    Generators act by right multiplication; ``automorphism(a)`` is the
    flag permutation induced by left multiplication, giving the full
    automorphism group as ``a`` ranges over the elements.
    """

    def __init__(
        self,
        r0: Perm,
        r1: Perm,
        r2: Perm,
        kind: str = MAP,
        cap: int = CLOSURE_CAP,
    ):
        for i, r in enumerate((r0, r1, r2)):
            if not is_involution(r) or r == identity(len(r)):
                raise NotInvolutionError(f"r{i} must be a non-identity involution")
        self.generators = (r0, r1, r2)
        elements = sorted(generate_closure([r0, r1, r2], cap))
        self.elements: tuple[Perm, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(elements)}
        tables = tuple(
            tuple(self._index[compose(e, r)] for e in elements)
            for r in self.generators
        )
        self.fs = FlagSystem(kind, len(elements), *tables).require_valid()

    @property
    def order(self) -> int:
        return len(self.elements)

    def automorphism(self, a: Perm) -> Perm:
        """Left multiplication by a group element, as a flag permutation."""
        if a not in self._index:
            raise NotInGroupError("element is not in the generated group")
        return tuple(self._index[compose(a, e)] for e in self.elements)

    def element_product(self, *factors: Perm) -> Perm:
        out = factors[0]
        for f in factors[1:]:
            out = compose(out, f)
        if out not in self._index:
            raise NotInGroupError("product left the group (degree mismatch?)")
        return out


def regular_map_from_group(
    r0: Perm,
    r1: Perm,
    r2: Perm,
    kind: str = MAP,
    elements: Sequence[Perm] | None = None,
    cap: int = CLOSURE_CAP,
) -> FlagSystem:
    """Regular system on the group generated by three involutions.

    When ``elements`` is given, the generated group must equal it
    exactly (NotGeneratingError otherwise).
    """
    gm = GroupMap(r0, r1, r2, kind=kind, cap=cap)
    if elements is not None and set(gm.elements) != {tuple(e) for e in elements}:
        raise NotGeneratingError(
            "the three involutions do not generate the given group"
        )
    return gm.fs


def nn2_map(m: int) -> GroupMap:
    """The regular orientable map {n,n}_2 for n = 2m, built on its
    automorphism group of order 4n.

    The group is (C_n x C_2) extended by an involution inverting it:
    elements (i, j, k) represent x^i y^j r2^k with x = r1*r2, y = r2*r0,
    and r2 x r2 = x^-1.  Its right-regular permutation representation
    feeds GroupMap, so flags correspond to group elements.
    """
    if m < 1:
        raise BadFamilyParameterError("nn2_map needs m >= 1")
    n = 2 * m
    size = 4 * n

    def idx(i: int, j: int, k: int) -> int:
        return (i % n) * 4 + (j % 2) * 2 + (k % 2)

    def mult(e: tuple[int, int, int], f: tuple[int, int, int]) -> tuple[int, int, int]:
        i, j, k = e
        a, b, c = f
        return ((i + (a if k == 0 else -a)) % n, (j + b) % 2, (k + c) % 2)

    triples = [(i, j, k) for i in range(n) for j in range(2) for k in range(2)]

    def right_reg(r: tuple[int, int, int]) -> Perm:
        return tuple(idx(*mult(e, r)) for e in triples)

    r0, r1, r2 = (0, 1, 1), (1, 0, 1), (0, 0, 1)
    return GroupMap(right_reg(r0), right_reg(r1), right_reg(r2), MAP, cap=size + 1)


def nn2_quotient_automorphism(gm: GroupMap) -> Perm:
    """Left multiplication by r0*r1*r2, the orientation-reversing
    involution whose quotient of {n,n}_2 is non-orientable and closed."""
    a = gm.element_product(*gm.generators)
    return gm.automorphism(a)


# ---------------------------------------------------------------------------
# Symmetric-group families


def symmetric_generators(n: int, hypermap: bool = False) -> tuple[Perm, Perm, Perm]:
    """Involution triple in S_n (odd n >= 5) with r1*r2 = (1,2,...,n).

    The map triple has r0 = (1,2) so that <r0, r1 r2> is all of S_n and
    r0, r2 commute; the hypermap variant uses r0 = (2,3) instead, making
    the products r1*r2, r2*r0, r0*r1 have orders n, 4, 4.
    """
    if n < 5 or n % 2 == 0:
        raise BadFamilyParameterError("symmetric_generators needs odd n >= 5")
    r0 = list(range(n))
    if hypermap:
        r0[1], r0[2] = 2, 1
    else:
        r0[0], r0[1] = 1, 0
    r1 = [0] + [n - j for j in range(1, n)]
    r2 = [1, 0] + [n + 1 - j for j in range(2, n)]
    return tuple(r0), tuple(r1), tuple(r2)


def support_involution(m: int, degree: int) -> Perm:
    """(1,2)(3,4)...(m-1,m) as a permutation of the given degree."""
    if m % 2 or m < 2 or m > degree:
        raise BadFamilyParameterError("support_involution needs even m <= degree")
    images = list(range(degree))
    for i in range(0, m, 2):
        images[i], images[i + 1] = i + 1, i
    return tuple(images)


def symmetric_map(n: int, hypermap: bool = False) -> GroupMap:
    """Flag-level regular system on S_n (n! flags); practical for n <= 9."""
    if n > 9:
        raise BadFamilyParameterError(
            "flag-level symmetric maps are capped at n <= 9 (n! flags)"
        )
    r0, r1, r2 = symmetric_generators(n, hypermap)
    kind = HYPERMAP if hypermap else MAP
    return GroupMap(r0, r1, r2, kind, cap=math.factorial(n) + 1)


# ---------------------------------------------------------------------------
# Polyhedra from geometry and the projective K6


def from_rotation_system(neighbors: Sequence[Sequence[int]]) -> FlagSystem:
    """Closed orientable map from cyclic neighbor orders of a simple graph.

    Flags are (dart, side); g1 steps to the next/previous dart around
    the vertex, g0 reverses the dart, and both flip the side, which
    makes the flag graph bipartite (the map is orientable and closed).
    """
    darts: dict[tuple[int, int], int] = {}
    for u, nbrs in enumerate(neighbors):
        if len(set(nbrs)) != len(nbrs) or u in nbrs:
            raise BadFamilyParameterError("rotation system must be simple")
        for v in nbrs:
            darts[(u, v)] = len(darts)
    for (u, v) in list(darts):
        if (v, u) not in darts:
            raise BadFamilyParameterError("adjacency is not symmetric")

    def sigma(u: int, v: int, step: int) -> tuple[int, int]:
        ring = neighbors[u]
        return (u, ring[(ring.index(v) + step) % len(ring)])

    size = len(darts) * 2
    g0, g1, g2 = [0] * size, [0] * size, [0] * size
    for (u, v), d in darts.items():
        for e in range(2):
            f = d * 2 + e
            g2[f] = d * 2 + (1 - e)
            g0[f] = darts[(v, u)] * 2 + (1 - e)
            step = 1 if e == 0 else -1
            g1[f] = darts[sigma(u, v, step)] * 2 + (1 - e)
    return FlagSystem(MAP, size, tuple(g0), tuple(g1), tuple(g2))


def _rotation_from_coords(
    coords: Sequence[tuple[float, float, float]]
) -> list[list[int]]:
    """Neighbor rings ordered counterclockwise around the outward normal,
    for a convex vertex-transitive solid centered at the origin."""

    def sub(a, b):
        return (a[0] - b[0], a[1] - b[1], a[2] - b[2])

    def dot(a, b):
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]

    def cross(a, b):
        return (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )

    def norm(a):
        length = math.sqrt(dot(a, a))
        return (a[0] / length, a[1] / length, a[2] / length)

    n = len(coords)
    dist2 = {
        (i, j): dot(sub(coords[i], coords[j]), sub(coords[i], coords[j]))
        for i in range(n)
        for j in range(n)
        if i != j
    }
    edge2 = min(dist2.values())
    adjacency = [
        [j for j in range(n) if i != j and abs(dist2[(i, j)] - edge2) < 1e-9]
        for i in range(n)
    ]
    rings = []
    for i, nbrs in enumerate(adjacency):
        axis = norm(coords[i])
        w0 = sub(coords[nbrs[0]], coords[i])
        w0 = sub(w0, tuple(dot(w0, axis) * a for a in axis))
        e1 = norm(w0)
        e2 = cross(axis, e1)

        def angle(j):
            w = sub(coords[j], coords[i])
            return math.atan2(dot(w, e2), dot(w, e1))

        rings.append(sorted(nbrs, key=angle))
    return rings


def tetrahedron() -> FlagSystem:
    coords = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return from_rotation_system(_rotation_from_coords(coords))


def octahedron() -> FlagSystem:
    coords = [
        (1, 0, 0), (-1, 0, 0),
        (0, 1, 0), (0, -1, 0),
        (0, 0, 1), (0, 0, -1),
    ]
    return from_rotation_system(_rotation_from_coords(coords))


def icosahedron() -> FlagSystem:
    """The regular icosahedral map on the sphere: 120 flags, regular."""
    phi = (1 + math.sqrt(5)) / 2
    coords = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            coords.extend([(0.0, a, b), (a, b, 0.0), (b, 0.0, a)])
    return from_rotation_system(_rotation_from_coords(coords))


def antipodal_automorphism(fs: FlagSystem) -> Perm:
    """The unique central fixed-point-free involution of the automorphism
    group (exists e.g. for the icosahedral map)."""
    from .symmetry import automorphism_group  # local import to avoid a cycle

    aut = automorphism_group(fs)
    ident = identity(fs.flags)
    candidates = [
        h
        for h in aut.elements
        if h != ident
        and compose(h, h) == ident
        and all(h[f] != f for f in range(fs.flags))
        and all(compose(h, g) == compose(g, h) for g in aut.elements)
    ]
    if len(candidates) != 1:
        raise UnsupportedFamilyError(
            f"expected exactly one central fixed-point-free involution, "
            f"found {len(candidates)}"
        )
    return candidates[0]


def k6_projective() -> FlagSystem:
    """The regular embedding of K6 in the projective plane, as the
    antipodal quotient of the icosahedral map (60 flags)."""
    from .covers import quotient_by  # local import to avoid a cycle

    icosa = icosahedron()
    z = antipodal_automorphism(icosa)
    return quotient_by(icosa, [identity(icosa.flags), z])
