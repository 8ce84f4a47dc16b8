"""Maps and hypermaps as transitive actions of three involutions on flags.

A FlagSystem holds three involutory permutations g0, g1, g2 of the flag
set.  Vertices, edges and faces are the orbits of the dihedral pairs
<g1,g2>, <g0,g2> and <g0,g1>; a flag fixed by some generator lies on the
boundary of the underlying surface.  Maps additionally satisfy
(g0*g2)^2 = 1; hypermaps drop that relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FlagmapsError
from .perms import Perm, is_involution, is_perm, orbits

MAP = "map"
HYPERMAP = "hypermap"

GEN_NAMES = ("r0", "r1", "r2")


class InvalidFlagSystemError(FlagmapsError):
    """Raised by require_valid; carries the violation report."""

    def __init__(self, violations: list["Violation"]):
        super().__init__(
            "invalid flag system: " + "; ".join(str(v) for v in violations)
        )
        self.violations = violations


@dataclass(frozen=True)
class Violation:
    kind: str  # not-a-permutation | non-involution | not-connected | map-relation-broken
    generator: int | None = None
    flag: int | None = None
    component_sizes: tuple[int, ...] | None = None

    def __str__(self) -> str:
        parts = [self.kind]
        if self.generator is not None:
            parts.append(f"generator={GEN_NAMES[self.generator]}")
        if self.flag is not None:
            parts.append(f"flag={self.flag}")
        if self.component_sizes is not None:
            parts.append(f"components={list(self.component_sizes)}")
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class FlagSystem:
    kind: str
    flags: int
    g0: Perm
    g1: Perm
    g2: Perm

    @property
    def gens(self) -> tuple[Perm, Perm, Perm]:
        return (self.g0, self.g1, self.g2)

    def gen(self, i: int) -> Perm:
        return self.gens[i]

    def validate(self) -> list[Violation]:
        return validate(self)

    def require_valid(self) -> "FlagSystem":
        # validation result cached on the (immutable) instance
        if getattr(self, "_validated", False):
            return self
        violations = validate(self)
        if violations:
            raise InvalidFlagSystemError(violations)
        object.__setattr__(self, "_validated", True)
        return self


def validate(fs: FlagSystem) -> list[Violation]:
    """Check the three structural invariants; return violations, never raise.

    Reported kinds: not-a-permutation, non-involution (with a witness
    flag), not-connected (with component sizes), map-relation-broken.
    """
    out: list[Violation] = []
    if fs.kind not in (MAP, HYPERMAP):
        out.append(Violation("bad-kind"))
        return out
    usable = []
    for i, g in enumerate(fs.gens):
        if len(g) != fs.flags or not is_perm(g):
            out.append(Violation("not-a-permutation", generator=i))
            continue
        usable.append(g)
        if not is_involution(g):
            witness = next(f for f in range(fs.flags) if g[g[f]] != f)
            out.append(Violation("non-involution", generator=i, flag=witness))
    if len(usable) == 3 and not out:
        blocks = orbits(usable, fs.flags)
        if len(blocks) > 1:
            sizes = tuple(sorted(len(b) for b in blocks))
            out.append(Violation("not-connected", component_sizes=sizes))
        if fs.kind == MAP:
            g0, _, g2 = fs.gens
            for f in range(fs.flags):
                if g0[g2[f]] != g2[g0[f]]:
                    out.append(Violation("map-relation-broken", flag=f))
                    break
    return out


# ---------------------------------------------------------------------------
# Cells and surface invariants


def cells(fs: FlagSystem, i: int, j: int) -> list[tuple[int, ...]]:
    """Orbits of the dihedral pair <g_i, g_j> on flags."""
    return orbits([fs.gen(i), fs.gen(j)], fs.flags)


def vertex_cells(fs: FlagSystem) -> list[tuple[int, ...]]:
    return cells(fs, 1, 2)


def edge_cells(fs: FlagSystem) -> list[tuple[int, ...]]:
    return cells(fs, 0, 2)


def face_cells(fs: FlagSystem) -> list[tuple[int, ...]]:
    return cells(fs, 0, 1)


def fixed_flag_counts(fs: FlagSystem) -> tuple[int, int, int]:
    return tuple(
        sum(1 for f in range(fs.flags) if g[f] == f) for g in fs.gens
    )  # type: ignore[return-value]


def two_coloring(fs: FlagSystem, fixed_break: bool) -> list[int] | None:
    """2-color flags so every generator step alternates colors.

    With fixed_break=True a flag fixed by a generator is an immediate
    odd cycle, so the coloring exists iff the system is orientable with
    empty boundary.  With fixed_break=False fixed incidences impose no
    constraint, which tests orientability of the surface even when it
    has a boundary.
    """
    color = [-1] * fs.flags
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g in fs.gens:
            t = g[f]
            if t == f:
                if fixed_break:
                    return None
                continue
            if color[t] == -1:
                color[t] = 1 - color[f]
                stack.append(t)
            elif color[t] == color[f]:
                return None
    return color


@dataclass(frozen=True)
class Genus:
    """Tagged genus: orientable genus, crosscap number, or bordered genus.

    For bordered surfaces ``value`` is derived from chi = 2 - 2g - b
    (orientable) or chi = 2 - g - b (non-orientable).
    """

    surface: str  # "orientable" | "nonorientable" | "bordered"
    value: int
    orientable: bool

    def __str__(self) -> str:
        if self.surface == "orientable":
            return f"genus {self.value}"
        if self.surface == "nonorientable":
            return f"crosscap {self.value}"
        side = "orientable" if self.orientable else "nonorientable"
        return f"bordered {side} genus {self.value}"


@dataclass(frozen=True)
class SurfaceInvariants:
    vertices: int
    edges: int
    faces: int
    fixed_flags: tuple[int, int, int]
    has_boundary: bool
    boundary_components: int | None
    chi: int
    orientable: bool
    orientable_no_boundary: bool
    genus: Genus
    face_sizes: tuple[int, ...]
    vertex_degrees: tuple[int, ...]
    type_signature: tuple[int, int]


def _cell_sizes(fs: FlagSystem, blocks: list[tuple[int, ...]],
                pair: tuple[int, int]) -> list[int]:
    """Face sizes / vertex degrees per cell of the <g_i,g_j> pair.

    A cell free of fixed flags has size orbit/2; a degenerate (boundary)
    cell counts its corner positions, i.e. the g1-orbits inside it.
    """
    ga, gb = fs.gen(pair[0]), fs.gen(pair[1])
    corner = fs.g1
    sizes = []
    for block in blocks:
        if not any(ga[f] == f or gb[f] == f for f in block):
            sizes.append(len(block) // 2)
            continue
        seen: set[int] = set()
        corners = 0
        for f in block:
            if f in seen:
                continue
            seen.add(f)
            seen.add(corner[f])
            corners += 1
        sizes.append(corners)
    return sizes


def euler_characteristic(fs: FlagSystem) -> int:
    """Euler characteristic as the cell count of the flag triangulation:
    (V+E+F) - (#orbits<g0> + #orbits<g1> + #orbits<g2>) + #flags.

    Unlike the naive V - E + F this handles semi-edges and boundary
    degeneracies uniformly.
    """
    fs.require_valid()
    v = len(cells(fs, 1, 2))
    e = len(cells(fs, 0, 2))
    f = len(cells(fs, 0, 1))
    single_orbits = sum(len(orbits([g], fs.flags)) for g in fs.gens)
    return (v + e + f) - single_orbits + fs.flags


def surface_invariants(fs: FlagSystem) -> SurfaceInvariants:
    """Cell counts, Euler characteristic, orientability, boundary and type."""
    fs.require_valid()
    vblocks = vertex_cells(fs)
    eblocks = edge_cells(fs)
    fblocks = face_cells(fs)
    v, e, f = len(vblocks), len(eblocks), len(fblocks)
    single_orbits = sum(len(orbits([g], fs.flags)) for g in fs.gens)
    chi = (v + e + f) - single_orbits + fs.flags

    fixed = fixed_flag_counts(fs)
    has_boundary = any(fixed)
    orientable = two_coloring(fs, fixed_break=False) is not None
    orientable_closed = orientable and not has_boundary

    boundary_comps = boundary_components(fs) if has_boundary else None
    if not has_boundary:
        if orientable:
            genus = Genus("orientable", (2 - chi) // 2, True)
        else:
            genus = Genus("nonorientable", 2 - chi, False)
    else:
        b = boundary_comps or 0
        if orientable:
            genus = Genus("bordered", (2 - chi - b) // 2, True)
        else:
            genus = Genus("bordered", 2 - chi - b, False)

    face_sizes = tuple(sorted(_cell_sizes(fs, fblocks, (0, 1))))
    vertex_degrees = tuple(sorted(_cell_sizes(fs, vblocks, (1, 2))))
    type_signature = (
        math.lcm(*face_sizes) if face_sizes else 0,
        math.lcm(*vertex_degrees) if vertex_degrees else 0,
    )
    return SurfaceInvariants(
        vertices=v,
        edges=e,
        faces=f,
        fixed_flags=fixed,
        has_boundary=has_boundary,
        boundary_components=boundary_comps,
        chi=chi,
        orientable=orientable,
        orientable_no_boundary=orientable_closed,
        genus=genus,
        face_sizes=face_sizes,
        vertex_degrees=vertex_degrees,
        type_signature=type_signature,
    )


class NoBoundaryError(FlagmapsError):
    """boundary_components called on a closed system."""


def boundary_components(fs: FlagSystem) -> int:
    """Number of boundary circuits of the underlying surface.

    Fixed incidences (flag, generator) are the boundary sides of the flag
    triangulation.  Every corner star (dihedral orbit of a generator pair)
    containing fixed incidences is a path whose two ends are fixed
    incidences; pairing the ends star by star links the boundary sides
    into circuits, and the number of circuits is the answer.
    """
    fs.require_valid()
    incidences = [
        (f, i) for f in range(fs.flags) for i in range(3) if fs.gen(i)[f] == f
    ]
    if not incidences:
        raise NoBoundaryError("system has no boundary")

    # links[x][star] = the incidence paired with x in that corner-star type;
    # an incidence of generator i belongs to the two stars containing i.
    links: dict[tuple[int, int], dict[tuple[int, int], tuple[int, int]]] = {
        x: {} for x in incidences
    }
    for star in ((0, 1), (0, 2), (1, 2)):
        i, j = star
        for block in orbits([fs.gen(i), fs.gen(j)], fs.flags):
            ends = [
                (f, k)
                for f in block
                for k in star
                if fs.gen(k)[f] == f
            ]
            if not ends:
                continue
            if len(ends) != 2:
                raise FlagmapsError(
                    f"corner star {block} has {len(ends)} fixed ends"
                )
            a, b = ends
            links[a][star] = b
            links[b][star] = a

    for x, partners in links.items():
        if len(partners) != 2:
            raise FlagmapsError(f"boundary incidence {x} has {len(partners)} links")

    # Each incidence has exactly two link slots; the pairing graph is a
    # disjoint union of circuits.  Walk them, leaving by the star not
    # used to arrive.
    used: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    circuits = 0
    for start in incidences:
        for first_star in links[start]:
            if (start, first_star) in used:
                continue
            circuits += 1
            cur, star = start, first_star
            while (cur, star) not in used:
                used.add((cur, star))
                nxt = links[cur][star]
                used.add((nxt, star))
                other = next(s for s in links[nxt] if s != star)
                cur, star = nxt, other
    return circuits


# ---------------------------------------------------------------------------
# Canonical form, isomorphism, relabeling


def bfs_relabeling(fs: FlagSystem, start: int) -> list[int]:
    """Map old flag -> new label, labels assigned in breadth-first
    discovery order from ``start``, scanning generators g0, g1, g2."""
    new = [-1] * fs.flags
    new[start] = 0
    order = [start]
    for f in order:
        for g in fs.gens:
            t = g[f]
            if new[t] < 0:
                new[t] = len(order)
                order.append(t)
    return new


def relabel(fs: FlagSystem, perm: Perm) -> FlagSystem:
    """Conjugate the system by a relabeling of flags (new = perm[old])."""
    n = fs.flags
    tables = []
    for g in fs.gens:
        img = [0] * n
        for old in range(n):
            img[perm[old]] = perm[g[old]]
        tables.append(tuple(img))
    return FlagSystem(fs.kind, n, *tables)


def encode(fs: FlagSystem) -> bytes:
    """Deterministic byte encoding of the labeled system.

    Layout: kind byte, flag count (4 bytes BE), then the image tables
    interleaved per flag as g0[f], g1[f], g2[f]; one byte per entry if
    flags < 256, else four.
    """
    head = (b"M" if fs.kind == MAP else b"H") + fs.flags.to_bytes(4, "big")
    width = 1 if fs.flags < 256 else 4
    body = b"".join(
        g[f].to_bytes(width, "big") for f in range(fs.flags) for g in fs.gens
    )
    return head + body


def canonical_form(fs: FlagSystem) -> bytes:
    """Least encoding over breadth-first relabelings from every start flag.

    Equal canonical forms characterize isomorphism (a flag bijection
    commuting with the respective generators, matched by index).
    """
    fs.require_valid()
    best: bytes | None = None
    for start in range(fs.flags):
        enc = encode(relabel(fs, tuple(bfs_relabeling(fs, start))))
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best


def is_isomorphic(a: FlagSystem, b: FlagSystem) -> bool:
    if a.kind != b.kind or a.flags != b.flags:
        return False
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# Automorphism candidate extension (shared by symmetry and covers)


def bfs_parents(fs: FlagSystem) -> list[tuple[int, int, int]]:
    """Spanning structure: (flag, parent, generator) triples in BFS
    discovery order from flag 0, excluding the root."""
    seen = [False] * fs.flags
    seen[0] = True
    order = [0]
    out = []
    for f in order:
        for i, g in enumerate(fs.gens):
            t = g[f]
            if not seen[t]:
                seen[t] = True
                order.append(t)
                out.append((t, f, i))
    return out


def extend_from_image(
    fs: FlagSystem,
    image_of_zero: int,
    parents: list[tuple[int, int, int]] | None = None,
) -> Perm | None:
    """The unique generator-commuting flag map sending 0 to the given
    image, or None if no automorphism does."""
    if parents is None:
        parents = bfs_parents(fs)
    gens = fs.gens
    h = [-1] * fs.flags
    h[0] = image_of_zero
    for flag, parent, i in parents:
        h[flag] = gens[i][h[parent]]
    for g in gens:
        for f in range(fs.flags):
            if h[g[f]] != g[h[f]]:
                return None
    return tuple(h)


# ---------------------------------------------------------------------------
# Diagram export


def export_diagram(fs: FlagSystem) -> str:
    """Edge-labelled permutation diagram in DOT format.

    One node per flag, one undirected edge per generator incidence
    labelled r0/r1/r2; a generator fixing a flag becomes a ``fixed``
    node attribute rather than a loop edge.  Emission order is
    deterministic: nodes by flag index, edges by (flag, generator).
    """
    fs.require_valid()
    lines = ["graph flags {"]
    for f in range(fs.flags):
        fixed = [GEN_NAMES[i] for i in range(3) if fs.gen(i)[f] == f]
        attrs = f'label="f{f}"'
        if fixed:
            attrs += f', fixed="{",".join(fixed)}"'
        lines.append(f"  f{f} [{attrs}];")
    for f in range(fs.flags):
        for i in range(3):
            t = fs.gen(i)[f]
            if f < t:
                lines.append(f'  f{f} -- f{t} [label="{GEN_NAMES[i]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def instability_index(base_order: int, cover_order: int) -> Fraction:
    """cover automorphism order / (2 * base order), exact."""
    return Fraction(cover_order, 2 * base_order)
