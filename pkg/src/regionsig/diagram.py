"""Oriented link diagrams: PD parsing, crossing signs, faces and checkerboard colouring.

PD convention: each crossing lists four edge labels counterclockwise,
starting from the incoming under-edge.  Slot 0 is therefore the incoming
and slot 2 the outgoing under-strand; slots 1 and 3 carry the over-strand.

Regions around a crossing are numbered by quadrant: quadrant 0 lies
between the two outgoing half-edges, and quadrants 1, 2, 3 follow
counterclockwise, so quadrant 2 lies between the two incoming half-edges.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class OrientedDiagram:
    name: str
    crossings: tuple
    circles: int = 0
    explicit_signs: tuple | None = None
    # slot (1 or 3) where the over-strand enters, per crossing
    over_in: tuple = ()
    components: tuple = ()
    # optional renaming of extracted region i to region_labels[i]
    region_labels: tuple | None = None

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)


@dataclass(frozen=True)
class RegionMap:
    n_regions: int
    crossings: tuple  # of (sign, (q0, q1, q2, q3))
    name: str = ""
    # region pairs separated by a crossingless circle
    circle_adjacency: tuple = ()

    def __post_init__(self):
        for sign, quads in self.crossings:
            if sign not in (1, -1):
                raise DiagramError(f"crossing sign must be +1 or -1, got {sign}")
            if len(quads) != 4:
                raise DiagramError("each crossing needs exactly four quadrant regions")
            for r in quads:
                if not 0 <= r < self.n_regions:
                    raise DiagramError(f"region id {r} outside 0..{self.n_regions - 1}")

    @property
    def signs(self):
        return tuple(s for s, _ in self.crossings)

    def adjacency(self):
        """Pairs of regions on the two sides of some edge."""
        pairs = []
        for _, q in self.crossings:
            for i in range(4):
                pairs.append((q[i], q[(i + 1) % 4]))
        pairs.extend(self.circle_adjacency)
        return pairs


@dataclass(frozen=True)
class Checkerboard:
    colors: tuple = field(default_factory=tuple)


# -- parsing -----------------------------------------------------------------


def parse_diagram(text: str):
    """Parse a diagram file; returns an OrientedDiagram or a RegionMap."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"diagram file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DiagramError("diagram file must contain a JSON object")
    fmt = data.get("format", "pd")
    if fmt == "pd":
        return _pd_from_data(data)
    if fmt == "regions":
        return _regions_from_data(data)
    raise DiagramError(f"unknown diagram format {fmt!r}")


def parse_pd(text: str) -> OrientedDiagram:
    d = parse_diagram(text)
    if not isinstance(d, OrientedDiagram):
        raise DiagramError("expected a diagram in 'pd' format")
    return d


def load_diagram(path):
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise DiagramError(f"{what} must be a list of integers")
    return value


def _pd_from_data(data) -> OrientedDiagram:
    name = str(data.get("name", ""))
    raw = data.get("pd", [])
    if not isinstance(raw, list):
        raise DiagramError("'pd' must be a list of 4-tuples")
    crossings = []
    for entry in raw:
        entry = _int_list(entry, "PD entry")
        if len(entry) != 4:
            raise DiagramError(f"PD entry {entry} does not have four labels")
        if any(e <= 0 for e in entry):
            raise DiagramError(f"PD entry {entry} has a non-positive edge label")
        crossings.append(tuple(entry))
    circles = data.get("circles", 0)
    if not isinstance(circles, int) or circles < 0:
        raise DiagramError("'circles' must be a non-negative integer")
    signs = data.get("signs")
    if signs is not None:
        signs = tuple(_int_list(signs, "'signs'"))
        if len(signs) != len(crossings):
            raise DiagramError("'signs' must have one entry per crossing")
        if any(s not in (1, -1) for s in signs):
            raise DiagramError("'signs' entries must be +1 or -1")
    labels = data.get("region_labels")
    if labels is not None:
        labels = tuple(_int_list(labels, "'region_labels'"))
    return build_diagram(name, crossings, circles, signs, labels)


def _regions_from_data(data) -> RegionMap:
    name = str(data.get("name", ""))
    if "n_regions" not in data or "regions" not in data or "signs" not in data:
        raise DiagramError("'regions' format needs 'n_regions', 'regions' and 'signs'")
    n = data["n_regions"]
    if not isinstance(n, int) or n < 0:
        raise DiagramError("'n_regions' must be a non-negative integer")
    quads = [tuple(_int_list(q, "quadrant tuple")) for q in data["regions"]]
    signs = _int_list(data["signs"], "'signs'")
    if len(signs) != len(quads):
        raise DiagramError("'signs' must have one entry per crossing")
    circles = data.get("circles", 0)
    if not isinstance(circles, int) or not 0 <= circles < max(n, 1):
        raise DiagramError("'circles' must be a non-negative integer smaller than n_regions")
    # circle interiors are the last region ids, each lying in region 0
    adj = tuple((0, n - 1 - i) for i in range(circles))
    return RegionMap(n, tuple(zip(signs, quads)), name=name, circle_adjacency=adj)


# -- orientation -------------------------------------------------------------


def _edge_slots(crossings):
    slots = defaultdict(list)
    for c, entry in enumerate(crossings):
        for s, e in enumerate(entry):
            slots[e].append((c, s))
    bad = sorted(e for e, occ in slots.items() if len(occ) != 2)
    if bad:
        raise DiagramError(f"edge labels must occur exactly twice; offending labels {bad}")
    return slots


def _unoriented_components(crossings, slots):
    """Edge labels grouped into strands (connected through crossings)."""
    parent = {e: e for e in slots}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for entry in crossings:
        for a, b in ((entry[0], entry[2]), (entry[1], entry[3])):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups = defaultdict(list)
    for e in slots:
        groups[find(e)].append(e)
    return [sorted(g) for g in groups.values()]


def _derive_over_in(crossings, slots, explicit_signs):
    n = len(crossings)
    over_in = [None] * n

    def is_in(c, s):
        if s == 0:
            return True
        if s == 2:
            return False
        if over_in[c] is None:
            return None
        return over_in[c] == s

    def propagate():
        changed = True
        while changed:
            changed = False
            for e, ((c1, s1), (c2, s2)) in slots.items():
                a, b = is_in(c1, s1), is_in(c2, s2)
                if a is not None and b is not None:
                    if a == b:
                        raise DiagramError(f"inconsistent orientation along edge {e}")
                elif a is not None:
                    # the other end must have the opposite direction
                    over_in[c2] = s2 if not a else 4 - s2
                    changed = True
                elif b is not None:
                    over_in[c1] = s1 if not b else 4 - s1
                    changed = True

    propagate()
    if None in over_in:
        # components never passing under: fall back on consecutive numbering
        succ = {}
        for comp in _unoriented_components(crossings, slots):
            for i, e in enumerate(comp):
                succ[e] = comp[(i + 1) % len(comp)]
        for c in range(n):
            if over_in[c] is not None:
                continue
            b, d = crossings[c][1], crossings[c][3]
            if succ[b] == d and succ[d] != b:
                over_in[c] = 1
            elif succ[d] == b and succ[b] != d:
                over_in[c] = 3
            else:
                continue
            propagate()
    if None in over_in and explicit_signs is not None:
        for c in range(n):
            if over_in[c] is None:
                over_in[c] = 3 if explicit_signs[c] == 1 else 1
                propagate()
    if None in over_in:
        raise DiagramError("cannot determine the orientation of every component; supply 'signs'")
    return tuple(over_in)


def _oriented_components(crossings, slots, over_in):
    head = {}
    for e, occ in slots.items():
        for c, s in occ:
            if s == 0 or (s in (1, 3) and over_in[c] == s):
                head[e] = (c, s)
    comps, seen = [], set()
    for start in sorted(slots):
        if start in seen:
            continue
        cycle, e = [], start
        while e not in seen:
            seen.add(e)
            cycle.append(e)
            c, s = head[e]
            e = crossings[c][(s + 2) % 4]
        if e != start:
            raise DiagramError("component edge sequence does not close up")
        comps.append(tuple(cycle))
    return tuple(comps)


def build_diagram(name, crossings, circles=0, explicit_signs=None, region_labels=None) -> OrientedDiagram:
    crossings = tuple(tuple(c) for c in crossings)
    slots = _edge_slots(crossings)
    over_in = _derive_over_in(crossings, slots, explicit_signs)
    comps = _oriented_components(crossings, slots, over_in)
    d = OrientedDiagram(name, crossings, circles, explicit_signs, over_in, comps, region_labels)
    crossing_signs(d)
    return d


# -- signs and counts --------------------------------------------------------


def crossing_signs(d: OrientedDiagram):
    """Right-handed convention: the over-strand entering at slot 3 gives +1."""
    derived = tuple(1 if s == 3 else -1 for s in d.over_in)
    if d.explicit_signs is not None and tuple(d.explicit_signs) != derived:
        bad = [i for i, (a, b) in enumerate(zip(derived, d.explicit_signs)) if a != b]
        raise DiagramError(f"explicit signs disagree with orientation at crossings {bad}")
    return derived


def crossing_counts(d) -> tuple:
    """(c_plus, c_minus) for an OrientedDiagram or a RegionMap."""
    signs = d.signs if isinstance(d, RegionMap) else crossing_signs(d)
    c_plus = sum(1 for s in signs if s == 1)
    return c_plus, len(signs) - c_plus


def writhe(d) -> int:
    c_plus, c_minus = crossing_counts(d)
    return c_plus - c_minus


# -- faces -------------------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def corner_quadrant(over_in_slot: int, corner: int) -> int:
    """Quadrant of the corner between PD slots ``corner`` and ``corner + 1``."""
    return (corner + 2) % 4 if over_in_slot == 1 else (corner + 3) % 4


def extract_regions(d: OrientedDiagram) -> RegionMap:
    """Faces of the diagram by corner traversal, labelled per crossing by quadrant."""
    n = d.n_crossings
    signs = crossing_signs(d)
    uf = _UnionFind(4 * n)
    graph = _UnionFind(n)
    slots = _edge_slots(d.crossings)
    for (c1, s1), (c2, s2) in slots.values():
        # walking c1 -> c2, the left side is corner (c1, s1) at the start
        # and corner (c2, s2 - 1) at the end
        uf.union(4 * c1 + s1, 4 * c2 + (s2 - 1) % 4)
        uf.union(4 * c1 + (s1 - 1) % 4, 4 * c2 + s2)
        graph.union(c1, c2)

    faces_of = defaultdict(set)
    corners_of = defaultdict(list)
    for corner in range(4 * n):
        root = uf.find(corner)
        faces_of[graph.find(corner // 4)].add(root)
        corners_of[root].append(corner)
    comp_crossings = defaultdict(int)
    for c in range(n):
        comp_crossings[graph.find(c)] += 1
    for comp, faces in faces_of.items():
        if len(faces) != comp_crossings[comp] + 2:
            raise DiagramError(
                f"face traversal found {len(faces)} faces for a connected piece with "
                f"{comp_crossings[comp]} crossings; the PD code is not planar")

    # split pieces are placed side by side: their largest faces merge into one
    outer = []
    for comp in sorted(faces_of):
        best = min(faces_of[comp], key=lambda f: (-len(corners_of[f]), f))
        outer.append(best)
    for f in outer[1:]:
        uf.union(outer[0], f)

    quads = []
    for c in range(n):
        q = [None] * 4
        for corner in range(4):
            q[corner_quadrant(d.over_in[c], corner)] = uf.find(4 * c + corner)
        quads.append(q)
    # number regions by first appearance in quadrant order
    order = {}
    for q in quads:
        for root in q:
            if root not in order:
                order[root] = len(order)
    crossings = tuple((signs[c], tuple(order[r] for r in quads[c])) for c in range(n))
    n_regions = len(order)
    outer_region = order[uf.find(outer[0])] if outer else None
    if outer_region is None:
        outer_region = 0
        n_regions = 1
    adj = tuple((outer_region, n_regions + i) for i in range(d.circles))
    total = n_regions + d.circles
    if d.region_labels is not None:
        lab = d.region_labels
        if sorted(lab) != list(range(total)):
            raise DiagramError(f"'region_labels' must be a permutation of 0..{total - 1}")
        crossings = tuple((s, tuple(lab[r] for r in q)) for s, q in crossings)
        adj = tuple((lab[a], lab[b]) for a, b in adj)
    return RegionMap(total, crossings, name=d.name, circle_adjacency=adj)


def region_map(obj) -> RegionMap:
    if isinstance(obj, RegionMap):
        return obj
    return extract_regions(obj)


def expected_region_count(d: OrientedDiagram) -> int:
    """n + 1 + k, with k the number of connected pieces including circles."""
    if not d.crossings:
        return 1 + d.circles
    graph = _UnionFind(d.n_crossings)
    for (c1, _), (c2, _) in _edge_slots(d.crossings).values():
        graph.union(c1, c2)
    pieces = len({graph.find(c) for c in range(d.n_crossings)})
    return d.n_crossings + 1 + pieces + d.circles


def checkerboard(r: RegionMap, d=None) -> Checkerboard:
    """Proper two-colouring of the regions; region 0 gets colour 0."""
    neighbours = defaultdict(list)
    for a, b in r.adjacency():
        if a == b:
            raise DiagramError(f"region {a} lies on both sides of an edge")
        neighbours[a].append(b)
        neighbours[b].append(a)
    colors = [None] * r.n_regions
    for start in range(r.n_regions):
        if colors[start] is not None:
            continue
        colors[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for b in neighbours[a]:
                if colors[b] is None:
                    colors[b] = 1 - colors[a]
                    stack.append(b)
                elif colors[b] == colors[a]:
                    raise DiagramError(f"regions {a} and {b} share an edge and a colour")
    return Checkerboard(tuple(colors))
