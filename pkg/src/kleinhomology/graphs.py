"""Half-edge graphs with rotation systems and two-colourings.

A graph is stored as a set of darts (half-edges) ``0..n-1`` together with

* ``pairing``   -- an involution; fixed points are legs,
* ``vertex_of`` -- which vertex each dart is attached to,
* ``rotation_next`` -- the clockwise-next dart around its vertex,
* ``color``     -- a bit per dart (straight = 0, dotted = 1),
* ``legs``      -- the dart carrying each leg label ``1..n_legs``,
* ``vertex_genus`` -- non-negative genus defect per vertex.

Every graph variant used in this package (ribbon graph, two-coloured
graph, its colour-forgetting quotients, and rooted trees) is carried by
this one structure; the variant only changes which moves count as
isomorphisms, handled in :mod:`kleinhomology.canonical`.

All operations are pure: graphs are immutable after construction.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

RIBBON = "ribbon"
MOEBIUS = "moebius"
DIANALYTIC = "dianalytic"
MOEBIUS_LEG_UNORIENTED = "moebius_leg_unoriented"

VARIANTS = (RIBBON, MOEBIUS, DIANALYTIC, MOEBIUS_LEG_UNORIENTED)


class GraphError(Exception):
    """Base class for all graph-validation and move errors."""


class NonInvolutivePairing(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadLegLabels(GraphError):
    pass


class RotationVertexMismatch(GraphError):
    pass


class LoopContraction(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class NotInternal(GraphError):
    pass


class InternalInvariantError(GraphError):
    """A redundant internal consistency check failed; indicates a bug."""


class HalfEdgeGraph:
    """Immutable half-edge graph with rotations, colours and labelled legs."""

    __slots__ = (
        "n",
        "pairing",
        "vertex_of",
        "rotation_next",
        "color",
        "legs",
        "vertex_genus",
        "_edges",
        "_rotation_prev",
    )

    def __init__(self, pairing, vertex_of, rotation_next, color, legs,
                 vertex_genus=None):
        self.n = len(pairing)
        self.pairing = tuple(pairing)
        self.vertex_of = tuple(vertex_of)
        self.rotation_next = tuple(rotation_next)
        self.color = tuple(color)
        self.legs = tuple(legs)  # legs[i] is the dart labelled i+1
        nv = (max(self.vertex_of) + 1) if self.vertex_of else 0
        if vertex_genus is None:
            vertex_genus = (0,) * nv
        self.vertex_genus = tuple(vertex_genus)
        self._edges = None
        self._rotation_prev = None

    # -- derived structure -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_genus)

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    @property
    def rotation_prev(self) -> Tuple[int, ...]:
        if self._rotation_prev is None:
            prev = [0] * self.n
            for d, nxt in enumerate(self.rotation_next):
                prev[nxt] = d
            self._rotation_prev = tuple(prev)
        return self._rotation_prev

    def edges(self) -> List[Tuple[int, int]]:
        """Internal edges as dart pairs ``(d1, d2)`` with ``d1 < d2``, sorted."""
        if self._edges is None:
            es = []
            for d, p in enumerate(self.pairing):
                if p > d:
                    es.append((d, p))
            self._edges = es
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def is_leg(self, dart: int) -> bool:
        return self.pairing[dart] == dart

    def is_loop(self, edge: Tuple[int, int]) -> bool:
        return self.vertex_of[edge[0]] == self.vertex_of[edge[1]]

    def twist(self, edge: Tuple[int, int]) -> int:
        """Twist parity of an internal edge (XOR of its two dart colours)."""
        return self.color[edge[0]] ^ self.color[edge[1]]

    def leg_label_of(self, dart: int) -> Optional[int]:
        try:
            return self.legs.index(dart) + 1
        except ValueError:
            return None

    def valences(self) -> List[int]:
        val = [0] * self.num_vertices
        for v in self.vertex_of:
            val[v] += 1
        return val

    def is_reduced(self) -> bool:
        return self.num_vertices > 0 and min(self.valences()) >= 3

    def genus(self) -> int:
        """Operadic genus: first Betti number plus the vertex genera."""
        b1 = self.num_edges - self.num_vertices + 1
        return b1 + sum(self.vertex_genus)

    def darts_at(self, vertex: int) -> List[int]:
        """Darts around ``vertex`` in rotation order, from the least dart."""
        start = min(d for d in range(self.n) if self.vertex_of[d] == vertex)
        out = [start]
        d = self.rotation_next[start]
        while d != start:
            out.append(d)
            d = self.rotation_next[d]
        return out

    # -- equality / hashing (on the raw presentation, not up to iso) -------

    def key(self) -> tuple:
        return (self.pairing, self.vertex_of, self.rotation_next, self.color,
                self.legs, self.vertex_genus)

    def __eq__(self, other):
        return isinstance(other, HalfEdgeGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return ("HalfEdgeGraph(n=%d, V=%d, E=%d, legs=%d, genus=%d)"
                % (self.n, self.num_vertices, self.num_edges, self.n_legs,
                   self.genus()))

    # -- local moves --------------------------------------------------------

    def reflect_vertex(self, v: int) -> "HalfEdgeGraph":
        """Reverse the rotation at ``v`` and flip the colours of its darts."""
        nxt = list(self.rotation_next)
        col = list(self.color)
        here = [d for d in range(self.n) if self.vertex_of[d] == v]
        prev = self.rotation_prev
        for d in here:
            nxt[d] = prev[d]
            col[d] ^= 1
        return HalfEdgeGraph(self.pairing, self.vertex_of, nxt, col,
                             self.legs, self.vertex_genus)

    def recolor_edge(self, edge: Tuple[int, int]) -> "HalfEdgeGraph":
        """Flip both dart colours of an internal edge (reduced graphs only)."""
        d1, d2 = edge
        if self.pairing[d1] != d2 or d1 == d2:
            raise NotInternal("(%d,%d) is not an internal edge" % (d1, d2))
        col = list(self.color)
        col[d1] ^= 1
        col[d2] ^= 1
        return HalfEdgeGraph(self.pairing, self.vertex_of, self.rotation_next,
                             col, self.legs, self.vertex_genus)

    def contract_edge(self, edge: Tuple[int, int]) -> "HalfEdgeGraph":
        """Contract an internal non-loop edge, splicing the rotations.

        If the two dart colours differ the far endpoint is reflected
        first, so the contraction is always performed on a same-coloured
        edge; the result is independent of that choice up to isomorphism.
        """
        d1, d2 = edge
        if d1 == d2 or self.pairing[d1] != d2:
            raise NotAnEdge("(%d,%d) is not an internal edge" % (d1, d2))
        if self.is_loop(edge):
            raise LoopContraction("cannot contract the loop (%d,%d)" % edge)
        g = self
        if g.color[d1] != g.color[d2]:
            g = g.reflect_vertex(g.vertex_of[d2])
        v1 = g.vertex_of[d1]
        v2 = g.vertex_of[d2]
        # Splice: ... a d1 | d2 b ...  ->  ... a b ...
        a = g.rotation_prev[d1]
        b = g.rotation_next[d1]
        c = g.rotation_prev[d2]
        e = g.rotation_next[d2]
        nxt = list(g.rotation_next)
        if b == d1:  # d1 alone at its vertex: valence-1 endpoint
            nxt[c] = e
            if e == d2:
                # both endpoints univalent: contracting a bare edge
                raise InternalInvariantError("contracting an isolated edge")
        elif e == d2:
            nxt[a] = b
        else:
            nxt[a] = e
            nxt[c] = b
        # Renumber darts, dropping d1 and d2.
        keep = [d for d in range(g.n) if d != d1 and d != d2]
        newid = {d: i for i, d in enumerate(keep)}
        # Merge v2 into v1; vertices renumbered densely.
        vkeep = [v for v in range(g.num_vertices) if v != max(v1, v2)]
        vmap = {v: i for i, v in enumerate(vkeep)}
        target = vmap[min(v1, v2)]
        pairing = [0] * len(keep)
        rot = [0] * len(keep)
        col = [0] * len(keep)
        vert = [0] * len(keep)
        for d in keep:
            i = newid[d]
            pairing[i] = newid[g.pairing[d]]
            rot[i] = newid[nxt[d]]
            col[i] = g.color[d]
            v = g.vertex_of[d]
            vert[i] = target if v in (v1, v2) else vmap[v]
        legs = tuple(newid[d] for d in g.legs)
        vg = [0] * len(vkeep)
        for v in range(g.num_vertices):
            w = target if v in (v1, v2) else vmap[v]
            vg[w] += g.vertex_genus[v]
        return HalfEdgeGraph(pairing, vert, rot, col, legs, vg)

    def project_variant(self, variant: str) -> "HalfEdgeGraph":
        """Representative of this graph in a coarser variant.

        Only the ribbon projection touches the data (colours are
        zeroed); the dianalytic and leg-unoriented quotients are realised
        inside the canonical code, so the graph is returned unchanged.
        """
        if variant not in VARIANTS:
            raise ValueError("unknown variant %r" % variant)
        if variant == RIBBON:
            return HalfEdgeGraph(self.pairing, self.vertex_of,
                                 self.rotation_next, (0,) * self.n,
                                 self.legs, self.vertex_genus)
        return self


def validate_graph(pairing: Sequence[int], vertex_of: Sequence[int],
                   rotation_next: Sequence[int], color: Sequence[int],
                   legs: Sequence[int],
                   vertex_genus: Optional[Sequence[int]] = None
                   ) -> HalfEdgeGraph:
    """Build a :class:`HalfEdgeGraph` after checking every invariant.

    Raises :class:`NonInvolutivePairing`, :class:`RotationVertexMismatch`,
    :class:`BadLegLabels` or :class:`Disconnected` naming the violated
    invariant.
    """
    n = len(pairing)
    if not (len(vertex_of) == len(rotation_next) == len(color) == n):
        raise GraphError("field lengths disagree")
    for d in range(n):
        p = pairing[d]
        if not 0 <= p < n or pairing[p] != d:
            raise NonInvolutivePairing("pairing is not an involution at %d" % d)
    if n == 0:
        raise GraphError("empty graph")
    nv = max(vertex_of) + 1
    if sorted(set(vertex_of)) != list(range(nv)):
        raise RotationVertexMismatch("vertex indices are not dense")
    # rotation orbits must partition darts by vertex
    seen = [False] * n
    for d in range(n):
        if seen[d]:
            continue
        v = vertex_of[d]
        x = d
        while True:
            if seen[x]:
                raise RotationVertexMismatch("rotation is not a permutation")
            seen[x] = True
            if vertex_of[x] != v:
                raise RotationVertexMismatch(
                    "rotation orbit of %d leaves vertex %d" % (d, v))
            x = rotation_next[x]
            if x == d:
                break
    fixed = sorted(d for d in range(n) if pairing[d] == d)
    if sorted(legs) != fixed:
        raise BadLegLabels("legs %r do not match pairing fixed points %r"
                           % (sorted(legs), fixed))
    if len(set(legs)) != len(legs):
        raise BadLegLabels("duplicate leg labels")
    for c in color:
        if c not in (0, 1):
            raise GraphError("colors must be 0/1 bits")
    if vertex_genus is not None:
        if len(vertex_genus) != nv:
            raise GraphError("vertex_genus length mismatch")
        if any(g < 0 for g in vertex_genus):
            raise GraphError("vertex_genus must be non-negative")
    # connectivity of the incidence structure
    adj: Dict[int, List[int]] = {v: [] for v in range(nv)}
    for d in range(n):
        p = pairing[d]
        if p != d:
            adj[vertex_of[d]].append(vertex_of[p])
    stack = [0]
    reached = {0}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != nv:
        raise Disconnected("graph has %d components" %
                           (nv - len(reached) + 1))
    return HalfEdgeGraph(pairing, vertex_of, rotation_next, color, legs,
                         vertex_genus)


def one_vertex_graph(rotation: Sequence, colors: Optional[dict] = None
                     ) -> HalfEdgeGraph:
    """Convenience constructor for one-vertex graphs from a rotation word.

    ``rotation`` is the clockwise cyclic word whose entries are either
    positive ints (leg labels) or symbolic names appearing exactly twice
    (loops).  ``colors`` maps an entry occurrence ``(name, occurrence)``
    or a leg label to a colour bit; missing entries default to 0.

    >>> g = one_vertex_graph([1, "a", "a", 2], {("a", 1): 1})
    >>> g.genus(), g.n_legs
    (1, 2)
    """
    colors = colors or {}
    n = len(rotation)
    seen: Dict[object, int] = {}
    pairing = list(range(n))
    col = [0] * n
    legs: Dict[int, int] = {}
    for i, item in enumerate(rotation):
        if isinstance(item, int):
            if item in legs:
                raise BadLegLabels("leg %d repeated" % item)
            legs[item] = i
            col[i] = colors.get(item, 0)
        else:
            if item in seen:
                j = seen.pop(item)
                pairing[i] = j
                pairing[j] = i
                col[i] = colors.get((item, 1), 0)
            else:
                seen[item] = i
                col[i] = colors.get((item, 0), 0)
    if seen:
        raise NotAnEdge("unpaired loop names: %r" % sorted(seen))
    labels = sorted(legs)
    if labels != list(range(1, len(labels) + 1)):
        raise BadLegLabels("leg labels must be 1..n, got %r" % labels)
    leg_darts = tuple(legs[i + 1] for i in range(len(labels)))
    rot = [(i + 1) % n for i in range(n)]
    return validate_graph(pairing, [0] * n, rot, col, leg_darts)


# -- serialisation ----------------------------------------------------------


def to_json(g: HalfEdgeGraph) -> str:
    """Bit-exact JSON form of a graph."""
    obj = {
        "n_half_edges": g.n,
        "pairing": list(g.pairing),
        "vertex": list(g.vertex_of),
        "rotation_next": list(g.rotation_next),
        "color": list(g.color),
        "legs": {str(i + 1): d for i, d in enumerate(g.legs)},
        "vertex_genus": list(g.vertex_genus),
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def from_json(text: str) -> HalfEdgeGraph:
    obj = json.loads(text)
    legs_map = {int(k): v for k, v in obj["legs"].items()}
    labels = sorted(legs_map)
    if labels != list(range(1, len(labels) + 1)):
        raise BadLegLabels("leg labels must be 1..n, got %r" % labels)
    legs = [legs_map[i + 1] for i in range(len(labels))]
    return validate_graph(obj["pairing"], obj["vertex"], obj["rotation_next"],
                          obj["color"], legs, obj.get("vertex_genus"))


def to_dot(g: HalfEdgeGraph, name: str = "G") -> str:
    """GraphViz export; twisted edges are rendered dashed."""
    lines = ["graph %s {" % name]
    for v in range(g.num_vertices):
        lines.append('  v%d [shape=point];' % v)
    for i, d in enumerate(g.legs):
        lines.append('  l%d [shape=plaintext, label="%d"];' % (i + 1, i + 1))
        style = ' [style=dashed]' if g.color[d] else ''
        lines.append('  v%d -- l%d%s;' % (g.vertex_of[d], i + 1, style))
    for d1, d2 in g.edges():
        style = ' [style=dashed]' if g.twist((d1, d2)) else ''
        lines.append('  v%d -- v%d%s;' % (g.vertex_of[d1], g.vertex_of[d2],
                                          style))
    lines.append("}")
    return "\n".join(lines)
