"""Canonical forms, isomorphism certificates and automorphism signs.

Isomorphism testing is by canonical traversal codes.  A traversal is a
breadth-first walk over the darts starting from a chosen dart; at every
vertex it may walk the rotation forwards or backwards (a reflection).
Which reflections are legal, and what colour data is emitted, depends on
the variant:

* ``ribbon``      -- no reflections, colours ignored;
* ``moebius``     -- reflection flips the colours at the vertex; on
  reduced graphs the simultaneous recolouring of an internal edge is
  also a gauge move, so only the twist parity of each edge is emitted;
* ``dianalytic``  -- reflections free, colours forgotten;
* ``moebius_leg_unoriented`` -- as ``moebius`` with leg colours dropped.

For ribbon and moebius variants the reflection bit of every vertex past
the start is forced by requiring the spanning-tree edges to emit colour
zero, so a graph has at most ``2 * n`` candidate traversals (at most two
when a leg pins the start dart).  Dianalytic codes branch on the
reflection bit with branch-and-bound pruning.

Two graphs are isomorphic in a variant iff their canonical codes are
equal; the traversals achieving the minimal code enumerate the full
automorphism group.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import (DIANALYTIC, MOEBIUS, MOEBIUS_LEG_UNORIENTED, RIBBON,
                     HalfEdgeGraph, InternalInvariantError)

_VARIANT_ID = {RIBBON: 0, MOEBIUS: 1, DIANALYTIC: 2, MOEBIUS_LEG_UNORIENTED: 3}
_ID_VARIANT = {v: k for k, v in _VARIANT_ID.items()}

_SYM_LEG = 0
_SYM_CLOSE = 1
_SYM_FORWARD = 2


class CanonicalForm:
    """Canonical code of a graph plus the witnessing relabelings."""

    __slots__ = ("code", "cert", "certs", "variant")

    def __init__(self, code: bytes, cert: Tuple[int, ...],
                 certs: List[Tuple[int, ...]], variant: str):
        self.code = code
        self.cert = cert          # dart -> canonical index, one witness
        self.certs = certs        # all minimal witnesses (= automorphisms)
        self.variant = variant

    def automorphisms(self) -> List[Tuple[int, ...]]:
        """Automorphism group as dart permutations (includes identity)."""
        base = self.cert
        inv = [0] * len(base)
        for d, c in enumerate(base):
            inv[c] = d
        auts = []
        for other in self.certs:
            auts.append(tuple(inv[c] for c in other))
        return auts


def _emits_leg_colors(variant: str) -> bool:
    return variant == MOEBIUS


def _emits_edge_colors(variant: str) -> bool:
    return variant in (MOEBIUS, MOEBIUS_LEG_UNORIENTED)


def _has_reflections(variant: str) -> bool:
    return variant != RIBBON


def canonical_form(g: HalfEdgeGraph, variant: str,
                   want_auts: bool = False) -> CanonicalForm:
    """Compute the canonical code of ``g`` in the given variant."""
    n = g.n
    reduced = g.is_reduced()
    pairing = g.pairing
    vertex_of = g.vertex_of
    rot_next = g.rotation_next
    rot_prev = g.rotation_prev
    color = g.color
    nv = g.num_vertices
    leg_label = [0] * n
    for i, d in enumerate(g.legs):
        leg_label[d] = i + 1

    forced = _has_reflections(variant) and variant != DIANALYTIC
    emit_edge = _emits_edge_colors(variant)
    emit_leg = _emits_leg_colors(variant)
    # layout flag lets the decoder know how colour payloads were written
    header = [_VARIANT_ID[variant], 1 if reduced else 0, g.n_legs]

    if g.n_legs >= 1:
        starts = [g.legs[0]]
    else:
        val = g.valences()
        vmin = min(val[vertex_of[d]] for d in range(n))
        starts = [d for d in range(n) if val[vertex_of[d]] == vmin]
    if _has_reflections(variant):
        root_refl = (0, 1)
    else:
        root_refl = (0,)

    best: Optional[List[int]] = None
    best_certs: List[Tuple[int, ...]] = []

    # Mutable traversal state, copied at dianalytic branch points.
    def run(start: int, r0: int):
        canon = [-1] * n
        rbit = [-1] * nv
        disc = [False] * nv
        disc[vertex_of[start]] = True
        queue = [start]
        code: List[int] = list(header)
        _process(0, queue, canon, rbit, disc, code, [0], r0, True)

    def _process(qi: int, queue, canon, rbit, disc, code, counter, r_entry,
                 tight):
        nonlocal best, best_certs
        if qi == len(queue):
            if best is None or code < best:
                best = list(code)
                best_certs = [tuple(canon)]
            elif code == best and want_auts:
                best_certs.append(tuple(canon))
            return
        d0 = queue[qi]
        v = vertex_of[d0]
        if qi == 0:
            choices = (r_entry,)
        elif variant == DIANALYTIC:
            choices = (0, 1)
        elif forced:
            choices = (rbit[v],)
        else:
            choices = (0,)
        branching = len(choices) > 1
        for rv in choices:
            if branching:
                c_canon = list(canon)
                c_rbit = list(rbit)
                c_disc = list(disc)
                c_queue = list(queue)
                c_code = list(code)
                c_counter = list(counter)
            else:
                c_canon, c_rbit, c_disc = canon, rbit, disc
                c_queue, c_code, c_counter = queue, code, counter
            c_rbit[v] = rv
            blockstart = len(c_code)
            _emit_vertex(d0, v, rv, c_canon, c_rbit, c_disc, c_queue, c_code,
                         c_counter)
            c_tight = tight
            if best is not None and c_tight:
                seg = c_code[blockstart:]
                ref = best[blockstart:blockstart + len(seg)]
                if seg > ref:
                    continue
                if seg < ref:
                    c_tight = False
            _process(qi + 1, c_queue, c_canon, c_rbit, c_disc, c_code,
                     c_counter, r_entry, c_tight)

    def _emit_vertex(d0, v, rv, canon, rbit, disc, queue, code, counter):
        step = rot_next if rv == 0 else rot_prev
        code.append(0)  # placeholder for the valence
        pos_val = len(code) - 1
        d = d0
        k = 0
        while True:
            canon[d] = counter[0]
            counter[0] += 1
            k += 1
            p = pairing[d]
            if p == d:
                code.append(_SYM_LEG)
                code.append(leg_label[d])
                if emit_leg:
                    code.append(color[d] ^ rv)
            elif canon[p] >= 0:
                code.append(_SYM_CLOSE)
                code.append(canon[p])
                if emit_edge:
                    w = vertex_of[p]
                    if reduced:
                        code.append(color[d] ^ color[p] ^ rv ^ rbit[w])
                    else:
                        code.append(color[p] ^ rbit[w])
                        code.append(color[d] ^ rv)
            else:
                code.append(_SYM_FORWARD)
                w = vertex_of[p]
                if not disc[w]:
                    disc[w] = True
                    if forced:
                        if reduced:
                            rbit[w] = color[d] ^ color[p] ^ rv
                        else:
                            rbit[w] = color[p]
                    queue.append(p)
            d = step[d]
            if d == d0:
                break
        code[pos_val] = k

    for start in starts:
        for r0 in root_refl:
            run(start, r0)

    if best is None:
        raise InternalInvariantError("canonical search produced no code")
    return CanonicalForm(bytes(best), best_certs[0], best_certs, variant)


def canonical_code(g: HalfEdgeGraph, variant: str) -> bytes:
    """Canonical code; equal codes iff isomorphic in the variant."""
    return canonical_form(g, variant).code


def decode(code: bytes, with_variant: bool = False):
    """Rebuild the canonical representative graph from its code."""
    variant = _ID_VARIANT[code[0]]
    reduced = bool(code[1])
    emit_edge = _emits_edge_colors(variant)
    emit_leg = _emits_leg_colors(variant)
    pos = 3
    pairing: List[int] = []
    vertex_of: List[int] = []
    rot: List[int] = []
    color: List[int] = []
    legs: Dict[int, int] = {}
    v = 0
    while pos < len(code):
        k = code[pos]
        pos += 1
        first = len(pairing)
        for i in range(k):
            d = first + i
            pairing.append(d)
            vertex_of.append(v)
            color.append(0)
            rot.append(first + (i + 1) % k)
            sym = code[pos]
            pos += 1
            if sym == _SYM_LEG:
                legs[code[pos]] = d
                pos += 1
                if emit_leg:
                    color[d] = code[pos]
                    pos += 1
            elif sym == _SYM_CLOSE:
                j = code[pos]
                pos += 1
                pairing[d] = j
                pairing[j] = d
                if emit_edge:
                    if reduced:
                        color[d] = code[pos]
                        pos += 1
                    else:
                        color[j] = code[pos]
                        color[d] = code[pos + 1]
                        pos += 2
            elif sym != _SYM_FORWARD:
                raise ValueError("corrupt code")
        v += 1
    labels = sorted(legs)
    if labels != list(range(1, len(labels) + 1)):
        raise ValueError("corrupt code: leg labels %r" % labels)
    g = HalfEdgeGraph(pairing, vertex_of, rot, color,
                      [legs[i + 1] for i in range(len(labels))])
    if with_variant:
        return g, variant
    return g


# -- orientation data ---------------------------------------------------


def reference_orientation(g: HalfEdgeGraph):
    """Deterministic reference orientation of a canonical representative.

    Returns ``(edge_list, tree_flags, cycles)`` where ``edge_list`` is the
    sorted dart-pair list, ``tree_flags[i]`` marks spanning-tree edges and
    ``cycles`` is the reference integer basis of the cycle space: one
    cycle per non-tree edge ``e = (a, b)``, oriented along ``a -> b`` and
    closed through the tree, stored as ``{edge_index: +-1}``.  Every edge's
    reference direction is from its smaller to its larger dart.
    """
    edges = g.edges()
    nv = g.num_vertices
    parent_edge = [-1] * nv  # edge index used to reach the vertex
    parent_sign = [0] * nv   # +1 if reached along the reference direction
    parent = [-1] * nv
    depth = [0] * nv
    seen = [False] * nv
    tree = [False] * len(edges)
    if nv:
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for i, (a, b) in enumerate(edges):
                va, vb = g.vertex_of[a], g.vertex_of[b]
                if tree[i] or va == vb:
                    continue
                if seen[va] and not seen[vb]:
                    child, sgn, par = vb, 1, va
                elif seen[vb] and not seen[va]:
                    child, sgn, par = va, -1, vb
                else:
                    continue
                tree[i] = True
                seen[child] = True
                parent_edge[child] = i
                parent_sign[child] = sgn
                parent[child] = par
                depth[child] = depth[par] + 1
                nxt.append(child)
            if not nxt:
                break
    if not all(seen):
        raise InternalInvariantError("reference tree did not span")

    def path_to_root(v):
        out = []
        while parent[v] >= 0:
            out.append((parent_edge[v], parent_sign[v]))
            v = parent[v]
        return v, out

    cycles = []
    for i, (a, b) in enumerate(edges):
        if tree[i]:
            continue
        va, vb = g.vertex_of[a], g.vertex_of[b]
        vec: Dict[int, int] = {i: 1}
        if va != vb:
            ra, pa = path_to_root(va)
            rb, pb = path_to_root(vb)
            # cycle runs a -> b then back b ~> a through the tree
            for j, s in pb:
                vec[j] = vec.get(j, 0) - s
            for j, s in pa:
                vec[j] = vec.get(j, 0) + s
            vec = {j: c for j, c in vec.items() if c}
        cycles.append(vec)
    return edges, tree, cycles


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det_sign(mat: List[List[int]]) -> int:
    """Sign of the determinant of a small integer matrix (0 if singular)."""
    m = [[Fraction(x) for x in row] for row in mat]
    size = len(m)
    sign = 1
    for c in range(size):
        piv = None
        for r in range(c, size):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        if m[c][c] < 0:
            sign = -sign
        for r in range(c + 1, size):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                for k in range(c, size):
                    m[r][k] -= f * m[c][k]
    return sign


def transport_sign(src: HalfEdgeGraph, dart_map: Sequence[int],
                   dst: HalfEdgeGraph) -> int:
    """Orientation sign of an isomorphism given as a dart bijection.

    Compares the reference orientation of ``src`` pushed through the map
    against the reference orientation of ``dst``:
    sign = (edge permutation sign) * (determinant sign on the cycle space).
    """
    s_edges, _, s_cycles = reference_orientation(src)
    d_edges, d_tree, d_cycles = reference_orientation(dst)
    d_index = {frozenset(e): i for i, e in enumerate(d_edges)}

    perm = []
    dir_sign = []
    for (a, b) in s_edges:
        ia, ib = dart_map[a], dart_map[b]
        j = d_index[frozenset((ia, ib))]
        perm.append(j)
        dir_sign.append(1 if ia < ib else -1)
    sign = _perm_sign(perm)

    if s_cycles:
        nontree = [i for i, t in enumerate(d_tree) if not t]
        col_of = {e: k for k, e in enumerate(nontree)}
        mat = []
        for vec in s_cycles:
            pushed = [0] * len(nontree)
            for i, c in vec.items():
                j = perm[i]
                if j in col_of:
                    pushed[col_of[j]] = c * dir_sign[i]
            mat.append(pushed)
        det = _det_sign(mat)
        if det == 0:
            raise InternalInvariantError("cycle basis transport singular")
        sign *= det
    return sign


class AutomorphismReport:
    """Automorphism group size and orientation action of a graph."""

    __slots__ = ("group_order", "orientation_reversing_exists", "generators")

    def __init__(self, group_order, orientation_reversing_exists, generators):
        self.group_order = group_order
        self.orientation_reversing_exists = orientation_reversing_exists
        self.generators = generators


def automorphism_signs(g: HalfEdgeGraph, variant: str) -> AutomorphismReport:
    """Automorphisms of ``g`` in the variant's category, with signs.

    The sign of an automorphism is the sign of its permutation of the
    internal edges times the determinant sign of its action on the first
    homology of the realisation.
    """
    cf = canonical_form(g, variant, want_auts=True)
    auts = cf.automorphisms()
    reversing = False
    gens = []
    for alpha in auts:
        if alpha != tuple(range(g.n)):
            gens.append(alpha)
        if transport_sign(g, alpha, g) < 0:
            reversing = True
    return AutomorphismReport(len(auts), reversing, gens)


def is_orientable_basis_element(g: HalfEdgeGraph, variant: str) -> bool:
    """True iff ``g`` has no orientation-reversing automorphism."""
    return not automorphism_signs(g, variant).orientation_reversing_exists
