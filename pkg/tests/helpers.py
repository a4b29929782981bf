"""Shared test utilities: graph scrambling and a brute-force iso oracle."""

import itertools
import os
import random

from kleinhomology import (DIANALYTIC, MOEBIUS, MOEBIUS_LEG_UNORIENTED,
                           RIBBON, HalfEdgeGraph)


def seeded_rng(salt=0):
    seed = int(os.environ.get("KLEINHOMOLOGY_SEED", "20250810"))
    return random.Random(seed + salt)


def relabel(g, rng):
    """Randomly permute dart and vertex indices (structure preserving)."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    vperm = list(range(g.num_vertices))
    rng.shuffle(vperm)
    pairing = [0] * g.n
    vertex_of = [0] * g.n
    rot = [0] * g.n
    color = [0] * g.n
    for d in range(g.n):
        pairing[perm[d]] = perm[g.pairing[d]]
        vertex_of[perm[d]] = vperm[g.vertex_of[d]]
        rot[perm[d]] = perm[g.rotation_next[d]]
        color[perm[d]] = g.color[d]
    legs = [perm[d] for d in g.legs]
    vg = [0] * g.num_vertices
    for v in range(g.num_vertices):
        vg[vperm[v]] = g.vertex_genus[v]
    return HalfEdgeGraph(pairing, vertex_of, rot, color, legs, vg)


def scramble(g, variant, rng):
    """Apply random relabelings plus gauge moves legal in ``variant``."""
    h = relabel(g, rng)
    if variant != RIBBON:
        for v in range(h.num_vertices):
            if rng.random() < 0.5:
                h = h.reflect_vertex(v)
    if variant in (MOEBIUS, MOEBIUS_LEG_UNORIENTED) and h.is_reduced():
        for e in list(h.edges()):
            if rng.random() < 0.5:
                h = h.recolor_edge(e)
    if variant in (DIANALYTIC, MOEBIUS_LEG_UNORIENTED):
        color = list(h.color)
        for d in h.legs:
            if rng.random() < 0.5:
                color[d] ^= 1
        if variant == DIANALYTIC:
            for d in range(h.n):
                if rng.random() < 0.5:
                    color[d] ^= 1
        h = HalfEdgeGraph(h.pairing, h.vertex_of, h.rotation_next, color,
                          h.legs, h.vertex_genus)
    return relabel(h, rng)


def brute_force_isomorphisms(g1, g2, variant):
    """All dart bijections g1 -> g2 legal in ``variant`` (legs fixed).

    Exhaustive search over dart permutations and per-vertex reflection
    patterns; only usable for tiny graphs.
    """
    if (g1.n != g2.n or g1.num_vertices != g2.num_vertices
            or sorted(g1.valences()) != sorted(g2.valences())):
        return []
    n = g1.n
    isos = []
    label2 = {}
    for i, d in enumerate(g2.legs):
        label2[i + 1] = d
    reduced = g1.is_reduced() and g2.is_reduced()
    for perm in itertools.permutations(range(n)):
        ok = True
        for i, d in enumerate(g1.legs):
            if perm[d] != label2.get(i + 1):
                ok = False
                break
        if not ok:
            continue
        if any(perm[g1.pairing[d]] != g2.pairing[perm[d]] for d in range(n)):
            continue
        vmap = {}
        for d in range(n):
            v, w = g1.vertex_of[d], g2.vertex_of[perm[d]]
            if vmap.setdefault(v, w) != w:
                ok = False
                break
        if not ok:
            continue
        for eps in itertools.product((0, 1), repeat=g1.num_vertices):
            if variant == RIBBON and any(eps):
                continue
            good = True
            for d in range(n):
                v = g1.vertex_of[d]
                nxt = g1.rotation_next[d] if eps[v] == 0 else g1.rotation_prev[d]
                if perm[nxt] != g2.rotation_next[perm[d]]:
                    good = False
                    break
            if not good:
                continue
            if variant in (MOEBIUS, MOEBIUS_LEG_UNORIENTED):
                for d1, d2 in g1.edges():
                    t1 = g1.twist((d1, d2)) ^ eps[g1.vertex_of[d1]] ^ eps[g1.vertex_of[d2]]
                    i1, i2 = perm[d1], perm[d2]
                    t2 = g2.color[i1] ^ g2.color[i2]
                    if reduced:
                        if t1 != t2:
                            good = False
                            break
                    else:
                        c1 = (g1.color[d1] ^ eps[g1.vertex_of[d1]],
                              g1.color[d2] ^ eps[g1.vertex_of[d2]])
                        if c1 != (g2.color[i1], g2.color[i2]):
                            good = False
                            break
                if good and variant == MOEBIUS:
                    for d in g1.legs:
                        if g1.color[d] ^ eps[g1.vertex_of[d]] != g2.color[perm[d]]:
                            good = False
                            break
            if good:
                isos.append(perm)
                break  # distinct eps patterns give the same dart map
    return isos
