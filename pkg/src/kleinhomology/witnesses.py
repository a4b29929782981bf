"""Named small graphs used as test fixtures and verification witnesses.

These encode, dart for dart, the handful of concrete pictures that pin
our drawing conventions: rotations are clockwise, trees hang with the
output leg at the bottom, and the first input of a vertex is the one
clockwise-next after the output.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple, Union

from .graphs import HalfEdgeGraph, one_vertex_graph, validate_graph

TreeSpec = Union[int, Tuple["TreeSpec", ...]]


def annulus_graph() -> HalfEdgeGraph:
    """One vertex, an untwisted loop and one leg: a sphere with 2 holes."""
    return one_vertex_graph([1, "a", "a"])


def crosscap_graph(legcolor: int = 0) -> HalfEdgeGraph:
    """One vertex, a twisted loop and one leg: projective plane, 1 hole."""
    return one_vertex_graph([1, "a", "a"], {("a", 1): 1, 1: legcolor})


def handle_graph() -> HalfEdgeGraph:
    """Two interleaved untwisted loops and one leg: torus with 1 hole."""
    return one_vertex_graph([1, "a", "b", "a", "b"])


def relation_one_pair() -> Tuple[HalfEdgeGraph, HalfEdgeGraph]:
    """The two one-vertex graphs identified by the leg-migration relation.

    Both have a twisted loop and legs 1, 2; in the first the legs sit
    outside the loop, in the second leg 1 sits inside it with its colour
    flipped.  They are not isomorphic but become equal in the modular
    closure.
    """
    lhs = one_vertex_graph([1, "t", "t", 2], {("t", 0): 1})
    rhs = one_vertex_graph(["t", 1, "t", 2], {("t", 1): 1, 1: 1})
    return lhs, rhs


def relation_two_pair() -> Tuple[HalfEdgeGraph, HalfEdgeGraph]:
    """Three crosscaps versus handle plus crosscap (one-vertex graphs)."""
    three = one_vertex_graph(["p", "p", "q", "q", "r", "r"],
                             {("p", 1): 1, ("q", 1): 1, ("r", 1): 1})
    handle_cc = one_vertex_graph(["a", "b", "a", "b", "t", "t"],
                                 {("t", 1): 1})
    return three, handle_cc


def rooted_tree_graph(spec: Sequence[TreeSpec]) -> HalfEdgeGraph:
    """Planar rooted tree as a graph; leaves carry the given labels.

    ``spec`` is the root vertex's children left to right; a child is a
    leaf label or a nested tuple.  The output leg gets label ``n + 1``
    and every rotation is (output, first input, ..., last input).

    >>> g = rooted_tree_graph((1, 2, (3, 4)))
    >>> g.num_vertices, g.n_legs, g.genus()
    (2, 5, 0)
    """
    pairing: List[int] = []
    vertex_of: List[int] = []
    color: List[int] = []
    blocks: List[List[int]] = []
    legs = {}

    def new_dart(v):
        d = len(pairing)
        pairing.append(d)
        vertex_of.append(v)
        color.append(0)
        blocks[v].append(d)
        return d

    def build(children, updart):
        v = len(blocks)
        blocks.append([])
        out = new_dart(v)
        if updart is not None:
            pairing[out] = updart
            pairing[updart] = out
        for child in children:
            d = new_dart(v)
            if isinstance(child, int):
                legs[child] = d
            else:
                build(child, d)
        return out

    root_out = build(tuple(spec), None)
    labels = sorted(legs)
    n = len(labels)
    if labels != list(range(1, n + 1)):
        raise ValueError("leaf labels must be 1..n, got %r" % labels)
    legs[n + 1] = root_out
    rot = [0] * len(pairing)
    for block in blocks:
        for i, d in enumerate(block):
            rot[d] = block[(i + 1) % len(block)]
    return validate_graph(pairing, vertex_of, rot, color,
                          [legs[i + 1] for i in range(n + 1)])


def moebius_tree_pair() -> Tuple[HalfEdgeGraph, HalfEdgeGraph]:
    """Two coloured trees that differ only by a reflection at one vertex.

    First tree: lower vertex carries leg 3 (straight) and a dotted
    output; upper vertex carries legs 1 (straight) and 2 (dotted); the
    internal edge is straight at the top and dotted at the bottom.  The
    second tree is the same with the lower vertex reflected.
    """
    # darts: v_low = (out, edge_low, leg3), v_up = (edge_up, leg1, leg2);
    # out and edge_low dotted, edge_up and leg1 straight, leg2 dotted.
    a = validate_graph(pairing=[0, 3, 2, 1, 4, 5],
                       vertex_of=[0, 0, 0, 1, 1, 1],
                       rotation_next=[1, 2, 0, 4, 5, 3],
                       color=[1, 1, 0, 0, 0, 1],
                       legs=[4, 5, 2, 0])
    b = a.reflect_vertex(0)
    return a, b


def planar_tree_pair() -> Tuple[HalfEdgeGraph, HalfEdgeGraph]:
    """Binary corollas with inputs (1,2) and (2,1): equal as labelled
    trees, distinct as planar trees."""
    return rooted_tree_graph((1, 2)), rooted_tree_graph((2, 1))


def contraction_example() -> Tuple[HalfEdgeGraph, HalfEdgeGraph]:
    """The two-vertex coloured tree whose twisted-edge contraction is the
    corolla with inputs (3, 1, 2) coloured (1, 0, 1)."""
    two_vertex, _ = moebius_tree_pair()
    corolla = one_vertex_graph([4, 3, 1, 2], {3: 1, 2: 1})
    return two_vertex, corolla


def figure_t_terms() -> List[Tuple[int, HalfEdgeGraph]]:
    """The eight signed trees of the degree-one cycle in the five-leg
    colour-forgetting tree complex."""
    terms = [
        (+1, (1, 2, (3, 4))),
        (-1, (2, 1, (3, 4))),
        (+1, (2, (1, 3, 4))),
        (-1, (1, (2, 3, 4))),
        (+1, (1, (2, 3), 4)),
        (-1, (2, (1, 3), 4)),
        (+1, ((2, 1, 3), 4)),
        (-1, ((1, 2, 3), 4)),
    ]
    return [(sign, rooted_tree_graph(spec)) for sign, spec in terms]
