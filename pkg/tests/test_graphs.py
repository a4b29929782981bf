import pytest

from kleinhomology import (HalfEdgeGraph, from_json, one_vertex_graph,
                           to_dot, to_json, validate_graph)
from kleinhomology.graphs import (BadLegLabels, Disconnected, LoopContraction,
                                  NonInvolutivePairing, NotAnEdge,
                                  RotationVertexMismatch)


def loop_with_leg(twist=0, legcolor=0):
    return one_vertex_graph([1, "a", "a"],
                            {("a", 1): twist, 1: legcolor})


def test_smallest_loop_graph_valid():
    g = loop_with_leg()
    assert g.genus() == 1
    assert g.n_legs == 1
    assert g.num_edges == 1
    assert g.is_reduced()


def test_noninvolutive_pairing_rejected():
    # 3-cycle in the pairing
    with pytest.raises(NonInvolutivePairing):
        validate_graph([1, 2, 0], [0, 0, 0], [1, 2, 0], [0, 0, 0], [])


def test_disconnected_rejected():
    # two one-vertex loops, no connecting edge
    with pytest.raises(Disconnected):
        validate_graph([1, 0, 3, 2], [0, 0, 1, 1], [1, 0, 3, 2],
                       [0, 0, 0, 0], [])


def test_bad_leg_labels_rejected():
    with pytest.raises(BadLegLabels):
        one_vertex_graph([1, 1, "a", "a"])
    with pytest.raises(BadLegLabels):
        one_vertex_graph([2, "a", "a"])


def test_rotation_must_stay_on_vertex():
    # rotation orbit wanders across the edge's two vertices
    with pytest.raises(RotationVertexMismatch):
        validate_graph([1, 0, 2, 3], [0, 1, 0, 1], [1, 0, 3, 2],
                       [0, 0, 0, 0], [2, 3])


def test_contract_edge_euler_count():
    # 2-vertex tree: v0 has legs 1,2; v1 has legs 3,4; one internal edge
    g = validate_graph(
        pairing=[0, 1, 5, 3, 4, 2],
        vertex_of=[0, 0, 0, 1, 1, 1],
        rotation_next=[1, 2, 0, 4, 5, 3],
        color=[0] * 6,
        legs=[0, 1, 3, 4],
    )
    assert g.genus() == 0
    h = g.contract_edge((2, 5))
    assert h.num_vertices == g.num_vertices - 1
    assert h.num_edges == g.num_edges - 1
    assert h.genus() == 0
    assert h.n_legs == 4


def test_contract_loop_refused():
    g = loop_with_leg()
    (e,) = g.edges()
    with pytest.raises(LoopContraction):
        g.contract_edge(e)


def test_contract_non_edge_refused():
    g = loop_with_leg()
    with pytest.raises(NotAnEdge):
        g.contract_edge((0, 1))


def test_reflect_twice_is_identity():
    g = loop_with_leg(twist=1)
    assert g.reflect_vertex(0).reflect_vertex(0) == g


def test_recolor_twice_is_identity_and_keeps_twist():
    g = loop_with_leg(twist=1)
    (e,) = g.edges()
    h = g.recolor_edge(e)
    assert h.twist(e) == g.twist(e) == 1
    assert h.recolor_edge(e) == g


def test_genus_formula_with_vertex_genus():
    g = validate_graph([0], [0], [0], [0], [0], vertex_genus=[2])
    assert g.genus() == 2


def test_json_roundtrip_bit_exact():
    g = loop_with_leg(twist=1, legcolor=1)
    text = to_json(g)
    h = from_json(text)
    assert h == g
    assert to_json(h) == text


def test_dot_marks_twisted_edges_dashed():
    dot = to_dot(loop_with_leg(twist=1))
    assert "style=dashed" in dot
    assert "style=dashed" not in to_dot(loop_with_leg(twist=0))
