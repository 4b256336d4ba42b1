from __future__ import annotations

from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knothodge.genfun import Parity
from knothodge.graphs import (
    HalfEdgeGraph,
    automorphism_order,
    canonical,
    degree,
    differential,
    enumerate_graphs,
    euler_table,
    expansions,
    has_loop,
    hodge_bounds,
    structural_graphs,
)

G = HalfEdgeGraph.from_text


def perm_sign(p):
    sign = 1
    p = list(p)
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                sign = -sign
    return sign


def koszul(g, pi, sigma, flips, d_odd, k_odd):
    """Sign of relabeling vertices by pi, edges by sigma, reversing edges in flips."""
    sign = 1
    if k_odd:
        sign *= perm_sign([pi[x] for x in range(g.n_ext)])
    if d_odd:
        sign *= perm_sign([pi[x] for x in range(g.n_ext, g.n_vertices)])
        sign *= (-1) ** sum(flips)
    else:
        sign *= perm_sign(sigma)
    return sign


def relabel(g, pi, sigma, flips):
    edges = [None] * len(g.edges)
    for e, (a, b) in enumerate(g.edges):
        a2, b2 = pi[a], pi[b]
        edges[sigma[e]] = (b2, a2) if flips[e] else (a2, b2)
    return HalfEdgeGraph(g.n_ext, g.n_int, tuple(edges))


def brute_automorphisms(g, d_odd, k_odd):
    """All (vertex, edge, flip) symmetries with their Koszul signs."""
    signs = []
    ext = list(range(g.n_ext))
    intl = list(range(g.n_ext, g.n_vertices))
    m = len(g.edges)
    for pe in permutations(ext):
        for pin in permutations(intl):
            pi = list(pe) + list(pin)
            for sigma in permutations(range(m)):
                options = []
                ok = True
                for e, (a, b) in enumerate(g.edges):
                    ta, tb = g.edges[sigma[e]]
                    fl = []
                    if (pi[a], pi[b]) == (ta, tb):
                        fl.append(0)
                    if (pi[b], pi[a]) == (ta, tb):
                        fl.append(1)
                    if not fl:
                        ok = False
                        break
                    options.append(fl)
                if not ok:
                    continue
                for flips in product(*options):
                    signs.append(koszul(g, pi, sigma, flips, d_odd, k_odd))
    return signs


def total_count(i, j, parity, loop_free=False):
    return sum(len(enumerate_graphs(i, j, v, parity, loop_free=loop_free)) for v in range(hodge_bounds(i, j) + 1))


def test_text_roundtrip():
    g = G("ext=2 int=2 edges=0-2,1-3,2-3,2-3,3-2")
    assert G(g.to_text()) == g
    assert g.complexity == 3
    g.validate()


def test_validate_rejects_bad_graphs():
    with pytest.raises(ValueError):
        G("ext=2 int=1 edges=0-2,1-2").validate()  # bivalent internal vertex
    with pytest.raises(ValueError):
        G("ext=2 int=0 edges=0-1,0-1").validate()
    with pytest.raises(ValueError):
        G("ext=2 int=2 edges=0-2,1-3,2-2,3-3").validate()


def test_enumeration_examples():
    assert len(enumerate_graphs(2, 1, 0, "odd")) == 1
    assert enumerate_graphs(2, 1, 0, "odd")[0].to_text() == "ext=2 int=0 edges=0-1"
    assert enumerate_graphs(2, 1, 0, "even") == []
    assert total_count(2, 3, "odd") == 5
    assert total_count(1, 3, "odd") == 9
    assert total_count(3, 3, "odd") == 0
    assert total_count(4, 3, "odd") == 0


def test_even_loop_free_counts():
    assert total_count(1, 1, "even") == 1
    assert total_count(3, 3, "even", loop_free=True) == 0
    assert total_count(4, 3, "even", loop_free=True) == 2
    assert total_count(3, 2, "even", loop_free=True) == 1


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_graphs(0, 2, 0, "odd")
    with pytest.raises(ValueError):
        enumerate_graphs(5, 2, 0, "odd")
    with pytest.raises(ValueError):
        enumerate_graphs(1, 2, 4, "odd")


def test_enumeration_is_deterministic_and_valid():
    for j in range(1, 4):
        for i in range(1, 2 * j + 1):
            for v, gs in structural_graphs(i, j).items():
                for g in gs:
                    g.validate()
                    assert g.n_ext == i and g.n_int == v and g.complexity == j
                first = [c.to_text() for c in enumerate_graphs(i, j, v, "odd")]
                assert first == [c.to_text() for c in enumerate_graphs(i, j, v, "odd")]


def test_structural_classes_are_distinct_up_to_isomorphism():
    # brute-force isomorphism test between every pair in a cell
    def iso(g, h):
        for pe in permutations(range(g.n_ext)):
            for pin in permutations(range(g.n_ext, g.n_vertices)):
                pi = list(pe) + list(pin)
                mapped = sorted(tuple(sorted((pi[a], pi[b]))) for a, b in g.edges)
                if mapped == sorted(tuple(sorted(e)) for e in h.edges):
                    return True
        return False

    for i, j in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3)]:
        for gs in structural_graphs(i, j).values():
            for a in range(len(gs)):
                for b in range(a + 1, len(gs)):
                    assert not iso(gs[a], gs[b])


def test_canonical_sign_examples():
    edge = G("ext=2 int=0 edges=0-1")
    cls, sign = canonical(edge, "odd")
    assert sign == 1 and not cls.zero
    # swap the endpoints: same graph, reversed edge and transposed externals
    swapped = relabel(edge, [1, 0], [0], [1])
    assert swapped == edge
    assert koszul(edge, [1, 0], [0], [1], True, True) == 1
    double = G("ext=2 int=2 edges=0-2,1-3,2-3,2-3,2-3")
    assert canonical(double, "even")[0].zero
    assert koszul(double, [0, 1, 2, 3], [0, 1, 3, 2, 4], [0] * 5, False, True) == -1


def test_zero_flags_for_local_symmetries():
    tadpole = G("ext=1 int=1 edges=0-1,1-1")
    assert canonical(tadpole, "odd")[0].zero
    assert not canonical(tadpole, "even")[0].zero
    two_loops = G("ext=2 int=1 edges=0-2,1-2,2-2,2-2")
    assert canonical(two_loops, "even")[0].zero


@pytest.mark.parametrize("i,j", [(2, 1), (1, 1), (1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (4, 3)])
@pytest.mark.parametrize("d_odd", [True, False])
@pytest.mark.parametrize("k_odd", [True, False])
def test_zero_flag_and_order_match_brute_force(i, j, d_odd, k_odd):
    pd = Parity.ODD if d_odd else Parity.EVEN
    pk = Parity.ODD if k_odd else Parity.EVEN
    for gs in structural_graphs(i, j).values():
        for g in gs:
            if len(g.edges) > 7:
                continue
            signs = brute_automorphisms(g, d_odd, k_odd)
            assert automorphism_order(g) == len(signs)
            assert canonical(g, pd, pk)[0].zero == (-1 in signs)


def test_automorphism_orders():
    assert automorphism_order(G("ext=2 int=0 edges=0-1")) == 2
    two_leg = enumerate_graphs(2, 3, 4, "odd")
    assert sorted(automorphism_order(c.graph) for c in two_leg) == [4, 4, 8]


def test_canonical_form_is_a_fixed_point():
    for j in range(1, 4):
        for i in range(1, 2 * j + 1):
            for v in range(hodge_bounds(i, j) + 1):
                for pd in Parity:
                    for c in enumerate_graphs(i, j, v, pd):
                        again, sign = canonical(c.graph, pd)
                        assert again.graph == c.graph and sign == 1


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_relabeling_multiplies_by_koszul_sign(data):
    i, j = data.draw(st.sampled_from([(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (4, 3), (3, 4)]))
    pd = data.draw(st.sampled_from(list(Parity)))
    pk = data.draw(st.sampled_from(list(Parity)))
    classes = [c for v in range(hodge_bounds(i, j) + 1) for c in enumerate_graphs(i, j, v, pd, pk)]
    if not classes:
        return
    c = data.draw(st.sampled_from(classes))
    g = c.graph
    pe = data.draw(st.permutations(range(g.n_ext)))
    pin = data.draw(st.permutations(range(g.n_ext, g.n_vertices)))
    pi = list(pe) + list(pin)
    sigma = data.draw(st.permutations(range(len(g.edges))))
    flips = data.draw(st.lists(st.integers(0, 1), min_size=len(g.edges), max_size=len(g.edges)))
    h = relabel(g, pi, sigma, flips)
    cls, sign = canonical(h, pd, pk)
    assert cls.key == c.key
    assert sign == koszul(g, pi, sigma, flips, pd is Parity.ODD, pk is Parity.ODD)


def test_degrees():
    assert str(degree(2, 1, 0)) == "d-3"
    assert str(degree(2, 2, 2)) == "2d-6"
    assert str(degree(1, 2, 2)) == "2d-5"
    assert str(degree(2, 3, 4)) == "3d-9"
    assert str(degree(1, 3, 4)) == "3d-8"
    assert degree(2, 1, 0, k=2).at(5) == 0


def test_differential_on_v0_is_zero():
    c = enumerate_graphs(2, 1, 0, "odd")[0]
    assert differential(c) == {}


def test_expansions_increase_internal_vertices_only():
    g = G("ext=1 int=1 edges=0-1,1-1,1-1")
    for h in expansions(g):
        assert h.n_int == 2 and h.complexity == g.complexity
        h.validate()


def test_splitting_never_creates_loops():
    for j in range(2, 4):
        for i in range(1, 2 * j + 1):
            for gs in structural_graphs(i, j).values():
                for g in gs:
                    if not has_loop(g):
                        assert not any(has_loop(h) for h in expansions(g))


def test_euler_table_examples():
    assert euler_table("odd", 1).entries == {(2, 1): 1}
    assert euler_table("even", 1).entries == {(1, 1): -1}


def test_external_degree_only_matters_mod_two():
    for i, j in [(2, 2), (1, 3), (2, 3), (3, 4)]:
        for pd in Parity:
            for v in range(hodge_bounds(i, j) + 1):
                a = enumerate_graphs(i, j, v, pd, Parity.of(1))
                b = enumerate_graphs(i, j, v, pd, Parity.of(3))
                assert [c.to_text() for c in a] == [c.to_text() for c in b]
