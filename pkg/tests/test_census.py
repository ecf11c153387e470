import numpy as np
import pytest
from hypothesis import given, settings

import digraphlets as dg
from digraphlets import taxonomy
from digraphlets.errors import InputError, InvariantError

from conftest import digraphs, seeded_graph, skeleton_counts

CYCLE_ROW = [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0]
RECIP_ROW = [0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2]


def test_three_cycle_signature(three_cycle):
    sig = dg.signature_matrix(three_cycle)
    assert sig.values.tolist() == [CYCLE_ROW] * 3


def test_three_cycle_raw_types(three_cycle):
    raw = dg.raw_census(three_cycle)
    t = {ty: raw.triangles[0, k] for ty, k in taxonomy.TRIANGLE_INDEX.items()}
    assert t[("+", "-", "-")] == 1 and t[("-", "+", "+")] == 1
    assert sum(t.values()) == 2
    assert not raw.wedges.any()


def test_reciprocal_triangle(reciprocal_triangle):
    raw = dg.raw_census(reciprocal_triangle)
    assert raw.degrees.tolist() == [[0, 0, 2]] * 3
    assert raw.triangles[:, taxonomy.TRIANGLE_INDEX[("o", "o", "o")]].tolist() == [2, 2, 2]
    assert raw.wedge_totals[:, taxonomy.WEDGE_INDEX[("o", "o")]].tolist() == [2, 2, 2]
    assert not raw.wedges.any()
    assert dg.aggregate(raw).values.tolist() == [RECIP_ROW] * 3


def test_directed_path(directed_path):
    raw = dg.raw_census(directed_path)
    w = taxonomy.WEDGE_INDEX
    assert raw.wedges[0, w[("+", "-")]] == 1
    assert raw.wedges[2, w[("-", "+")]] == 1
    assert not raw.wedges[1].any()
    assert raw.degrees[1].tolist() == [1, 1, 0]
    assert not raw.triangles.any()


@settings(deadline=None, max_examples=80)
@given(digraphs(max_n=10))
def test_sum_identities(g):
    raw = dg.raw_census(g)
    assert raw.degrees[:, 0].sum() == raw.degrees[:, 1].sum() == g.num_pure_arcs
    assert raw.degrees[:, 2].sum() == 2 * g.num_recip_pairs
    triangles, wedges = skeleton_counts(g)
    assert raw.triangles.sum() == 6 * triangles
    assert raw.wedges.sum() == 2 * wedges
    assert (raw.wedges >= 0).all()
    assert np.array_equal(
        raw.wedge_totals,
        raw.wedges + raw.triangles.reshape(g.n, 9, 3).sum(axis=2),
    )


def test_aggregate_is_linear():
    g = seeded_graph(1)
    raw = dg.raw_census(g)
    double = dg.aggregate(raw + raw)
    assert np.array_equal(double.values, 2 * dg.aggregate(raw).values)


def test_relabeling_permutes_rows():
    g = seeded_graph(2, lo=8, hi=14)
    rng = np.random.default_rng(0)
    perm = rng.permutation(g.n)
    pairs, codes = g.connected_pairs()
    mapped = perm[pairs]
    lo = mapped.min(axis=1)
    hi = mapped.max(axis=1)
    flipped = mapped[:, 0] > mapped[:, 1]
    codes = codes.copy()
    swap = flipped & (codes < 2)
    codes[swap] = 1 - codes[swap]
    h = dg.DirectedGraph.from_pair_relations(
        g.n, np.column_stack([lo, hi]), codes
    )
    a = dg.signature_matrix(g).values
    b = dg.signature_matrix(h).values
    assert np.array_equal(b[perm], a)


def test_class_tables_cover_types_once():
    wedge_members = [t for c in taxonomy.WEDGE_CLASS_MEMBERS.values() for t in c]
    tri_members = [t for c in taxonomy.TRIANGLE_CLASS_MEMBERS.values() for t in c]
    assert sorted(wedge_members) == sorted(taxonomy.WEDGE_TYPES)
    assert sorted(tri_members) == sorted(taxonomy.TRIANGLE_TYPES)
    assert len(set(wedge_members)) == 9 and len(set(tri_members)) == 27
    assert len(taxonomy.WEDGE_CLASS_MEMBERS) == 6
    assert len(taxonomy.TRIANGLE_CLASS_MEMBERS) == 7


def test_orbit_type_total():
    assert taxonomy.orbit_type_total() == 1695
    assert 1695 == 3 + 2 * 3**2 + 5 * 3**3 + 4 * 3**4 + 2 * 3**5 + 3**6


def test_normalize_blocks(three_cycle):
    norm = dg.normalize(dg.signature_matrix(three_cycle))
    assert np.allclose(norm.values[0, :3], [0.5, 0.5, 0.0])
    assert not norm.values[0, 3:9].any()
    assert norm.values[0, 10] == 1.0
    assert norm.zero_blocks[0].tolist() == [False, True, False]


def test_normalize_zero_vertex_flagged():
    g = dg.DirectedGraph.from_arcs([(0, 1), (1, 2)], n=4)
    norm = dg.normalize(dg.signature_matrix(g))
    assert not norm.values[3].any()
    assert norm.isolated.tolist() == [False, False, False, True]


@settings(deadline=None, max_examples=50)
@given(digraphs(max_n=8))
def test_normalize_block_sums(g):
    for mode in ("balanced", "plain"):
        norm = dg.normalize(dg.signature_matrix(g), mode=mode)
        for sl in (slice(0, 3), slice(3, 9), slice(9, 16)):
            sums = norm.values[:, sl].sum(axis=1)
            assert np.all((np.abs(sums - 1) < 1e-12) | (sums == 0))


def test_normalize_modes_differ():
    # vertex 0 sees one w_path wedge (via 1 to 2) and one w_in wedge
    # (via 1 to 3); plain splits the block 50/50, balanced first divides
    # w_path by its class multiplicity 2 so it gets a 1/3 share
    g = dg.DirectedGraph.from_arcs([(0, 1), (1, 2), (3, 1)], n=4)
    sig = dg.signature_matrix(g)
    plain = dg.normalize(sig, mode="plain")
    balanced = dg.normalize(sig, mode="balanced")
    col = sig.columns.index("w_path")
    assert plain.values[0, col] == pytest.approx(0.5)
    assert balanced.values[0, col] == pytest.approx(1 / 3)
    with pytest.raises(InputError):
        dg.normalize(sig, mode="weird")


def test_triangle_ratio(reciprocal_triangle, directed_path):
    assert dg.triangle_ratio(reciprocal_triangle, 0, "o", "o", "o") == 1.0
    assert dg.triangle_ratio(directed_path, 0, "+", "-", "+") == 0.0
    assert dg.triangle_ratio(directed_path, 0, "-", "-", "-") == 0.0  # L = 0
    raw = dg.raw_census(reciprocal_triangle)
    assert dg.triangle_ratio(reciprocal_triangle, 1, "o", "o", "o", raw=raw) == 1.0
    with pytest.raises(InputError):
        dg.triangle_ratio(directed_path, 0, "x", "-", "+")
    with pytest.raises(InputError):
        dg.triangle_ratio(directed_path, 9, "+", "-", "+")


def test_overflow_guard_trips():
    huge = 1 << 31
    ptr = np.array([0, huge, huge, huge], dtype=np.int64)
    zero = np.array([0, 0, 0, 0], dtype=np.int64)
    g = dg.DirectedGraph(
        3, ("a", "b", "c"),
        ptr, np.empty(0, dtype=np.int64),
        zero, np.empty(0, dtype=np.int64),
        zero, np.empty(0, dtype=np.int64),
    )
    with pytest.raises(InvariantError):
        dg.raw_census(g)


def test_signature_columns_order():
    assert dg.SIGNATURE_COLUMNS == (
        "d_out", "d_in", "d_recip",
        "w_path", "w_in", "w_out", "w_in_plus", "w_out_plus", "w_recip",
        "t_acyclic", "t_cycles", "t_out_plus", "t_cycles_plus",
        "t_in_plus", "t_cycles_2plus", "t_recip",
    )
