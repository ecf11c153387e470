import xml.etree.ElementTree as ET

import numpy as np

import digraphlets as dg
from digraphlets.heatmap import render_cohort_heatmap, render_correlation_heatmap


def _matrix(values, constant=None):
    values = np.asarray(values, dtype=float)
    k = len(values)
    return dg.GraphletCorrelationMatrix(
        values,
        tuple(f"c{i}" for i in range(k)),
        np.zeros(k, bool) if constant is None else np.asarray(constant),
        "pearson",
    )


def test_correlation_svg_well_formed_and_deterministic():
    rng = np.random.default_rng(0)
    v = rng.uniform(-1, 1, (16, 16))
    v = (v + v.T) / 2
    np.fill_diagonal(v, 1.0)
    m = _matrix(v)
    svg = render_correlation_heatmap(m, theta=0.7)
    assert svg == render_correlation_heatmap(m, theta=0.7)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    rects = [e for e in root.iter() if e.tag.endswith("rect")]
    assert len(rects) == 16 * 16 + 1  # cells + background


def test_correlation_colors():
    v = np.eye(3)
    v[0, 1] = v[1, 0] = 0.5    # below threshold
    v[0, 2] = v[2, 0] = 1.0    # fully positive
    v[1, 2] = v[2, 1] = -1.0   # fully negative
    svg = render_correlation_heatmap(_matrix(v), theta=0.7)
    assert '#b2182b' in svg
    assert '#2166ac' in svg
    assert '#e0e0e0' in svg
    assert '#fff3bf' not in svg


def test_correlation_flagged_cells():
    v = np.eye(3)
    svg = render_correlation_heatmap(_matrix(v, constant=[False, True, False]))
    assert '#fff3bf' in svg


def test_blend_endpoints():
    v = np.eye(2)
    v[0, 1] = v[1, 0] = 0.7000001  # barely significant: near-base color
    svg = render_correlation_heatmap(_matrix(v), theta=0.7)
    assert '#f7f7f7' in svg


def test_cohort_svg():
    pos = np.zeros((4, 4))
    neg = np.zeros((4, 4))
    pos[0, 1] = 100.0
    neg[2, 3] = 50.0
    np.fill_diagonal(pos, 100.0)
    stats = dg.CohortStats(pos, neg, 12, 0.7, tuple(f"c{i}" for i in range(4)))
    svg = render_cohort_heatmap(stats)
    root = ET.fromstring(svg)
    rects = [e for e in root.iter() if e.tag.endswith("rect")]
    assert len(rects) == 2 * 16 + 1
    assert '#b2182b' in svg   # 100% positive cell at full color
    assert '#f7f7f7' in svg   # 0% cells at base color
    assert 'share of 12 matrices' in svg
    assert svg == render_cohort_heatmap(stats)
