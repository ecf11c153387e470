"""Threshold pruning of weighted connectivity matrices.

A weighted matrix (e.g. causality coefficients between regions) is
turned into a digraph by keeping arcs whose weight magnitude exceeds a
threshold t.  The returned threshold is the largest one for which both
hold after pruning:

  (i)  at least 99% of the vertices lie in the largest weakly
       connected component, and
  (ii) every vertex keeps total degree (out + in + reciprocal, a
       reciprocal edge counted once) of at least 2 * ln(n).

Both criteria only lose arcs as t grows, so feasibility is monotone and
the maximal threshold is found by binary search over the distinct
weight magnitudes.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csgraph

from .errors import InputError, UnprunableError
from .graph import DirectedGraph


@dataclass(eq=False)
class WeightedMatrix:
    """Square matrix of connectivity coefficients with a zero diagonal."""

    labels: tuple[str, ...]
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)


def weighted_matrix(values, labels=None) -> WeightedMatrix:
    """Validate and wrap a square weight matrix.

    Entries must be finite; a nonzero diagonal is zeroed with a warning
    (self-coupling artifacts are common in estimated connectivity).
    """
    values = np.array(values, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise InputError("weight matrix must be square")
    if not np.isfinite(values).all():
        raise InputError("weight matrix entries must be finite")
    n = values.shape[0]
    diag = np.diag(values)
    if (diag != 0).any():
        warnings.warn("zeroing nonzero diagonal of weight matrix", stacklevel=2)
        np.fill_diagonal(values, 0.0)
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise InputError("label count does not match matrix size")
    return WeightedMatrix(labels, values)


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def parse_weighted_csv(text: str) -> WeightedMatrix:
    """Parse a CSV weight matrix with optional label row/column.

    The first row is taken as column labels when any of its cells is
    non-numeric; likewise the first column for row labels.  Row labels
    win when both are present.
    """
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(
        cell.strip() for cell in row)]
    if not rows:
        raise InputError("weight matrix file is empty")
    # A non-numeric cell after the first marks row 0 as column labels
    # (the corner cell may be anything, including empty).
    has_header = any(not _is_number(c.strip()) and c.strip() != "" for c in rows[0][1:])
    body = rows[1:] if has_header else rows
    if not body:
        raise InputError("weight matrix has a header but no rows")
    has_row_labels = any(not _is_number(r[0].strip()) for r in body)
    labels = None
    if has_row_labels:
        labels = tuple(r[0].strip() for r in body)
        body = [r[1:] for r in body]
    elif has_header:
        header = rows[0][1:] if len(rows[0]) == len(body[0]) + 1 else rows[0]
        labels = tuple(c.strip() for c in header)
    try:
        values = np.array([[float(c) for c in r] for r in body], dtype=np.float64)
    except ValueError as exc:
        raise InputError(f"non-numeric cell in weight matrix: {exc}") from exc
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise InputError(
            f"weight matrix must be square, got {values.shape[0]}x"
            f"{values.shape[1] if values.ndim == 2 else '?'}"
        )
    if labels is not None and len(labels) != values.shape[0]:
        raise InputError("weight matrix labels do not match its size")
    return weighted_matrix(values, labels)


def load_weighted_csv(path) -> WeightedMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_weighted_csv(text)


def _feasible(strength: np.ndarray, t: float, connectivity: float,
              min_degree: float) -> bool:
    arcs = strength > t
    skeleton = arcs | arcs.T
    if (skeleton.sum(axis=1) < min_degree).any():
        return False
    _, comp = csgraph.connected_components(skeleton, directed=False)
    largest = np.bincount(comp).max()
    return largest >= connectivity * len(strength)


def prune_weighted(w: WeightedMatrix, connectivity: float = 0.99,
                   degree_factor: float = 2.0,
                   use_magnitude: bool = True) -> tuple[DirectedGraph, float]:
    """Prune to the largest threshold keeping the matrix well connected.

    Arcs are kept where |w_ij| > t (or w_ij > t when use_magnitude is
    off); the degree floor is degree_factor * ln(n).  Raises
    UnprunableError when even t = 0 violates a criterion.  ``w`` may be
    a WeightedMatrix or a plain square array.
    """
    if not isinstance(w, WeightedMatrix):
        w = weighted_matrix(np.asarray(w, dtype=np.float64))
    if w.n < 3:
        raise InputError("pruning needs at least 3 vertices")
    if not 0 < connectivity <= 1:
        raise InputError("connectivity fraction must be in (0, 1]")
    strength = np.abs(w.values) if use_magnitude else w.values.copy()
    np.fill_diagonal(strength, 0.0)
    min_degree = degree_factor * math.log(w.n)
    candidates = np.concatenate([[0.0], np.unique(strength[strength > 0])])
    if not _feasible(strength, 0.0, connectivity, min_degree):
        raise UnprunableError(
            "no threshold satisfies the connectivity and degree criteria"
        )
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _feasible(strength, candidates[mid], connectivity, min_degree):
            lo = mid
        else:
            hi = mid - 1
    t = float(candidates[lo])
    src, dst = np.nonzero(strength > t)
    graph = DirectedGraph.from_arcs(
        np.column_stack([src, dst]), n=w.n, labels=w.labels
    )
    return graph, t


def skeleton_summary(graph: DirectedGraph) -> dict:
    """Connectivity facts about a graph's undirected skeleton."""
    degrees = np.asarray(
        graph.out_degrees + graph.in_degrees + graph.recip_degrees
    )
    pairs, _ = graph.connected_pairs()
    skeleton = np.zeros((graph.n, graph.n), dtype=bool)
    if len(pairs):
        skeleton[pairs[:, 0], pairs[:, 1]] = True
        skeleton |= skeleton.T
    _, comp = csgraph.connected_components(skeleton, directed=False)
    largest = int(np.bincount(comp).max())
    return {
        "largest_component_fraction": largest / graph.n,
        "min_total_degree": int(degrees.min()),
        "degree_floor": 2.0 * math.log(graph.n),
    }
