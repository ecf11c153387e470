"""Correlation, cohort, and clustering analysis of signature matrices.

The graphlet correlation matrix (GCM) of one network is the 16 x 16
matrix of Pearson correlations between signature coordinates across
vertices.  Cohort statistics count, entrywise, how many of a list of
GCMs exceed a significance threshold.  Ward clustering groups vertices
by signature similarity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .errors import InputError

__all__ = [
    "GraphletCorrelationMatrix",
    "CohortStats",
    "Dendrogram",
    "gcm",
    "significance_mask",
    "cohort_stats",
    "ward_cluster",
]


@dataclass(eq=False)
class GraphletCorrelationMatrix:
    """Symmetric correlation matrix over signature columns.

    ``constant`` flags columns that were constant across vertices;
    their correlations are defined as 0 (the diagonal stays 1).
    """

    values: np.ndarray
    columns: tuple[str, ...]
    constant: np.ndarray
    method: str


@dataclass(eq=False)
class CohortStats:
    """Entrywise percentage of cohort members exceeding a threshold."""

    pos_pct: np.ndarray
    neg_pct: np.ndarray
    count: int
    theta: float
    columns: tuple[str, ...]


def _pearson_columns(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pairwise column Pearson r with constant columns defined as 0."""
    constant = (x == x[0]).all(axis=0)
    centered = x - x.mean(axis=0)
    cov = centered.T @ centered
    var = np.diag(cov).copy()
    denom = np.sqrt(np.outer(var, var))
    with np.errstate(invalid="ignore", divide="ignore"):
        r = np.where(denom > 0, cov / denom, 0.0)
    r[constant, :] = 0.0
    r[:, constant] = 0.0
    r = np.clip((r + r.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(r, 1.0)
    return r, constant


def gcm(sig, method: str = "pearson") -> GraphletCorrelationMatrix:
    """Correlate all column pairs of a signature matrix.

    ``sig`` is any object with ``values`` (N x k array) and ``columns``;
    N >= 3 is required for a meaningful correlation.  ``method`` is
    'pearson' or 'spearman' (Pearson on average-tie ranks).
    """
    x = np.asarray(getattr(sig, "values", sig), dtype=np.float64)
    if x.ndim != 2 or len(x) < 3:
        raise InputError("correlation needs at least 3 signature rows")
    if method == "spearman":
        x = rankdata(x, axis=0)
    elif method != "pearson":
        raise InputError(f"unknown correlation method {method!r}")
    r, constant = _pearson_columns(x)
    columns = getattr(sig, "columns", None)
    if columns is None:
        columns = tuple(f"c{k}" for k in range(x.shape[1]))
    return GraphletCorrelationMatrix(r, tuple(columns), constant, method)


def significance_mask(matrix, theta: float = 0.7) -> np.ndarray:
    """Mark entries with r > theta as +1 and r < -theta as -1.

    Inequalities are strict, so r equal to the threshold is not
    significant.  The diagonal is always 0.
    """
    if not 0 < theta < 1:
        raise InputError("theta must lie strictly between 0 and 1")
    values = matrix.values if hasattr(matrix, "values") else np.asarray(matrix)
    mask = np.zeros(values.shape, dtype=np.int64)
    mask[values > theta] = 1
    mask[values < -theta] = -1
    np.fill_diagonal(mask, 0)
    return mask


def cohort_stats(gcms, theta: float = 0.7) -> CohortStats:
    """Entrywise percentages of GCMs beyond +/- theta across a cohort."""
    gcms = list(gcms)
    if not gcms:
        raise InputError("cohort_stats needs at least one matrix")
    if not 0 < theta < 1:
        raise InputError("theta must lie strictly between 0 and 1")
    columns = tuple(gcms[0].columns)
    for g in gcms[1:]:
        if tuple(g.columns) != columns:
            raise InputError("cohort matrices have mismatched columns")
    stack = np.stack([np.asarray(g.values, dtype=np.float64) for g in gcms])
    pos = 100.0 * (stack > theta).mean(axis=0)
    neg = 100.0 * (stack < -theta).mean(axis=0)
    return CohortStats(pos, neg, len(gcms), theta, columns)


@dataclass(eq=False)
class Dendrogram:
    """Agglomerative merge tree in the usual linkage-matrix layout.

    Row s of ``merges`` is (id_a, id_b, height, size): clusters id_a and
    id_b (originals are 0..n-1, the cluster created at step s gets id
    n+s) joined at the given height into a cluster of the given size.
    """

    merges: np.ndarray
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.merges) + 1

    @property
    def heights(self) -> np.ndarray:
        return self.merges[:, 2]

    def leaf_order(self) -> list[int]:
        """Leaves by depth-first left-first traversal from the root."""
        n = self.n
        if n == 1:
            return [0]
        out: list[int] = []
        stack = [2 * n - 2]
        while stack:
            node = stack.pop()
            if node < n:
                out.append(node)
            else:
                a, b = self.merges[node - n, 0], self.merges[node - n, 1]
                stack.append(int(b))
                stack.append(int(a))
        return out

    def cut(self, k: int) -> np.ndarray:
        """Cluster assignment per vertex when exactly k clusters remain.

        Clusters are numbered 0..k-1 in order of their smallest member.
        """
        n = self.n
        if not 1 <= k <= n:
            raise InputError(f"cut needs 1 <= k <= {n}, got {k}")
        parent = np.arange(2 * n - 1)
        for s in range(n - k):
            a, b = int(self.merges[s, 0]), int(self.merges[s, 1])
            parent[a] = parent[b] = n + s
        roots = np.arange(n)
        for _ in range(n):  # path length is bounded by the merge count
            nxt = parent[roots]
            if (nxt == roots).all():
                break
            roots = nxt
        assignment = np.zeros(n, dtype=np.int64)
        for rank, root in enumerate(sorted(set(roots.tolist()), key=lambda r: int(np.argmax(roots == r)))):
            assignment[roots == root] = rank
        return assignment

    def newick(self) -> str:
        """Newick text with branch lengths from merge heights."""
        n = self.n
        height = np.concatenate([np.zeros(n), self.merges[:, 2]])
        texts = list(self.labels)
        for s in range(n - 1):
            a, b = int(self.merges[s, 0]), int(self.merges[s, 1])
            h = self.merges[s, 2]
            la = f"{texts[a]}:{max(h - height[a], 0.0):.9g}"
            lb = f"{texts[b]}:{max(h - height[b], 0.0):.9g}"
            texts.append(f"({la},{lb})")
        return texts[-1] + ";"


def ward_cluster(sig, standardize: bool = True) -> Dendrogram:
    """Agglomerate signature rows under Ward's minimum-variance linkage.

    Distances start as Euclidean between rows (columns z-scored first
    when ``standardize`` is set; constant columns are left at zero) and
    squared distances are updated by the Lance-Williams recurrence

        d(k, ij)^2 = [ (n_i+n_k) d(k,i)^2 + (n_j+n_k) d(k,j)^2
                       - n_k d(i,j)^2 ] / (n_i + n_j + n_k),

    the squared-distance flavor of Ward, so merging two singletons
    happens at exactly their Euclidean distance.  Ties break toward the
    lexicographically smallest (id_a, id_b) pair.
    """
    x = np.asarray(getattr(sig, "values", sig), dtype=np.float64)
    if x.ndim != 2 or len(x) < 2:
        raise InputError("clustering needs at least 2 signature rows")
    labels = getattr(sig, "labels", None)
    labels = tuple(labels) if labels else tuple(str(i) for i in range(len(x)))
    if len(labels) != len(x):
        raise InputError("label count does not match row count")
    if standardize:
        mean = x.mean(axis=0)
        std = x.std(axis=0)
        x = np.divide(x - mean, std, out=np.zeros_like(x), where=std > 0)
    n = len(x)
    total = 2 * n - 1
    sq = np.full((total, total), np.inf)
    gram = x @ x.T
    norms = np.diag(gram)
    sq[:n, :n] = np.maximum(norms[:, None] + norms[None, :] - 2 * gram, 0.0)
    sq[np.diag_indices(total)] = np.inf
    size = np.zeros(total)
    size[:n] = 1.0
    alive = np.zeros(total, dtype=bool)
    alive[:n] = True
    merges = np.zeros((n - 1, 4))
    lower = np.tril_indices(total)
    for step in range(n - 1):
        masked = np.where(alive[:, None] & alive[None, :], sq, np.inf)
        masked[lower] = np.inf
        flat = int(np.argmin(masked))
        a, b = divmod(flat, total)
        new = n + step
        d2 = sq[a, b]
        merges[step] = (a, b, np.sqrt(d2), size[a] + size[b])
        others = alive.copy()
        others[a] = others[b] = False
        k = np.nonzero(others)[0]
        upd = (
            (size[a] + size[k]) * sq[a, k]
            + (size[b] + size[k]) * sq[b, k]
            - size[k] * d2
        ) / (size[a] + size[b] + size[k])
        sq[new, k] = upd
        sq[k, new] = upd
        size[new] = size[a] + size[b]
        alive[a] = alive[b] = False
        alive[new] = True
    return Dendrogram(merges, labels)
