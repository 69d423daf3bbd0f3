"""Coherence metrics and pairwise-coherence distributions.

Two scalar criteria are provided: the mutual coherence of a matrix's
columns, and the cross coherence between the rows of a measurement matrix
and the columns of a dictionary. Both are maxima of absolute normalized
inner products; the distribution builders expose the full multiset of
pairwise values behind those maxima.

Every public value is computed with the same scalar kernel
(``|dot(u, v)| / (||u|| ||v||)`` per pair), so the maximum of a
distribution equals the corresponding scalar coherence bit-for-bit.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix

PAIR_PHI_PHI = "phi-phi"
PAIR_PHI_PSI = "phi-psi"
PAIR_PSI_PSI = "psi-psi"
PAIR_A_A = "a-a"


@dataclass(frozen=True)
class CoherenceDistribution:
    """Multiset of pairwise absolute normalized inner products.

    ``values[i]`` lies in [0, 1] (up to rounding) and ``pair_labels[i]``
    records which kind of vector pair produced it (``phi-phi``,
    ``phi-psi``, ``psi-psi`` or ``a-a``).
    """

    values: np.ndarray
    pair_labels: tuple

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "pair_labels", tuple(self.pair_labels))
        if v.shape != (len(self.pair_labels),):
            raise ValueError(
                f"values/pair_labels length mismatch: {v.shape[0]} vs {len(self.pair_labels)}"
            )
        if v.size and (v.min() < 0.0 or v.max() > 1.0 + 1e-12):
            raise ValueError("coherence values must lie in [0, 1]")

    def __len__(self):
        return self.values.size

    def max_for_label(self, label):
        """Largest value among pairs tagged *label*."""
        mask = np.asarray([lab == label for lab in self.pair_labels])
        if not mask.any():
            raise ValueError(f"no pairs labeled {label!r}")
        return self.values[mask].max()


def _pair_value(u, v, norm_u, norm_v):
    # The one scalar kernel behind every public coherence number.
    return abs(float(np.dot(u, v))) / (norm_u * norm_v)


def _check_no_zero_columns(m, name):
    norms = np.linalg.norm(m, axis=0)
    zero = np.flatnonzero(norms == 0.0)
    if zero.size:
        raise ValueError(f"{name} has a zero column at index {zero[0]}")
    return norms


def mutual_coherence(a):
    """Mutual column coherence: max over ``i != j`` of
    ``|<a_i, a_j>| / (||a_i|| ||a_j||)``.

    Parameters
    ----------
    a : ndarray
      Matrix with at least two columns, none of them zero.

    Returns
    -------
    float in [0, 1]
    """
    a = as_matrix(a)
    ncols = a.shape[1]
    if ncols < 2:
        raise ValueError(f"mutual coherence needs at least 2 columns, got {ncols}")
    norms = _check_no_zero_columns(a, "matrix")
    cols = a.T.copy()
    best = 0.0
    for i in range(ncols - 1):
        for j in range(i + 1, ncols):
            val = _pair_value(cols[i], cols[j], norms[i], norms[j])
            if val > best:
                best = val
    return best


def cross_coherence(phi, psi):
    """Cross coherence: max over rows ``phi_i`` of *phi* and columns
    ``psi_j`` of *psi* of ``|<phi_i, psi_j>| / (||phi_i|| ||psi_j||)``."""
    phi = as_matrix(phi, "phi")
    psi = as_matrix(psi, "psi")
    if phi.shape[1] != psi.shape[0]:
        raise ValueError(
            f"dimension mismatch: phi is {phi.shape[0]}x{phi.shape[1]}, "
            f"psi is {psi.shape[0]}x{psi.shape[1]}"
        )
    row_norms = np.linalg.norm(phi, axis=1)
    zero = np.flatnonzero(row_norms == 0.0)
    if zero.size:
        raise ValueError(f"phi has a zero row at index {zero[0]}")
    col_norms = _check_no_zero_columns(psi, "psi")

    rows = np.ascontiguousarray(phi)
    cols = np.ascontiguousarray(psi.T)
    best = 0.0
    for i in range(rows.shape[0]):
        for j in range(cols.shape[0]):
            val = _pair_value(rows[i], cols[j], row_norms[i], col_norms[j])
            if val > best:
                best = val
    return best


def coherence_distribution_of_a(a):
    """All ``L (L-1) / 2`` pairwise column coherences of the sensing matrix.

    The maximum of the returned values equals :func:`mutual_coherence`
    exactly.
    """
    a = as_matrix(a)
    ncols = a.shape[1]
    if ncols < 2:
        raise ValueError(f"distribution needs at least 2 columns, got {ncols}")
    norms = _check_no_zero_columns(a, "matrix")
    cols = a.T.copy()
    values = np.empty(ncols * (ncols - 1) // 2)
    k = 0
    for i in range(ncols - 1):
        for j in range(i + 1, ncols):
            values[k] = _pair_value(cols[i], cols[j], norms[i], norms[j])
            k += 1
    return CoherenceDistribution(values, (PAIR_A_A,) * values.size)


def reduced_coherence_distribution(phi, psi):
    """Pairwise coherences of the stacked matrix ``[phi^T | psi]`` with the
    dictionary-internal pairs removed.

    The dictionary is fixed, so its intra-column coherences carry no
    information about the measurement matrix; only the ``M (M-1) / 2``
    row/row pairs of *phi* and the ``M L`` row/column cross pairs remain.
    The maximum over the cross-labeled pairs equals :func:`cross_coherence`
    exactly.
    """
    phi = as_matrix(phi, "phi")
    psi = as_matrix(psi, "psi")
    if phi.shape[1] != psi.shape[0]:
        raise ValueError(
            f"dimension mismatch: phi is {phi.shape[0]}x{phi.shape[1]}, "
            f"psi is {psi.shape[0]}x{psi.shape[1]}"
        )
    m, l = phi.shape[0], psi.shape[1]
    row_norms = np.linalg.norm(phi, axis=1)
    zero = np.flatnonzero(row_norms == 0.0)
    if zero.size:
        raise ValueError(f"phi has a zero row at index {zero[0]}")
    col_norms = _check_no_zero_columns(psi, "psi")

    rows = np.ascontiguousarray(phi)
    cols = np.ascontiguousarray(psi.T)
    values = np.empty(m * (m - 1) // 2 + m * l)
    labels = []
    k = 0
    for i in range(m - 1):
        for j in range(i + 1, m):
            values[k] = _pair_value(rows[i], rows[j], row_norms[i], row_norms[j])
            labels.append(PAIR_PHI_PHI)
            k += 1
    for i in range(m):
        for j in range(l):
            values[k] = _pair_value(rows[i], cols[j], row_norms[i], col_norms[j])
            labels.append(PAIR_PHI_PSI)
            k += 1
    return CoherenceDistribution(values, tuple(labels))


def histogram(dist, bin_width):
    """Bin a coherence distribution over [0, 1].

    Parameters
    ----------
    dist : CoherenceDistribution
    bin_width : float in (0, 1]

    Returns
    -------
    list of (bin_center, count)
      Bins partition [0, 1]; counts sum to ``len(dist)``. Values at the
      upper boundary (or a hair above 1 from rounding) land in the last bin.
    """
    if not 0.0 < bin_width <= 1.0:
        raise ValueError(f"bin_width must be in (0, 1], got {bin_width}")
    n_bins = int(np.ceil(1.0 / bin_width - 1e-12))
    idx = np.minimum((dist.values / bin_width).astype(int), n_bins - 1)
    counts = np.bincount(idx, minlength=n_bins)
    return [((i + 0.5) * bin_width, int(counts[i])) for i in range(n_bins)]


def welch_bound(m, l):
    """Lower bound ``sqrt((l - m) / (m (l - 1)))`` on the mutual coherence
    of any m x l matrix with ``l > m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if l <= m:
        raise ValueError(f"welch bound requires l > m, got m={m}, l={l}")
    return float(np.sqrt((l - m) / (m * (l - 1))))
