"""Construction of the sparsifying dictionaries used in the experiments.

Two built-in families plus file loading:

* ``identity_dct`` — the N x 2N concatenation ``[I | DCT]`` of the identity
  and the orthonormal DCT-II matrix, a union of two orthonormal bases.
* ``gaussian_random`` — a column-normalized N x L Gaussian random matrix.
* ``from_file`` — any CSV matrix; columns are normalized on load so that
  coherence values are scale-free.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import gaussian_matrix, load_matrix_csv, normalize_columns

IDENTITY_DCT = "identity_dct"
GAUSSIAN_RANDOM = "gaussian_random"
FROM_FILE = "from_file"

_KINDS = (IDENTITY_DCT, GAUSSIAN_RANDOM, FROM_FILE)


@dataclass(frozen=True)
class DictionaryKind:
    """Selector for a dictionary family.

    ``variant`` is one of ``identity_dct``, ``gaussian_random``,
    ``from_file``; ``path`` is required for ``from_file`` only.
    """

    variant: str
    path: str | None = None

    def __post_init__(self):
        if self.variant not in _KINDS:
            raise ValueError(f"unknown dictionary kind {self.variant!r}; expected one of {_KINDS}")
        if self.variant == FROM_FILE and not self.path:
            raise ValueError("dictionary kind 'from_file' requires a path")


def dct_matrix(n):
    """Orthonormal DCT-II matrix of size n x n.

    Entry ``(k, j)`` is ``c(k) * cos(pi * (2j+1) * k / (2n))`` with
    ``c(0) = sqrt(1/n)`` and ``c(k>0) = sqrt(2/n)``, so that ``D.T @ D = I``.
    """
    if n < 1:
        raise ValueError(f"DCT size must be positive, got {n}")
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    d = np.sqrt(2.0 / n) * np.cos(np.pi * (2 * j + 1) * k / (2 * n))
    d[0, :] = np.sqrt(1.0 / n)
    return d


def build_dictionary(kind, n, l, seed=0):
    """Build an N x L dictionary of the requested kind.

    Parameters
    ----------
    kind : DictionaryKind or str
      Family selector; a bare string is promoted to ``DictionaryKind(str)``.
    n, l : int
      Signal dimension and number of atoms. ``identity_dct`` requires
      ``l == 2 n``.
    seed : int
      Seed for the ``gaussian_random`` family (ignored otherwise).

    Returns
    -------
    ndarray, shape (n, l)
      Dictionary with unit-norm columns.
    """
    if isinstance(kind, str):
        kind = DictionaryKind(kind)
    if n < 1 or l < 1:
        raise ValueError(f"dictionary dimensions must be positive, got n={n}, l={l}")

    if kind.variant == IDENTITY_DCT:
        if l != 2 * n:
            raise ValueError(f"identity_dct dictionary requires l = 2n, got n={n}, l={l}")
        return np.hstack([np.eye(n), dct_matrix(n)])

    if kind.variant == GAUSSIAN_RANDOM:
        return gaussian_matrix(n, l, seed)

    psi = load_matrix_csv(kind.path)
    if psi.shape != (n, l):
        raise ValueError(
            f"dictionary file {kind.path} has shape {psi.shape}, expected ({n}, {l})"
        )
    return normalize_columns(psi)
