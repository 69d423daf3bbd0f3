"""Dense linear algebra primitives and seeded random matrix generation.

All matrices are 2-D ``numpy.ndarray`` of ``float64``. Operations are pure:
inputs are never mutated, so values can be shared freely across threads.

Random generation is frozen to the Philox 4x64 counter-based bit generator
with numpy's ziggurat transform for normal variates; the same seed always
reproduces the same stream.
"""

import hashlib

import numpy as np

#: CSV float format used for matrix persistence (18 significant digits,
#: enough to round-trip float64 exactly).
CSV_FLOAT_FORMAT = "%.17e"


def as_matrix(a, name="matrix"):
    """Coerce *a* to a 2-D float64 array, validating shape and finiteness."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"{name} must have at least one row and column, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def as_vector(b, name="vector"):
    """Coerce *b* to a 1-D float64 array."""
    v = np.asarray(b, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return v


def make_rng(seed):
    """Create the package-wide deterministic generator for a 64-bit seed.

    Parameters
    ----------
    seed : int
      Unsigned 64-bit seed. Identical seeds yield bit-identical streams.

    Returns
    -------
    numpy.random.Generator
      Generator backed by the Philox counter-based bit generator.
    """
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.Philox(seed))


def derive_seed(master_seed, *parts):
    """Derive a child seed from a master seed and a sequence of labels.

    The derivation hashes the ``|``-joined decimal/string form of
    ``(master_seed, *parts)`` with SHA-256 and keeps the first 8 bytes
    (big-endian). It is stable across runs, platforms and processes, so any
    sub-stream (for example a single Monte Carlo trial) can be regenerated
    in isolation.
    """
    key = "|".join(str(p) for p in (int(master_seed), *parts))
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def matmul(a, b):
    """Matrix product ``a @ b`` with explicit shape checking.

    Raises
    ------
    ValueError
      If the inner dimensions disagree; the message names both shapes.
    """
    a = as_matrix(a, "left operand")
    b = as_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch in matmul: {a.shape[0]}x{a.shape[1]} @ "
            f"{b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def column_norms(m):
    """Euclidean norm of every column."""
    return np.linalg.norm(m, axis=0)


def normalize_columns(m):
    """Rescale every column of *m* to unit Euclidean norm.

    Directions are preserved. Idempotent up to rounding.

    Raises
    ------
    ValueError
      If any column is the zero vector; the message names the column index.
    """
    m = as_matrix(m)
    norms = column_norms(m)
    zero = np.flatnonzero(norms == 0.0)
    if zero.size:
        raise ValueError(f"cannot normalize zero column at index {zero[0]}")
    return m / norms


def svd(m):
    """Thin singular value decomposition ``m = U @ diag(s) @ V.T``.

    Returns
    -------
    U : ndarray, shape (rows, k)
    s : ndarray, shape (k,)
      Singular values, non-negative, sorted descending. ``k = min(rows, cols)``.
    V : ndarray, shape (cols, k)

    ``U`` and ``V`` have orthonormal columns.

    Raises
    ------
    RuntimeError
      If the LAPACK iteration fails to converge (falls back to the slower
      ``gesvd`` driver first).
    """
    m = as_matrix(m)
    try:
        u, s, vt = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError:
        import scipy.linalg

        try:
            u, s, vt = scipy.linalg.svd(m, full_matrices=False, lapack_driver="gesvd")
        except Exception as exc:
            raise RuntimeError(
                "svd failed to converge within the LAPACK iteration budget "
                f"for shape {m.shape}"
            ) from exc
    return u, s, vt.T


def least_squares(a, b):
    """Solve ``min_x ||a x - b||_2``; minimum-norm solution if rank-deficient.

    The residual ``a x - b`` is orthogonal to the range of *a*.
    """
    a = as_matrix(a, "coefficient matrix")
    b = as_vector(b, "right-hand side")
    if a.shape[0] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch in least_squares: matrix {a.shape[0]}x{a.shape[1]}"
            f" vs vector of length {b.shape[0]}"
        )
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    return x


def standard_normal_matrix(rows, cols, seed):
    """Raw i.i.d. standard-normal matrix from the seeded Philox stream."""
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    rng = make_rng(seed)
    return rng.standard_normal((rows, cols))


def gaussian_matrix(rows, cols, seed):
    """Column-normalized Gaussian random matrix.

    Entries are drawn i.i.d. standard normal from the Philox stream for
    *seed*, then every column is scaled to unit norm.
    """
    return normalize_columns(standard_normal_matrix(rows, cols, seed))


def save_matrix_csv(path, m):
    """Write a matrix as CSV: one row per line, no header, full precision."""
    m = as_matrix(m)
    np.savetxt(path, m, delimiter=",", fmt=CSV_FLOAT_FORMAT)


def load_matrix_csv(path):
    """Read a matrix written by :func:`save_matrix_csv`."""
    try:
        m = np.loadtxt(path, delimiter=",", ndmin=2)
    except OSError:
        raise
    except Exception as exc:
        raise ValueError(f"could not parse matrix file {path}: {exc}") from exc
    return as_matrix(m, f"matrix from {path}")
