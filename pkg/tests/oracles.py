"""Independent reference implementations used to cross-check the solvers.

Both oracles deliberately avoid the code paths they are checking: the
stationary oracle solves a dense linear system instead of iterating, and
the degree oracle works in exact rational arithmetic straight from the raw
binary matrix.
"""

from fractions import Fraction

import numpy as np


def stationary_oracle(walk_entries: np.ndarray, alpha: float) -> np.ndarray:
    """Stationary row distribution of alpha*walk + (1-alpha)*uniform.

    Solves (G^T - I) x = 0 with the normalization sum(x) = 1 appended in
    place of the last equation. Unique for alpha < 1.
    """
    n = walk_entries.shape[0]
    chain = alpha * walk_entries + (1.0 - alpha) / n
    system = chain.T - np.eye(n)
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    return np.linalg.solve(system, rhs)


def degree_oracle(raw_matrix) -> list | None:
    """Exact-fraction degree weights straight from a raw 0/1 matrix.

    Returns None when the matrix has no endorsements at all.
    """
    n = len(raw_matrix)
    incoming = [Fraction(0)] * n
    for row in raw_matrix:
        endorsements = sum(row)
        if endorsements == 0:
            continue
        share = Fraction(1, int(endorsements))
        for j, cell in enumerate(row):
            if cell:
                incoming[j] += share
    total = sum(incoming)
    if total == 0:
        return None
    return [value / total for value in incoming]


def random_binary_matrix(rng, n: int, density: float = 0.5) -> np.ndarray:
    """Random zero-diagonal 0/1 matrix with at least one endorsement."""
    matrix = (rng.random((n, n)) < density).astype(int)
    np.fill_diagonal(matrix, 0)
    if not matrix.any():
        i = int(rng.integers(n))
        j = (i + 1 + int(rng.integers(n - 1))) % n
        matrix[i, j] = 1
    return matrix
