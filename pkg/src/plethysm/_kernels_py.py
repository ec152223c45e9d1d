"""Pure-Python implementations of the hot kernels.

The compiled module ``_kernels`` exports the same functions with the same
signatures; :mod:`plethysm.kernels` picks one at import time.
"""

import numpy as np


def rank_mod_p(matrix, p):
    """Rank of an integer matrix modulo the prime ``p`` (input not modified)."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        below = np.nonzero(a[rank + 1:, col])[0] + rank + 1
        if below.size:
            factors = a[below, col][:, None]
            a[below] = (a[below] - factors * a[rank]) % p
        rank += 1
    return rank


def matmul_mod_p(a, b, p):
    """Product of two integer matrices modulo ``p``."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # chunk the inner dimension so partial sums stay far from overflow
    step = max(1, (1 << 62) // max(1, (p - 1) ** 2) - 1)
    step = min(step, 1 << 20)
    for start in range(0, a.shape[1], step):
        out = (out + a[:, start:start + step] @ b[start:start + step, :]) % p
    return out


def wedge_expand_mod_p(vectors, p):
    """Exterior product of sparse vectors, collected in the subset basis.

    ``vectors`` is a list of ``(indices, coefficients)`` pairs (each a list of
    ints). The result maps a bitmask of chosen indices to its coefficient
    mod ``p``, where the basis wedge lists the indices in increasing order.
    Only indices below 63 are supported.
    """
    current = {0: 1}
    for indices, coeffs in vectors:
        nxt = {}
        for mask, c in current.items():
            for idx, a in zip(indices, coeffs):
                bit = 1 << idx
                if mask & bit:
                    continue
                # moving idx leftwards past the larger indices already present
                sign = -1 if bin(mask >> (idx + 1)).count("1") & 1 else 1
                new = mask | bit
                val = (nxt.get(new, 0) + sign * c * a) % p
                if val:
                    nxt[new] = val
                else:
                    nxt.pop(new, None)
        current = nxt
        if not current:
            break
    return current
