"""Independent brute-force reference computations used by the tests.

Nothing here touches the package's own recursion or echelon code.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction

import numpy as np


def compositions_by_enumeration(bound: int, parts: int, total: int) -> int:
    return sum(1 for x in itertools.product(range(bound + 1), repeat=parts) if sum(x) == total)


def fermat_dim_by_enumeration(d: int, nvars: int, a: int) -> int:
    """Standard monomials of (x_i^(d-1)) of degree a, by listing every monomial of degree a."""
    if a < 0:
        return 0
    count = 0
    for x in itertools.product(range(a + 1), repeat=nvars):
        if sum(x) == a and all(e <= d - 2 for e in x):
            count += 1
    return count


def hodge_by_enumeration(d: int, n: int) -> list[int]:
    return [fermat_dim_by_enumeration(d, n + 2, (q + 1) * d - (n + 2)) for q in range(n + 1)]


def euler_characteristic_direct(d: int, n: int) -> int:
    """chi of a degree-d hypersurface in P^{n+1} from its total Chern class.

    c(X) = (1+h)^{n+2} / (1+dh), integrated against [X] = d h; the coefficient
    of h^n is read off a truncated power series.
    """
    num = [Fraction(_binom(n + 2, j)) for j in range(n + 1)]
    inv = [Fraction((-d) ** j) for j in range(n + 1)]
    coeff = sum(num[j] * inv[n - j] for j in range(n + 1))
    return int(coeff * d)


def _binom(a: int, b: int) -> int:
    from math import comb
    return comb(a, b)


def rank_float(rows) -> int:
    return int(np.linalg.matrix_rank(np.array(rows, dtype=float)))


def signature_float(m) -> tuple[int, int]:
    """Signature of a hermitian matrix of complex numbers by eigenvalues."""
    ev = np.linalg.eigvalsh(np.array(m, dtype=complex))
    return int(sum(ev > 1e-9)), int(sum(ev < -1e-9))


def zeta_complex(k: int, power: int = 1) -> complex:
    return cmath.exp(2j * cmath.pi * power / k)


def to_numpy(matrix) -> np.ndarray:
    return np.array([[x.to_complex() for x in row] for row in matrix.to_rows()])


def group_order_by_words(gens: list[np.ndarray], cap: int = 5000) -> int | None:
    """Closure of numeric matrices, deduplicated by rounding; independent of the exact code."""
    def key(m):
        return tuple(np.round(m, 8).flatten().tolist())

    ident = np.eye(gens[0].shape[0], dtype=complex)
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g @ x
                k = key(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return len(seen)
