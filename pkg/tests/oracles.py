"""Independent reference computations used only by the tests.

Modules are modelled here as explicit lists of composition factors and the
syzygy is taken as the tail of the projective cover, so nothing below calls
into the package's syzygy/pdim/phi code paths.
"""

from __future__ import annotations

import math
import random
from itertools import product

import numpy as np


def column(kupisch, top, length):
    n = len(kupisch)
    return [(top - 1 + i) % n + 1 for i in range(length)]


def cover_column(kupisch, col):
    return column(kupisch, col[0], kupisch[col[0] - 1])


def syzygy_column(kupisch, col):
    """Kernel of P(top) -> col: the composition factors below col inside the cover."""
    cover = cover_column(kupisch, col)
    assert cover[:len(col)] == col
    return cover[len(col):]


def is_projective_column(kupisch, col):
    return len(col) == kupisch[col[0] - 1]


def as_pair(col):
    return (col[0], len(col)) if col else None


def pdim_bruteforce(kupisch, top, length):
    """Iterate syzygies for sum(c)+1 steps; infinite if two iterates coincide."""
    bound = sum(kupisch) + 1
    col = column(kupisch, top, length)
    history = []
    for k in range(bound + 1):
        if is_projective_column(kupisch, col):
            return k
        if col in history:
            return math.inf
        history.append(col)
        col = syzygy_column(kupisch, col)
    raise AssertionError("syzygy orbit neither terminated nor repeated")


def all_pairs(kupisch):
    return [(t, l) for t in range(1, len(kupisch) + 1) for l in range(1, kupisch[t - 1] + 1)]


def valid_kupisch_bruteforce(n, max_len):
    return [c for c in product(range(2, max_len + 1), repeat=n)
            if all(c[(i + 1) % n] >= c[i] - 1 for i in range(n))]


def group_by_socle(kupisch):
    n = len(kupisch)
    groups = {}
    for i, c in enumerate(kupisch, start=1):
        groups.setdefault((i + c - 2) % n + 1, []).append(i)
    return groups


class RankOracle:
    """phi via explicit integer matrices over the basis of nonprojective indecomposables.

    L is the matrix of [X] -> [Omega X] on K_0; a multiset M becomes the
    matrix G whose columns are the basis vectors of its summands, and the
    rank of L^t G is computed numerically.  Powers of L are eventually
    periodic and the rank never increases, so it is constant once L^t repeats.
    """

    def __init__(self, kupisch):
        self.kupisch = tuple(kupisch)
        self.basis = [p for p in all_pairs(kupisch) if p[1] < kupisch[p[0] - 1]]
        self.index = {p: i for i, p in enumerate(self.basis)}
        k = len(self.basis)
        L = np.zeros((k, k), dtype=np.int64)
        for p, i in self.index.items():
            image = as_pair(syzygy_column(kupisch, column(kupisch, *p)))
            if image in self.index:
                L[self.index[image], i] = 1
        self.L = L

    def _stack(self, multisets):
        k = len(self.basis)
        width = max(1, max(len(ms) for ms in multisets))
        G = np.zeros((len(multisets), k, width), dtype=np.int64)
        for b, ms in enumerate(multisets):
            for j, p in enumerate(ms):
                if p in self.index:
                    G[b, self.index[p], j] = 1
        return G

    def stable_exponent(self):
        """Least t0 with L^t0 = L^(t0+p) for some p >= 1; ranks are constant from t0 on."""
        seen = {}
        power = np.eye(len(self.basis), dtype=np.int64)
        t = 0
        while power.tobytes() not in seen:
            seen[power.tobytes()] = t
            power = self.L @ power
            t += 1
        return seen[power.tobytes()]

    def ranks(self, multisets):
        """Array of shape (len(multisets), t0 + 2) with rank(L^t G) for t = 0 .. t0 + 1."""
        k = len(self.basis)
        if k == 0:
            return np.zeros((len(multisets), 2), dtype=int)
        G = self._stack(multisets).astype(float)
        L = self.L.astype(float)
        powers = [G]
        for _ in range(self.stable_exponent() + 1):
            powers.append(np.matmul(L, powers[-1]))
        stack = np.stack(powers, axis=1)  # (batch, t, k, width)
        # rank(M) = rank(M^T M) over the reals; the Gram matrix is only width x width
        gram = np.matmul(np.swapaxes(stack, -1, -2), stack)
        return np.linalg.matrix_rank(gram)

    def phis(self, multisets):
        out = []
        for row in self.ranks(multisets):
            final = row[-1]
            t = len(row)
            while t > 0 and row[t - 1] == final:
                t -= 1
            out.append(t)
        return out

    def phi(self, multiset):
        return self.phis([multiset])[0]


def random_kupisch(rng: random.Random, n: int, cmax: int):
    """Random valid cyclic series in [2, cmax]^n by a walk with closure rejection."""
    while True:
        c = [rng.randint(2, cmax)]
        for _ in range(n - 1):
            low = max(2, c[-1] - 1)
            c.append(low if rng.random() < 0.4 else rng.randint(low, cmax))
        if c[0] >= c[-1] - 1:
            return c
