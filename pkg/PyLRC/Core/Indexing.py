#!/usr/bin/env python3

# -*- coding: utf-8 -*-

# Copyright (C) 2020  Doguhan Sariturk
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.special import comb

from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def binom(n, r):
    """Exact binomial coefficient, zero outside ``0 <= r <= n``."""
    if r < 0 or n < 0 or r > n:
        return 0
    return int(comb(n, r, exact=True))


def falling_factorial(n, h):
    """``n (n - 1) ... (n - h + 1)``."""
    result = 1
    for i in range(h):
        result *= n - i
    return result


@lru_cache(maxsize=64)
def binomial_table(n, r):
    """Table ``T[x, i] = C(x, i)`` for ``0 <= x <= n`` and ``0 <= i <= r``.

    Used to rank many subsets at once: the colex rank of a sorted row
    ``s_1 < ... < s_r`` is ``sum(T[s_i, i])``.

    Returns
    -------
    np.ndarray
        Read-only int64 array of shape ``(n + 1, r + 1)``.
    """
    x = np.arange(n + 1)[:, None]
    i = np.arange(r + 1)[None, :]
    table = np.rint(comb(x, i, exact=False)).astype(np.int64)
    table.setflags(write=False)
    return table


def edge_count(n):
    return n * (n - 1) // 2


def edge_index(i, j, n):
    """Position of the edge ``{i, j}`` of ``K_n`` in lexicographic order.

    Parameters
    ----------
    i, j : int
        Endpoints with ``0 <= i < j < n``.

    n : int
        Number of vertices of the host clique.

    Returns
    -------
    int
        ``i n - i (i + 1) / 2 + (j - i - 1)``, a bijection onto ``[0, C(n, 2))``.

    Raises
    ------
    InputError
        If ``i == j`` or an endpoint is out of range.
    """
    if not 0 <= i < j < n:
        raise InputError(f"Edge ({i}, {j}) is not a pair 0 <= i < j < {n}.")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def edge_unindex(index, n):
    """Inverse of :func:`edge_index`."""
    if not 0 <= index < edge_count(n):
        raise InputError(f"Edge index {index} out of range for n={n}.")
    i = 0
    row = n - 1
    while index >= row:
        index -= row
        i += 1
        row -= 1
    return i, i + 1 + index


def edge_index_array(a, b, n):
    """Vectorized :func:`edge_index` for arrays of distinct endpoints in any order."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)


@lru_cache(maxsize=64)
def edge_list(n):
    """All edges of ``K_n`` as an ``(C(n, 2), 2)`` array in lexicographic order."""
    if n < 2:
        edges = np.zeros((0, 2), dtype=np.int64)
    else:
        edges = np.array(list(combinations(range(n), 2)), dtype=np.int64)
    edges.setflags(write=False)
    return edges


def _check_subset(subset, n=None):
    subset = tuple(int(s) for s in subset)
    for a, b in zip(subset, subset[1:]):
        if a >= b:
            raise InputError(f"Subset {subset} is not strictly increasing.")
    if subset and subset[0] < 0:
        raise InputError(f"Subset {subset} has a negative entry.")
    if n is not None and subset and subset[-1] >= n:
        raise InputError(f"Subset {subset} has an entry >= {n}.")
    return subset


def subset_rank(subset, n=None):
    """Colex rank of a sorted subset, ``sum C(s_i, i)`` over ``s_1 < ... < s_r``.

    Parameters
    ----------
    subset : sequence of int
        Strictly increasing entries.

    n : int, optional
        Ground-set size; when given, entries must be below it.

    Raises
    ------
    InputError
        If the entries are unsorted, repeated or out of range.
    """
    subset = _check_subset(subset, n)
    return sum(binom(s, i + 1) for i, s in enumerate(subset))


def subset_unrank(rank, r):
    """Inverse of :func:`subset_rank` for subsets of size ``r``."""
    if rank < 0:
        raise InputError(f"Rank {rank} is negative.")
    subset = []
    for i in range(r, 0, -1):
        s = i - 1
        while binom(s + 1, i) <= rank:
            s += 1
        subset.append(s)
        rank -= binom(s, i)
    return tuple(reversed(subset))


def subset_rank_array(subsets, n):
    """Colex ranks of the sorted rows of an integer array."""
    subsets = np.asarray(subsets, dtype=np.int64)
    r = subsets.shape[-1]
    table = binomial_table(n, r)
    ranks = np.zeros(subsets.shape[:-1], dtype=np.int64)
    for i in range(r):
        ranks += table[subsets[..., i], i + 1]
    return ranks


@lru_cache(maxsize=64)
def colex_subsets(n, r):
    """All ``r``-subsets of ``[n]`` as sorted rows, listed in colex order."""
    if r > n or r < 0:
        raise InputError(f"No {r}-subsets of a {n}-set.")
    if r == 0:
        subsets = np.zeros((1, 0), dtype=np.int64)
    else:
        subsets = np.array(list(combinations(range(n), r)), dtype=np.int64)
        subsets = subsets[np.lexsort(subsets.T)]
    subsets.setflags(write=False)
    return subsets


@dataclass(frozen=True)
class BinaryLabelling:
    """Vertices of ``K_n`` labelled by bit sequences of length ``ceil(log2 n)``.

    Vertex ``i`` carries the binary expansion of ``i`` with coordinate 0 the
    least significant bit.
    """

    n: int
    m: int
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.n:
            raise InputError("BinaryLabelling needs exactly one label per vertex.")
        if len(set(self.labels)) != self.n:
            raise InputError("Labels of a BinaryLabelling must be pairwise distinct.")
        if self.m != label_length(self.n):
            raise InputError(f"Label length must be ceil(log2 {self.n}).")

    def __getitem__(self, vertex):
        return self.labels[vertex]


def label_length(n):
    """``ceil(log2 n)`` for ``n >= 1``."""
    if n < 1:
        raise InputError("A labelling needs at least one vertex.")
    return (n - 1).bit_length()


def binary_labelling(n):
    m = label_length(n)
    labels = tuple(tuple((i >> bit) & 1 for bit in range(m)) for i in range(n))
    return BinaryLabelling(n, m, labels)
