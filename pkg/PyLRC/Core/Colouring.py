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

import numpy as np

from PyLRC.Core.Indexing import binom, edge_count, edge_index, subset_rank
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def _frozen_array(values, shape, k, name):
    array = np.array(values, dtype=np.int64)
    if array.shape != shape:
        raise InputError(f"{name} must have shape {shape}, got {array.shape}.")
    if array.size and (array.min() < 0 or array.max() >= k):
        raise InputError(f"{name} entries must lie in [0, {k}).")
    array.setflags(write=False)
    return array


def dense_codes(rows):
    """Number the distinct rows of a 2-D array in order of first appearance.

    Returns
    -------
    codes : np.ndarray
        ``codes[i]`` is the number of the row ``rows[i]``.

    count : int
        Number of distinct rows.
    """
    rows = np.asarray(rows)
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.int64), 0
    _, first, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    order = np.argsort(first, kind="stable")
    renumber = np.empty_like(order)
    renumber[order] = np.arange(len(order))
    return renumber[inverse].astype(np.int64), len(first)


@dataclass(frozen=True, eq=False)
class LocalColouringCollection:
    """One ``k``-colouring ``f_v`` of ``E(K_n)`` per vertex ``v``.

    Parameters
    ----------
    n : int
        Number of vertices of the host clique.

    k : int
        Number of colours; entries lie in ``[0, k)``.

    table : np.ndarray
        ``n x C(n, 2)`` grid, row ``v`` listing ``f_v`` in lexicographic edge order.
    """

    n: int
    k: int
    table: np.ndarray

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise InputError("A collection needs n >= 1 and k >= 1.")
        object.__setattr__(self, "table",
                           _frozen_array(self.table, (self.n, edge_count(self.n)), self.k, "table"))

    def colour(self, v, i, j):
        """``f_v({i, j})``."""
        i, j = min(i, j), max(i, j)
        return int(self.table[v, edge_index(i, j, self.n)])

    def row(self, v):
        return self.table[v]

    @property
    def used_colours(self):
        return int(np.unique(self.table).size)

    def restrict(self, m):
        """The collection induced on vertices ``0..m-1``."""
        if not 1 <= m <= self.n:
            raise InputError(f"Cannot restrict a collection on {self.n} vertices to {m}.")
        keep = [edge_index(i, j, self.n) for i in range(m) for j in range(i + 1, m)]
        return LocalColouringCollection(m, self.k, self.table[:m][:, keep])

    @classmethod
    def constant(cls, n):
        return cls(n, 1, np.zeros((n, edge_count(n)), dtype=np.int64))

    @classmethod
    def random(cls, n, k, rng):
        """Uniformly random collection drawn from a ``numpy.random.Generator``."""
        return cls(n, k, rng.integers(0, k, size=(n, edge_count(n))))

    @classmethod
    def injective(cls, n):
        """Every row gives every edge its own colour."""
        m = edge_count(n)
        return cls(n, max(1, m), np.tile(np.arange(m), (n, 1)))

    def __eq__(self, other):
        if not isinstance(other, LocalColouringCollection):
            return NotImplemented
        return self.n == other.n and self.k == other.k and np.array_equal(self.table, other.table)

    __hash__ = None

    def __repr__(self):
        return f"LocalColouringCollection(n={self.n}, k={self.k}, used={self.used_colours})"


@dataclass(frozen=True, eq=False)
class HypergraphColouring:
    """A colouring of all ``r``-subsets of ``[n]`` listed in colex order.

    Parameters
    ----------
    n : int
        Ground-set size.

    r : int
        Uniformity, at least 2.

    k : int
        Number of colours.

    values : np.ndarray
        ``C(n, r)`` colours, ``values[subset_rank(S)]`` being the colour of ``S``.
    """

    n: int
    r: int
    k: int
    values: np.ndarray

    def __post_init__(self):
        if self.r < 2 or self.r > self.n:
            raise InputError(f"Uniformity must satisfy 2 <= r <= n, got r={self.r}, n={self.n}.")
        if self.k < 1:
            raise InputError("A hypergraph colouring needs k >= 1.")
        object.__setattr__(self, "values",
                           _frozen_array(self.values, (binom(self.n, self.r),), self.k, "values"))

    def colour(self, subset):
        return int(self.values[subset_rank(sorted(subset), self.n)])

    @property
    def used_colours(self):
        return int(np.unique(self.values).size)

    @classmethod
    def constant(cls, n, r):
        return cls(n, r, 1, np.zeros(binom(n, r), dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, HypergraphColouring):
            return NotImplemented
        return (self.n, self.r, self.k) == (other.n, other.r, other.k) and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return f"HypergraphColouring(n={self.n}, r={self.r}, k={self.k}, used={self.used_colours})"


@dataclass(frozen=True, eq=False)
class OrderFamily:
    """``M`` total orders on ``[n]``.

    Row ``j`` of ``orders`` lists the elements from the smallest to the
    largest under ``<_j``.
    """

    n: int
    orders: np.ndarray

    def __post_init__(self):
        orders = np.array(self.orders, dtype=np.int64)
        if orders.ndim == 1 and orders.size == 0:
            orders = orders.reshape(0, self.n)
        if orders.ndim != 2 or orders.shape[1] != self.n:
            raise InputError(f"Orders must be an M x {self.n} array.")
        target = np.arange(self.n)
        for row in orders:
            if not np.array_equal(np.sort(row), target):
                raise InputError(f"Order {row.tolist()} is not a permutation of [0, {self.n}).")
        orders.setflags(write=False)
        object.__setattr__(self, "orders", orders)

    @property
    def M(self):
        return int(self.orders.shape[0])

    @property
    def ranks(self):
        """``ranks[j, x]`` is the position of ``x`` in order ``j``."""
        ranks = np.empty_like(self.orders)
        rows = np.arange(self.M)[:, None]
        ranks[rows, self.orders] = np.arange(self.n)[None, :]
        return ranks

    def maximum(self, j, subset):
        """The ``<_j``-maximal element of ``subset``."""
        ranks = self.ranks[j]
        return max(subset, key=lambda x: ranks[x])

    def extended(self, order):
        return OrderFamily(self.n, np.vstack([self.orders, np.asarray(order, dtype=np.int64)[None, :]]))

    @classmethod
    def identity(cls, n):
        return cls(n, np.arange(n, dtype=np.int64)[None, :])

    def __eq__(self, other):
        if not isinstance(other, OrderFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.orders, other.orders)

    __hash__ = None

    def __repr__(self):
        return f"OrderFamily(n={self.n}, M={self.M})"


@dataclass(frozen=True, eq=False)
class KWColouring:
    """One colouring ``f_v`` of the ``w``-subsets of ``[n]`` per vertex ``v``.

    Parameters
    ----------
    n : int
        Ground-set size.

    w : int
        Weight of the coloured sets, at least 2.

    k : int
        Number of colours.

    table : np.ndarray
        ``n x C(n, w)`` grid; row ``v`` lists ``f_v`` over the ``w``-subsets in
        colex order.
    """

    n: int
    w: int
    k: int
    table: np.ndarray

    def __post_init__(self):
        if not 2 <= self.w <= self.n:
            raise InputError(f"Weight must satisfy 2 <= w <= n, got w={self.w}, n={self.n}.")
        if self.k < 1:
            raise InputError("A KW colouring needs k >= 1.")
        object.__setattr__(self, "table",
                           _frozen_array(self.table, (self.n, binom(self.n, self.w)), self.k, "table"))

    def colour(self, v, subset):
        """``f_v(subset)``; only sets of weight ``w`` are coloured."""
        if len(subset) != self.w:
            raise InputError(f"Only {self.w}-subsets are coloured, got {tuple(subset)}.")
        return int(self.table[v, subset_rank(sorted(subset), self.n)])

    def __eq__(self, other):
        if not isinstance(other, KWColouring):
            return NotImplemented
        return (self.n, self.w, self.k) == (other.n, other.w, other.k) and np.array_equal(self.table, other.table)

    __hash__ = None

    def __repr__(self):
        return f"KWColouring(n={self.n}, w={self.w}, k={self.k})"
