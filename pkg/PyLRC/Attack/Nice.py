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

import logging
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np
import pandas as pd

from PyLRC import Config
from PyLRC.Attack.Result import AttackResult, AttackStatus
from PyLRC.Core.Indexing import edge_index, edge_list
from PyLRC.Core.Pattern import PatternGraph
from PyLRC.Core.Shards import map_shards
from PyLRC.Errors import InputError
from PyLRC.Verify.Local import non_rainbow_certificate

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)

_PAIR_CHUNK = 4096


def _best_pairs(shard):
    """Best disjoint and best intersecting pair of one chunk of edge pairs."""
    table, edges, pairs = shard
    first, second = pairs[:, 0], pairs[:, 1]
    a, b = edges[first], edges[second]
    equal = table[:, first] == table[:, second]
    vertices = np.arange(table.shape[0])[:, None]
    inside = ((vertices == a[:, 0]) | (vertices == a[:, 1]) | (vertices == b[:, 0]) | (vertices == b[:, 1]))
    counts = (equal & ~inside).sum(axis=0)
    disjoint = ~((a[:, :, None] == b[:, None, :]).any(axis=(1, 2)))
    best = []
    for mask in (disjoint, ~disjoint):
        if not mask.any():
            best.append(None)
            continue
        masked = np.where(mask, counts, -1)
        top = int(masked.argmax())
        best.append((int(masked[top]), int(first[top]), int(second[top])))
    return best


class MonoPairStats:
    """Edge pairs on which the most outside rows agree.

    For a pair of host edges ``(p, q)`` the count is the number of vertices
    ``v`` outside ``p + q`` with ``f_v(p) = f_v(q)``. The best disjoint pair and
    the best intersecting pair are the first maximisers in lex order of edge
    index pairs.

    Parameters
    ----------
    C : LocalColouringCollection
        Host size at least 5.

    jobs : int
        Worker processes for the scan over edge pairs.

    Attributes
    ----------
    disjoint_pair : tuple
        The best disjoint pair ``((x, y), (z, w))``.

    disjoint_count : int

    intersecting_pair : tuple
        The best pair of distinct edges sharing a vertex.

    intersecting_count : int
    """

    def __init__(self, C, jobs=1):
        if C.n < 5:
            raise InputError(f"mono_pair_stats needs n >= 5, got {C.n}.")
        self.C = C
        self.jobs = jobs
        self.disjoint_pair = self.disjoint_count = None
        self.intersecting_pair = self.intersecting_count = None

    def calculate(self):
        edges = edge_list(self.C.n)
        pairs = np.array(list(combinations(range(len(edges)), 2)), dtype=np.int64)
        shards = ((self.C.table, edges, pairs[start:start + _PAIR_CHUNK])
                  for start in range(0, len(pairs), _PAIR_CHUNK))
        best = [None, None]
        for chunk in map_shards(_best_pairs, shards, self.jobs):
            for kind, candidate in enumerate(chunk):
                if candidate is not None and (best[kind] is None or candidate[0] > best[kind][0]):
                    best[kind] = candidate

        def as_edges(candidate):
            return tuple(tuple(int(v) for v in edges[index]) for index in candidate[1:])

        self.disjoint_count = best[0][0]
        self.disjoint_pair = as_edges(best[0])
        self.intersecting_count = best[1][0]
        self.intersecting_pair = as_edges(best[1])
        logger.info("mono_pair_stats: disjoint %s (%d), intersecting %s (%d)", self.disjoint_pair,
                    self.disjoint_count, self.intersecting_pair, self.intersecting_count)
        return self

    def agreeing(self, pair):
        """Vertices outside the pair whose rows give both edges the same colour."""
        (x, y), (z, w) = pair
        p, q = edge_index(min(x, y), max(x, y), self.C.n), edge_index(min(z, w), max(z, w), self.C.n)
        return [v for v in range(self.C.n)
                if v not in (x, y, z, w) and self.C.table[v, p] == self.C.table[v, q]]

    def dataframe(self):
        return pd.DataFrame({"kind": ["disjoint", "intersecting"],
                             "pair": [self.disjoint_pair, self.intersecting_pair],
                             "count": [self.disjoint_count, self.intersecting_count]})

    def __repr__(self):
        return (f"Mono pair statistics (n={self.C.n}, k={self.C.k}):\n"
                f"\tDisjoint pair: {self.disjoint_pair}, {self.disjoint_count} agreeing rows\n"
                f"\tIntersecting pair: {self.intersecting_pair}, {self.intersecting_count} agreeing rows\n")


def mono_pair_stats(C, jobs=1):
    return MonoPairStats(C, jobs).calculate()


@dataclass(frozen=True)
class NiceWitness:
    """Edge indices ``e1, e2, f1, f2`` of ``pattern`` with ``(e1 + e2) & (f1 + f2)`` inside ``f1 & f2``.

    Raises
    ------
    InputError
        If the indices repeat or the containment fails.
    """

    pattern: PatternGraph
    e1: int
    e2: int
    f1: int
    f2: int

    def __post_init__(self):
        indices = (self.e1, self.e2, self.f1, self.f2)
        if len(set(indices)) != 4 or not all(0 <= i < self.pattern.edge_count for i in indices):
            raise InputError(f"Edge indices {indices} are not four distinct edges of {self.pattern}.")
        if not _nice(*(self.pattern.edges[i] for i in indices)):
            raise InputError(f"Edges {self.edges} do not witness niceness.")

    @property
    def edges(self):
        return tuple(self.pattern.edges[i] for i in (self.e1, self.e2, self.f1, self.f2))


def _nice(e1, e2, f1, f2):
    return (set(e1) | set(e2)) & (set(f1) | set(f2)) <= set(f1) & set(f2)


def is_nice(H):
    """First niceness witness of ``H`` over ordered 4-tuples of edge indices, or None."""
    for e1, e2, f1, f2 in permutations(range(H.edge_count), 4):
        if _nice(H.edges[e1], H.edges[e2], H.edges[f1], H.edges[f2]):
            return NiceWitness(H, e1, e2, f1, f2)
    return None


def attack_nice(C, H, W, budget=None, stats=None):
    """Build a copy of a nice pattern that is rainbow in none of its rows.

    ``e1, e2`` go to the best pair ``(p, q)`` of matching type, so every vertex
    of ``A``, the agreeing outside vertices, sees ``e1`` and ``e2`` in one
    colour. ``f1, f2`` then go to two edges carrying the same colours under
    every row of ``p + q``: two disjoint edges inside ``A`` when ``f1, f2`` are
    disjoint, or ``xy, xz`` with ``y, z`` in ``A`` when they share ``x``. Pattern
    vertices left over take the smallest unused vertices of ``A``.

    Parameters
    ----------
    C : LocalColouringCollection

    H : PatternGraph

    W : NiceWitness
        Witness for ``H``.

    budget : int, optional
        Edge label evaluations allowed; ``Config.ATTACK_BUDGET`` if omitted.

    stats : MonoPairStats, optional
        Precomputed statistics for ``C``.

    Returns
    -------
    AttackResult
        With a :class:`NonRainbowCopy` when FOUND.

    Raises
    ------
    InputError
        If ``W`` is not a witness for ``H`` or ``H`` does not fit in the host.
    """
    if W.pattern != H:
        raise InputError("The niceness witness belongs to another pattern.")
    if H.vertex_count > C.n:
        raise InputError(f"Pattern on {H.vertex_count} vertices does not fit in K_{C.n}.")
    budget = Config.ATTACK_BUDGET if budget is None else budget
    stats = stats or mono_pair_stats(C)
    e1, e2, f1, f2 = W.edges
    shared = set(e1) & set(e2)
    pair = stats.intersecting_pair if shared else stats.disjoint_pair
    p, q = pair
    image = {}
    if shared:
        (x,) = shared
        (hx,) = set(p) & set(q)
        image[x] = hx
        image[next(v for v in e1 if v != x)] = next(v for v in p if v != hx)
        image[next(v for v in e2 if v != x)] = next(v for v in q if v != hx)
    else:
        image.update({e1[0]: p[0], e1[1]: p[1], e2[0]: q[0], e2[1]: q[1]})
    anchors = sorted(set(p) | set(q))
    A = stats.agreeing(pair)
    evaluations = 0

    def label(u, v):
        nonlocal evaluations
        evaluations += 1
        index = edge_index(min(u, v), max(u, v), C.n)
        return tuple(int(C.table[a, index]) for a in anchors)

    def exhausted():
        return AttackResult(AttackStatus.BUDGET_EXHAUSTED, expansions=budget, reason="budget exhausted")

    common = set(f1) & set(f2)
    if not common:
        seen = {}
        match = None
        for u, v in combinations(A, 2):
            if evaluations >= budget:
                return exhausted()
            key = label(u, v)
            for g in seen.setdefault(key, []):
                if not {u, v} & set(g):
                    match = (g, (u, v))
                    break
            if match:
                break
            seen[key].append((u, v))
        if match is None:
            return AttackResult(AttackStatus.NOT_FOUND, expansions=evaluations,
                                reason="no two disjoint edges in A share a label")
        image.update({f1[0]: match[0][0], f1[1]: match[0][1], f2[0]: match[1][0], f2[1]: match[1][1]})
    else:
        (x,) = common
        y, z = next(v for v in f1 if v != x), next(v for v in f2 if v != x)
        centres = [image[x]] if x in image else A
        match = None
        for hx in centres:
            seen = {}
            for v in A:
                if v == hx:
                    continue
                if evaluations >= budget:
                    return exhausted()
                key = label(hx, v)
                if key in seen:
                    match = (hx, seen[key], v)
                    break
                seen[key] = v
            if match:
                break
        if match is None:
            return AttackResult(AttackStatus.NOT_FOUND, expansions=evaluations,
                                reason="no two edges at a common vertex of A share a label")
        image.update({x: match[0], y: match[1], z: match[2]})
    free = [v for v in A if v not in image.values()]
    rest = [t for t in range(H.vertex_count) if t not in image]
    if len(free) < len(rest):
        return AttackResult(AttackStatus.NOT_FOUND, expansions=evaluations,
                            reason=f"A has {len(free)} unused vertices, {len(rest)} needed")
    image.update(zip(rest, free))
    copy = tuple(image[t] for t in range(H.vertex_count))
    certificate = non_rainbow_certificate(C, H, copy)
    logger.info("attack_nice: copy %s of %s after %d label evaluations", copy, H, evaluations)
    return AttackResult(AttackStatus.FOUND, certificate, evaluations)
