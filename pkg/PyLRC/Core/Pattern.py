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
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, permutations

import networkx as nx
import numpy as np

from PyLRC import Config
from PyLRC.Core.Indexing import falling_factorial
from PyLRC.Errors import InputError, ParseError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternGraph:
    """The fixed graph H whose copies in ``K_n`` are checked for rainbow rows.

    Parameters
    ----------
    vertex_count : int
        Number of vertices, isolated ones included.

    edges : tuple
        Sorted tuple of sorted vertex pairs.

    Raises
    ------
    InputError
        On self-loops, duplicate edges or endpoints outside ``[0, vertex_count)``.
    """

    vertex_count: int
    edges: tuple

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("A pattern cannot have a negative vertex count.")
        normalized = []
        for edge in self.edges:
            i, j = (int(x) for x in edge)
            if i == j:
                raise InputError(f"Self-loop at vertex {i}.")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise InputError(f"Edge {i}-{j} leaves the vertex range [0, {self.vertex_count}).")
            normalized.append((min(i, j), max(i, j)))
        if len(set(normalized)) != len(normalized):
            raise InputError("Duplicate edge in pattern.")
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def covered_vertices(self):
        return sorted({v for edge in self.edges for v in edge})

    @property
    def isolated_vertices(self):
        covered = set(self.covered_vertices)
        return [v for v in range(self.vertex_count) if v not in covered]

    def degree(self, vertex):
        return sum(vertex in edge for edge in self.edges)

    def core(self):
        """The pattern with its isolated vertices removed, relabelled in order."""
        relabel = {v: i for i, v in enumerate(self.covered_vertices)}
        return PatternGraph(len(relabel), tuple((relabel[i], relabel[j]) for i, j in self.edges))

    def with_isolated(self, count):
        return PatternGraph(self.vertex_count + count, self.edges)

    def has_triangle(self):
        adjacency = self.adjacency()
        return any(adjacency[i] & adjacency[j] for i, j in self.edges)

    def adjacency(self):
        adjacency = [set() for _ in range(self.vertex_count)]
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return adjacency

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph):
        nodes = sorted(graph.nodes())
        relabel = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), tuple((relabel[i], relabel[j]) for i, j in graph.edges()))

    def __str__(self):
        return f"n={self.vertex_count}; edges=" + ",".join(f"{i}-{j}" for i, j in self.edges)


_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*;\s*edges\s*=")
_EDGE = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


def parse_pattern(text):
    """Parse ``"n=<int>; edges=<i>-<j>[,<i>-<j>]*"`` into a :class:`PatternGraph`.

    ``"n=<int>; edges="`` describes an edgeless graph.

    Raises
    ------
    ParseError
        On grammar violations, self-loops, duplicate edges or vertices ``>= n``,
        with the character position of the offending token.
    """
    text = text.strip()
    header = _HEADER.match(text)
    if header is None:
        raise ParseError("Pattern must start with 'n=<int>; edges='", position=0)
    n = int(header.group(1))
    position = header.end()
    body = text[position:]
    edges = []
    seen = set()
    if body.strip():
        offset = position
        for token in body.split(","):
            match = _EDGE.fullmatch(token)
            if match is None:
                raise ParseError(f"Malformed edge '{token.strip()}'", position=offset)
            i, j = int(match.group(1)), int(match.group(2))
            if i == j:
                raise ParseError(f"Self-loop {i}-{j}", position=offset)
            if i >= n or j >= n:
                raise ParseError(f"Vertex of edge {i}-{j} is not below n={n}", position=offset)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ParseError(f"Duplicate edge {i}-{j}", position=offset)
            seen.add(key)
            edges.append(key)
            offset += len(token) + 1
    return PatternGraph(n, tuple(edges))


def _check_size(H):
    if H.vertex_count > Config.MAX_PATTERN_VERTICES:
        raise InputError(f"Patterns are limited to {Config.MAX_PATTERN_VERTICES} vertices, "
                         f"got {H.vertex_count}.")


@lru_cache(maxsize=256)
def automorphism_group(H):
    """All vertex permutations of ``H`` that map its edge set onto itself.

    Permutations are extended one vertex at a time and abandoned as soon as an
    adjacency between assigned vertices is not preserved.

    Returns
    -------
    tuple of tuple
        The group, lexicographically sorted; the identity comes first.

    Raises
    ------
    InputError
        If ``H`` has more than ``Config.MAX_PATTERN_VERTICES`` vertices.
    """
    _check_size(H)
    h = H.vertex_count
    adjacency = H.adjacency()
    degrees = [len(a) for a in adjacency]
    group = []
    image = [-1] * h
    used = [False] * h

    def extend(v):
        if v == h:
            group.append(tuple(image))
            return
        for w in range(h):
            if used[w] or degrees[w] != degrees[v]:
                continue
            if any((u in adjacency[v]) != (image[u] in adjacency[w]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return tuple(sorted(group))


@lru_cache(maxsize=256)
def canonical_arrangements(H):
    """Rank patterns ``pi`` with ``pi <= pi o sigma`` for every automorphism ``sigma``.

    A copy of ``H`` on the sorted vertex set ``S`` is ``i -> S[pi[i]]``; taking
    only these ``pi`` lists each copy exactly once.
    """
    group = automorphism_group(H)
    h = H.vertex_count
    arrangements = [pi for pi in permutations(range(h))
                    if all(tuple(pi[s] for s in sigma) >= pi for sigma in group)]
    result = np.array(arrangements, dtype=np.int64).reshape(len(arrangements), h)
    result.setflags(write=False)
    return result


def copy_count(H, n):
    """``(n)_h / |Aut(H)|``, the number of copies of ``H`` in ``K_n``."""
    return falling_factorial(n, H.vertex_count) // len(automorphism_group(H))


def copy_batches(H, n, batch=None):
    """Stream the copies of ``H`` in ``K_n`` as integer arrays.

    Each yielded array has one row per copy, column ``i`` holding the image of
    pattern vertex ``i``. Vertex sets come in lexicographic order and, inside a
    set, arrangements in the order of :func:`canonical_arrangements`.

    Raises
    ------
    InputError
        If the pattern has more vertices than the host.
    """
    if H.vertex_count > n:
        raise InputError(f"Pattern on {H.vertex_count} vertices does not fit in K_{n}.")
    batch = batch or Config.COPY_BATCH
    arrangements = canonical_arrangements(H)
    h = H.vertex_count
    if h == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    per_set = max(1, batch // max(1, len(arrangements)))
    vertex_sets = combinations(range(n), h)
    while True:
        chunk = list(islice(vertex_sets, per_set))
        if not chunk:
            return
        sets = np.array(chunk, dtype=np.int64).reshape(len(chunk), h)
        yield sets[:, arrangements].reshape(-1, h)


def enumerate_copies(H, n):
    """Yield every copy of ``H`` in ``K_n`` once, as a tuple of host vertices.

    Isolated pattern vertices are mapped injectively like all others, so the
    number of copies is ``(n)_{|V(H)|} / |Aut(H)|``.

    Raises
    ------
    InputError
        If the pattern is larger than the host or than the automorphism limit.
    """
    for block in copy_batches(H, n):
        for row in block:
            yield tuple(int(v) for v in row)


def naive_copies(H, n):
    """Copies found by running over every injection and deduplicating edge images.

    Returns
    -------
    set of frozenset
        Each copy as the set of its image edges together with its image vertices.
    """
    seen = set()
    for image in permutations(range(n), H.vertex_count):
        key = (frozenset(frozenset((image[i], image[j])) for i, j in H.edges), frozenset(image))
        seen.add(key)
    return seen


def are_isomorphic(G, H):
    """Isomorphism test for patterns (isolated vertices count)."""
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if sorted(G.degree(v) for v in range(G.vertex_count)) != sorted(H.degree(v) for v in range(H.vertex_count)):
        return False
    return nx.is_isomorphic(G.to_networkx(), H.to_networkx())


def contains_subgraph(host, pattern):
    """Whether ``pattern`` (isolated vertices ignored) is a subgraph of ``host``."""
    core = pattern.core()
    if core.edge_count > host.edge_count or core.vertex_count > host.vertex_count:
        return False
    matcher = nx.algorithms.isomorphism.GraphMatcher(host.to_networkx(), core.to_networkx())
    return matcher.subgraph_is_monomorphic()


def pattern_edge_pairs(H):
    """All index pairs ``(a, b)``, ``a < b``, of distinct pattern edges."""
    return list(combinations(range(H.edge_count), 2))


def is_group(perms):
    """Closure, identity and inverses of a set of permutations, checked directly."""
    perms = set(perms)
    if not perms:
        return False
    h = len(next(iter(perms)))
    if tuple(range(h)) not in perms:
        return False
    for p in perms:
        inverse = [0] * h
        for i, pi in enumerate(p):
            inverse[pi] = i
        if tuple(inverse) not in perms:
            return False
        for q in perms:
            if tuple(p[q[i]] for i in range(h)) not in perms:
                return False
    return True

