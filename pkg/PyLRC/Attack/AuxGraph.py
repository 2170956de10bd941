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

import networkx as nx
import numpy as np

from PyLRC.Core.Indexing import edge_list

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


class AuxGraph:
    """Graph on ``V(K_n) x [k]`` recording the colour of each host edge at both ends.

    ``(u, i)`` and ``(v, j)`` are adjacent iff ``u != v``, ``f_u(uv) = i`` and
    ``f_v(uv) = j``. Every host edge gives exactly one edge, so the graph has
    ``C(n, 2)`` edges and ``n k`` vertices.

    Parameters
    ----------
    C : LocalColouringCollection

    Attributes
    ----------
    graph : networkx.Graph
        Nodes are ``(vertex, colour)`` pairs; each edge stores its host edge
        under the ``host`` key.
    """

    def __init__(self, C):
        self.n = C.n
        self.k = C.k
        self.graph = nx.Graph()
        self.graph.add_nodes_from((v, i) for v in range(C.n) for i in range(C.k))
        edges = edge_list(C.n)
        if len(edges):
            index = np.arange(len(edges))
            at_x = C.table[edges[:, 0], index]
            at_y = C.table[edges[:, 1], index]
            self.graph.add_edges_from(((int(x), int(i)), (int(y), int(j)), {"host": (int(x), int(y))})
                                      for (x, y), i, j in zip(edges, at_x, at_y))
        logger.debug("aux graph: %d nodes, %d edges", self.graph.number_of_nodes(), self.graph.number_of_edges())

    @property
    def vertex_count(self):
        return self.graph.number_of_nodes()

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def neighbours(self, node):
        return sorted(self.graph.neighbors(node))

    def neighbours_over(self, node, vertex):
        """Neighbours of ``node`` whose first coordinate is ``vertex`` (at most one)."""
        return [z for z in self.graph.neighbors(node) if z[0] == vertex]

    def __repr__(self):
        return f"AuxGraph(n={self.n}, k={self.k}, vertices={self.vertex_count}, edges={self.edge_count})"


def build_aux_graph(C):
    return AuxGraph(C)
