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
from itertools import combinations

import networkx as nx
import pandas as pd

from PyLRC.Attack.Nice import is_nice
from PyLRC.Classify.Growth import classify_growth
from PyLRC.Core.Pattern import PatternGraph, are_isomorphic
from PyLRC.Data import Pattern, pattern_names
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)

MAX_TABLE_EDGES = 5


def _fingerprint(H):
    return H.edge_count, H.vertex_count, tuple(sorted(H.degree(v) for v in range(H.vertex_count)))


def _augmentations(H):
    """Graphs with one more edge: between two old vertices, an old and a new one, or two new ones."""
    h = H.vertex_count
    present = set(H.edges)
    for edge in combinations(range(h), 2):
        if edge not in present:
            yield PatternGraph(h, H.edges + (edge,))
    for v in range(h):
        yield PatternGraph(h + 1, H.edges + ((v, h),))
    yield PatternGraph(h + 2, H.edges + ((h, h + 1),))


def isolated_free_classes(max_edges):
    """One representative per isomorphism class of graphs with ``1..max_edges`` edges and no isolated vertex.

    Representatives are the first graph of each class met while extending the
    previous layer in order; classes are told apart by degree sequence and
    then ``networkx.is_isomorphic``.
    """
    layer = [Pattern("P1")]
    classes = list(layer)
    for _ in range(max_edges - 1):
        buckets = {}
        following = []
        for H in layer:
            for candidate in _augmentations(H):
                reps = buckets.setdefault(_fingerprint(candidate), [])
                graph = candidate.to_networkx()
                if any(nx.is_isomorphic(graph, rep.to_networkx()) for rep in reps):
                    continue
                reps.append(candidate)
                following.append(candidate)
        layer = following
        classes.extend(layer)
    return classes


class ClassificationTable:
    """Growth class of every isolated-free graph with at most ``max_edges`` edges.

    Parameters
    ----------
    max_edges : int
        Between 1 and 5.

    Attributes
    ----------
    rows : list of dict
        One row per class with the keys ``edges``, ``vertices``, ``pattern``,
        ``name``, ``growth``, ``exponent`` and ``nice``.

    Raises
    ------
    InputError
        If ``max_edges`` is out of range.
    """

    def __init__(self, max_edges):
        if not 1 <= max_edges <= MAX_TABLE_EDGES:
            raise InputError(f"max_edges must lie in [1, {MAX_TABLE_EDGES}], got {max_edges}.")
        self.max_edges = max_edges
        self.classes = []
        self.rows = []

    def calculate(self):
        self.classes = isolated_free_classes(self.max_edges)
        catalogue = [(name, Pattern(name)) for name in pattern_names()]
        self.rows = []
        for H in self.classes:
            growth = classify_growth(H)
            name = next((label for label, P in catalogue if are_isomorphic(P, H)), "")
            self.rows.append({"edges": H.edge_count,
                              "vertices": H.vertex_count,
                              "pattern": str(H),
                              "name": name,
                              "growth": growth.tag.value,
                              "exponent": growth.exponent,
                              "nice": is_nice(H) is not None})
        logger.info("classification table: %d classes with at most %d edges", len(self.rows), self.max_edges)
        return self

    def dataframe(self):
        return pd.DataFrame(self.rows, columns=["edges", "vertices", "pattern", "name", "growth", "exponent", "nice"])

    def to_text(self):
        """Aligned text table."""
        frame = self.dataframe()
        frame["exponent"] = frame["exponent"].map(lambda b: "" if b is None or pd.isna(b) else f"{b:.4g}")
        return frame.to_string(index=False)

    def to_records(self):
        """Machine-readable lines ``<pattern>\\t<growth>\\t<nice>``, one per class."""
        return [f"{row['pattern']}\t{row['growth']}\t{'nice' if row['nice'] else 'not-nice'}" for row in self.rows]

    def __repr__(self):
        return f"Classification of isolated-free graphs with at most {self.max_edges} edges:\n" + self.to_text()


def classification_table(max_edges):
    return ClassificationTable(max_edges).calculate()
