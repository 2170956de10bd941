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
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx

from PyLRC.Attack.Nice import is_nice
from PyLRC.Core.Pattern import are_isomorphic, contains_subgraph
from PyLRC.Data import Pattern
from PyLRC.Data.Facts import BOUNDED_CONSTANT, _cited_bounds, even_clique_exponent, even_cycle_exponent
from PyLRC.Data.Patterns import NICE_FOUR_EDGE

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


class GrowthTag(Enum):
    BOUNDED_BY_FIVE = "BoundedByFive"
    UNBOUNDED_SUBPOLYNOMIAL = "UnboundedSubpolynomial"
    POLYNOMIAL = "Polynomial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GrowthClass:
    """Growth of ``g(n, H)`` as far as it is proven.

    ``exponent`` is a proven ``b`` with ``g(n, H) = Omega(n^b)`` when one is
    on record for ``H`` itself; ``notes`` say where each statement comes from.
    """

    tag: GrowthTag
    exponent: float = None
    notes: tuple = field(default_factory=tuple)

    def __str__(self):
        return self.tag.value


def _is_cycle(H):
    return H.edge_count >= 3 and nx.is_connected(H.to_networkx()) and all(
            H.degree(v) == 2 for v in range(H.vertex_count))


def _is_clique(H):
    v = H.vertex_count
    return v >= 2 and H.edge_count == v * (v - 1) // 2


def _polynomial(core):
    if core.edge_count == 4 and are_isomorphic(core, Pattern("C4")):
        bound, note = _cited_bounds["C4"]
        return GrowthClass(GrowthTag.POLYNOMIAL, bound, (note,))
    if core.edge_count == 4 and are_isomorphic(core, Pattern("P4")):
        bound, note = _cited_bounds["P4"]
        return GrowthClass(GrowthTag.POLYNOMIAL, bound, (note,))
    if _is_cycle(core) and core.edge_count % 2 == 0:
        exponent = even_cycle_exponent(core.edge_count)
        return GrowthClass(GrowthTag.POLYNOMIAL, exponent,
                           (f"even cycle: g(n,C{core.edge_count}) = Omega(n^{exponent:.4g})",))
    if _is_clique(core) and core.vertex_count % 2 == 0:
        exponent = even_clique_exponent(core.vertex_count)
        return GrowthClass(GrowthTag.POLYNOMIAL, exponent,
                           (f"even clique: g(n,K{core.vertex_count}) = Omega(n^{exponent:.4g})",))
    if is_nice(core) is not None:
        bound, note = _cited_bounds["nice"]
        return GrowthClass(GrowthTag.POLYNOMIAL, bound, (note,))
    contained = [name for name in ("C4", "P4") if contains_subgraph(core, Pattern(name))]
    return GrowthClass(GrowthTag.POLYNOMIAL, None, tuple(f"contains {name}" for name in contained))


def classify_growth(H):
    """Classify the growth of ``g(n, H)``.

    Isolated vertices are stripped first. Cores with at most three edges are
    bounded by five except the path with three edges; that path, the triangle
    with a pendant edge and the triangle with a disjoint edge grow without
    bound but subpolynomially; the path with three edges plus a disjoint edge
    is open; every other core with four or more edges grows polynomially
    exactly when it is triangle-free or has five or more edges.

    Parameters
    ----------
    H : PatternGraph

    Returns
    -------
    GrowthClass
    """
    core = H.core()
    if core.edge_count <= 3:
        if are_isomorphic(core, Pattern("P3")):
            return GrowthClass(GrowthTag.UNBOUNDED_SUBPOLYNOMIAL, None, ("g(n,P3) = n^o(1)",))
        return GrowthClass(GrowthTag.BOUNDED_BY_FIVE, None, (f"g(n,H) <= {BOUNDED_CONSTANT} for every n",))
    if core.edge_count == 4:
        if are_isomorphic(core, Pattern("P3P1")):
            return GrowthClass(GrowthTag.UNKNOWN, None, ("open: P3 plus a disjoint edge",))
        if are_isomorphic(core, Pattern("Tp")):
            return GrowthClass(GrowthTag.UNBOUNDED_SUBPOLYNOMIAL, None, ("g(n,Tp) = n^o(1)",))
        if are_isomorphic(core, Pattern("Te")):
            return GrowthClass(GrowthTag.UNBOUNDED_SUBPOLYNOMIAL, None, ("g(n,Te) = O(log n)",))
    return _polynomial(core)


def forcing_subgraph(H):
    """Name of a C4, P4 or four-edge nice graph contained in ``H``, or None."""
    core = H.core()
    for name in ("C4", "P4") + NICE_FOUR_EDGE:
        if contains_subgraph(core, Pattern(name)):
            return name
    return None
