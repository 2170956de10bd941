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

from PyLRC import Config
from PyLRC.Attack.AuxGraph import build_aux_graph
from PyLRC.Attack.Result import AttackResult, AttackStatus
from PyLRC.Core.Certificate import CycleWitness
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


class _Exhausted(Exception):
    pass


def attack_cycle(C, ell, budget=None):
    """Look for an even cycle that is rainbow in none of its rows.

    Searches the auxiliary graph for a ``2 ell``-cycle whose nodes have pairwise
    distinct first coordinates. Its projection ``u_1 ... u_{2 ell}`` satisfies
    ``f_{u_i}(u_{i-1} u_i) = f_{u_i}(u_i u_{i+1})`` for every ``i``, so the
    collection is not local for the cycle.

    Cycles are grown by depth-first search from each start node, in sorted
    node order, through nodes larger than the start.

    Parameters
    ----------
    C : LocalColouringCollection

    ell : int
        Half the cycle length, at least 2.

    budget : int, optional
        Node expansions allowed; ``Config.ATTACK_BUDGET`` if omitted.

    Returns
    -------
    AttackResult
        With a :class:`CycleWitness` when FOUND.

    Raises
    ------
    InputError
        If ``ell < 2``.
    """
    if ell < 2:
        raise InputError(f"attack_cycle needs ell >= 2, got {ell}.")
    budget = Config.ATTACK_BUDGET if budget is None else budget
    length = 2 * ell
    if length > C.n:
        return AttackResult(AttackStatus.NOT_FOUND, reason=f"no {length}-cycle fits in K_{C.n}")
    aux = build_aux_graph(C)
    adjacency = {node: aux.neighbours(node) for node in aux.graph.nodes}
    expansions = 0

    def grow(path, used):
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise _Exhausted
        last = path[-1]
        if len(path) == length:
            # last has at most one neighbour over the start vertex
            return aux.neighbours_over(last, path[0][0]) == [path[0]]
        for z in adjacency[last]:
            if z > path[0] and z[0] not in used:
                path.append(z)
                used.add(z[0])
                if grow(path, used):
                    return True
                used.discard(z[0])
                path.pop()
        return False

    try:
        for start in sorted(adjacency):
            path = [start]
            if grow(path, {start[0]}):
                cycle = tuple(node[0] for node in path)
                logger.info("attack_cycle: %d-cycle %s after %d expansions", length, cycle, expansions)
                return AttackResult(AttackStatus.FOUND, CycleWitness(cycle), expansions)
    except _Exhausted:
        logger.info("attack_cycle: budget of %d expansions exhausted", budget)
        return AttackResult(AttackStatus.BUDGET_EXHAUSTED, expansions=budget, reason="budget exhausted")
    return AttackResult(AttackStatus.NOT_FOUND, expansions=expansions, reason="search space exhausted")
