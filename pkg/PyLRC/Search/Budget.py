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

import time
from dataclasses import dataclass
from enum import Enum

from PyLRC import Config
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


@dataclass(frozen=True)
class SearchBudget:
    """Caps on an exact search.

    Parameters
    ----------
    nodes : int
        Maximum number of search nodes.

    seconds : float
        Maximum wall time.

    force : bool
        Run even when the estimated magnitude is above ``Config.SEARCH_GUARD``.
    """

    nodes: int = Config.SEARCH_NODES
    seconds: float = Config.SEARCH_SECONDS
    force: bool = False

    def __post_init__(self):
        if self.nodes <= 0 or self.seconds <= 0:
            raise InputError("Search caps must be positive.")


class SearchStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search.

    ``k`` is the colour count (or number of orders) the result speaks about;
    ``witness`` is set only for FEASIBLE results.
    """

    status: SearchStatus
    k: int
    witness: object = None
    nodes: int = 0
    elapsed: float = 0.0
    estimate: float = None

    @property
    def feasible(self):
        return self.status is SearchStatus.FEASIBLE


class BudgetExhausted(Exception):
    """Raised inside a search when its :class:`SearchBudget` runs out."""


class NodeMeter:
    """Counts search nodes and raises :class:`BudgetExhausted` past the caps."""

    _CLOCK_EVERY = 1024

    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.nodes:
            raise BudgetExhausted
        if self.nodes % self._CLOCK_EVERY == 0 and self.elapsed > self.budget.seconds:
            raise BudgetExhausted

    @property
    def elapsed(self):
        return time.perf_counter() - self.start
