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

import os

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        return default


# Estimated node count above which exact searches refuse to start.
SEARCH_GUARD = 10 ** 7

# Default node and time caps of a SearchBudget.
SEARCH_NODES = 5 * 10 ** 6
SEARCH_SECONDS = 600.0

# Automorphisms are computed by backtracking over vertex permutations.
MAX_PATTERN_VERTICES = 10

# Rows of the copy stream handed to the vectorized verifiers at once.
COPY_BATCH = 65536

# Integers per line in HGC1 files.
HGC_WRAP = 20

DEFAULT_SEED = _env_int("PYLRC_SEED", 0)
DEFAULT_JOBS = max(1, _env_int("PYLRC_JOBS", 1))

# Orders appended by scrambling_random before giving up.
SCRAMBLING_ROUNDS = 64

# Node expansions allowed to the attacks.
ATTACK_BUDGET = 10 ** 6
