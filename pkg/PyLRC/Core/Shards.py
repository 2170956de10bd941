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

from multiprocessing import Pool

from tqdm import tqdm

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def map_shards(func, shards, jobs=1):
    """Yield ``func(shard)`` for each shard, in shard order.

    With ``jobs > 1`` the shards are farmed out to a process pool; closing the
    generator early terminates the outstanding work. ``func`` must be a
    module-level function and the shards picklable.
    """
    if jobs is None or jobs <= 1:
        for shard in shards:
            yield func(shard)
        return
    with Pool(jobs) as pool:
        for result in pool.imap(func, shards):
            yield result


def progress_bar(total=None, desc=None, enabled=False):
    """A ``tqdm`` bar on stderr; a disabled bar when ``enabled`` is false."""
    return tqdm(total=total, desc=desc, ncols=80, leave=False, disable=not enabled,
                bar_format="{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})")
