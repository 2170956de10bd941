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

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

_pattern_data = {
        # paths P_l have l edges
        "P1": {"text": "n=2; edges=0-1", "description": "single edge"},
        "P2": {"text": "n=3; edges=0-1,1-2", "description": "path with 2 edges"},
        "P3": {"text": "n=4; edges=0-1,1-2,2-3", "description": "path with 3 edges"},
        "P4": {"text": "n=5; edges=0-1,1-2,2-3,3-4", "description": "path with 4 edges"},
        "K3": {"text": "n=3; edges=0-1,0-2,1-2", "description": "triangle"},
        "K4": {"text": "n=4; edges=0-1,0-2,0-3,1-2,1-3,2-3", "description": "complete graph on 4 vertices"},
        "C4": {"text": "n=4; edges=0-1,1-2,2-3,0-3", "description": "cycle of length 4"},
        "C6": {"text": "n=6; edges=0-1,1-2,2-3,3-4,4-5,0-5", "description": "cycle of length 6"},
        "Tp": {"text": "n=4; edges=1-2,2-3,1-3,0-1", "description": "triangle with a pendant edge"},
        "Te": {"text": "n=5; edges=0-1,0-2,1-2,3-4", "description": "triangle and a disjoint edge"},
        "P3P1": {"text": "n=6; edges=0-1,1-2,2-3,4-5", "description": "P3 and a disjoint edge"},
        "K14": {"text": "n=5; edges=0-1,0-2,0-3,0-4", "description": "star with 4 leaves"},
        "Chair": {"text": "n=5; edges=0-1,0-2,0-3,3-4", "description": "star with one subdivided edge"},
        "K13P1": {"text": "n=6; edges=0-1,0-2,0-3,4-5", "description": "star with 3 leaves and a disjoint edge"},
        "P2P2": {"text": "n=6; edges=0-1,1-2,3-4,4-5", "description": "two disjoint paths with 2 edges"},
        "P2P1P1": {"text": "n=7; edges=0-1,1-2,3-4,5-6", "description": "path with 2 edges and two disjoint edges"},
        "M4": {"text": "n=8; edges=0-1,2-3,4-5,6-7", "description": "matching with 4 edges"},
}

# The eleven isolated-free graphs with four edges, and the six nice ones among them.
FOUR_EDGE = ("K14", "Chair", "K13P1", "P2P2", "P2P1P1", "M4", "P4", "C4", "Tp", "Te", "P3P1")
NICE_FOUR_EDGE = ("K14", "Chair", "K13P1", "P2P2", "P2P1P1", "M4")

CATALOGUE = ("P2", "P3", "P4", "C4", "K3", "K4", "Tp", "Te", "K14")
