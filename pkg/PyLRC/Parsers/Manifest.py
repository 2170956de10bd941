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

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field

from PyLRC import __version__ as package_version

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def file_digest(path):
    """sha256 hex digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


@dataclass
class RunManifest:
    """Record of one CLI run, written next to the artifacts it produced.

    Parameters
    ----------
    command : list of str
        The command line.

    seed : int
        Seed in effect.

    inputs : dict
        Input file path to sha256 digest.

    outputs : list of str
        Artifacts written by the run; each names this manifest in a comment.

    outcome : str
        One-line result summary.

    wall_time : float
        Seconds spent.
    """

    command: list
    seed: int
    inputs: dict = field(default_factory=dict)
    outputs: list = field(default_factory=list)
    outcome: str = ""
    wall_time: float = 0.0
    version: str = package_version

    def add_input(self, path):
        if path and os.path.isfile(path):
            self.inputs[path] = file_digest(path)

    def dumps(self):
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


def manifest_path(artifact):
    """``<artifact>.manifest.json``."""
    return f"{artifact}.manifest.json"


def write_manifest(path, manifest):
    with open(path, "wt") as f:
        f.write(manifest.dumps())


def read_manifest(path):
    with open(path, "rt") as f:
        return RunManifest(**json.load(f))
