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

from dataclasses import dataclass

from PyLRC.Core.Pattern import PatternGraph

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


class Certificate:
    """Checkable witness that a claimed property fails.

    Subclasses are frozen dataclasses; ``variant`` names them in CERT1 files.
    Revalidation lives in :func:`PyLRC.Verify.Certificate.validate_certificate`.
    """

    variant = None


@dataclass(frozen=True)
class NonRainbowCopy(Certificate):
    """A copy of ``pattern`` that is rainbow in none of its own rows.

    Parameters
    ----------
    pattern : PatternGraph
        The pattern the copy is a copy of.

    copy : tuple of int
        Host image of each pattern vertex.

    witnesses : tuple of (int, int)
        For each pattern vertex ``t``, two pattern edge indices whose images
        share a colour under ``f_{copy[t]}``.
    """

    pattern: PatternGraph
    copy: tuple
    witnesses: tuple

    variant = "NonRainbowCopy"


@dataclass(frozen=True)
class PoorPSet(Certificate):
    """A ``p``-set whose ``r``-subsets carry fewer than ``q`` colours."""

    pset: tuple
    colours: int
    p: int
    q: int

    variant = "PoorPSet"


@dataclass(frozen=True)
class ScramblingViolation(Certificate):
    """Distinct elements ``(a_1, ..., a_k)`` with ``a_1`` maximal in no order."""

    elements: tuple

    variant = "ScramblingViolation"


@dataclass(frozen=True)
class CycleWitness(Certificate):
    """Host cycle ``u_1 ... u_2l`` where each ``f_{u_i}`` repeats a colour on the two cycle edges at ``u_i``."""

    cycle: tuple

    variant = "CycleWitness"


@dataclass(frozen=True)
class KWViolation(Certificate):
    """A path ``a-b-c-d`` and a set ``S`` whose three sets ``edge + S`` are rainbow under neither ``f_a`` nor ``f_d``."""

    path: tuple
    common: tuple

    variant = "KWViolation"


VARIANTS = {cls.variant: cls for cls in (NonRainbowCopy, PoorPSet, ScramblingViolation, CycleWitness, KWViolation)}
