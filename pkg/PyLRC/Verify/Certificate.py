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

from PyLRC.Core.Certificate import CycleWitness, KWViolation, NonRainbowCopy, PoorPSet, ScramblingViolation
from PyLRC.Core.Colouring import HypergraphColouring, KWColouring, LocalColouringCollection, OrderFamily
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)

_SUBJECTS = {
        NonRainbowCopy: LocalColouringCollection,
        CycleWitness: LocalColouringCollection,
        PoorPSet: HypergraphColouring,
        ScramblingViolation: OrderFamily,
        KWViolation: KWColouring,
}


def _distinct_vertices(vertices, n):
    return len(set(vertices)) == len(vertices) and all(0 <= v < n for v in vertices)


def _non_rainbow_copy(cert, C, pattern=None):
    H = cert.pattern
    if pattern is not None and pattern != H:
        return False
    copy = cert.copy
    if len(copy) != H.vertex_count or not _distinct_vertices(copy, C.n):
        return False
    if len(cert.witnesses) != len(copy):
        return False
    for u, (a, b) in zip(copy, cert.witnesses):
        if not 0 <= a < b < H.edge_count:
            return False
        (i, j), (x, y) = H.edges[a], H.edges[b]
        if C.colour(u, copy[i], copy[j]) != C.colour(u, copy[x], copy[y]):
            return False
    return True


def _cycle_witness(cert, C, length=None):
    cycle = cert.cycle
    if len(cycle) < 4 or len(cycle) % 2 or not _distinct_vertices(cycle, C.n):
        return False
    if length is not None and len(cycle) != length:
        return False
    size = len(cycle)
    return all(C.colour(u, cycle[i - 1], u) == C.colour(u, u, cycle[(i + 1) % size])
               for i, u in enumerate(cycle))


def _poor_pset(cert, G, p=None, q=None):
    p = cert.p if p is None else p
    q = cert.q if q is None else q
    pset = tuple(cert.pset)
    if len(pset) != p or list(pset) != sorted(set(pset)) or not _distinct_vertices(pset, G.n):
        return False
    colours = {G.colour(subset) for subset in combinations(pset, G.r)}
    return len(colours) == cert.colours and len(colours) < q


def _scrambling_violation(cert, F, k=None):
    elements = tuple(cert.elements)
    if k is not None and len(elements) != k:
        return False
    if not elements or not _distinct_vertices(elements, F.n):
        return False
    ranks = F.ranks
    return not any(all(ranks[j, elements[0]] > ranks[j, x] for x in elements[1:]) for j in range(F.M))


def _kw_violation(cert, K):
    path, common = tuple(cert.path), tuple(cert.common)
    if len(path) != 4 or len(common) != K.w - 2 or not _distinct_vertices(path + common, K.n):
        return False
    sets = [set(path[t:t + 2]) | set(common) for t in range(3)]
    for v in (path[0], path[3]):
        if len({K.colour(v, sorted(s)) for s in sets}) == 3:
            return False
    return True


_CHECKS = {
        NonRainbowCopy: _non_rainbow_copy,
        CycleWitness: _cycle_witness,
        PoorPSet: _poor_pset,
        ScramblingViolation: _scrambling_violation,
        KWViolation: _kw_violation,
}


def validate_certificate(cert, subject, **context):
    """Re-evaluate a certificate against the object it indicts.

    Parameters
    ----------
    cert : Certificate

    subject : object
        The collection, colouring or order family the certificate refutes.

    **context
        Property parameters to hold the certificate to: ``pattern`` for a
        NonRainbowCopy, ``length`` for a CycleWitness, ``p`` and ``q`` for a
        PoorPSet, ``k`` for a ScramblingViolation.

    Returns
    -------
    bool
        True iff every claim of the certificate holds for ``subject``.

    Raises
    ------
    InputError
        If the certificate kind does not match the subject kind.
    """
    kind = type(cert)
    if kind not in _SUBJECTS or not isinstance(subject, _SUBJECTS[kind]):
        raise InputError(f"A {getattr(cert, 'variant', kind.__name__)} certificate cannot indict "
                         f"a {type(subject).__name__}.")
    valid = _CHECKS[kind](cert, subject, **context)
    logger.debug("%s certificate %s", cert.variant, "holds" if valid else "does not hold")
    return valid
