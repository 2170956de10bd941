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

import numpy as np

from PyLRC import Config
from PyLRC.Core.Colouring import HypergraphColouring, KWColouring, LocalColouringCollection, OrderFamily
from PyLRC.Core.Indexing import binom, edge_count
from PyLRC.Core.Pattern import parse_pattern
from PyLRC.Data import Pattern, pattern_names
from PyLRC.Errors import InputError, ParseError
from PyLRC.Parsers.Text import header_ints, parse_ints, preamble, read_text, split_header, write_text

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def _rows(body, count, width, what):
    """Exactly ``count`` lines of ``width`` integers each."""
    if width == 0:
        return np.zeros((count, 0), dtype=np.int64)
    if len(body) != count:
        line = body[count][0] if len(body) > count else None
        raise ParseError(f"Expected {count} {what} lines, got {len(body)}", line)
    rows = []
    for number, line in body:
        values = parse_ints(line.split(), number)
        if len(values) != width:
            raise ParseError(f"Expected {width} integers, got {len(values)}", number)
        rows.append(values)
    return np.array(rows, dtype=np.int64).reshape(count, width)


def _build(factory, number, *args):
    try:
        return factory(*args)
    except InputError as e:
        raise ParseError(str(e), number) from e


def dumps_lrc(C, manifest=None, comments=()):
    """``LRC1 <n> <k>`` followed by one line of ``C(n, 2)`` colours per vertex."""
    lines = [f"LRC1 {C.n} {C.k}"]
    lines += [" ".join(str(int(x)) for x in row) for row in C.table]
    return preamble(manifest, comments) + "\n".join(lines) + "\n"


def loads_lrc(text):
    """Parse an LRC1 document into a :class:`LocalColouringCollection`.

    Raises
    ------
    ParseError
        On a malformed header, a wrong number of rows or entries, or colours
        out of range.
    """
    fields, body = split_header(text, "LRC1")
    n, k = header_ints(fields, ("n", "k"))
    table = _rows(body, n, edge_count(n), "row")
    return _build(LocalColouringCollection, None, n, k, table)


def dumps_hgc(G, manifest=None, comments=(), wrap=None):
    """``HGC1 <n> <r> <k>`` followed by the colex-ordered colours, ``wrap`` per line."""
    wrap = wrap or Config.HGC_WRAP
    values = [str(int(x)) for x in G.values]
    lines = [f"HGC1 {G.n} {G.r} {G.k}"]
    lines += [" ".join(values[i:i + wrap]) for i in range(0, len(values), wrap)]
    return preamble(manifest, comments) + "\n".join(lines) + "\n"


def loads_hgc(text):
    """Parse an HGC1 document into a :class:`HypergraphColouring`.

    Line breaks in the body are not significant.

    Raises
    ------
    ParseError
    """
    fields, body = split_header(text, "HGC1")
    n, r, k = header_ints(fields, ("n", "r", "k"))
    values = []
    for number, line in body:
        values.extend(parse_ints(line.split(), number))
    if n < r:
        raise ParseError(f"Uniformity {r} exceeds the ground set size {n}")
    if len(values) != binom(n, r):
        raise ParseError(f"Expected C({n}, {r}) = {binom(n, r)} colours, got {len(values)}")
    return _build(HypergraphColouring, None, n, r, k, np.array(values, dtype=np.int64))


def dumps_ord(F, manifest=None, comments=()):
    """``ORD1 <n> <M>`` followed by one permutation per line, smallest element first."""
    lines = [f"ORD1 {F.n} {F.M}"]
    lines += [" ".join(str(int(x)) for x in row) for row in F.orders]
    return preamble(manifest, comments) + "\n".join(lines) + "\n"


def loads_ord(text):
    fields, body = split_header(text, "ORD1")
    n, M = header_ints(fields, ("n", "M"))
    orders = _rows(body, M, n, "order")
    return _build(OrderFamily, None, n, orders)


def dumps_kwc(K, manifest=None, comments=()):
    """``KWC1 <n> <w> <k>`` followed by one line of ``C(n, w)`` colours per vertex."""
    lines = [f"KWC1 {K.n} {K.w} {K.k}"]
    lines += [" ".join(str(int(x)) for x in row) for row in K.table]
    return preamble(manifest, comments) + "\n".join(lines) + "\n"


def loads_kwc(text):
    fields, body = split_header(text, "KWC1")
    n, w, k = header_ints(fields, ("n", "w", "k"))
    if w > n:
        raise ParseError(f"Weight {w} exceeds the ground set size {n}")
    table = _rows(body, n, binom(n, w), "row")
    return _build(KWColouring, None, n, w, k, table)


def read_lrc(path):
    return loads_lrc(read_text(path))


def write_lrc(path, C, manifest=None, comments=()):
    write_text(path, dumps_lrc(C, manifest, comments))


def read_hgc(path):
    return loads_hgc(read_text(path))


def write_hgc(path, G, manifest=None, comments=()):
    write_text(path, dumps_hgc(G, manifest, comments))


def read_ord(path):
    return loads_ord(read_text(path))


def write_ord(path, F, manifest=None, comments=()):
    write_text(path, dumps_ord(F, manifest, comments))


def read_kwc(path):
    return loads_kwc(read_text(path))


def write_kwc(path, K, manifest=None, comments=()):
    write_text(path, dumps_kwc(K, manifest, comments))


def read_pattern(source):
    """A pattern from a catalogue name, a grammar string or a file holding one.

    Raises
    ------
    InputError
        On an unknown catalogue name.

    ParseError
        If the text does not follow the pattern grammar.
    """
    if source in pattern_names():
        return Pattern(source)
    if os.path.isfile(source):
        lines = [line.strip() for line in read_text(source).splitlines()]
        source = next((line for line in lines if line and not line.startswith("#")), "")
    elif "=" not in source:
        return Pattern(source)
    return parse_pattern(source)
