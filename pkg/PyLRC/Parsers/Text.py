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

from PyLRC.Errors import ParseError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def split_header(text, magic):
    """Split an artifact into its header fields and its numbered body lines.

    Blank lines and ``#`` comment lines may precede the header; blank lines in
    the body are dropped.

    Returns
    -------
    fields : list of str
        Header tokens after the magic word.

    body : list of (int, str)
        1-based line numbers and stripped body lines.

    Raises
    ------
    ParseError
        If the header is missing or starts with another magic word.
    """
    lines = text.splitlines()
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if tokens[0] != magic:
            raise ParseError(f"Expected a '{magic}' header, found '{tokens[0]}'", number, 0)
        body = [(index, raw.strip()) for index, raw in enumerate(lines[number:], start=number + 1) if raw.strip()]
        return tokens[1:], body
    raise ParseError(f"No '{magic}' header found", len(lines) or None)


def parse_ints(tokens, number):
    """Non-negative integers from a token list, with the failing position."""
    values = []
    for position, token in enumerate(tokens):
        if not token.isdigit():
            raise ParseError(f"'{token}' is not a non-negative integer", number, position)
        values.append(int(token))
    return values


def header_ints(fields, names, number=None):
    if len(fields) != len(names):
        raise ParseError(f"Header needs {len(names)} fields ({', '.join(names)}), got {len(fields)}", number)
    return parse_ints(fields, number)


def preamble(manifest=None, comments=()):
    """Comment lines written before a header."""
    lines = [f"# {comment}" for comment in comments]
    if manifest is not None:
        lines.append(f"# manifest: {manifest}")
    return "".join(line + "\n" for line in lines)


def read_text(path):
    with open(path, "rt") as f:
        return f.read()


def write_text(path, text):
    with open(path, "wt") as f:
        f.write(text)
