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

from PyLRC.Core.Certificate import (VARIANTS, CycleWitness, KWViolation, NonRainbowCopy, PoorPSet,
                                    ScramblingViolation)
from PyLRC.Core.Pattern import parse_pattern
from PyLRC.Errors import InputError, ParseError
from PyLRC.Parsers.Text import parse_ints, preamble, read_text, split_header, write_text

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def _ints(values):
    return " ".join(str(int(v)) for v in values)


def _fields(cert):
    if isinstance(cert, NonRainbowCopy):
        return [("pattern", str(cert.pattern)), ("copy", _ints(cert.copy)),
                ("witnesses", " ".join(f"{a}-{b}" for a, b in cert.witnesses))]
    if isinstance(cert, PoorPSet):
        return [("pset", _ints(cert.pset)), ("colours", str(cert.colours)), ("p", str(cert.p)), ("q", str(cert.q))]
    if isinstance(cert, ScramblingViolation):
        return [("elements", _ints(cert.elements))]
    if isinstance(cert, CycleWitness):
        return [("cycle", _ints(cert.cycle))]
    if isinstance(cert, KWViolation):
        return [("path", _ints(cert.path)), ("common", _ints(cert.common))]
    raise InputError(f"Cannot serialize {type(cert).__name__}.")


def dumps_cert(cert, manifest=None, comments=()):
    """``CERT1 <variant>`` followed by ``label: value`` lines."""
    lines = [f"CERT1 {cert.variant}"] + [f"{label}: {value}" for label, value in _fields(cert)]
    return preamble(manifest, comments) + "\n".join(lines) + "\n"


def _labelled(body):
    fields = {}
    for number, line in body:
        label, sep, value = line.partition(":")
        if not sep:
            raise ParseError("Expected 'label: value'", number, 0)
        fields[label.strip()] = (number, value.strip())
    return fields


def _int_list(fields, label):
    if label not in fields:
        raise ParseError(f"Missing '{label}' line")
    number, value = fields[label]
    return tuple(parse_ints(value.split(), number))


def _int(fields, label):
    values = _int_list(fields, label)
    if len(values) != 1:
        raise ParseError(f"'{label}' takes a single integer", fields[label][0])
    return values[0]


def loads_cert(text):
    """Parse a CERT1 document into the matching certificate type.

    Raises
    ------
    ParseError
        On an unknown variant or a missing or malformed line.
    """
    header, body = split_header(text, "CERT1")
    if len(header) != 1 or header[0] not in VARIANTS:
        raise ParseError(f"Unknown certificate variant {' '.join(header)!r}")
    variant = VARIANTS[header[0]]
    fields = _labelled(body)
    if variant is NonRainbowCopy:
        if "pattern" not in fields:
            raise ParseError("Missing 'pattern' line")
        pattern = parse_pattern(fields["pattern"][1])
        number, value = fields.get("witnesses", (None, None))
        if value is None:
            raise ParseError("Missing 'witnesses' line")
        witnesses = []
        for position, token in enumerate(value.split()):
            a, sep, b = token.partition("-")
            if not sep or not a.isdigit() or not b.isdigit():
                raise ParseError(f"Bad witness pair '{token}'", number, position)
            witnesses.append((int(a), int(b)))
        return NonRainbowCopy(pattern, _int_list(fields, "copy"), tuple(witnesses))
    if variant is PoorPSet:
        return PoorPSet(_int_list(fields, "pset"), _int(fields, "colours"), _int(fields, "p"), _int(fields, "q"))
    if variant is ScramblingViolation:
        return ScramblingViolation(_int_list(fields, "elements"))
    if variant is CycleWitness:
        return CycleWitness(_int_list(fields, "cycle"))
    return KWViolation(_int_list(fields, "path"), _int_list(fields, "common") if "common" in fields else ())


def read_cert(path):
    return loads_cert(read_text(path))


def write_cert(path, cert, manifest=None, comments=()):
    write_text(path, dumps_cert(cert, manifest, comments))
