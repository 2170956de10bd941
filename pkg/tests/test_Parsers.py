import json
import os
import tempfile
from unittest import TestCase

import numpy as np

from PyLRC.Construct.Gamma import gamma_greedy, gamma_injective
from PyLRC.Construct.KW import construct_kw
from PyLRC.Core.Certificate import CycleWitness, KWViolation, NonRainbowCopy, PoorPSet, ScramblingViolation
from PyLRC.Core.Colouring import LocalColouringCollection, OrderFamily
from PyLRC.Data import Pattern
from PyLRC.Errors import InputError, ParseError
from PyLRC.Parsers.Certificates import dumps_cert, loads_cert, read_cert, write_cert
from PyLRC.Parsers.Colourings import (dumps_hgc, dumps_lrc, loads_hgc, loads_kwc, loads_lrc, loads_ord, read_hgc,
                                      read_kwc, read_lrc, read_ord, read_pattern, write_hgc, write_kwc, write_lrc,
                                      write_ord)
from PyLRC.Parsers.Manifest import RunManifest, file_digest, manifest_path, read_manifest, write_manifest


class TestColouringFiles(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_files_round_trip(self):
        C = LocalColouringCollection.random(6, 3, np.random.default_rng(0))
        G = gamma_greedy(7, 3, 4, 3)
        F = OrderFamily(4, [[0, 1, 2, 3], [2, 3, 1, 0]])
        K = construct_kw(6, 2, gamma_injective(6, 3))
        write_lrc(self.path("c.lrc"), C, manifest="c.lrc.manifest.json")
        write_hgc(self.path("g.hgc"), G)
        write_ord(self.path("f.ord"), F, comments=["two orders"])
        write_kwc(self.path("k.kwc"), K)
        self.assertEqual(read_lrc(self.path("c.lrc")), C)
        self.assertEqual(read_hgc(self.path("g.hgc")), G)
        self.assertEqual(read_ord(self.path("f.ord")), F)
        self.assertEqual(read_kwc(self.path("k.kwc")), K)

    def test_lrc_layout(self):
        text = dumps_lrc(LocalColouringCollection.constant(3), manifest="run.manifest.json")
        self.assertEqual(text, "# manifest: run.manifest.json\nLRC1 3 1\n0 0 0\n0 0 0\n0 0 0\n")

    def test_hgc_wrapping(self):
        G = gamma_injective(6, 3)
        text = dumps_hgc(G, wrap=7)
        self.assertEqual(len(text.splitlines()), 1 + 3)
        self.assertEqual(loads_hgc(text), G)
        self.assertEqual(loads_hgc(text.replace("\n", "\n\n")), G)

    def test_parse_errors(self):
        cases = [
                (loads_lrc, "LRC1 3\n0 0 0\n", None),
                (loads_lrc, "LRC1 3 1\n0 0 0\n0 0\n0 0 0\n", 3),
                (loads_lrc, "LRC1 3 1\n0 0 0\n0 0 0\n", None),
                (loads_lrc, "LRC1 3 1\n0 0 0\n0 x 0\n0 0 0\n", 3),
                (loads_lrc, "HGC1 3 2 1\n0 0 0\n", 1),
                (loads_hgc, "HGC1 4 3 4\n0 1 2\n", None),
                (loads_ord, "ORD1 3 1\n0 1 1\n", None),
                (loads_kwc, "KWC1 3 4 1\n", None),
        ]
        for loads, text, line in cases:
            with self.subTest(text=text), self.assertRaises(ParseError) as context:
                loads(text)
            if line is not None:
                self.assertEqual(context.exception.line, line)

    def test_colour_out_of_range(self):
        with self.assertRaises(ParseError):
            loads_lrc("LRC1 2 1\n1\n0\n")

    def test_comments_before_header(self):
        C = loads_lrc("# produced elsewhere\n\n# manifest: x.json\nLRC1 2 2\n1\n0\n")
        self.assertEqual(C.colour(0, 0, 1), 1)


class TestPatternSources(TestCase):
    def test_sources(self):
        self.assertEqual(read_pattern("Tp"), Pattern("Tp"))
        self.assertEqual(read_pattern("n=4; edges=0-1,1-2,2-3"), Pattern("P3"))
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "h.txt")
            with open(path, "wt") as f:
                f.write("# a square\nn=4; edges=0-1,1-2,2-3,0-3\n")
            self.assertEqual(read_pattern(path), Pattern("C4"))

    def test_unknown(self):
        with self.assertRaises(InputError):
            read_pattern("Petersen")
        with self.assertRaises(ParseError):
            read_pattern("n=3; edges=0-3")


class TestCertificateFiles(TestCase):
    def test_round_trip(self):
        certificates = [
                NonRainbowCopy(Pattern("P3"), (0, 1, 2, 3), ((0, 1), (0, 1), (1, 2), (0, 2))),
                PoorPSet((0, 1, 2, 3), 1, 4, 2),
                ScramblingViolation((0, 1, 2)),
                CycleWitness((3, 1, 4, 0)),
                KWViolation((0, 1, 2, 3), (5,)),
                KWViolation((0, 1, 2, 3), ()),
        ]
        for certificate in certificates:
            self.assertEqual(loads_cert(dumps_cert(certificate)), certificate)

    def test_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "c.cert")
            write_cert(path, CycleWitness((0, 1, 2, 3)), manifest="c.cert.manifest.json")
            with open(path) as f:
                self.assertEqual(f.read(), "# manifest: c.cert.manifest.json\nCERT1 CycleWitness\ncycle: 0 1 2 3\n")
            self.assertEqual(read_cert(path), CycleWitness((0, 1, 2, 3)))

    def test_errors(self):
        for text in ("CERT1 Nonsense\n", "CERT1 PoorPSet\npset: 0 1 2\n", "CERT1 CycleWitness\ncycle 0 1 2 3\n",
                     "CERT1 NonRainbowCopy\npattern: n=2; edges=0-1\ncopy: 0 1\nwitnesses: 0:1 0-1\n"):
            with self.subTest(text=text), self.assertRaises(ParseError):
                loads_cert(text)


class TestManifest(TestCase):
    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            artifact = os.path.join(directory, "out.lrc")
            with open(artifact, "wt") as f:
                f.write("LRC1 2 1\n0\n0\n")
            manifest = RunManifest(command=["pylrc", "construct"], seed=7)
            manifest.add_input(artifact)
            manifest.add_input(os.path.join(directory, "missing"))
            manifest.outputs.append(artifact)
            path = manifest_path(artifact)
            self.assertTrue(path.endswith("out.lrc.manifest.json"))
            write_manifest(path, manifest)
            self.assertEqual(read_manifest(path), manifest)
            with open(path) as f:
                data = json.load(f)
            self.assertEqual(data["inputs"], {artifact: file_digest(artifact)})
            self.assertEqual(len(file_digest(artifact)), 64)
