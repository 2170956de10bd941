import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from unittest import TestCase, mock

from PyLRC.CLI import (EXIT_BUDGET, EXIT_INTERNAL, EXIT_IO, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_REFUTED, EXIT_USAGE,
                       main)
from PyLRC.Construct.Gamma import gamma_injective
from PyLRC.Core.Colouring import HypergraphColouring, LocalColouringCollection
from PyLRC.Parsers.Certificates import read_cert
from PyLRC.Parsers.Colourings import read_hgc, read_lrc, write_hgc, write_lrc


class TestCLI(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_construct_writes_artifact_and_manifest(self):
        out = self.path("te.lrc")
        code, stdout, _ = self.run_cli("construct", "--family", "te", "--n", "8", "--out", out)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Ok", stdout)
        with open(out) as f:
            self.assertEqual(f.readline().strip(), "# manifest: te.lrc.manifest.json")
        self.assertEqual(read_lrc(out).n, 8)
        with open(out + ".manifest.json") as f:
            manifest = json.load(f)
        self.assertEqual(manifest["outputs"], [out])
        self.assertEqual(manifest["outcome"], "ok")

    def test_construct_families(self):
        for argv in (("--family", "p3", "--n", "7", "--gamma", "greedy"),
                     ("--family", "tp", "--n", "6"),
                     ("--family", "kw", "--n", "7", "--w", "3"),
                     ("--family", "te", "--n", "6", "--augment", "2")):
            with self.subTest(argv=argv):
                self.assertEqual(self.run_cli("--no-manifest", "construct", *argv)[0], EXIT_OK)

    def test_gamma_file_feeds_construction(self):
        gamma = self.path("gamma.hgc")
        self.assertEqual(self.run_cli("gamma", "--n", "7", "--out", gamma)[0], EXIT_OK)
        self.assertEqual(read_hgc(gamma).r, 3)
        code, _, _ = self.run_cli("construct", "--family", "p3", "--n", "7", "--gamma", gamma)
        self.assertEqual(code, EXIT_OK)

    def test_poor_gamma_is_rejected(self):
        gamma = self.path("constant.hgc")
        write_hgc(gamma, HypergraphColouring.constant(6, 3))
        code, _, stderr = self.run_cli("construct", "--family", "p3", "--n", "6", "--gamma", gamma)
        self.assertEqual(code, EXIT_PRECONDITION)
        self.assertIn("PreconditionError", stderr)

    def test_verify_and_certificate(self):
        colouring, cert = self.path("constant.lrc"), self.path("copy.cert")
        write_lrc(colouring, LocalColouringCollection.constant(5))
        code, _, _ = self.run_cli("verify", "local", "--pattern", "P3", "--colouring", colouring, "--cert-out", cert)
        self.assertEqual(code, EXIT_REFUTED)
        self.assertEqual(read_cert(cert).copy, (0, 1, 2, 3))
        code, stdout, _ = self.run_cli("verify", "cert", "--cert", cert, "--subject", colouring, "--pattern", "P3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Valid: True", stdout)
        code, _, _ = self.run_cli("verify", "local", "--naive", "--pattern", "P3", "--colouring", colouring)
        self.assertEqual(code, EXIT_REFUTED)
        write_lrc(colouring, LocalColouringCollection.injective(5))
        self.assertEqual(self.run_cli("verify", "local", "--pattern", "C4", "--colouring", colouring)[0], EXIT_OK)

    def test_verify_pq(self):
        gamma = self.path("g.hgc")
        write_hgc(gamma, gamma_injective(5, 3))
        self.assertEqual(self.run_cli("verify", "pq", "--colouring", gamma, "--p", "4", "--q", "4")[0], EXIT_OK)
        write_hgc(gamma, HypergraphColouring.constant(5, 3))
        self.assertEqual(self.run_cli("verify", "pq", "--colouring", gamma, "--p", "4", "--q", "2")[0],
                         EXIT_REFUTED)

    def test_attacks(self):
        colouring = self.path("constant.lrc")
        write_lrc(colouring, LocalColouringCollection.constant(11))
        self.assertEqual(self.run_cli("attack", "cycle", "--colouring", colouring)[0], EXIT_OK)
        self.assertEqual(self.run_cli("attack", "nice", "--colouring", colouring, "--pattern", "K14")[0], EXIT_OK)
        self.assertEqual(self.run_cli("attack", "nice", "--colouring", colouring, "--pattern", "C4")[0], EXIT_USAGE)
        code, stdout, _ = self.run_cli("attack", "stats", "--colouring", colouring)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Disjoint pair", stdout)
        self.assertEqual(self.run_cli("attack", "cycle", "--colouring", colouring, "--budget", "1")[0], EXIT_BUDGET)

    def test_search(self):
        code, stdout, _ = self.run_cli("search", "f", "--n", "5", "--r", "2", "--p", "4", "--q", "6")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(stdout.strip().splitlines()[-1], "10")
        self.assertEqual(self.run_cli("search", "g", "--n", "5", "--pattern", "P3", "--k", "1")[0], EXIT_REFUTED)
        self.assertEqual(self.run_cli("search", "g", "--n", "300", "--pattern", "P3", "--k", "3")[0], EXIT_BUDGET)
        self.assertEqual(self.run_cli("search", "g", "--n", "5", "--pattern", "K3", "--k", "5", "--nodes", "3")[0],
                         EXIT_BUDGET)

    def test_classify(self):
        code, stdout, _ = self.run_cli("classify", "pattern", "--pattern", "P3P1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Unknown", stdout)
        code, stdout, _ = self.run_cli("classify", "table", "--max-edges", "4", "--records")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(stdout.strip().splitlines()), 19)

    def test_egy(self):
        gamma, orders, lifted = self.path("g.hgc"), self.path("f.ord"), self.path("lift.hgc")
        self.assertEqual(self.run_cli("gamma", "--n", "7", "--out", gamma)[0], EXIT_OK)
        self.assertEqual(self.run_cli("--seed", "3", "egy", "random", "--n", "7", "--k", "5", "--out", orders)[0],
                         EXIT_OK)
        self.assertEqual(self.run_cli("egy", "lift", "--input", gamma, "--orders", orders, "--out", lifted)[0],
                         EXIT_OK)
        self.assertEqual(read_hgc(lifted).r, 4)
        with open(lifted + ".manifest.json") as f:
            self.assertEqual(sorted(json.load(f)["inputs"]), sorted([gamma, orders]))
        self.assertEqual(self.run_cli("egy", "exact", "--n", "3", "--k", "3")[0], EXIT_OK)

    def test_usage_errors(self):
        self.assertEqual(self.run_cli("verify", "kw", "--colouring", self.path("missing.kwc"))[0], EXIT_IO)
        self.assertEqual(self.run_cli("classify", "pattern", "--pattern", "Petersen")[0], EXIT_USAGE)
        broken = self.path("broken.lrc")
        with open(broken, "wt") as f:
            f.write("LRC1 3 1\n0 0\n")
        self.assertEqual(self.run_cli("verify", "local", "--pattern", "P2", "--colouring", broken)[0], EXIT_PARSE)
        with self.assertRaises(SystemExit) as context, redirect_stderr(io.StringIO()):
            main(["construct", "--family", "nope", "--n", "4"])
        self.assertEqual(context.exception.code, 2)

    def test_unexpected_error_is_internal(self):
        with mock.patch("PyLRC.CLI.construct_te", side_effect=RuntimeError("boom")):
            code, _, stderr = self.run_cli("--no-manifest", "construct", "--family", "te", "--n", "6")
        self.assertEqual(code, EXIT_INTERNAL)
        self.assertIn("Internal error: RuntimeError: boom", stderr)

    def test_same_seed_same_bytes(self):
        runs = (("--seed", "3", "egy", "random", "--n", "7", "--k", "5", "--out"),
                ("construct", "--family", "p3", "--n", "8", "--gamma", "greedy", "--out"),
                ("gamma", "--n", "9", "--out"))
        for number, argv in enumerate(runs):
            contents = []
            for attempt in range(2):
                out = self.path(f"run{number}_{attempt}.txt")
                self.assertEqual(self.run_cli("--no-manifest", *argv, out)[0], EXIT_OK)
                with open(out, "rb") as f:
                    contents.append(f.read())
            self.assertEqual(contents[0], contents[1], argv)
