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

import argparse
import logging
import os
import sys
import time

from PyLRC import Config, __version__
from PyLRC.Attack.Cycle import attack_cycle
from PyLRC.Attack.Nice import attack_nice, is_nice, mono_pair_stats
from PyLRC.Classify.Growth import classify_growth, forcing_subgraph
from PyLRC.Classify.Table import classification_table
from PyLRC.Construct.Gamma import GammaProvider, gamma_greedy, gamma_injective, resolve_gamma
from PyLRC.Construct.KW import construct_kw
from PyLRC.Construct.Local import augment_for_isolated, construct_p3, construct_te, construct_tp
from PyLRC.Core.Certificate import CycleWitness, KWViolation, NonRainbowCopy, PoorPSet, ScramblingViolation
from PyLRC.Data import Pattern
from PyLRC.EGY.Lift import egy_chain
from PyLRC.EGY.Scrambling import scrambling_exact_min, scrambling_random, verify_scrambling
from PyLRC.Errors import GuardError, InputError, LRCError, ParseError, PreconditionError
from PyLRC.Parsers.Certificates import read_cert, write_cert
from PyLRC.Parsers.Colourings import (read_hgc, read_kwc, read_lrc, read_ord, read_pattern, write_hgc, write_kwc,
                                      write_lrc, write_ord)
from PyLRC.Parsers.Manifest import RunManifest, manifest_path, write_manifest
from PyLRC.Search.Budget import SearchBudget, SearchStatus
from PyLRC.Search.Exact import g_exact_min, g_feasible
from PyLRC.Search.PQ import pq_exact_min, pq_feasible
from PyLRC.Verify.Certificate import validate_certificate
from PyLRC.Verify.KW import verify_kw
from PyLRC.Verify.Local import verify_local, verify_local_naive
from PyLRC.Verify.PQ import verify_pq

__author__ = "Doguhan Sariturk"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4
EXIT_PARSE = 5
EXIT_PRECONDITION = 6
EXIT_INTERNAL = 70

_WRITERS = {"lrc": write_lrc, "hgc": write_hgc, "ord": write_ord, "kwc": write_kwc, "cert": write_cert}

_CERTIFICATE_SUBJECTS = {
        NonRainbowCopy: read_lrc,
        CycleWitness: read_lrc,
        PoorPSet: read_hgc,
        ScramblingViolation: read_ord,
        KWViolation: read_kwc,
}


class Run:
    """Book-keeping of one invocation: the manifest and every artifact written."""

    def __init__(self, args, argv):
        self.args = args
        self.start = time.perf_counter()
        self.manifest = RunManifest(command=["pylrc"] + list(argv), seed=args.seed)
        self.manifest_file = None

    def read(self, reader, path):
        self.manifest.add_input(path)
        return reader(path)

    def write(self, kind, path, obj):
        if self.args.no_manifest:
            _WRITERS[kind](path, obj)
        else:
            if self.manifest_file is None:
                self.manifest_file = manifest_path(path)
            _WRITERS[kind](path, obj, manifest=os.path.basename(self.manifest_file))
        self.manifest.outputs.append(path)
        print(f"\tWritten: {path}")

    def finish(self, outcome):
        self.manifest.outcome = outcome
        self.manifest.wall_time = round(time.perf_counter() - self.start, 3)
        if self.manifest_file is not None:
            write_manifest(self.manifest_file, self.manifest)


def _budget(args):
    return SearchBudget(args.nodes, args.seconds, args.force)


def _report(title, certificate=None, lines=()):
    print(f"{title}:")
    for line in lines:
        print(f"\t{line}")
    if certificate is not None:
        print(f"\tCertificate: {certificate}")


def _save_certificate(run, certificate):
    if certificate is not None and getattr(run.args, "cert_out", None):
        run.write("cert", run.args.cert_out, certificate)


def cmd_construct(run):
    args = run.args
    n = args.n
    if args.family == "te":
        C = construct_te(n)
        pattern = Pattern("Te")
    elif args.family == "kw":
        w = args.w
        gamma = resolve_gamma(_gamma_source(run), n, w + 1, w + 2, w + 1)
        K = construct_kw(n, w, gamma)
        violation = verify_kw(K)
        _report("Construction kw", violation, [f"n = {n}, w = {w}, k = {K.k}",
                                              f"Verification: {'Ok' if violation is None else 'FAILED'}"])
        if args.out:
            run.write("kwc", args.out, K)
        run.finish("ok" if violation is None else "verification failed")
        return EXIT_OK if violation is None else EXIT_REFUTED
    else:
        gamma = resolve_gamma(_gamma_source(run), n, 3, 4, 3)
        C = construct_p3(n, gamma) if args.family == "p3" else construct_tp(n, gamma)
        pattern = Pattern("P3" if args.family == "p3" else "Tp")
    if args.augment:
        C = augment_for_isolated(C, args.augment, range(args.augment))
    certificate = verify_local(C, pattern, jobs=args.jobs, progress=args.progress)
    _report(f"Construction {args.family}", certificate,
            [f"n = {n}, k = {C.k}, used colours = {C.used_colours}",
             f"Verification against {pattern}: {'Ok' if certificate is None else 'FAILED'}"])
    if args.out:
        run.write("lrc", args.out, C)
    run.finish("ok" if certificate is None else "verification failed")
    return EXIT_OK if certificate is None else EXIT_REFUTED


def _gamma_source(run):
    source = run.args.gamma
    if source not in (GammaProvider.INJECTIVE.value, GammaProvider.GREEDY.value):
        run.manifest.add_input(source)
    return source


def cmd_gamma(run):
    args = run.args
    if args.kind == GammaProvider.INJECTIVE.value:
        G = gamma_injective(args.n, args.r)
    else:
        G = gamma_greedy(args.n, args.r, args.p, args.q)
    _report(f"Gamma {args.kind}", None, [f"n = {G.n}, r = {G.r}, k = {G.k}"])
    if args.out:
        run.write("hgc", args.out, G)
    run.finish(f"{G.k} colours")
    return EXIT_OK


def _verdict(run, title, certificate, lines=()):
    _report(title, certificate, list(lines) + [f"Result: {'Ok' if certificate is None else 'refuted'}"])
    _save_certificate(run, certificate)
    run.finish("ok" if certificate is None else "refuted")
    return EXIT_OK if certificate is None else EXIT_REFUTED


def cmd_verify(run):
    args = run.args
    if args.check == "local":
        C = run.read(read_lrc, args.colouring)
        H = read_pattern(args.pattern)
        certificate = verify_local_naive(C, H) if args.naive else verify_local(C, H, args.jobs, args.progress)
        return _verdict(run, f"Locality for {H}", certificate, [f"n = {C.n}, k = {C.k}"])
    if args.check == "pq":
        G = run.read(read_hgc, args.colouring)
        return _verdict(run, f"({args.p},{args.q})-property", verify_pq(G, args.p, args.q, args.jobs),
                        [f"n = {G.n}, r = {G.r}, k = {G.k}"])
    if args.check == "scrambling":
        F = run.read(read_ord, args.orders)
        return _verdict(run, f"{args.k}-scrambling", verify_scrambling(F, args.k), [f"n = {F.n}, M = {F.M}"])
    if args.check == "kw":
        K = run.read(read_kwc, args.colouring)
        return _verdict(run, "Bounded-weight locality", verify_kw(K), [f"n = {K.n}, w = {K.w}, k = {K.k}"])
    certificate = run.read(read_cert, args.cert)
    subject = run.read(_CERTIFICATE_SUBJECTS[type(certificate)], args.subject)
    context = {}
    if args.pattern and isinstance(certificate, NonRainbowCopy):
        context["pattern"] = read_pattern(args.pattern)
    for key in ("p", "q", "k", "length"):
        if getattr(args, key) is not None:
            context[key] = getattr(args, key)
    valid = validate_certificate(certificate, subject, **context)
    _report(f"Certificate {certificate.variant}", None, [f"Valid: {valid}"])
    run.finish("valid" if valid else "invalid")
    return EXIT_OK if valid else EXIT_REFUTED


def _attack_exit(run, result):
    _report(f"Attack {run.args.attack}", result.certificate,
            [f"Status: {result.status.value}", f"Expansions: {result.expansions}"]
            + ([f"Reason: {result.reason}"] if result.reason else []))
    _save_certificate(run, result.certificate)
    run.finish(result.status.value)
    if result.found:
        return EXIT_OK
    return EXIT_BUDGET if result.reason == "budget exhausted" else EXIT_REFUTED


def cmd_attack(run):
    args = run.args
    C = run.read(read_lrc, args.colouring)
    if args.attack == "stats":
        stats = mono_pair_stats(C, args.jobs)
        print(stats)
        run.finish("ok")
        return EXIT_OK
    if args.attack == "cycle":
        return _attack_exit(run, attack_cycle(C, args.ell, args.budget))
    H = read_pattern(args.pattern)
    witness = is_nice(H)
    if witness is None:
        raise InputError(f"{H} is not nice.")
    return _attack_exit(run, attack_nice(C, H, witness, args.budget))


def cmd_search(run):
    args = run.args
    budget = _budget(args)
    symmetry = not args.no_symmetry
    if args.target == "g":
        H = read_pattern(args.pattern)
        if args.k is None:
            result = g_exact_min(args.n, H, budget, symmetry)
        else:
            result = g_feasible(args.n, H, args.k, budget, symmetry)
        title, kind = f"g({args.n}, {H})", "lrc"
    else:
        if args.k is None:
            result = pq_exact_min(args.n, args.r, args.p, args.q, budget, symmetry)
        else:
            result = pq_feasible(args.n, args.r, args.p, args.q, args.k, budget, symmetry)
        title, kind = f"f_{args.r}({args.n}, {args.p}, {args.q})", "hgc"
    _report(title, None, [f"Status: {result.status.value}", f"k = {result.k}", f"Nodes: {result.nodes}",
                          f"Time: {result.elapsed:.3f} s"])
    if args.k is None and result.feasible:
        print(result.k)
    if result.feasible and args.out:
        run.write(kind, args.out, result.witness)
    run.finish(f"{result.status.value} k={result.k}")
    if result.status is SearchStatus.UNKNOWN:
        return EXIT_BUDGET
    return EXIT_OK if result.feasible else EXIT_REFUTED


def cmd_classify(run):
    args = run.args
    if args.what == "pattern":
        H = read_pattern(args.pattern)
        growth = classify_growth(H)
        lines = [f"Class: {growth.tag.value}"]
        if growth.exponent is not None:
            lines.append(f"Exponent: >= {growth.exponent:.4g}")
        lines += [f"Note: {note}" for note in growth.notes]
        forcing = forcing_subgraph(H)
        if forcing:
            lines.append(f"Contains: {forcing}")
        _report(str(H), None, lines)
        run.finish(growth.tag.value)
        return EXIT_OK
    table = classification_table(args.max_edges)
    print("\n".join(table.to_records()) if args.records else table.to_text())
    run.finish(f"{len(table.rows)} classes")
    return EXIT_OK


def cmd_egy(run):
    args = run.args
    if args.step == "random":
        result = scrambling_random(args.n, args.k, args.seed, args.max_rounds)
        _report(f"Scrambling orders n={args.n}, k={args.k}", result.violation,
                [f"Success: {result.success}", f"M = {result.M}", f"Rounds: {result.rounds}"])
        if result.success and args.out:
            run.write("ord", args.out, result.family)
        run.finish(f"M={result.M}" if result.success else "rounds exhausted")
        return EXIT_OK if result.success else EXIT_BUDGET
    if args.step == "exact":
        result = scrambling_exact_min(args.n, args.k, args.m_cap, _budget(args))
        _report(f"Minimal scrambling family n={args.n}, k={args.k}", None,
                [f"Status: {result.status.value}", f"M = {result.k}", f"Nodes: {result.nodes}"])
        if result.feasible and args.out:
            run.write("ord", args.out, result.witness)
        run.finish(f"{result.status.value} M={result.k}")
        if result.status is SearchStatus.UNKNOWN:
            return EXIT_BUDGET
        return EXIT_OK if result.feasible else EXIT_REFUTED
    base = run.read(read_hgc, args.input)
    families = [run.read(read_ord, path) for path in args.orders]
    lifted = egy_chain(base, families)[-1]
    r = lifted.r
    certificate = verify_pq(lifted, r + 1, r, args.jobs)
    _report(f"Lift to r={r}", certificate, [f"n = {lifted.n}, k = {lifted.k}",
                                            f"Verification ({r + 1},{r}): {'Ok' if certificate is None else 'FAILED'}"])
    if args.out:
        run.write("hgc", args.out, lifted)
    run.finish("ok" if certificate is None else "verification failed")
    return EXIT_OK if certificate is None else EXIT_REFUTED


def _search_options(parser):
    parser.add_argument("--nodes", type=int, default=Config.SEARCH_NODES, help="node cap")
    parser.add_argument("--seconds", type=float, default=Config.SEARCH_SECONDS, help="time cap")
    parser.add_argument("--force", action="store_true", help="ignore the magnitude guard")


def build_parser():
    parser = argparse.ArgumentParser(prog="pylrc", description="Local rainbow colourings: build, verify, attack, search.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--jobs", type=int, default=Config.DEFAULT_JOBS, help="worker processes for the scans")
    parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED, help="random seed (env PYLRC_SEED)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--quiet", action="store_true", help="errors only")
    parser.add_argument("--progress", action="store_true", help="progress bars on long scans")
    parser.add_argument("--no-manifest", action="store_true", help="do not write run manifests")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="build and verify a collection")
    construct.add_argument("--family", required=True, choices=["p3", "tp", "te", "kw"])
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--gamma", default=GammaProvider.INJECTIVE.value,
                           help="injective, greedy or an HGC1 file")
    construct.add_argument("--w", type=int, default=2, help="weight bound for kw")
    construct.add_argument("--augment", type=int, default=0, help="refine by this many anchor rows")
    construct.add_argument("--out")
    construct.set_defaults(handler=cmd_construct)

    gamma = commands.add_parser("gamma", help="build a gamma colouring")
    gamma.add_argument("--kind", choices=[GammaProvider.INJECTIVE.value, GammaProvider.GREEDY.value],
                       default=GammaProvider.GREEDY.value)
    gamma.add_argument("--n", type=int, required=True)
    gamma.add_argument("--r", type=int, default=3)
    gamma.add_argument("--p", type=int, default=4)
    gamma.add_argument("--q", type=int, default=3)
    gamma.add_argument("--out")
    gamma.set_defaults(handler=cmd_gamma)

    verify = commands.add_parser("verify", help="run a verifier")
    checks = verify.add_subparsers(dest="check", required=True)
    local = checks.add_parser("local")
    local.add_argument("--pattern", required=True, help="catalogue name, grammar string or file")
    local.add_argument("--colouring", required=True)
    local.add_argument("--naive", action="store_true", help="check every injection")
    pq = checks.add_parser("pq")
    pq.add_argument("--colouring", required=True)
    pq.add_argument("--p", type=int, required=True)
    pq.add_argument("--q", type=int, required=True)
    scrambling = checks.add_parser("scrambling")
    scrambling.add_argument("--orders", required=True)
    scrambling.add_argument("--k", type=int, required=True)
    kw = checks.add_parser("kw")
    kw.add_argument("--colouring", required=True)
    cert = checks.add_parser("cert")
    cert.add_argument("--cert", required=True)
    cert.add_argument("--subject", required=True)
    cert.add_argument("--pattern")
    for key in ("p", "q", "k", "length"):
        cert.add_argument(f"--{key}", type=int)
    for sub in (local, pq, scrambling, kw):
        sub.add_argument("--cert-out")
    verify.set_defaults(handler=cmd_verify)

    attack = commands.add_parser("attack", help="run an attack")
    attacks = attack.add_subparsers(dest="attack", required=True)
    cycle = attacks.add_parser("cycle")
    cycle.add_argument("--ell", type=int, default=2)
    nice = attacks.add_parser("nice")
    nice.add_argument("--pattern", required=True)
    stats = attacks.add_parser("stats")
    for sub in (cycle, nice, stats):
        sub.add_argument("--colouring", required=True)
    for sub in (cycle, nice):
        sub.add_argument("--budget", type=int, default=Config.ATTACK_BUDGET)
        sub.add_argument("--cert-out")
    attack.set_defaults(handler=cmd_attack)

    search = commands.add_parser("search", help="exact minimum colour counts")
    targets = search.add_subparsers(dest="target", required=True)
    g = targets.add_parser("g")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--pattern", required=True)
    f = targets.add_parser("f")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    for sub in (g, f):
        sub.add_argument("--k", type=int, help="decide this k instead of minimising")
        sub.add_argument("--no-symmetry", action="store_true")
        sub.add_argument("--out")
        _search_options(sub)
    search.set_defaults(handler=cmd_search)

    classify = commands.add_parser("classify", help="growth classification")
    what = classify.add_subparsers(dest="what", required=True)
    single = what.add_parser("pattern")
    single.add_argument("--pattern", required=True)
    table = what.add_parser("table")
    table.add_argument("--max-edges", type=int, default=5)
    table.add_argument("--records", action="store_true", help="one tab-separated line per class")
    classify.set_defaults(handler=cmd_classify)

    egy = commands.add_parser("egy", help="scrambling orders and the lift")
    steps = egy.add_subparsers(dest="step", required=True)
    rand = steps.add_parser("random")
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--k", type=int, required=True)
    rand.add_argument("--max-rounds", type=int, default=Config.SCRAMBLING_ROUNDS)
    rand.add_argument("--out")
    exact = steps.add_parser("exact")
    exact.add_argument("--n", type=int, required=True)
    exact.add_argument("--k", type=int, required=True)
    exact.add_argument("--m-cap", type=int, default=8)
    exact.add_argument("--out")
    _search_options(exact)
    lift = steps.add_parser("lift")
    lift.add_argument("--input", required=True, help="HGC1 base colouring")
    lift.add_argument("--orders", required=True, action="append", help="ORD1 family, once per lift")
    lift.add_argument("--out")
    egy.set_defaults(handler=cmd_egy)
    return parser


def _configure_logging(args):
    level = logging.ERROR if args.quiet else logging.DEBUG if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    run = Run(args, argv)
    try:
        return args.handler(run)
    except GuardError as e:
        print(f"GuardError: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as e:
        print(f"ParseError: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"PreconditionError: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LRCError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"{type(e).__name__}: {e.strerror}: '{e.filename}'", file=sys.stderr)
        return EXIT_IO
    except Exception as e:
        logger.debug("unhandled exception", exc_info=True)
        print(f"Internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
