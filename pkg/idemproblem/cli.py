#!/usr/bin/env python

# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import argparse
import dataclasses
import logging
import os
import sys
import typing

import appdirs  # type: ignore

from idemproblem import corpus, limits
from idemproblem.congruence import greatest_idempotent_pure
from idemproblem.dfa import idempotent_problem_dfa, minimize
from idemproblem.document import (
    ACTION,
    InputDocument,
    build_action,
    closure_summary,
    dfa_to_json,
    dumps,
    parse_input,
    semigroup_to_json,
    syntactic_to_json,
)
from idemproblem.dot_export import export_dot
from idemproblem.exceptions import InvariantViolation, ParameterError, ResourceLimitError, SemigroupError
from idemproblem.lambda_product import (
    billhardt_bound,
    check_local_finiteness_bound,
    lambda_product,
    semilattice_sigma,
    size_sigma,
)
from idemproblem.semigroup import FiniteInverseSemigroup
from idemproblem.semigroup_cache import SemigroupCache
from idemproblem.table_drawer import TableDrawer
from idemproblem.theorem_checks import (
    check_e_unitary_corollary,
    check_generator_invariance,
    check_main_theorem_finite_direction,
    idempotent_problem_algebra,
    syntactic_projection,
)

__app_name__ = "idem_problem"
__app_author__ = "idemproblem"

COMMANDS = ("closure", "idem-dfa", "syntactic", "check", "lambda", "bound")
CHECKS = ("lemma", "e-unitary", "generators", "bound", "main", "all")
FORMATS = ("json", "dot", "svg")

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVARIANT = 2
EXIT_RESOURCE = 3


def create_parser() -> argparse.ArgumentParser:
    args_parser = argparse.ArgumentParser(
        prog=__app_name__,
        description="Idempotent problems of finite inverse semigroups: closures, automata, syntactic monoids "
        "and machine checks.",
    )
    args_parser.add_argument("command", metavar="COMMAND", choices=COMMANDS, help=f'One of "{", ".join(COMMANDS)}".')
    args_parser.add_argument(
        "arguments",
        metavar="ARG",
        nargs="*",
        help='Input file ("-" or none for standard input); "check" takes a check name first, "bound" takes n k.',
    )
    args_parser.add_argument(
        "--monoid",
        dest="monoid",
        action="store_true",
        help="Use monoid generation: the empty word stands for the identity (default: semigroup case).",
    )
    args_parser.add_argument(
        "--seed",
        dest="seed",
        metavar="SEED",
        type=int,
        default=limits.DEFAULT_SEED,
        help=f"Seed for sampled subsets (default: {limits.DEFAULT_SEED}).",
    )
    args_parser.add_argument(
        "--max-closure",
        dest="max_closure",
        metavar="N",
        type=int,
        default=limits.MAX_CLOSURE,
        help=f"Largest closure or transition monoid to build (default: {limits.MAX_CLOSURE}).",
    )
    args_parser.add_argument(
        "--trials",
        dest="trials",
        metavar="N",
        type=int,
        default=limits.DEFAULT_TRIALS,
        help=f"Subsets sampled per size in bound checks (default: {limits.DEFAULT_TRIALS}).",
    )
    args_parser.add_argument(
        "--max-m",
        dest="max_m",
        metavar="M",
        type=int,
        default=2,
        help="Largest generating subset size in bound checks (default: 2).",
    )
    args_parser.add_argument(
        "--alt-generators",
        dest="alt_generators",
        metavar="LIST",
        type=str,
        help='Comma separated element indices of a second generating set for "check generators" '
        "(default: every element).",
    )
    args_parser.add_argument(
        "--minimize",
        dest="minimize",
        action="store_true",
        help='Emit the minimal DFA from "idem-dfa".',
    )
    args_parser.add_argument(
        "--output",
        metavar="FILE",
        type=str,
        help="Write the output document to FILE (default: standard output).",
    )
    args_parser.add_argument(
        "--format",
        dest="format",
        metavar="FORMAT",
        choices=FORMATS,
        default="json",
        help=f'Output format; "{", ".join(FORMATS)}" (default: "json").',
    )
    args_parser.add_argument(
        "--clear-cache",
        dest="clear_cache",
        action="store_true",
        help="Clear the semigroup cache.",
    )
    args_parser.add_argument("--no-cache", dest="no_cache", action="store_true", help="Bypass the semigroup cache.")
    args_parser.add_argument("--verbose", dest="verbose", action="store_true", help="Verbose logging.")
    args_parser.add_argument("--logfile", dest="logfile", metavar="FILE", type=str)
    return args_parser


def read_document(path: typing.Optional[str]) -> InputDocument:
    """Read a document as bytes; parse_input reports undecodable input with its byte offset."""
    data: typing.Union[str, bytes]
    try:
        if path is None or path == "-":
            # a replaced stdin (e.g. io.StringIO) has no binary buffer
            stream = getattr(sys.stdin, "buffer", None)
            data = sys.stdin.read() if stream is None else stream.read()
        else:
            with open(path, "rb") as f:
                data = f.read()
    except OSError as e:
        raise ParameterError(f"Cannot read input: {e}") from e
    return parse_input(data)


class Runner:
    """Execute one command against parsed options and produce its output text."""

    def __init__(self, options: argparse.Namespace, cache: SemigroupCache) -> None:
        self.options = options
        self.cache = cache

    def _format(self, allowed: typing.Sequence[str]) -> str:
        if self.options.format not in allowed:
            raise ParameterError(f'Format "{self.options.format}" is not available here; use {", ".join(allowed)}')
        return str(self.options.format)

    def _document(self, arguments: typing.Sequence[str]) -> InputDocument:
        if len(arguments) > 1:
            raise ParameterError(f"Expected at most one input file, got {len(arguments)}")
        document = read_document(arguments[0] if arguments else None)
        if self.options.monoid and document.kind != ACTION:
            document = dataclasses.replace(document, monoid=True)
        return document

    def _semigroup(self, arguments: typing.Sequence[str]) -> typing.Tuple[InputDocument, FiniteInverseSemigroup]:
        document = self._document(arguments)
        if document.kind == ACTION:
            raise ParameterError("Expected a semigroup document, got an action")
        return document, self.cache.load(document, self.options.max_closure)

    def closure(self, arguments: typing.Sequence[str]) -> str:
        fmt = self._format(("json", "svg"))
        _, semigroup = self._semigroup(arguments)
        if fmt == "svg":
            return TableDrawer().to_string(semigroup)
        data = closure_summary(semigroup)
        if semigroup.size <= limits.MAX_CONTEXT_SIZE:
            data["greatest_idempotent_pure_classes"] = greatest_idempotent_pure(semigroup).num_classes
        return dumps(data)

    def idem_dfa(self, arguments: typing.Sequence[str]) -> str:
        fmt = self._format(("json", "dot"))
        document, semigroup = self._semigroup(arguments)
        dfa = idempotent_problem_dfa(semigroup, document.monoid)
        if self.options.minimize:
            dfa = minimize(dfa)
        if fmt == "dot":
            return export_dot(dfa)
        return dumps(dfa_to_json(dfa))

    def syntactic(self, arguments: typing.Sequence[str]) -> str:
        fmt = self._format(FORMATS)
        document, semigroup = self._semigroup(arguments)
        _, minimal, algebra = idempotent_problem_algebra(semigroup, document.monoid, self.options.max_closure)
        if fmt == "dot":
            return export_dot(minimal)
        if fmt == "svg":
            return TableDrawer().to_string(algebra.monoid)
        data = syntactic_to_json(algebra)
        data["monoid_case"] = document.monoid
        data["minimal_dfa"] = dfa_to_json(minimal)
        return dumps(data)

    def lambda_(self, arguments: typing.Sequence[str]) -> str:
        fmt = self._format(("json", "svg"))
        product = lambda_product(build_action(self._document(arguments), self.options.max_closure))
        if fmt == "svg":
            return TableDrawer().to_string(product.product)
        data = semigroup_to_json(product.product)
        data["pairs"] = [list(pair) for pair in product.pairs]
        return dumps(data)

    def bound(self, arguments: typing.Sequence[str]) -> str:
        self._format(("json",))
        if len(arguments) != 2:
            raise ParameterError("bound takes exactly two arguments: n k")
        try:
            n, k = (int(a) for a in arguments)
        except ValueError as e:
            raise ParameterError(f"bound arguments must be integers: {' '.join(arguments)}") from e
        return f"{billhardt_bound(n, k)}\n"

    def check(self, arguments: typing.Sequence[str]) -> str:
        self._format(("json",))
        if not arguments or arguments[0] not in CHECKS:
            raise ParameterError(f'check needs one of "{", ".join(CHECKS)}"')
        name, rest = arguments[0], arguments[1:]
        if name == "all":
            if rest:
                raise ParameterError("check all takes no input")
            return dumps(corpus.run_suite(self.options.seed, self.options.trials))
        if name == "bound":
            document = self._document(rest)
            product = lambda_product(build_action(document, self.options.max_closure))
            target = product.action.target
            sigma = semilattice_sigma if len(target.idempotents()) == target.size else size_sigma(target)
            report = check_local_finiteness_bound(
                product,
                sigma,
                trials=self.options.trials,
                max_m=self.options.max_m,
                seed=self.options.seed if document.seed is None else document.seed,
                max_size=self.options.max_closure,
            )
            return dumps(report.to_json())
        document, semigroup = self._semigroup(rest)
        monoid_case = document.monoid
        if name == "lemma":
            projection = syntactic_projection(semigroup, monoid_case, self.options.max_closure)
            data = projection.report.to_json()
            data["mapping"] = list(projection.mapping)
            return dumps(data)
        if name == "e-unitary":
            return dumps(check_e_unitary_corollary(semigroup, monoid_case, self.options.max_closure).to_json())
        if name == "main":
            report = check_main_theorem_finite_direction(semigroup, monoid_case, self.options.max_closure)
            return dumps(report.to_json())
        if self.options.alt_generators:
            try:
                alternative = [int(g) for g in self.options.alt_generators.split(",")]
            except ValueError as e:
                raise ParameterError(f"Bad generator list: {self.options.alt_generators}") from e
        else:
            alternative = list(range(semigroup.size))
        return dumps(check_generator_invariance(semigroup, semigroup.generators, alternative, monoid_case).to_json())


def run(command: str, arguments: typing.Sequence[str], options: argparse.Namespace) -> typing.Tuple[int, str]:
    """Run a command; return the exit status and the output text (or the error message)."""
    cache = SemigroupCache(
        None if options.no_cache else os.path.join(appdirs.user_cache_dir(__app_name__, __app_author__), "semigroups")
    )
    if options.clear_cache:
        cache.clear()
    runner = Runner(options, cache)
    handlers: typing.Dict[str, typing.Callable[[typing.Sequence[str]], str]] = {
        "closure": runner.closure,
        "idem-dfa": runner.idem_dfa,
        "syntactic": runner.syntactic,
        "check": runner.check,
        "lambda": runner.lambda_,
        "bound": runner.bound,
    }
    if command not in handlers:
        return EXIT_REJECTED, f"Unknown command: {command}"
    try:
        return EXIT_OK, handlers[command](arguments)
    except ParameterError as e:
        return EXIT_REJECTED, str(e)
    except InvariantViolation as e:
        return EXIT_INVARIANT, str(e)
    except ResourceLimitError as e:
        return EXIT_RESOURCE, str(e)
    except SemigroupError as e:
        return EXIT_REJECTED, str(e)


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> None:
    """Handle command line arguments and call other modules as needed."""
    args = create_parser().parse_args(argv)

    log = logging.getLogger("idemproblem")
    log.setLevel(logging.INFO if args.verbose else logging.ERROR)
    if args.logfile:
        handler = logging.FileHandler(args.logfile)
        log.addHandler(handler)

    status, output = run(args.command, args.arguments, args)
    if status != EXIT_OK:
        print(output, file=sys.stderr)
        sys.exit(status)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(output)
        except OSError as e:
            print(f"Cannot write {args.output}: {e}", file=sys.stderr)
            sys.exit(EXIT_REJECTED)
    else:
        sys.stdout.write(output)


if __name__ == "__main__":
    main()
