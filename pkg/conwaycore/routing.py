# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import argparse
import configparser
import conwaycore.caching
import conwaycore.operations
import conwaycore.workers
import inspect
import json
import logging
import os
import sys

THREADS_VARIABLE = 'CONWAYCORE_THREADS'


class Program(object):
    """Main entry point of Conwaycore."""

    @staticmethod
    def execute():
        parser = configparser.ConfigParser()
        parser.read('config.ini')

        configuration = Configuration(parser)

        logging.basicConfig(
            stream=sys.stderr,
            level=configuration.log_level,
            format='%(asctime)s %(levelname)s %(name)s: %(message)s')

        router = Router(
            conwaycore.operations.Controller,
            sys.stdout,
            lambda: conwaycore.caching.SqliteCache(configuration.cache_path),
            configuration,
            "Conwaycore: Conway groupoids of supersimple designs")
        sys.exit(router.parse(sys.argv[1:]))


class Configuration():
    """Class for managing the Conwaycore configuration file."""

    def __init__(self, parser):
        self.parser = parser

        threads = parser.get('general', 'threads', fallback='')
        self.threads = int(threads) if threads.strip() else None
        self.log_level = parser.get('general', 'log-level', fallback='WARNING').upper()
        self.enumeration_cap = int(parser.get('groupoid', 'enumeration-cap', fallback='4000000'))
        self.walk_max_degree = int(parser.get('groupoid', 'walk-max-degree', fallback='16'))
        self.spot_checks = int(parser.get('groupoid', 'spot-checks', fallback='10000'))
        self.seed = int(parser.get('groupoid', 'seed', fallback='1'))
        self.cache_path = parser.get('cache', 'path', fallback=':memory:')

    def resolve_threads(self, flag=None, environ=None):
        """
        Returns the number of worker threads.

        :param str flag: The value of the --threads option, if given.
        :param dict environ: The environment variables, os.environ by default.
        :return: The number of threads, from the option, the environment, the configuration file or the core count,
            in that order.
        :rtype: int
        """
        environ = os.environ if environ is None else environ
        for source, value in (('--threads', flag), (THREADS_VARIABLE, environ.get(THREADS_VARIABLE))):
            if value is not None and str(value).strip():
                try:
                    threads = int(value)
                except ValueError:
                    raise ControllerError("The value '{}' of {} is not a valid integer.".format(value, source))
                if threads < 1:
                    raise ControllerError('The number of threads must be positive.')
                return threads

        return self.threads or os.cpu_count() or 1


class RawOutput(str):
    """An operation result written to the output as is, rather than as JSON."""
    pass


class Router:
    """Infrastructure for routing command line calls to the right function."""

    extra_parameters = [
        ('threads', "Number of worker threads (overrides {} and the configuration)".format(THREADS_VARIABLE), None),
        ('timings', "Include the time spent in each phase in the report", False)
    ]

    def __init__(self, controller, output, cache_factory, configuration, description=None):
        self.controller = controller
        self.configuration = configuration
        self.output = output
        self.cache_factory = cache_factory
        self._parser = argparse.ArgumentParser(description=description)
        subparsers = self._parser.add_subparsers()

        for name, function in inspect.getmembers(self.controller, predicate=inspect.isfunction):
            # Skip non-public functions
            if name[0] != '_':
                subparser = subparsers.add_parser(name.replace('_', '-'), help=function.__doc__)
                self._create_subparser(subparser, configuration, function)

    def _create_subparser(self, subparser, configuration, func):
        subparser.set_defaults(_func=self._execute_operation(configuration, func))
        func_signature = inspect.signature(func)
        for name, arg in func_signature.parameters.items():
            if name == 'self':
                continue
            if arg.kind != arg.POSITIONAL_OR_KEYWORD:
                continue

            arg_help = arg.annotation if arg.annotation is not arg.empty else None
            if arg.default is arg.empty:
                # a positional argument
                subparser.add_argument(name, help=arg_help)
            else:
                self._add_option(subparser, name, arg_help, arg.default)

        for name, help, default in self.extra_parameters:
            self._add_option(subparser, name, help, default)

    @staticmethod
    def _add_option(subparser, name, help, default):
        flag = '--' + name.replace('_', '-')
        if default is False:
            subparser.add_argument(flag, dest=name, help=help, action='store_true')
        else:
            subparser.add_argument(flag, dest=name, help=help, nargs='?', default=default)

    def _execute_operation(self, configuration, function):
        def decorator(*args, threads, timings, **kwargs):
            try:
                pool = conwaycore.workers.WorkerPool(configuration.resolve_threads(threads))

                # Instantiate the controller
                controller = self.controller(configuration, self.cache_factory, pool, timings)

                # Execute the operation on the controller
                result = function(controller, *args, **kwargs)

            except ControllerError as error:
                # The controller raised a known error
                self.output.write("Error: {}\n".format(str(error)))
                return 2

            # Write the output of the operation onto the output stream
            if isinstance(result, RawOutput):
                self.output.write(result)
            else:
                self.output.write(json.dumps(result, indent=4, separators=(',', ': '), sort_keys=False) + '\n')

            if isinstance(result, dict) and result.get('status') == 'fail':
                return 1
            return 0

        return decorator

    def parse(self, args):
        """
        Parses the arguments and executes the corresponding operation.

        :param list[str] args: The arguments to parse.
        :return: The exit code: 0 on success, 1 when a check fails, 2 on invalid input.
        :rtype: int
        """
        args = vars(self._parser.parse_args(args))
        func = args.pop('_func', None)
        if func is None:
            self._parser.print_usage(self.output)
            return 2

        return func(**args)


class ControllerError(Exception):
    """A known error occurred while executing the operation."""
    pass
