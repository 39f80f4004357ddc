"""
Command line front end.

    harmonic-kernels eval TARGET --name value ...
    harmonic-kernels verify IDENTITY --name value ... [--tol T] [--format json|csv]
    harmonic-kernels sweep TARGET --name value ... [--r-min A --r-max B --points N]
    harmonic-kernels suite [--config PATH|default] [--format json|csv]

Exit codes: 0 when everything passed, 1 when a check failed or was skipped
on a precondition, 2 on usage errors, 3 on numerical errors.
"""
from __future__ import absolute_import, division

import argparse
import contextlib
import logging
import sys
from collections import namedtuple

import yaml

from .common import format_complex
from .common import load_config
from .errors import DomainError
from .errors import NUMERICAL_ERRORS
from .errors import UsageError
from .evaluate import EVAL_TARGETS
from .evaluate import convert_target
from .evaluate import evaluate
from .evaluate import sweep
from .objects.report import SKIPPED
from .options.eval_options import EvalOptions
from .options.logging_options import LoggingOptions
from .options.suite_options import SuiteOptions
from .options.sweep_options import SweepOptions
from .options.verify_options import VerifyOptions
from .sink import ReportSink
from .sink import SweepSink
from .suite import run_suite
from .verify import identity_arguments
from .verify import run_identity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

COMMANDS = {
    'eval': (LoggingOptions, EvalOptions),
    'verify': (LoggingOptions, VerifyOptions),
    'sweep': (LoggingOptions, SweepOptions),
    'suite': (LoggingOptions, SuiteOptions),
}

DEFAULT_LOG_LEVELS = {
    'eval': 'WARNING',
    'sweep': 'WARNING',
    'verify': 'INFO',
    'suite': 'INFO',
}


class CliConfig(namedtuple('CliConfig',
        ['command', 'target', 'parameters', 'tol', 'output_path', 'format',
         'config_path', 'log_level', 'r_min', 'r_max', 'points'])):

    __slots__ = ()

    @staticmethod
    def from_namespace(command, namespace, parameters):
        return CliConfig(
            command=command,
            target=getattr(namespace, 'target', None),
            parameters=parameters,
            tol=getattr(namespace, 'tol', None),
            output_path=namespace.output_path,
            format=getattr(namespace, 'format', None),
            config_path=getattr(namespace, 'config_path', None),
            log_level=namespace.log_level or DEFAULT_LOG_LEVELS[command],
            r_min=getattr(namespace, 'r_min', None),
            r_max=getattr(namespace, 'r_max', None),
            points=getattr(namespace, 'points', None),
        )


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError('{}: {}'.format(self.prog, message))


def _build_parser(command):
    # no abbreviations: --r must not be taken for --r-min
    parser = ArgumentParser(prog='harmonic-kernels {}'.format(command), allow_abbrev=False)
    for option_class in COMMANDS[command]:
        option_class._add_argparse_args(parser)
    return parser


def _target_parameters(extras):
    """Turn ['--dim-n', '3', '--lambda=2+0.5i'] into {'dim_n': '3', 'lambda': '2+0.5i'}."""
    parameters = {}
    items = list(extras)
    while items:
        flag = items.pop(0)
        if not flag.startswith('--') or len(flag) == 2:
            raise UsageError('unexpected argument {!r}'.format(flag))
        name, sep, value = flag[2:].partition('=')
        if not sep:
            if not items:
                raise UsageError('{} needs a value'.format(flag))
            value = items.pop(0)
        name = name.replace('-', '_')
        if name in parameters:
            raise UsageError('{} given twice'.format(flag))
        parameters[name] = value
    return parameters


def parse_args(argv):
    """Validate argv (without the program name) into a CliConfig."""
    argv = list(argv)
    if not argv or argv[0] not in COMMANDS:
        raise UsageError('expected a command, one of {}'.format(', '.join(sorted(COMMANDS))))
    command = argv[0]
    namespace, extras = _build_parser(command).parse_known_args(argv[1:])
    parameters = _target_parameters(extras)

    if command == 'eval':
        convert_target(namespace.target, parameters)
    elif command == 'verify':
        identity_arguments(namespace.target, parameters, namespace.tol)
    elif command == 'sweep':
        if namespace.target in EVAL_TARGETS and not EVAL_TARGETS[namespace.target].radial:
            raise UsageError('{} does not depend on r'.format(namespace.target))
        if 'r' in parameters:
            raise UsageError('sweep sets r itself; drop --r')
        convert_target(namespace.target, dict(parameters, r=namespace.r_min))
    elif parameters:
        raise UsageError('suite takes no identity parameters, got {}'.format(
                            ', '.join(sorted(parameters))))

    if getattr(namespace, 'tol', None) is not None and not namespace.tol > 0:
        raise UsageError('--tol must be positive, got {}'.format(namespace.tol))
    return CliConfig.from_namespace(command, namespace, parameters)


def exit_code(reports):
    """1 beats 3: a failed or precondition-skipped check outranks a numerical error."""
    if any(report.failed or (report.status == SKIPPED and not report.numerical_error)
           for report in reports):
        return EXIT_FAILED
    if any(report.numerical_error for report in reports):
        return EXIT_NUMERICAL
    return EXIT_OK


@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            yield f


def _execute_eval(config):
    value = evaluate(config.target, config.parameters, config.tol)
    with _open_output(config.output_path) as f:
        f.write(format_complex(value) + '\n')
    return EXIT_OK


def _execute_sweep(config):
    rows = sweep(config.target, config.parameters, config.r_min, config.r_max,
                 config.points, config.tol)
    with _open_output(config.output_path) as f:
        SweepSink(f).write(rows)
    return EXIT_OK


def _write_reports(config, reports):
    with _open_output(config.output_path) as f:
        ReportSink(f, config.format).write(reports)
    return exit_code(reports)


def _execute_verify(config):
    return _write_reports(config, [run_identity(config.target, config.parameters, config.tol)])


def _execute_suite(config):
    try:
        suite_config = load_config(config.config_path)
    except (AssertionError, IOError, yaml.YAMLError) as err:
        raise UsageError('bad suite config {}: {}'.format(config.config_path, err))
    return _write_reports(config, run_suite(suite_config))


_EXECUTORS = {
    'eval': _execute_eval,
    'verify': _execute_verify,
    'sweep': _execute_sweep,
    'suite': _execute_suite,
}


def execute(config):
    """Run a parsed command; returns the process exit code."""
    logger.info('%s %s %s', config.command, config.target or '', config.parameters)
    try:
        return _EXECUTORS[config.command](config)
    except (UsageError, DomainError) as err:
        # DomainError here means an eval or sweep input outside the function's domain
        return _usage_error(err)
    except NUMERICAL_ERRORS as err:
        logger.error('%s: %s', type(err).__name__, err)
        return EXIT_NUMERICAL


def _usage_error(err):
    sys.stderr.write('error: {}\n'.format(err))
    return EXIT_USAGE


def run(args):
    try:
        config = parse_args(args)
    except UsageError as err:
        return _usage_error(err)
    LoggingOptions.configure_logging(config.log_level)
    return execute(config)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
