from __future__ import absolute_import, division

import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from .common import STANDARD_LAMBDAS
from .common import STANDARD_RADII
from .common import thread_count
from .objects.report import FAIL
from .objects.report import PASS
from .objects.report import SKIPPED
from .verify import convert_parameters
from .verify import default_tolerance
from .verify import identity_arguments
from .verify import run_identity

logger = logging.getLogger(__name__)

STANDARD_VALUES = {
    'lambda': STANDARD_LAMBDAS,
    'r': STANDARD_RADII,
}


def _values(name, value):
    if value == 'standard' and name in STANDARD_VALUES:
        return list(STANDARD_VALUES[name])
    if isinstance(value, (list, tuple)):
        expanded = []
        for item in value:
            expanded.extend(_values(name, item))
        return expanded
    return [value]


def expand_point(point):
    """Cartesian product over list-valued (or "standard") parameters."""
    names = sorted(point)
    choices = [_values(name, point[name]) for name in names]
    return [dict(zip(names, combination)) for combination in itertools.product(*choices)]


def _order_key(identity, converted):
    return identity, tuple((name, repr(converted[name])) for name in sorted(converted))


def plan_suite(config):
    """List (identity, raw params, tolerance) in deterministic order."""
    tasks = []
    for identity in sorted(config.get('identities') or {}):
        block = config['identities'][identity] or {}
        tolerance = block.get('tolerance', default_tolerance(identity))
        for point in block.get('points') or []:
            for params in expand_point(point):
                converted = convert_parameters(identity, params)
                identity_arguments(identity, params, tolerance)
                tasks.append((_order_key(identity, converted), identity, params, tolerance))
    tasks.sort(key=lambda task: task[0])
    return [(identity, params, tolerance) for _, identity, params, tolerance in tasks]


def summarize(reports):
    counts = Counter(report.status for report in reports)
    return {status: counts.get(status, 0) for status in (PASS, FAIL, SKIPPED)}


def run_suite(config, threads=None):
    """Run every identity point the config selects; reports come back in plan order."""
    tasks = plan_suite(config)
    if threads is None:
        threads = thread_count(config)
    logger.info('running %d checks over %d identities on %d threads',
                len(tasks), len({task[0] for task in tasks}), threads)

    def run(task):
        identity, params, tolerance = task
        return run_identity(identity, params, tolerance)

    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            reports = list(executor.map(run, tasks))
    else:
        reports = [run(task) for task in tasks]

    logger.info('suite finished: %s', summarize(reports))
    return reports
