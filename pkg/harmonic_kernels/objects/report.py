from __future__ import absolute_import, division

from collections import namedtuple

from ..errors import NUMERICAL_ERROR_NAMES

# Below this |lhs| the absolute error decides pass/fail.
ABSOLUTE_THRESHOLD = 1e-12

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


def relative_error(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


class IdentityReport(namedtuple('IdentityReport',
        ['identity', 'params', 'lhs', 'rhs', 'abs_err', 'rel_err',
         'quad_error', 'tolerance', 'status'])):

    __slots__ = ()

    @staticmethod
    def from_sides(identity, params, lhs, rhs, tolerance, quad_error=0.0):
        lhs = complex(lhs)
        rhs = complex(rhs)
        abs_err = abs(lhs - rhs)
        rel_err = relative_error(lhs, rhs)
        measured = abs_err if abs(lhs) < ABSOLUTE_THRESHOLD else rel_err
        status = PASS if measured <= tolerance else FAIL
        return IdentityReport(identity, dict(params), lhs, rhs, abs_err, rel_err,
                              float(quad_error), float(tolerance), status)

    @staticmethod
    def skipped(identity, params, tolerance, reason, error=None):
        """A check that did not run; `error` is the exception that stopped it."""
        params = dict(params)
        params['reason'] = reason
        if error is not None:
            params['error'] = type(error).__name__
        return IdentityReport(identity, params, None, None, None, None,
                              0.0, float(tolerance), SKIPPED)

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL

    @property
    def numerical_error(self):
        return self.status == SKIPPED and self.params.get('error') in NUMERICAL_ERROR_NAMES

    @property
    def measured_error(self):
        if self.status == SKIPPED:
            return None
        return self.abs_err if abs(self.lhs) < ABSOLUTE_THRESHOLD else self.rel_err
