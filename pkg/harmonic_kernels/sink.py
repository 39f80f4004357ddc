from __future__ import absolute_import, division

import csv
import json
import logging
import math

from .common import format_complex
from .schema.report import build as build_report_schema
from .schema.report import build_sweep as build_sweep_schema

logger = logging.getLogger(__name__)


def format_number(x):
    """17 significant digits, shared by the JSON and CSV writers."""
    return '{:.17g}'.format(x)


def _param_value(value):
    if isinstance(value, complex):
        return format_complex(value)
    return value


class ReportSink(object):

    def __init__(self, stream, format='json'):
        if format not in ('json', 'csv'):
            raise ValueError('unknown report format {!r}'.format(format))
        self.stream = stream
        self.format = format

    spec = {field.name: field.type.lower() for field in build_report_schema()}

    columns = [field.name for field in build_report_schema()]

    def encode(self, report):
        lhs = report.lhs
        rhs = report.rhs
        return {
            'identity': report.identity,
            'params': {k: _param_value(v) for k, v in sorted(report.params.items())},
            'lhs_re': None if lhs is None else lhs.real,
            'lhs_im': None if lhs is None else lhs.imag,
            'rhs_re': None if rhs is None else rhs.real,
            'rhs_im': None if rhs is None else rhs.imag,
            'abs_err': report.abs_err,
            'rel_err': report.rel_err,
            'quad_error': report.quad_error,
            'tolerance': report.tolerance,
            'status': report.status,
        }

    def write(self, reports):
        reports = list(reports)
        logger.info('writing %d reports as %s', len(reports), self.format)
        if self.format == 'json':
            self._write_json(reports)
        else:
            self._write_csv(reports)

    def _json_value(self, value):
        if value is None:
            return 'null'
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, float):
            return format_number(value) if math.isfinite(value) else 'null'
        if isinstance(value, int):
            return str(value)
        if isinstance(value, dict):
            return '{' + ', '.join('{}: {}'.format(json.dumps(str(k)), self._json_value(v))
                                   for k, v in value.items()) + '}'
        return json.dumps(str(value), ensure_ascii=False)

    def _write_json(self, reports):
        lines = []
        for report in reports:
            encoded = self.encode(report)
            body = ', '.join('{}: {}'.format(json.dumps(name), self._json_value(encoded[name]))
                             for name in self.columns)
            lines.append('  {' + body + '}')
        self.stream.write('[\n' + ',\n'.join(lines) + ('\n' if lines else '') + ']\n')

    def _csv_value(self, value):
        if value is None:
            return ''
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, float):
            return format_number(value) if math.isfinite(value) else ''
        return str(value)

    def _write_csv(self, reports):
        encoded = [self.encode(report) for report in reports]
        param_names = sorted({name for row in encoded for name in row['params']})
        header = ['identity'] + ['param.{}'.format(name) for name in param_names] + \
                 [name for name in self.columns if name not in ('identity', 'params')]
        writer = csv.writer(self.stream, lineterminator='\n')
        writer.writerow(header)
        for row in encoded:
            values = [row['identity']]
            values.extend(self._csv_value(row['params'].get(name)) for name in param_names)
            values.extend(self._csv_value(row[name]) for name in header[1 + len(param_names):])
            writer.writerow(values)


class SweepSink(object):

    spec = {field.name: field.type.lower() for field in build_sweep_schema()}

    def __init__(self, stream):
        self.stream = stream

    def encode(self, r, value):
        value = complex(value)
        return {'r': float(r), 'value_re': value.real, 'value_im': value.imag}

    def write(self, rows):
        writer = csv.writer(self.stream, lineterminator='\n')
        names = [field.name for field in build_sweep_schema()]
        writer.writerow(names)
        count = 0
        for r, value in rows:
            encoded = self.encode(r, value)
            writer.writerow([format_number(encoded[name]) for name in names])
            count += 1
        logger.info('wrote %d sweep rows', count)
