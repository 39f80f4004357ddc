import io

import pytest

from harmonic_kernels import verify
from harmonic_kernels.objects.report import IdentityReport
from harmonic_kernels.sink import ReportSink
from harmonic_kernels.sink import SweepSink
from harmonic_kernels.sink import format_number


class TestReportSink(object):

    type_map = {
        str: 'string',
        float: 'float',
        int: 'integer',
        dict: 'record',
    }

    def check_types(self, sink, encoded):
        assert len(encoded) == len(sink.spec)
        for k, v in encoded.items():
            if v is None:
                continue
            assert self.type_map[type(v)] == sink.spec[k], k

    def test_encoder(self):
        report = verify.check_duplication(1 + 2j)
        sink = ReportSink(None)
        encoded = sink.encode(report)
        self.check_types(sink, encoded)
        assert encoded['params'] == {'a': '1.0000000000000000+2.0000000000000000i'}
        assert encoded['lhs_re'] == report.lhs.real

    def test_encoder_skipped(self):
        report = IdentityReport.skipped('kernel-collapse', {'beta': 1.0, 'x': 3.0, 'y': 2.0},
                                        1e-12, 'need y > x > 0')
        sink = ReportSink(None)
        encoded = sink.encode(report)
        self.check_types(sink, encoded)
        assert encoded['lhs_re'] is None
        assert encoded['rel_err'] is None
        assert encoded['params']['reason'] == 'need y > x > 0'

    def test_empty(self):
        stream = io.StringIO()
        ReportSink(stream).write([])
        assert stream.getvalue() == '[\n]\n'

        stream = io.StringIO()
        ReportSink(stream, 'csv').write([])
        assert stream.getvalue().startswith('identity,lhs_re,')

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            ReportSink(io.StringIO(), 'xml')

    def test_json_numbers(self):
        report = IdentityReport.from_sides('duplication', {'flag': True, 'ratio': float('nan')},
                                           0.1, 0.1, 1e-8)
        stream = io.StringIO()
        ReportSink(stream).write([report])
        text = stream.getvalue()
        assert '"lhs_re": 0.10000000000000001' in text
        assert '"flag": true' in text
        assert '"ratio": null' in text

    def test_csv_params(self):
        reports = [
            IdentityReport.from_sides('duplication', {'a': 1.5}, 1, 1, 1e-8),
            IdentityReport.from_sides('elementary-2f1', {'a': 0.5, 'z': 0.25}, 1, 1, 1e-8),
        ]
        stream = io.StringIO()
        ReportSink(stream, 'csv').write(reports)
        lines = stream.getvalue().split('\n')
        assert lines[0].startswith('identity,param.a,param.z,lhs_re,')
        assert lines[1].startswith('duplication,1.5,,1,0,')
        assert lines[2].startswith('elementary-2f1,0.5,0.25,1,0,')
        assert lines[-1] == ''


class TestSweepSink(object):

    def test_encoder(self):
        sink = SweepSink(None)
        encoded = sink.encode(0.5, 1 - 2j)
        assert encoded == {'r': 0.5, 'value_re': 1.0, 'value_im': -2.0}
        assert set(encoded) == set(sink.spec)

    def test_write(self):
        stream = io.StringIO()
        SweepSink(stream).write([(0.1, 1 + 0j), (0.2, 1 / 3 + 1j)])
        assert stream.getvalue() == ('r,value_re,value_im\n'
                                     '0.10000000000000001,1,0\n'
                                     '0.20000000000000001,{},1\n'.format(format_number(1 / 3)))
