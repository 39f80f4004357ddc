from __future__ import absolute_import

from .verify_options import REPORT_FORMATS


class SuiteOptions(object):
    @classmethod
    def _add_argparse_args(cls, parser):

        optional = parser.add_argument_group('Optional')

        optional.add_argument('--config', dest='config_path', default='default',
                            help='Suite grid (YAML); "default" is the grid shipped with the package')
        optional.add_argument('--output', dest='output_path', default=None,
                            help='Write the reports here instead of stdout')
        optional.add_argument('--format', default='json', choices=REPORT_FORMATS,
                            help='Report format')
