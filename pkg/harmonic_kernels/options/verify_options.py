from __future__ import absolute_import

REPORT_FORMATS = ('json', 'csv')


class VerifyOptions(object):
    @classmethod
    def _add_argparse_args(cls, parser):

        required = parser.add_argument_group('Required')
        optional = parser.add_argument_group('Optional')

        required.add_argument('target',
                            help='Identity to check, e.g. lemma31 or transform')

        optional.add_argument('--tol', type=float, default=None,
                            help='Tolerance; each identity has its own default')
        optional.add_argument('--output', dest='output_path', default=None,
                            help='Write the report here instead of stdout')
        optional.add_argument('--format', default='json', choices=REPORT_FORMATS,
                            help='Report format')
