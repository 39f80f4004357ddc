from __future__ import absolute_import
import logging

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


class LoggingOptions(object):
    @classmethod
    def _add_argparse_args(cls, parser):
        optional = parser.add_argument_group('Logging')

        optional.add_argument('--log_level', choices=LOG_LEVELS, default=None,
                            help='Logging level; WARNING for eval and sweep, INFO otherwise')

    @staticmethod
    def configure_logging(log_level):
        logging.basicConfig(level=getattr(logging, log_level), force=True,
                            format='%(asctime)s %(levelname)s %(name)s: %(message)s')
