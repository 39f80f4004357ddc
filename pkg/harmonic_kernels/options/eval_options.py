from __future__ import absolute_import


class EvalOptions(object):
    @classmethod
    def _add_argparse_args(cls, parser):
        # Target parameters (--lambda, --dim-n, ...) are not declared here;
        # they are checked against the target's own parameter list.

        required = parser.add_argument_group('Required')
        optional = parser.add_argument_group('Optional')

        required.add_argument('target',
                            help='Function or kernel to evaluate, e.g. gamma or na-resolvent')

        optional.add_argument('--tol', type=float, default=None,
                            help='Quadrature tolerance for transform-integral (default 1e-8)')
        optional.add_argument('--output', dest='output_path', default=None,
                            help='Write the value here instead of stdout')
