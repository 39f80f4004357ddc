from __future__ import absolute_import


class SweepOptions(object):
    @classmethod
    def _add_argparse_args(cls, parser):

        required = parser.add_argument_group('Required')
        optional = parser.add_argument_group('Optional')

        required.add_argument('target',
                            help='Radial kernel to tabulate, e.g. hyperbolic-resolvent')

        optional.add_argument('--r-min', dest='r_min', type=float, default=0.1,
                            help='Smallest radius of the grid')
        optional.add_argument('--r-max', dest='r_max', type=float, default=5.0,
                            help='Largest radius of the grid')
        optional.add_argument('--points', type=int, default=50,
                            help='Number of evenly spaced radii')
        optional.add_argument('--tol', type=float, default=None,
                            help='Quadrature tolerance for transform-integral (default 1e-8)')
        optional.add_argument('--output', dest='output_path', default=None,
                            help='Write the CSV here instead of stdout')
