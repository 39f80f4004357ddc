from __future__ import absolute_import, print_function, division

import math
import os
import re

import yaml

from .errors import UsageError


# Smallest geodesic distance the hypergeometric kernels are certified at.
# sech^2(r) = 0.999 at r ~ 0.0317.
R_MIN = 0.05
# Resolvent constants carry 1 / lambda.
LAMBDA_MIN = 1e-8
POLE_TOLERANCE = 1e-12
# Quadrature cannot certify relative accuracy finer than this.
TOLERANCE_FLOOR = 1e-13

STANDARD_LAMBDAS = (1 + 0j, 1.5 + 0j, 2 + 0.5j, 0.3 + 1j, 3j)
STANDARD_RADII = (0.1, 0.3, 0.5, 1.0, 2.0, 5.0)

THREADS_ENV_VAR = 'HARMONIC_KERNELS_THREADS'

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), 'suite_cfg.yaml')


def load_config(path):
    if path == 'default':
        path = DEFAULT_CONFIG_PATH
    with open(path) as f:
        config = yaml.load(f.read(), Loader=yaml.FullLoader)
    if config is None:
        config = {}

    assert isinstance(config, dict), 'config must be a mapping'
    config.setdefault('identities', {})
    identities = config['identities'] or {}
    config['identities'] = identities

    from .verify import IDENTITIES
    for name, block in identities.items():
        assert name in IDENTITIES, 'unknown identity {!r}'.format(name)
        assert isinstance(block, dict), 'identity {!r} needs a mapping'.format(name)
        assert block.get('tolerance', TOLERANCE_FLOOR) >= TOLERANCE_FLOOR, \
            'tolerance for {!r} is below {}'.format(name, TOLERANCE_FLOOR)
        assert isinstance(block.get('points', []), list), \
            'points for {!r} must be a list'.format(name)

    if 'threads' in config:
        assert int(config['threads']) >= 1, 'threads must be positive'

    return config


def thread_count(config=None, default=4):
    value = os.environ.get(THREADS_ENV_VAR)
    if value is not None:
        try:
            count = int(value)
        except ValueError:
            count = 0
        if count < 1:
            raise UsageError('{} must be a positive integer, got {!r}'.format(
                                THREADS_ENV_VAR, value))
        return count
    if config and config.get('threads'):
        return int(config['threads'])
    return max(1, min(default, os.cpu_count() or 1))


_NUMBER = r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
_REAL = re.compile(r'^[+-]?{n}$'.format(n=_NUMBER))
_IMAGINARY = re.compile(r'^[+-]?(?:{n})?[ij]$'.format(n=_NUMBER))
_COMPLEX = re.compile(r'^[+-]?{n}[+-](?:{n})?[ij]$'.format(n=_NUMBER))


def parse_complex(text):
    """Parse "a+bi", "a-bi", "a" or "bi" (j accepted for i)."""
    if isinstance(text, (int, float, complex)) and not isinstance(text, bool):
        value = complex(text)
    else:
        s = str(text).strip().replace(' ', '')
        if not (_REAL.match(s) or _IMAGINARY.match(s) or _COMPLEX.match(s)):
            raise UsageError('cannot parse {!r} as a complex number'.format(text))
        s = s.replace('i', 'j')
        if s[-1] == 'j' and not s[-2:-1].isdigit() and s[-2:-1] != '.':
            # bare "i", "+i", "2-i"
            s = s[:-1] + '1j'
        value = complex(s)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise UsageError('{!r} is not finite'.format(text))
    return value


def parse_real(text):
    value = parse_complex(text)
    if value.imag != 0:
        raise UsageError('{!r} must be real'.format(text))
    return value.real


def parse_int(text):
    if isinstance(text, bool):
        raise UsageError('{!r} is not an integer'.format(text))
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise UsageError('{!r} is not an integer'.format(text))


def format_real(x):
    return '{:#.17g}'.format(x)


def format_complex(z):
    """Render z as "re+im i" with 17 significant digits per component."""
    z = complex(z)
    sign = '-' if math.copysign(1.0, z.imag) < 0 else '+'
    return '{}{}{}i'.format(format_real(z.real), sign, format_real(abs(z.imag)))
